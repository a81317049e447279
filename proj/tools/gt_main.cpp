// gt: command-line surface for the reflection-group, Schubert and
// Gelfand-Tsetlin module computations in gt_core.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gt/json_io.hpp"
#include "gt/parse.hpp"

namespace {

using gt::Json;

struct Output {
    bool pretty = false;
    void emit(const Json& j) const { std::cout << j.dump(pretty ? 2 : -1) << "\n"; }
};

gt::Shape parse_mu(const std::string& s) {
    std::vector<int> mu;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        mu.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (mu.empty()) throw gt::SyntaxError("empty shape", 0);
    return gt::Shape(mu);
}

gt::Point parse_point(const std::string& s, const gt::Shape& shape) {
    std::vector<gt::Rational> coords;
    std::size_t pos = 0;
    while (pos <= s.size() && !s.empty()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        coords.push_back(gt::rat_parse(s.substr(pos, next - pos)));
        pos = next + 1;
        if (next == s.size()) break;
    }
    return gt::Point(shape, std::move(coords));
}

gt::ZVec parse_zvec(const std::string& s, const gt::Shape& shape) {
    gt::ZVec z;
    std::size_t pos = 0;
    while (pos <= s.size() && !s.empty()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        z.push_back(std::stol(s.substr(pos, next - pos)));
        pos = next + 1;
        if (next == s.size()) break;
    }
    if (static_cast<int>(z.size()) != shape.size())
        throw gt::OutOfShapeError("shift vector has wrong length");
    return z;
}

std::shared_ptr<const gt::CoxeterGroup> load_group(const std::string& mu,
                                                   const std::string& systemPath) {
    if (!systemPath.empty()) {
        std::ifstream in(systemPath);
        if (!in) throw gt::Error("IO", "cannot open system file '" + systemPath + "'");
        return gt::coxeter_from_json(Json::parse(in));
    }
    if (mu.empty()) throw gt::Error("Usage", "either --mu or --system is required");
    return gt::CoxeterGroup::full_type_a(parse_mu(mu));
}

gt::Frame load_frame(const std::string& mu, const std::string& omega) {
    gt::Shape shape = parse_mu(mu);
    std::vector<gt::RootSpec> simple;
    for (int k = 1; k <= shape.blocks(); ++k)
        for (int i = 1; i < shape.block_size(k); ++i)
            simple.push_back({shape.flat(k, i), shape.flat(k, i + 1)});
    std::vector<int> om;
    if (omega.empty()) {
        for (std::size_t i = 0; i < simple.size(); ++i) om.push_back(static_cast<int>(i));
    } else {
        std::size_t pos = 0;
        while (pos < omega.size()) {
            std::size_t next = omega.find(',', pos);
            if (next == std::string::npos) next = omega.size();
            om.push_back(std::stoi(omega.substr(pos, next - pos)) - 1);
            pos = next + 1;
        }
    }
    return gt::Frame::make(shape, simple, om);
}

gt::SeedContext load_context(const std::string& configPath, const std::string& vStr) {
    gt::GaloisConfig cfg = gt::config_from_file(configPath);
    gt::Point v = parse_point(vStr, cfg.mu);
    gt::Seed seed = gt::seed_normalize(cfg, v);
    return gt::SeedContext(std::move(cfg), std::move(seed));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gelfand-Tsetlin / Schubert calculus toolkit"};
    app.require_subcommand(1);
    Output out;
    bool jsonFlag = false;
    app.add_flag("--pretty", out.pretty, "indent JSON output");
    app.add_flag("--json", jsonFlag, "compact JSON output (default)");

    std::string mu, systemPath, omega, sigmaW, tauW, rhoW, vStr, gammaStr, configPath;
    std::string xPath, fromZ, fromSigma = "e", toZ, toSigma = "e";
    std::vector<std::string> ops;
    int window = 3, maxSteps = 12;

    auto* cGroup = app.add_subcommand("group", "enumerate a reflection group from root data");
    cGroup->add_option("--mu", mu, "block shape, e.g. 3 or 2,2");
    cGroup->add_option("--system", systemPath, "root system JSON file");

    auto* cSchub = app.add_subcommand("schubert", "Schubert polynomial of a group element");
    cSchub->add_option("--mu", mu);
    cSchub->add_option("--system", systemPath);
    cSchub->add_option("--sigma", sigmaW, "word, e.g. s1*s2")->required();

    auto* cLr = app.add_subcommand("lr", "generalized Littlewood-Richardson coefficient");
    cLr->add_option("--mu", mu);
    cLr->add_option("--system", systemPath);
    cLr->add_option("--sigma", sigmaW)->required();
    cLr->add_option("--tau", tauW)->required();
    cLr->add_option("--rho", rhoW)->required();

    auto* cPs = app.add_subcommand("ps", "Postnikov-Stanley dual polynomial");
    cPs->add_option("--mu", mu);
    cPs->add_option("--system", systemPath);
    cPs->add_option("--sigma", sigmaW)->required();

    auto* cChains = app.add_subcommand("chains", "saturated chains and the chain polynomial");
    cChains->add_option("--mu", mu);
    cChains->add_option("--system", systemPath);
    cChains->add_option("--sigma", sigmaW)->required();
    cChains->add_option("--tau", tauW)->required();

    auto* cGam = app.add_subcommand("gamma-act", "action matrix of an invariant");
    cGam->add_option("--mu", mu)->required();
    cGam->add_option("--omega", omega, "subsystem simple indices, e.g. 1,2 (default: all)");
    cGam->add_option("--v", vStr)->required();
    cGam->add_option("--gamma", gammaStr)->required();

    auto* cJordan = app.add_subcommand("jordan", "Jordan profile of an invariant's action");
    cJordan->add_option("--mu", mu)->required();
    cJordan->add_option("--omega", omega);
    cJordan->add_option("--v", vStr)->required();
    cJordan->add_option("--gamma", gammaStr)->required();

    auto* cSeed = app.add_subcommand("seed", "normalize a point to a seed");
    cSeed->add_option("--config", configPath)->required();
    cSeed->add_option("--v", vStr)->required();

    auto* cAct = app.add_subcommand("gt-act", "apply generators/invariants to a module vector");
    cAct->add_option("--config", configPath)->required();
    cAct->add_option("--v", vStr)->required();
    cAct->add_option("--x", xPath, "operator vector JSON file (default: D_e at z = 0)");
    cAct->add_option("--op", ops,
                     "operations in order: X<k>+ | X<k>- | g:<poly>  (repeatable)");

    auto* cSimp = app.add_subcommand("gt-simplicity", "simplicity criterion for the module");
    cSimp->add_option("--config", configPath)->required();
    cSimp->add_option("--v", vStr)->required();
    cSimp->add_option("--window", window, "max-norm window for the sweep (default 3)");

    auto* cReach = app.add_subcommand("gt-reach", "constructive reachability between basis vectors");
    cReach->add_option("--config", configPath)->required();
    cReach->add_option("--v", vStr)->required();
    cReach->add_option("--from-z", fromZ)->required();
    cReach->add_option("--from-sigma", fromSigma);
    cReach->add_option("--to-z", toZ)->required();
    cReach->add_option("--to-sigma", toSigma);
    cReach->add_option("--max-steps", maxSteps);

    // allow the global output flags after a subcommand name
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*cGroup) {
            auto G = load_group(mu, systemPath);
            Json j;
            j["order"] = G->order();
            j["rank"] = G->rank();
            j["num_positive_roots"] = G->num_pos_roots();
            j["longest_length"] = G->length(G->longest());
            j["longest_word"] = G->word_str(G->longest());
            Json roots = Json::array();
            for (int r = 0; r < G->num_pos_roots(); ++r) {
                auto spec = G->pos_root_spec(r);
                auto [k, i] = G->shape().var(spec.a);
                auto [l, jj] = G->shape().var(spec.b);
                roots.push_back({k, i, l, jj});
            }
            j["positive_roots"] = roots;
            out.emit(j);
        } else if (*cSchub) {
            auto G = load_group(mu, systemPath);
            gt::SchubertTable T(G);
            out.emit(gt::poly_to_json(T.schubert(G->parse_word(sigmaW))));
        } else if (*cLr) {
            auto G = load_group(mu, systemPath);
            gt::SchubertTable T(G);
            Json j;
            j["coef"] = gt::rat_str(
                T.lr(G->parse_word(sigmaW), G->parse_word(tauW), G->parse_word(rhoW)));
            out.emit(j);
        } else if (*cPs) {
            auto G = load_group(mu, systemPath);
            gt::SchubertTable T(G);
            out.emit(gt::poly_to_json(T.ps(G->parse_word(sigmaW))));
        } else if (*cChains) {
            auto G = load_group(mu, systemPath);
            gt::SchubertTable T(G);
            int s = G->parse_word(sigmaW), t = G->parse_word(tauW);
            Json j;
            j["count"] = G->saturated_chains(s, t).size();
            j["poly"] = gt::poly_to_json(gt::ps_chain_poly(T, s, t));
            out.emit(j);
        } else if (*cGam || *cJordan) {
            gt::Frame F = load_frame(mu, omega);
            gt::Point v = parse_point(vStr, F.shape());
            gt::Polynomial g = gt::parse_poly(gammaStr, F.shape());
            if (*cGam) {
                gt::ActionMatrix am = gt::action_matrix(F, g, v);
                Json j;
                Json basis = Json::array();
                for (int b : am.basis) basis.push_back(F.sub().word_str(b));
                j["basis"] = basis;
                j["matrix"] = gt::matrix_to_json(am.m);
                j["gamma_at_v"] = gt::rat_str(am.eigenvalue);
                out.emit(j);
            } else {
                std::vector<int> profile = gt::jordan_profile(F, g, v);
                Json j;
                j["eigenvalue"] = gt::rat_str(g.eval(v));
                j["blocks"] = profile;
                j["bound"] = F.sub().length(F.longest_min_rep(v)) + 1;
                out.emit(j);
            }
        } else if (*cSeed) {
            gt::SeedContext ctx = load_context(configPath, vStr);
            out.emit(gt::seed_to_json(ctx));
        } else if (*cAct) {
            gt::SeedContext ctx = load_context(configPath, vStr);
            gt::OperatorVector x;
            if (xPath.empty()) {
                x = gt::basis_vector(ctx, gt::ZVec(ctx.shape().size(), 0), 0);
            } else {
                std::ifstream in(xPath);
                if (!in) throw gt::Error("IO", "cannot open vector file '" + xPath + "'");
                x = gt::opvec_from_json(ctx, Json::parse(in));
            }
            for (auto& op : ops) {
                if (op.size() >= 2 && op[0] == 'X') {
                    char sign = op.back();
                    int k = std::stoi(op.substr(1, op.size() - 2));
                    if (sign != '+' && sign != '-')
                        throw gt::SyntaxError("operation must end in '+' or '-'", op.size() - 1);
                    x = gt::act_generator(ctx, k, sign == '+' ? 0 : 1, x);
                } else if (op.rfind("g:", 0) == 0) {
                    x = gt::act_gamma(ctx, gt::parse_poly(op.substr(2), ctx.shape()), x);
                } else {
                    throw gt::SyntaxError("unknown operation '" + op + "'", 0);
                }
            }
            out.emit(gt::opvec_to_json(ctx, x));
        } else if (*cSimp) {
            gt::SeedContext ctx = load_context(configPath, vStr);
            gt::SimplicityVerdict v = gt::simplicity_check(ctx, window);
            Json j;
            j["window"] = v.window;
            switch (v.kind) {
                case gt::SimplicityVerdict::HoldsEverywhere:
                    j["verdict"] = "HoldsEverywhere";
                    break;
                case gt::SimplicityVerdict::HoldsOnWindow:
                    j["verdict"] = "HoldsOnWindow";
                    break;
                case gt::SimplicityVerdict::Fails: {
                    j["verdict"] = "Fails";
                    Json w;
                    Json z = Json::array();
                    for (long t : v.z) z.push_back(t);
                    w["z"] = z;
                    w["k"] = v.k;
                    w["i"] = v.i;
                    w["sign"] = v.sign01 == 0 ? "+" : "-";
                    j["witness"] = w;
                    break;
                }
            }
            out.emit(j);
        } else if (*cReach) {
            gt::SeedContext ctx = load_context(configPath, vStr);
            int steps = 0;
            bool ok = gt::reachability_probe(ctx, parse_zvec(fromZ, ctx.shape()),
                                             ctx.parse_sigma(fromSigma), parse_zvec(toZ, ctx.shape()),
                                             ctx.parse_sigma(toSigma), maxSteps, &steps);
            Json j;
            j["reachable"] = ok;
            j["steps_used"] = steps;
            out.emit(j);
        }
    } catch (const gt::NotStandardError& e) {
        Json j;
        j["error"] = {{"kind", e.kind()}, {"detail", e.what()}, {"suggestion", e.suggestion()}};
        out.emit(j);
        return 1;
    } catch (const gt::Error& e) {
        Json j;
        j["error"] = {{"kind", e.kind()}, {"detail", e.what()}};
        out.emit(j);
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = {{"kind", "Internal"}, {"detail", e.what()}};
        out.emit(j);
        return 1;
    }
    return 0;
}
