#include "gt/json_io.hpp"

#include <fstream>

#include "gt/parse.hpp"

namespace gt {

Json poly_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (auto& [m, c] : p.terms()) {
        Json exp = Json::object();
        for (auto& [v, e] : m.exps()) {
            auto [k, i] = p.shape().var(v);
            exp[std::to_string(k) + "," + std::to_string(i)] = e;
        }
        terms.push_back({{"exp", exp}, {"coef", rat_str(c)}});
    }
    return terms;
}

Polynomial poly_from_json(const Json& j, const Shape& shape) {
    Polynomial p(shape);
    for (auto& term : j) {
        Monomial m;
        for (auto& [key, e] : term.at("exp").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw SyntaxError("bad exponent key '" + key + "'", 0);
            int k = std::stoi(key.substr(0, comma));
            int i = std::stoi(key.substr(comma + 1));
            m = m.times(Monomial::var(shape.flat(k, i), e.get<int>()));
        }
        p.add_term(m, rat_parse(term.at("coef").get<std::string>()));
    }
    return p;
}

Json point_to_json(const Point& v) {
    Json out = Json::array();
    for (auto& c : v.coords()) out.push_back(rat_str(c));
    return out;
}

Json matrix_to_json(const Mat& m) {
    Json out = Json::array();
    for (auto& row : m) {
        Json r = Json::array();
        for (auto& c : row) r.push_back(rat_str(c));
        out.push_back(r);
    }
    return out;
}

std::shared_ptr<const CoxeterGroup> coxeter_from_json(const Json& j) {
    Shape shape(j.at("mu").get<std::vector<int>>());
    if (!j.contains("simple_roots")) return CoxeterGroup::full_type_a(shape);
    std::vector<RootSpec> simple;
    for (auto& r : j.at("simple_roots")) {
        if (!r.is_array() || r.size() != 4)
            throw SyntaxError("simple_roots entries must be [k,i,k',j']", 0);
        simple.push_back(
            {shape.flat(r[0].get<int>(), r[1].get<int>()), shape.flat(r[2].get<int>(), r[3].get<int>())});
    }
    return CoxeterGroup::build(shape, simple);
}

GaloisConfig config_from_json(const Json& j) {
    GaloisConfig cfg;
    cfg.mu = Shape(j.at("mu").get<std::vector<int>>());
    cfg.rprime = j.at("rprime").get<int>();
    if (cfg.rprime < 0 || cfg.rprime > cfg.mu.blocks())
        throw OutOfShapeError("rprime out of range");
    cfg.f.assign(cfg.rprime, {Polynomial(cfg.mu), Polynomial(cfg.mu)});
    std::vector<std::array<bool, 2>> seen(cfg.rprime, {false, false});
    for (auto& g : j.at("generators")) {
        int k = g.at("k").get<int>();
        std::string sign = g.at("sign").get<std::string>();
        if (k < 1 || k > cfg.rprime) throw OutOfShapeError("generator k out of range");
        if (sign != "+" && sign != "-") throw SyntaxError("generator sign must be '+' or '-'", 0);
        int sign01 = sign == "+" ? 0 : 1;
        cfg.f[k - 1][sign01] = parse_poly(g.at("f").get<std::string>(), cfg.mu);
        seen[k - 1][sign01] = true;
    }
    for (int k = 1; k <= cfg.rprime; ++k)
        if (!seen[k - 1][0] || !seen[k - 1][1])
            throw OutOfShapeError("config must define both signs for every k <= rprime");
    cfg.validate();
    return cfg;
}

GaloisConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IO", "cannot open config file '" + path + "'");
    Json j = Json::parse(in);
    return config_from_json(j);
}

Json opvec_to_json(const SeedContext& ctx, const OperatorVector& x) {
    Json out;
    out["seed"] = point_to_json(ctx.seed().vhat);
    Json terms = Json::array();
    for (auto& [key, c] : x.terms) {
        Json z = Json::array();
        for (long v : key.first) z.push_back(v);
        terms.push_back({{"z", z}, {"sigma", ctx.sigma_str(key.second)}, {"coef", rat_str(c)}});
    }
    out["terms"] = terms;
    return out;
}

OperatorVector opvec_from_json(const SeedContext& ctx, const Json& j) {
    OperatorVector x;
    for (auto& term : j.at("terms")) {
        ZVec z = term.at("z").get<std::vector<long>>();
        if (static_cast<int>(z.size()) != ctx.shape().size())
            throw OutOfShapeError("shift vector has wrong length");
        if (!ctx.in_cone(z)) throw OutOfShapeError("shift vector is outside the cone");
        int sigma = ctx.parse_sigma(term.at("sigma").get<std::string>());
        Rational c = rat_parse(term.at("coef").get<std::string>());
        // functionals indexed outside the minimal representatives vanish
        std::vector<int> reps = ctx.level_basis(z);
        if (std::find(reps.begin(), reps.end(), sigma) != reps.end()) x.add(z, sigma, c);
    }
    return x;
}

Json seed_to_json(const SeedContext& ctx) {
    Json out;
    out["vhat"] = point_to_json(ctx.seed().vhat);
    Json sigma = Json::array();
    for (int v : ctx.seed().sigma) sigma.push_back(v);
    out["sigma_perm"] = sigma;
    Json z = Json::array();
    for (long v : ctx.seed().z) z.push_back(v);
    out["z"] = z;
    Json windows = Json::array();
    for (auto& [lo, hi] : ctx.seed().windows) windows.push_back({lo, hi});
    out["windows"] = windows;
    return out;
}

}  // namespace gt
