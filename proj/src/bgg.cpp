#include "gt/bgg.hpp"

#include <algorithm>

namespace gt {

namespace {

// elementary symmetric generators for the orbits of a transposition-generated
// group given by its simple roots
std::vector<Polynomial> orbit_elementary_gens(const Shape& shape,
                                              const std::vector<RootSpec>& simple) {
    std::vector<int> comp(shape.size());
    for (int v = 0; v < shape.size(); ++v) comp[v] = v;
    auto find = [&](auto&& self, int x) -> int {
        return comp[x] == x ? x : comp[x] = self(self, comp[x]);
    };
    for (auto& r : simple) comp[find(find, r.a)] = find(find, r.b);
    std::map<int, std::vector<int>> orbits;
    for (int v = 0; v < shape.size(); ++v) orbits[find(find, v)].push_back(v);
    std::vector<Polynomial> gens;
    for (auto& [root, vars] : orbits) {
        std::vector<Polynomial> e(vars.size() + 1, Polynomial(shape));
        e[0] = Polynomial::constant(shape, 1);
        for (int v : vars)
            for (std::size_t d = vars.size(); d >= 1; --d) {
                e[d] += e[d - 1] * Polynomial::variable_flat(shape, v);
                if (d == 1) break;
            }
        for (std::size_t d = 1; d <= vars.size(); ++d) gens.push_back(e[d]);
    }
    return gens;
}

}  // namespace

Frame Frame::make(Shape shape, std::vector<RootSpec> ambientSimple, std::vector<int> omega) {
    Frame f;
    f.shape_ = shape;
    f.ambientSimple_ = ambientSimple;
    std::vector<RootSpec> sub;
    for (int idx : omega) {
        if (idx < 0 || idx >= static_cast<int>(ambientSimple.size()))
            throw OutOfShapeError("omega index outside the ambient simple system");
        sub.push_back(ambientSimple[idx]);
    }
    f.table_ = std::make_shared<SchubertTable>(CoxeterGroup::build(shape, sub));
    f.gens_ = orbit_elementary_gens(shape, ambientSimple);
    return f;
}

Frame Frame::type_a(Shape shape, std::vector<int> omega) {
    std::vector<RootSpec> simple;
    for (int k = 1; k <= shape.blocks(); ++k)
        for (int i = 1; i < shape.block_size(k); ++i)
            simple.push_back({shape.flat(k, i), shape.flat(k, i + 1)});
    return make(shape, simple, omega);
}

Frame Frame::full(Shape shape) {
    std::vector<RootSpec> simple;
    for (int k = 1; k <= shape.blocks(); ++k)
        for (int i = 1; i < shape.block_size(k); ++i)
            simple.push_back({shape.flat(k, i), shape.flat(k, i + 1)});
    std::vector<int> omega(simple.size());
    for (std::size_t i = 0; i < simple.size(); ++i) omega[i] = static_cast<int>(i);
    return make(shape, simple, omega);
}

bool Frame::is_invariant(const Polynomial& f) const {
    for (auto& r : ambientSimple_) {
        Perm t = perm_transposition(shape_.size(), r.a, r.b);
        if (!(f.permuted(t) == f)) return false;
    }
    return true;
}

void Frame::require_invariant(const Polynomial& f) const {
    if (!is_invariant(f))
        throw NotInvariantError("polynomial is not invariant under the ambient group");
}

void Frame::require_standard(const Point& v) const {
    if (!is_standard(v))
        throw NotStandardError("base point is not standard",
                               sub().word_str(sub().standardizer(v)));
}

std::vector<int> Frame::basis(const Point& v) const {
    std::vector<int> reps = sub().min_reps_for_point(v);
    std::reverse(reps.begin(), reps.end());  // decreasing length
    return reps;
}

int Frame::longest_min_rep(const Point& v) const {
    const CoxeterGroup& W = sub();
    auto sd = W.stabilizer_data(v);
    // omega_0^v = omega_0 * omega_0(theta)^{-1}
    return W.mul(W.longest(), W.inverse(W.longest_in(sd.theta)));
}

GammaVector gamma_action(const Frame& F, const Polynomial& gamma, const GammaVector& x) {
    F.require_invariant(gamma);
    const CoxeterGroup& W = F.sub();
    const SchubertTable& T = F.schub();
    F.require_standard(x.v);
    Rational gv = gamma.eval(x.v);
    Vec d = D_vector(T, x.v, gamma);
    std::vector<int> reps = F.basis(x.v);
    std::vector<char> isRep(W.order(), 0);
    for (int r : reps) isRep[r] = 1;
    GammaVector out;
    out.v = x.v;
    for (auto& [sigma, c] : x.coef) {
        if (c == 0) continue;
        // diagonal
        out.coef[sigma] += gv * c;
        // tau < sigma with coefficient D_{tau,sigma}^v(gamma)
        for (int tau : reps) {
            if (tau == sigma || !W.bruhat_leq(tau, sigma)) continue;
            const int gap = W.length(sigma) - W.length(tau);
            Rational coefficient = 0;
            for (std::size_t rho = 0; rho < W.order(); ++rho) {
                if (W.length(static_cast<int>(rho)) != gap || d[rho] == 0) continue;
                Rational lr = T.lr(tau, static_cast<int>(rho), sigma);
                if (lr != 0) coefficient += lr * d[rho];
            }
            if (coefficient != 0) out.coef[tau] += coefficient * c;
        }
    }
    for (auto it = out.coef.begin(); it != out.coef.end();)
        it = it->second == 0 ? out.coef.erase(it) : std::next(it);
    return out;
}

ActionMatrix action_matrix(const Frame& F, const Polynomial& gamma, const Point& v) {
    F.require_invariant(gamma);
    F.require_standard(v);
    ActionMatrix am;
    am.v = v;
    am.basis = F.basis(v);
    am.eigenvalue = gamma.eval(v);
    const std::size_t n = am.basis.size();
    am.m.assign(n, Vec(n, Rational(0)));
    std::map<int, std::size_t> row;
    for (std::size_t i = 0; i < n; ++i) row[am.basis[i]] = i;
    for (std::size_t j = 0; j < n; ++j) {
        GammaVector x{v, {{am.basis[j], Rational(1)}}};
        GammaVector gx = gamma_action(F, gamma, x);
        for (auto& [tau, c] : gx.coef) am.m[row.at(tau)][j] = c;
    }
    return am;
}

namespace {

Polynomial monomial_to_poly(const Frame& F, const std::vector<int>& expo) {
    Polynomial p = Polynomial::constant(F.shape(), 1);
    for (std::size_t j = 0; j < expo.size(); ++j)
        for (int t = 0; t < expo[j]; ++t) p = p * F.gamma_gens()[j];
    return p;
}

}  // namespace

std::map<int, Polynomial> dual_family(const Frame& F, const Point& v) {
    F.require_standard(v);
    const CoxeterGroup& W = F.sub();
    const SchubertTable& T = F.schub();
    std::vector<int> reps = F.basis(v);
    const std::size_t m = reps.size();

    const auto& gens = F.gamma_gens();
    std::vector<Vec> gvec;
    std::vector<int> gdeg;
    int maxGen = 1;
    for (auto& g : gens) {
        gvec.push_back(D_vector(T, v, g));
        gdeg.push_back(g.degree().value());
        maxGen = std::max(maxGen, gdeg.back());
    }
    const int cap = (W.length(W.longest()) + 2) * maxGen;

    // Monomials in the generators, grown degree by degree; a column is the
    // D-vector of the monomial, assembled by the Leibniz convolution.  We keep
    // the first m monomials whose restrictions to W^v are independent; for a
    // standard base point the translated invariants span the whole dual, so
    // the rank completes at some finite degree.
    std::vector<std::vector<int>> expo{std::vector<int>(gens.size(), 0)};
    std::vector<Vec> dvec;
    {
        Vec one(W.order(), Rational(0));
        one[0] = 1;
        dvec.push_back(std::move(one));
    }
    auto degree_of = [&](const std::vector<int>& e) {
        int d = 0;
        for (std::size_t j = 0; j < e.size(); ++j) d += e[j] * gdeg[j];
        return d;
    };
    RowSpan span(static_cast<int>(m));
    std::vector<std::size_t> chosen;
    auto try_column = [&](std::size_t c) {
        Vec restricted(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) restricted[i] = dvec[c][reps[i]];
        if (span.add(std::move(restricted))) chosen.push_back(c);
    };
    try_column(0);
    std::size_t scanned = 1;
    for (int d = 1; d <= cap && span.dim() < static_cast<int>(m); ++d) {
        const std::size_t upTo = expo.size();
        for (std::size_t i = 0; i < upTo; ++i) {
            int di = degree_of(expo[i]);
            int lastNonzero = -1;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (expo[i][j] > 0) lastNonzero = static_cast<int>(j);
            for (std::size_t j = lastNonzero < 0 ? 0 : static_cast<std::size_t>(lastNonzero);
                 j < gens.size(); ++j) {
                if (di + gdeg[j] != d) continue;
                std::vector<int> e = expo[i];
                e[j] += 1;
                expo.push_back(std::move(e));
                dvec.push_back(lr_convolve(T, dvec[i], gvec[j]));
            }
        }
        for (; scanned < expo.size() && span.dim() < static_cast<int>(m); ++scanned)
            try_column(scanned);
    }
    if (span.dim() < static_cast<int>(m))
        throw NoSolutionError("no invariant preimage found up to degree " + std::to_string(cap) +
                              "; base point may not be standard");
    // solve B x = e_sigma for the chosen columns
    Mat b(m, Vec(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < m; ++c) b[i][c] = dvec[chosen[c]][reps[i]];
    std::map<int, Polynomial> out;
    for (std::size_t t = 0; t < m; ++t) {
        Vec e(m, Rational(0));
        e[t] = 1;
        auto x = solve(b, e);
        if (!x) throw InternalError("dual family system became inconsistent");
        Polynomial gamma(F.shape());
        for (std::size_t c = 0; c < m; ++c)
            if ((*x)[c] != 0) gamma += monomial_to_poly(F, expo[chosen[c]]) * (*x)[c];
        out.emplace(reps[t], std::move(gamma));
    }
    return out;
}

Polynomial invariant_preimage(const Frame& F, const Point& v, int sigma) {
    auto fam = dual_family(F, v);
    auto it = fam.find(sigma);
    if (it == fam.end())
        throw NoSolutionError("sigma is not a minimal coset representative for this base point");
    return it->second;
}

std::vector<int> jordan_profile(const Frame& F, const Polynomial& gamma, const Point& v) {
    ActionMatrix am = action_matrix(F, gamma, v);
    const std::size_t n = am.basis.size();
    Mat nilpotent = am.m;
    for (std::size_t i = 0; i < n; ++i) nilpotent[i][i] -= am.eigenvalue;
    // block sizes from the rank sequence of powers
    std::vector<int> ranks{static_cast<int>(n)};  // rank of N^0
    Mat power = mat_identity(static_cast<int>(n));
    for (std::size_t k = 1; k <= n && ranks.back() != 0; ++k) {
        power = mat_mul(power, nilpotent);
        ranks.push_back(mat_rank(power));
    }
    if (ranks.back() != 0) throw InternalError("action matrix is not nilpotent off the diagonal");
    std::vector<int> profile;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        int blocksGeK = ranks[k - 1] - ranks[k];
        while (static_cast<int>(profile.size()) < blocksGeK) profile.push_back(0);
        for (int i = 0; i < blocksGeK; ++i) profile[i] += 1;
    }
    std::sort(profile.begin(), profile.end(), std::greater<int>());
    // the theorem's bound: blocks of size at most l(w0^v) + 1, at most one maximal
    const int bound = F.sub().length(F.longest_min_rep(v)) + 1;
    if (!profile.empty() && profile[0] > bound)
        throw InternalError("Jordan block exceeds the structural bound");
    if (profile.size() >= 2 && profile[0] == bound && profile[1] == bound)
        throw InternalError("two maximal Jordan blocks; structural bound violated");
    return profile;
}

Polynomial max_block_witness(const Frame& F, const Point& v) {
    F.require_standard(v);
    const CoxeterGroup& W = F.sub();
    auto sd = W.stabilizer_data(v);
    std::vector<char> inTheta(W.rank(), 0);
    for (int s : sd.theta) inTheta[s] = 1;
    auto fam = dual_family(F, v);
    Polynomial gamma(F.shape());
    // class of sum of S_s over simple reflections that are minimal coset reps
    for (int s = 0; s < W.rank(); ++s) {
        if (inTheta[s]) continue;
        gamma += fam.at(W.simple_elt(s));
    }
    return gamma;
}

bool cyclicity_check(const Frame& F, const GammaVector& x) {
    F.require_standard(x.v);
    int top = F.longest_min_rep(x.v);
    auto it = x.coef.find(top);
    return it != x.coef.end() && it->second != 0;
}

bool kernel_check(const Frame& F, const GammaVector& x) {
    (void)F;
    for (auto& [sigma, c] : x.coef)
        if (sigma != 0 && c != 0) return false;
    return true;
}

RowSpan gamma_span(const Frame& F, const GammaVector& x) {
    std::vector<int> reps = F.basis(x.v);
    std::map<int, std::size_t> coordOf;
    for (std::size_t i = 0; i < reps.size(); ++i) coordOf[reps[i]] = i;
    std::vector<Mat> mats;
    for (auto& g : F.gamma_gens()) mats.push_back(action_matrix(F, g, x.v).m);
    RowSpan span(static_cast<int>(reps.size()));
    Vec x0(reps.size(), Rational(0));
    for (auto& [sigma, c] : x.coef) x0[coordOf.at(sigma)] = c;
    std::vector<Vec> frontier{x0};
    span.add(x0);
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (auto& u : frontier)
            for (auto& m : mats) {
                Vec w = mat_apply(m, u);
                if (span.add(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return span;
}

}  // namespace gt
