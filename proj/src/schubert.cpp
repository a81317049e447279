#include "gt/schubert.hpp"

#include <algorithm>

namespace gt {

namespace {

// monomials of the given total degree over a variable subset
void gen_monomials(const std::vector<int>& vars, std::size_t idx, int degree, Monomial cur,
                   std::vector<Monomial>& out) {
    if (idx == vars.size()) {
        if (degree == 0) out.push_back(cur);
        return;
    }
    if (idx + 1 == vars.size()) {
        if (degree > 0) cur = cur.times(Monomial::var(vars[idx], degree));
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        Monomial m = cur;
        if (e > 0) m = m.times(Monomial::var(vars[idx], e));
        gen_monomials(vars, idx + 1, degree - e, m, out);
    }
}

std::vector<Monomial> monomials_of_degree(const std::vector<int>& vars, int degree) {
    std::vector<Monomial> out;
    if (degree == 0) {
        out.push_back(Monomial::one());
        return out;
    }
    if (vars.empty()) return out;
    gen_monomials(vars, 0, degree, Monomial::one(), out);
    return out;
}

}  // namespace

SchubertTable::SchubertTable(std::shared_ptr<const CoxeterGroup> W) : W_(std::move(W)) {
    const CoxeterGroup& G = *W_;
    const Shape& shape = G.shape();

    delta_ = Polynomial::constant(shape, 1);
    for (int r = 0; r < G.num_pos_roots(); ++r) delta_ = delta_ * to_polynomial(G.pos_root(r));

    // S_sigma by peeling nablas off S_{w0} = (1/|W|) Delta
    schubert_.assign(G.order(), Polynomial(shape));
    schubert_[G.longest()] = delta_ * (Rational(1) / Rational(static_cast<long>(G.order())));
    std::vector<int> byLen = G.elements_by_length();
    for (auto it = byLen.rbegin(); it != byLen.rend(); ++it) {
        int sigma = *it;
        if (sigma == G.longest()) continue;
        int s = -1;
        for (int cand = 0; cand < G.rank(); ++cand)
            if (G.length(G.mul_simple(sigma, cand)) > G.length(sigma)) {
                s = cand;
                break;
            }
        if (s < 0) throw InternalError("non-longest element without ascent");
        schubert_[sigma] = nabla(G, s, schubert_[G.mul_simple(sigma, s)]);
    }
    if (!(schubert_[0] == Polynomial::constant(shape, 1)))
        throw InternalError("Schubert normalization failed: S_e != 1");

    // invariant generators: elementary symmetric polynomials of each W-orbit
    {
        std::vector<int> comp(shape.size(), -1);
        for (int v = 0; v < shape.size(); ++v) comp[v] = v;
        // union-find over simple-root edges
        auto find = [&](auto&& self, int x) -> int {
            return comp[x] == x ? x : comp[x] = self(self, comp[x]);
        };
        for (int s = 0; s < G.rank(); ++s) {
            RootSpec r = G.simple_spec(s);
            comp[find(find, r.a)] = find(find, r.b);
        }
        std::map<int, std::vector<int>> orbits;
        for (int v = 0; v < shape.size(); ++v) orbits[find(find, v)].push_back(v);
        for (auto& [root, vars] : orbits) {
            // e_1..e_m of the orbit via prod (1 + x_v t)
            std::vector<Polynomial> e(vars.size() + 1, Polynomial(shape));
            e[0] = Polynomial::constant(shape, 1);
            for (int v : vars)
                for (std::size_t d = vars.size(); d >= 1; --d) {
                    e[d] += e[d - 1] * Polynomial::variable_flat(shape, v);
                    if (d == 1) break;
                }
            for (std::size_t d = 1; d <= vars.size(); ++d) gens_.push_back(e[d]);
        }
    }

    build_harmonics();
    build_ps();
}

void SchubertTable::build_harmonics() {
    const CoxeterGroup& G = *W_;
    const Shape& shape = G.shape();
    const int maxDeg = G.length(G.longest());

    // harmonics only involve variables moved by W
    std::vector<char> moved(shape.size(), 0);
    for (int s = 0; s < G.rank(); ++s) {
        RootSpec r = G.simple_spec(s);
        moved[r.a] = moved[r.b] = 1;
    }
    std::vector<int> active;
    for (int v = 0; v < shape.size(); ++v)
        if (moved[v]) active.push_back(v);

    std::vector<int> countByLen(maxDeg + 1, 0);
    for (std::size_t e = 0; e < G.order(); ++e) countByLen[G.length(static_cast<int>(e))]++;

    harm_.resize(maxDeg + 1);
    harm_[0] = {Polynomial::constant(shape, 1)};
    for (int d = 1; d <= maxDeg; ++d) {
        std::vector<Monomial> basis = monomials_of_degree(active, d);
        std::map<Monomial, int, MonoGrlexGreater> colOf;
        for (std::size_t j = 0; j < basis.size(); ++j) colOf[basis[j]] = static_cast<int>(j);
        Mat rows;
        for (auto& g : gens_) {
            int dg = g.degree().value();
            if (dg < 1 || dg > d) continue;
            // constraint Theta(g)(h) = 0, one row per output monomial
            std::map<Monomial, Vec, MonoGrlexGreater> byOut;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Polynomial img = theta_apply(g, Polynomial::monomial(shape, basis[j], Rational(1)));
                for (auto& [m, c] : img.terms()) {
                    auto it = byOut.emplace(m, Vec(basis.size(), Rational(0))).first;
                    it->second[j] += c;
                }
            }
            for (auto& [m, row] : byOut) rows.push_back(row);
        }
        Mat kernel = nullspace(std::move(rows), static_cast<int>(basis.size()));
        for (auto& coef : kernel) {
            Polynomial h(shape);
            for (std::size_t j = 0; j < basis.size(); ++j) h.add_term(basis[j], coef[j]);
            harm_[d].push_back(std::move(h));
        }
        if (static_cast<int>(harm_[d].size()) != countByLen[d])
            throw InternalError("harmonic space dimension mismatch in degree " + std::to_string(d));
    }
}

void SchubertTable::build_ps() {
    const CoxeterGroup& G = *W_;
    ps_.assign(G.order(), Polynomial(G.shape()));
    const int maxDeg = G.length(G.longest());
    for (int d = 0; d <= maxDeg; ++d) {
        std::vector<int> sigmas;
        for (std::size_t e = 0; e < G.order(); ++e)
            if (G.length(static_cast<int>(e)) == d) sigmas.push_back(static_cast<int>(e));
        const std::size_t m = sigmas.size();
        // A[t][i] = (h_i, S_{sigma_t}); solve A x = delta for each target
        Mat a(m, Vec(m, Rational(0)));
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t i = 0; i < m; ++i)
                a[t][i] = theta_pair(harm_[d][i], schubert_[sigmas[t]]);
        // invert by row-reducing [A | I]
        Mat aug = a;
        for (std::size_t t = 0; t < m; ++t) {
            Vec id(m, Rational(0));
            id[t] = 1;
            aug[t].insert(aug[t].end(), id.begin(), id.end());
        }
        if (rref(aug) != static_cast<int>(m))
            throw SingularError("duality system is singular in degree " + std::to_string(d));
        for (std::size_t t = 0; t < m; ++t) {
            Polynomial p(G.shape());
            for (std::size_t i = 0; i < m; ++i) p += harm_[d][i] * aug[i][m + t];
            ps_[sigmas[t]] = std::move(p);
        }
    }
}

Rational SchubertTable::lr(int sigma, int tau, int rho) const {
    const CoxeterGroup& G = *W_;
    if (G.length(sigma) + G.length(tau) != G.length(rho)) return 0;
    std::lock_guard<std::mutex> lock(lrMutex_);
    auto key = std::make_tuple(sigma, tau, rho);
    auto it = lrMemo_.find(key);
    if (it != lrMemo_.end()) return it->second;
    Rational c = theta_pair(ps_[rho], schubert_[sigma] * schubert_[tau]);
    lrMemo_.emplace(key, c);
    return c;
}

const std::vector<Polynomial>& SchubertTable::harmonic_basis(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(harm_.size())) {
        static const std::vector<Polynomial> empty;
        return empty;
    }
    return harm_[degree];
}

bool SchubertTable::is_invariant(const Polynomial& f) const {
    for (int s = 0; s < W_->rank(); ++s)
        if (!(W_->act(W_->simple_elt(s), f) == f)) return false;
    return true;
}

// ---- expansions -----------------------------------------------------------------

std::map<int, Rational> schubert_expand(const SchubertTable& T, const Polynomial& f,
                                        const Point& at) {
    std::map<int, Rational> out;
    Vec d = D_vector(T, at, f);
    for (std::size_t e = 0; e < d.size(); ++e)
        if (d[e] != 0) out[static_cast<int>(e)] = d[e];
    return out;
}

std::map<int, Rational> schubert_expand(const SchubertTable& T, const StructuredFraction& f,
                                        const Point& at) {
    std::map<int, Rational> out;
    Vec d = D_vector(T, at, f);
    for (std::size_t e = 0; e < d.size(); ++e)
        if (d[e] != 0) out[static_cast<int>(e)] = d[e];
    return out;
}

std::map<int, Polynomial> schubert_expand_symbolic(const SchubertTable& T, const Polynomial& f) {
    const CoxeterGroup& G = T.group();
    std::map<int, Polynomial> out;
    Polynomial work = f;
    std::vector<int> byLen = G.elements_by_length();
    for (auto it = byLen.rbegin(); it != byLen.rend();) {
        int len = G.length(*it);
        // peel all coefficients of the current length with the same remainder
        std::vector<std::pair<int, Polynomial>> layer;
        for (; it != byLen.rend() && G.length(*it) == len; ++it) {
            Polynomial c = divided_difference(G, *it, work);
            if (!c.is_zero()) layer.push_back({*it, std::move(c)});
        }
        for (auto& [sigma, c] : layer) {
            work -= c * T.schubert(sigma);
            out.emplace(sigma, std::move(c));
        }
    }
    if (!work.is_zero()) throw InternalError("Schubert expansion left a nonzero remainder");
    return out;
}

Polynomial ps_chain_poly(const SchubertTable& T, int sigma, int tau) {
    const CoxeterGroup& G = T.group();
    if (!G.bruhat_leq(sigma, tau))
        throw NotComparableError("chain polynomial requires sigma <= tau in Bruhat order");
    const Shape& shape = G.shape();
    Polynomial sum(shape);
    Polynomial cur = Polynomial::constant(shape, 1);
    // DFS over saturated chains accumulating products of cover weights
    auto dfs = [&](auto&& self, int a, const Polynomial& prod) -> void {
        if (a == tau) {
            sum += prod;
            return;
        }
        for (auto& [b, r] : G.covers_up(a)) {
            if (!G.bruhat_leq(b, tau)) continue;
            self(self, b, prod * to_polynomial(G.pos_root(r)));
        }
    };
    dfs(dfs, sigma, cur);
    int gap = G.length(tau) - G.length(sigma);
    return sum * (Rational(1) / rat_factorial(gap));
}

Rational D_at(const SchubertTable& T, int sigma, const Point& v, const Polynomial& f) {
    return theta_pair(T.ps(sigma), f.translated(v));
}

Rational D_at(const SchubertTable& T, int sigma, const Point& v, const StructuredFraction& f) {
    const CoxeterGroup& G = T.group();
    StructuredFraction tf = f.translated(v);
    Point zero(G.shape());
    if (!tf.regular_at(zero))
        throw PoleError("operand has a pole at the evaluation point");
    // only the jet at 0 up to degree l(sigma) contributes to Theta(P_sigma)(.)(0)
    return theta_pair(T.ps(sigma), tf.jet_at_zero(G.length(sigma)));
}

Rational D_pair_at(const SchubertTable& T, int tau, int sigma, const Point& v,
                   const Polynomial& f) {
    const CoxeterGroup& G = T.group();
    if (!G.bruhat_leq(tau, sigma))
        throw NotComparableError("D pair operator requires tau <= sigma");
    Rational total = 0;
    const int gap = G.length(sigma) - G.length(tau);
    for (std::size_t rho = 0; rho < G.order(); ++rho) {
        if (G.length(static_cast<int>(rho)) != gap) continue;
        Rational c = T.lr(tau, static_cast<int>(rho), sigma);
        if (c != 0) total += c * D_at(T, static_cast<int>(rho), v, f);
    }
    return total;
}

Rational D_pair_at(const SchubertTable& T, int tau, int sigma, const Point& v,
                   const StructuredFraction& f) {
    const CoxeterGroup& G = T.group();
    if (!G.bruhat_leq(tau, sigma))
        throw NotComparableError("D pair operator requires tau <= sigma");
    Rational total = 0;
    const int gap = G.length(sigma) - G.length(tau);
    for (std::size_t rho = 0; rho < G.order(); ++rho) {
        if (G.length(static_cast<int>(rho)) != gap) continue;
        Rational c = T.lr(tau, static_cast<int>(rho), sigma);
        if (c != 0) total += c * D_at(T, static_cast<int>(rho), v, f);
    }
    return total;
}

Vec D_vector(const SchubertTable& T, const Point& v, const Polynomial& f) {
    const CoxeterGroup& G = T.group();
    Polynomial tf = f.translated(v);
    Vec out(G.order(), Rational(0));
    for (std::size_t e = 0; e < G.order(); ++e) out[e] = theta_pair(T.ps(static_cast<int>(e)), tf);
    return out;
}

Vec D_vector(const SchubertTable& T, const Point& v, const StructuredFraction& f) {
    const CoxeterGroup& G = T.group();
    StructuredFraction tf = f.translated(v);
    Point zero(G.shape());
    if (!tf.regular_at(zero))
        throw PoleError("operand has a pole at the evaluation point");
    Polynomial jet = tf.jet_at_zero(G.length(G.longest()));
    Vec out(G.order(), Rational(0));
    for (std::size_t e = 0; e < G.order(); ++e)
        out[e] = theta_pair(T.ps(static_cast<int>(e)), jet);
    return out;
}

Vec lr_convolve(const SchubertTable& T, const Vec& df, const Vec& dg) {
    const CoxeterGroup& G = T.group();
    Vec out(G.order(), Rational(0));
    for (std::size_t t = 0; t < df.size(); ++t) {
        if (df[t] == 0) continue;
        for (std::size_t r = 0; r < dg.size(); ++r) {
            if (dg[r] == 0) continue;
            for (std::size_t s = 0; s < G.order(); ++s) {
                if (G.length(static_cast<int>(s)) !=
                    G.length(static_cast<int>(t)) + G.length(static_cast<int>(r)))
                    continue;
                Rational c = T.lr(static_cast<int>(t), static_cast<int>(r), static_cast<int>(s));
                if (c != 0) out[s] += c * df[t] * dg[r];
            }
        }
    }
    return out;
}

Rational word_weight_sum(const SchubertTable& T, int sigma, const Polynomial& f) {
    const CoxeterGroup& G = T.group();
    Rational total = 0;
    for (auto& word : G.all_reduced_words(sigma)) {
        Rational prod = 1;
        for (int s : word) prod *= theta_pair(T.ps(G.simple_elt(s)), f);
        total += prod;
    }
    return total;
}

Rational chain_weight_sum(const SchubertTable& T, int sigma, const Polynomial& f) {
    const CoxeterGroup& G = T.group();
    Rational total = 0;
    auto dfs = [&](auto&& self, int a, const Rational& prod) -> void {
        if (a == sigma) {
            total += prod;
            return;
        }
        for (auto& [b, r] : G.covers_up(a)) {
            if (!G.bruhat_leq(b, sigma)) continue;
            self(self, b, prod * theta_pair(to_polynomial(G.pos_root(r)), f));
        }
    };
    if (G.bruhat_leq(0, sigma)) dfs(dfs, 0, Rational(1));
    return total;
}

}  // namespace gt
