#include "gt/galois.hpp"

#include <algorithm>
#include <set>

namespace gt {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::vector<Polynomial> block_elementary_gens(const Shape& shape) {
    std::vector<Polynomial> gens;
    for (int k = 1; k <= shape.blocks(); ++k) {
        auto [lo, hi] = shape.block_range(k);
        std::vector<Polynomial> e(hi - lo + 1, Polynomial(shape));
        e[0] = Polynomial::constant(shape, 1);
        for (int v = lo; v < hi; ++v)
            for (int d = hi - lo; d >= 1; --d) e[d] += e[d - 1] * Polynomial::variable_flat(shape, v);
        for (int d = 1; d <= hi - lo; ++d) gens.push_back(e[d]);
    }
    return gens;
}

}  // namespace

// ---- config ---------------------------------------------------------------------

void GaloisConfig::validate() const {
    if (rprime < 0 || rprime > mu.blocks())
        throw OutOfShapeError("rprime must lie between 0 and the number of blocks");
    if (static_cast<int>(f.size()) != rprime)
        throw OutOfShapeError("config must provide numerators for blocks 1..rprime");
    for (int k = 1; k <= rprime; ++k) {
        for (int sign01 = 0; sign01 < 2; ++sign01) {
            const Polynomial& fk = f[k - 1][sign01];
            require_same_shape(fk.shape(), mu, "config numerator");
            // H_k = stabilizer of e_{k,1}: adjacent transpositions away from (k,1)
            for (int l = 1; l <= mu.blocks(); ++l) {
                for (int i = 1; i < mu.block_size(l); ++i) {
                    if (l == k && i == 1) continue;
                    Perm t = perm_transposition(mu.size(), mu.flat(l, i), mu.flat(l, i + 1));
                    if (!(fk.permuted(t) == fk))
                        throw NotInvariantError("f_" + std::to_string(k) +
                                                (sign01 == 0 ? "^+" : "^-") +
                                                " is not invariant under the stabilizer of e_{" +
                                                std::to_string(k) + ",1}");
                }
            }
        }
    }
}

Polynomial GaloisConfig::f_ki(int k, int sign01, int i) const {
    if (k < 1 || k > rprime) throw OutOfShapeError("generator block out of range");
    Polynomial f1 = f[k - 1][sign01] * (Rational(1) / Rational(mu.block_size(k)));
    if (i == 1) return f1;
    Perm t = perm_transposition(mu.size(), mu.flat(k, 1), mu.flat(k, i));
    return f1.permuted(t);
}

// ---- seeds ----------------------------------------------------------------------

Seed seed_normalize(const GaloisConfig& cfg, const Point& v) {
    require_same_shape(cfg.mu, v.shape(), "seed normalization");
    const Shape& mu = cfg.mu;
    Seed seed;
    seed.sigma = perm_identity(mu.size());
    seed.z.assign(mu.size(), 0);
    std::vector<Rational> coords = v.coords();

    for (int k = 1; k <= cfg.rprime; ++k) {
        auto [lo, hi] = mu.block_range(k);
        // clusters of positions with pairwise integral differences, ordered by
        // first appearance; members keep their original order
        std::vector<std::vector<int>> clusters;
        for (int p = lo; p < hi; ++p) {
            bool placed = false;
            for (auto& cl : clusters)
                if (is_integer(v[cl.front()] - v[p])) {
                    cl.push_back(p);
                    placed = true;
                    break;
                }
            if (!placed) clusters.push_back({p});
        }
        int t = lo;
        for (auto& cl : clusters) {
            Rational m = v[cl.front()];
            for (int p : cl) m = std::min(m, v[p]);
            for (int p : cl) {
                seed.sigma[p] = t;
                Rational shift = m - v[p];
                seed.z[t] = static_cast<long>(shift.get_num().get_si());
                coords[t] = m;
                ++t;
            }
        }
        if (!clusters.empty()) {
            int begin = lo;
            for (auto& cl : clusters) {
                seed.windows.push_back({begin, begin + static_cast<int>(cl.size())});
                begin += static_cast<int>(cl.size());
            }
        }
    }
    // untouched coordinates (blocks beyond rprime)
    for (int k = cfg.rprime + 1; k <= mu.blocks(); ++k) {
        auto [lo, hi] = mu.block_range(k);
        for (int p = lo; p < hi; ++p) coords[p] = v[p];
    }
    seed.vhat = Point(mu, std::move(coords));
    return seed;
}

// ---- seed context ----------------------------------------------------------------

SeedContext::SeedContext(GaloisConfig cfg, Seed seed) : cfg_(std::move(cfg)), seed_(std::move(seed)) {
    cfg_.validate();
    const Shape& mu = cfg_.mu;
    // sanity: windows carry constant coordinates and exhaust blocks 1..rprime
    {
        int covered = 0;
        for (auto& [lo, hi] : seed_.windows) {
            covered += hi - lo;
            for (int p = lo + 1; p < hi; ++p)
                if (seed_.vhat[p] != seed_.vhat[lo])
                    throw InternalError("seed window is not constant");
        }
        int expected = 0;
        for (int k = 1; k <= cfg_.rprime; ++k) expected += mu.block_size(k);
        if (covered != expected) throw InternalError("seed windows do not cover the shifted blocks");
        for (int k = 1; k <= cfg_.rprime; ++k) {
            auto [lo, hi] = mu.block_range(k);
            for (int p = lo; p < hi; ++p)
                for (int q = p + 1; q < hi; ++q)
                    if (is_integer(seed_.vhat[p] - seed_.vhat[q]) && seed_.vhat[p] != seed_.vhat[q])
                        throw InternalError("seed has a nonzero integral difference");
        }
    }
    // Omega: adjacent differences inside windows, block-major
    std::vector<RootSpec> omega;
    std::vector<int> globalOf;
    {
        // global Sigma-bar labels: adjacent pairs of blocks 1..rprime in order
        std::map<std::pair<int, int>, int> globalLabel;
        int g = 1;
        for (int k = 1; k <= cfg_.rprime; ++k)
            for (int i = 1; i < mu.block_size(k); ++i)
                globalLabel[{mu.flat(k, i), mu.flat(k, i + 1)}] = g++;
        for (auto& [lo, hi] : seed_.windows)
            for (int p = lo; p + 1 < hi; ++p) {
                omega.push_back({p, p + 1});
                globalOf.push_back(globalLabel.at({p, p + 1}));
            }
    }
    table_ = std::make_shared<SchubertTable>(CoxeterGroup::build(mu, omega));
    simpleGlobal_ = globalOf;
    for (int s = 0; s < static_cast<int>(simpleGlobal_.size()); ++s)
        globalSimple_[simpleGlobal_[s]] = s;
    gens_ = block_elementary_gens(mu);
}

bool SeedContext::is_invariant(const Polynomial& g) const {
    const Shape& mu = cfg_.mu;
    for (int k = 1; k <= mu.blocks(); ++k)
        for (int i = 1; i < mu.block_size(k); ++i) {
            Perm t = perm_transposition(mu.size(), mu.flat(k, i), mu.flat(k, i + 1));
            if (!(g.permuted(t) == g)) return false;
        }
    return true;
}

void SeedContext::require_invariant(const Polynomial& g) const {
    if (!is_invariant(g)) throw NotInvariantError("polynomial is not S_mu-invariant");
}

bool SeedContext::in_cone(const ZVec& z) const {
    if (static_cast<int>(z.size()) != cfg_.mu.size()) return false;
    for (auto& [lo, hi] : seed_.windows)
        for (int p = lo; p + 1 < hi; ++p)
            if (z[p] < z[p + 1]) return false;
    // outside the shifted blocks z must vanish
    std::vector<char> inWindow(cfg_.mu.size(), 0);
    for (auto& [lo, hi] : seed_.windows)
        for (int p = lo; p < hi; ++p) inWindow[p] = 1;
    for (int p = 0; p < cfg_.mu.size(); ++p)
        if (!inWindow[p] && z[p] != 0) return false;
    return true;
}

Point SeedContext::point_at(const ZVec& z) const {
    Point p = seed_.vhat;
    for (int i = 0; i < cfg_.mu.size(); ++i)
        if (z[i] != 0) p[i] += Rational(z[i]);
    return p;
}

std::vector<EquivClass> SeedContext::classes(const ZVec& z) const {
    std::vector<EquivClass> out;
    Point p = point_at(z);
    const Shape& mu = cfg_.mu;
    for (int k = 1; k <= cfg_.rprime; ++k) {
        auto [lo, hi] = mu.block_range(k);
        int start = lo;
        for (int q = lo + 1; q <= hi; ++q) {
            if (q == hi || p[q] != p[start]) {
                EquivClass c;
                c.k = k;
                c.ibegin = start - lo + 1;
                c.iend = q - 1 - lo + 1;
                c.aplus_flat = start;
                c.aminus_flat = q - 1;
                out.push_back(c);
                start = q;
            }
        }
    }
    return out;
}

std::vector<EquivClass> SeedContext::classes_k(const ZVec& z, int k) const {
    std::vector<EquivClass> out;
    for (auto& c : classes(z))
        if (c.k == k) out.push_back(c);
    return out;
}

bool SeedContext::shift_legal(const ZVec& z, int flatVar, bool plus) const {
    for (auto& c : classes(z)) {
        if (flatVar < c.aplus_flat || flatVar > c.aminus_flat) continue;
        if (cfg_.mu.block_of(flatVar) != c.k) continue;
        return plus ? flatVar == c.aplus_flat : flatVar == c.aminus_flat;
    }
    return false;  // outside the shifted blocks
}

bool SeedContext::refines(const ZVec& zprime, const ZVec& z) const {
    auto outer = classes(z);
    for (auto& j : classes(zprime)) {
        bool ok = false;
        for (auto& i : outer)
            if (i.k == j.k && i.ibegin <= j.ibegin && j.iend <= i.iend) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::vector<int> SeedContext::level_theta(const ZVec& z) const {
    Point p = point_at(z);
    const CoxeterGroup& G = W();
    std::vector<int> theta;
    for (int s = 0; s < G.rank(); ++s)
        if (G.simple_root(s).eval(p) == 0) theta.push_back(s);
    return theta;
}

std::vector<int> SeedContext::level_basis(const ZVec& z) const {
    std::vector<int> reps = W().min_coset_reps(level_theta(z));
    std::reverse(reps.begin(), reps.end());
    return reps;
}

int SeedContext::longest_min_rep(const ZVec& z) const {
    const CoxeterGroup& G = W();
    return G.mul(G.longest(), G.inverse(G.longest_in(level_theta(z))));
}

// ---- generator presentations ------------------------------------------------------

std::vector<DaggerTerm> SeedContext::dagger(int k, int sign01) const {
    const Shape& mu = cfg_.mu;
    std::vector<DaggerTerm> out;
    const int shiftSign = sign01 == 0 ? -1 : +1;
    for (int i = 1; i <= mu.block_size(k); ++i) {
        std::vector<LinearForm> den;
        for (int j = 1; j <= mu.block_size(k); ++j)
            if (j != i) den.push_back(LinearForm::root(mu, mu.flat(k, i), mu.flat(k, j)));
        DaggerTerm t{StructuredFraction(cfg_.f_ki(k, sign01, i), std::move(den)), mu.flat(k, i),
                     shiftSign};
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<DDFormTerm> SeedContext::generator_forms(int k, int sign01, const ZVec& z) const {
    const Shape& mu = cfg_.mu;
    const CoxeterGroup& G = W();
    std::vector<DDFormTerm> out;
    for (auto& I : classes_k(z, k)) {
        DDFormTerm t;
        t.shiftSign = sign01 == 0 ? -1 : +1;
        const int i = sign01 == 0 ? I.iend : I.ibegin;  // a^-(I) for X^+, a^+(I) for X^-
        t.var = mu.flat(k, i);
        // sigma^-(I) = (ibegin ibegin+1 ... iend), sigma^+(I) = (iend ... ibegin)
        Perm p = perm_identity(mu.size());
        if (I.iend > I.ibegin) {
            if (sign01 == 0) {
                for (int q = I.ibegin; q < I.iend; ++q) p[mu.flat(k, q)] = mu.flat(k, q + 1);
                p[mu.flat(k, I.iend)] = mu.flat(k, I.ibegin);
            } else {
                for (int q = I.iend; q > I.ibegin; --q) p[mu.flat(k, q)] = mu.flat(k, q - 1);
                p[mu.flat(k, I.ibegin)] = mu.flat(k, I.iend);
            }
        }
        t.word = G.element_of(p);
        if (t.word < 0) throw InternalError("class cycle is not an element of the subsystem group");
        std::vector<LinearForm> den;
        for (int j = 1; j <= mu.block_size(k); ++j)
            if (j < I.ibegin || j > I.iend)
                den.push_back(LinearForm::root(mu, t.var, mu.flat(k, j)));
        // cancelling the in-class Vandermonde factors against the dagger
        // denominator leaves one orientation sign per factor below the
        // chosen extreme
        Polynomial num = cfg_.f_ki(k, sign01, i);
        if (sign01 == 0 && (I.iend - I.ibegin) % 2 == 1) num = -num;
        t.coef = StructuredFraction(std::move(num), std::move(den));
        out.push_back(std::move(t));
    }
    return out;
}

std::string SeedContext::sigma_str(int elt) const {
    const CoxeterGroup& G = W();
    if (elt == 0) return "e";
    std::string s;
    for (int letter : G.canonical_word(elt)) {
        if (!s.empty()) s += "*";
        s += "s" + std::to_string(simpleGlobal_[letter]);
    }
    return s;
}

int SeedContext::parse_sigma(const std::string& word) const {
    std::string trimmed;
    for (char c : word)
        if (c != ' ' && c != '\t') trimmed += c;
    if (trimmed.empty() || trimmed == "e") return 0;
    const CoxeterGroup& G = W();
    int e = 0;
    std::size_t pos = 0;
    while (pos < trimmed.size()) {
        if (trimmed[pos] != 's') throw SyntaxError("expected 's' in group word", pos);
        ++pos;
        std::size_t start = pos;
        while (pos < trimmed.size() && isdigit(static_cast<unsigned char>(trimmed[pos]))) ++pos;
        if (start == pos) throw SyntaxError("expected simple reflection index", pos);
        int global = std::stoi(trimmed.substr(start, pos - start));
        auto it = globalSimple_.find(global);
        if (it == globalSimple_.end())
            throw SyntaxError("s" + std::to_string(global) +
                                  " is not a reflection of the seed subsystem",
                              start);
        e = G.mul(e, G.simple_elt(it->second));
        if (pos < trimmed.size()) {
            if (trimmed[pos] != '*') throw SyntaxError("expected '*'", pos);
            ++pos;
        }
    }
    return e;
}

const std::vector<Vec>& SeedContext::form_dvectors(int k, int sign01, const ZVec& z) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto key = std::make_tuple(k, sign01, z);
    auto it = cache_->dvectors.find(key);
    if (it != cache_->dvectors.end()) return it->second;
    std::vector<Vec> vecs;
    Point p = point_at(z);
    for (auto& form : generator_forms(k, sign01, z)) {
        try {
            vecs.push_back(D_vector(*table_, p, form.coef));
        } catch (const PoleError&) {
            throw PoleError("generator coefficient has a pole at the base point; the frame "
                            "hypothesis is violated");
        }
    }
    return cache_->dvectors.emplace(std::move(key), std::move(vecs)).first->second;
}

// ---- operator vectors ----------------------------------------------------------------

void OperatorVector::add(const ZVec& z, int sigma, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(z, sigma);
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

OperatorVector& OperatorVector::operator+=(const OperatorVector& o) {
    for (auto& [key, c] : o.terms) add(key.first, key.second, c);
    return *this;
}

OperatorVector OperatorVector::operator*(const Rational& c) const {
    OperatorVector out;
    if (c == 0) return out;
    for (auto& [key, q] : terms) out.terms.emplace(key, q * c);
    return out;
}

OperatorVector basis_vector(const SeedContext& ctx, const ZVec& z, int sigma) {
    if (!ctx.in_cone(z)) throw OutOfShapeError("shift vector is outside the cone");
    std::vector<int> reps = ctx.level_basis(z);
    if (std::find(reps.begin(), reps.end(), sigma) == reps.end())
        throw OutOfShapeError("sigma is not a minimal representative at this shift");
    OperatorVector x;
    x.add(z, sigma, Rational(1));
    return x;
}

OperatorVector act_generator(const SeedContext& ctx, int k, int sign01, const OperatorVector& x) {
    if (k < 1 || k > ctx.cfg().rprime) throw OutOfShapeError("generator block out of range");
    const CoxeterGroup& G = ctx.W();
    const SchubertTable& T = ctx.schub();
    OperatorVector out;
    for (auto& [key, c] : x.terms) {
        const ZVec& z = key.first;
        const int sigma = key.second;
        auto forms = ctx.generator_forms(k, sign01, z);
        const auto& dvecs = ctx.form_dvectors(k, sign01, z);
        for (std::size_t fi = 0; fi < forms.size(); ++fi) {
            const auto& form = forms[fi];
            if (G.length(G.mul(sigma, form.word)) !=
                G.length(sigma) + G.length(form.word))
                continue;
            const int sw = G.mul(sigma, form.word);
            ZVec newz = z;
            newz[form.var] += form.shiftSign;
            if (!ctx.in_cone(newz))
                throw InternalError("generator action left the shift cone");
            for (int tau : ctx.level_basis(newz)) {
                if (!G.bruhat_leq(tau, sw)) continue;
                const int gap = G.length(sw) - G.length(tau);
                Rational coefficient = 0;
                for (std::size_t rho = 0; rho < G.order(); ++rho) {
                    if (G.length(static_cast<int>(rho)) != gap || dvecs[fi][rho] == 0) continue;
                    Rational lr = T.lr(tau, static_cast<int>(rho), sw);
                    if (lr != 0) coefficient += lr * dvecs[fi][rho];
                }
                if (coefficient != 0) out.add(newz, tau, c * coefficient);
            }
        }
    }
    return out;
}

OperatorVector act_gamma(const SeedContext& ctx, const Polynomial& gamma, const OperatorVector& x) {
    ctx.require_invariant(gamma);
    const CoxeterGroup& G = ctx.W();
    const SchubertTable& T = ctx.schub();
    OperatorVector out;
    ZVec currentZ;
    bool haveLevel = false;
    Rational gv;
    Vec d;
    std::vector<int> reps;
    for (auto& [key, c] : x.terms) {
        const ZVec& z = key.first;
        const int sigma = key.second;
        if (!haveLevel || z != currentZ) {
            currentZ = z;
            haveLevel = true;
            Point p = ctx.point_at(z);
            gv = gamma.eval(p);
            d = D_vector(T, p, gamma);
            reps = ctx.level_basis(z);
        }
        out.add(z, sigma, gv * c);
        for (int tau : reps) {
            if (tau == sigma || !G.bruhat_leq(tau, sigma)) continue;
            const int gap = G.length(sigma) - G.length(tau);
            Rational coefficient = 0;
            for (std::size_t rho = 0; rho < G.order(); ++rho) {
                if (G.length(static_cast<int>(rho)) != gap || d[rho] == 0) continue;
                Rational lr = T.lr(tau, static_cast<int>(rho), sigma);
                if (lr != 0) coefficient += lr * d[rho];
            }
            if (coefficient != 0) out.add(z, tau, c * coefficient);
        }
    }
    return out;
}

std::string character_key(const SeedContext& ctx, const ZVec& z) {
    Point p = ctx.point_at(z);
    const Shape& mu = ctx.shape();
    std::string key;
    for (int k = 1; k <= mu.blocks(); ++k) {
        auto [lo, hi] = mu.block_range(k);
        std::vector<Rational> vals(p.coords().begin() + lo, p.coords().begin() + hi);
        std::sort(vals.begin(), vals.end());
        key += std::to_string(k) + ":[";
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) key += ",";
            key += rat_str(vals[i]);
        }
        key += "];";
    }
    return key;
}

std::map<std::string, OperatorVector> character_decompose(const SeedContext& ctx,
                                                          const OperatorVector& x) {
    std::map<std::string, OperatorVector> out;
    for (auto& [key, c] : x.terms)
        out[character_key(ctx, key.first)].add(key.first, key.second, c);
    return out;
}

// ---- simplicity -----------------------------------------------------------------------

namespace {

// rational root candidates of sum u_i c^i by the rational root theorem;
// empty when the coefficients are too large to factor cheaply
std::vector<Rational> rational_root_candidates(const std::vector<Rational>& u) {
    int top = -1, low = -1;
    for (int i = 0; i < static_cast<int>(u.size()); ++i)
        if (u[i] != 0) {
            if (low < 0) low = i;
            top = i;
        }
    if (top < 0) return {};  // identically zero: callers must handle separately
    std::vector<Rational> cands;
    if (low > 0) cands.push_back(Rational(0));
    if (top == low) return cands;  // monomial in c: only 0
    mpz_class lcm = 1;
    for (int i = low; i <= top; ++i)
        if (u[i] != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), u[i].get_den().get_mpz_t());
    mpz_class a0 = abs(mpz_class(Rational(u[low] * lcm).get_num()));
    mpz_class ad = abs(mpz_class(Rational(u[top] * lcm).get_num()));
    if (a0 > 1000000000000L || ad > 1000000000000L) return {};  // give up, stay on the window
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> out;
        for (mpz_class d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    for (auto& p : divisors(a0))
        for (auto& q : divisors(ad)) {
            Rational c(p, q);
            c.canonicalize();
            cands.push_back(c);
            cands.push_back(-c);
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

// coefficient list of p seen as a univariate in x_a whose coefficients are
// restricted to the leading "other" monomial, giving one necessary univariate
// condition for p|_{x_a = c} = 0
std::vector<Rational> pinned_univariate(const Polynomial& p, int var) {
    int top = 0;
    for (auto& [m, c] : p.terms()) top = std::max(top, m.exp(var));
    // leading other-monomial among terms of maximal var-degree
    const Monomial* lead = nullptr;
    Monomial leadOther;
    for (auto& [m, c] : p.terms()) {
        if (m.exp(var) != top) continue;
        Monomial other;
        for (auto& [w, e] : m.exps())
            if (w != var) other = other.times(Monomial::var(w, e));
        if (!lead || mono_cmp_grlex(other, leadOther) > 0) {
            lead = &m;
            leadOther = other;
        }
    }
    std::vector<Rational> u(top + 1, Rational(0));
    for (auto& [m, c] : p.terms()) {
        Monomial other;
        for (auto& [w, e] : m.exps())
            if (w != var) other = other.times(Monomial::var(w, e));
        if (other == leadOther) u[m.exp(var)] += c;
    }
    return u;
}

// full factorization into root-like linear forms x_a - x_b - c and x_a - c;
// nullopt if an irreducible nonlinear part remains
std::optional<std::vector<LinearForm>> root_like_factors(const Polynomial& f) {
    const Shape& shape = f.shape();
    std::vector<LinearForm> out;
    Polynomial work = f;
    while (work.degree().value_or(0) >= 1) {
        std::vector<int> vars;
        for (int v = 0; v < shape.size(); ++v)
            if (!work.derivative(v).is_zero()) vars.push_back(v);
        bool found = false;
        // single-variable factors x_a - c
        for (int a : vars) {
            for (auto& c : rational_root_candidates(pinned_univariate(work, a))) {
                LinearForm l(shape, {{a, Rational(1)}}, -c);
                if (auto q = exact_divide(work, l)) {
                    work = std::move(*q);
                    out.push_back(l);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) continue;
        // difference factors x_a - x_b - c
        for (std::size_t ia = 0; ia < vars.size() && !found; ++ia)
            for (std::size_t ib = 0; ib < vars.size() && !found; ++ib) {
                if (ia == ib) continue;
                int a = vars[ia], b = vars[ib];
                Polynomial shifted = work.substituted(
                    a, Polynomial::variable_flat(shape, a) + Polynomial::variable_flat(shape, b));
                for (auto& c : rational_root_candidates(pinned_univariate(shifted, a))) {
                    LinearForm l(shape, {{a, Rational(1)}, {b, Rational(-1)}}, -c);
                    if (auto q = exact_divide(work, l)) {
                        work = std::move(*q);
                        out.push_back(l);
                        found = true;
                        break;
                    }
                }
            }
        if (!found) return std::nullopt;
    }
    if (work.is_zero()) throw InternalError("factorization of the zero polynomial");
    return out;
}

}  // namespace

SimplicityVerdict simplicity_check(const SeedContext& ctx, int window) {
    const Shape& mu = ctx.shape();
    const GaloisConfig& cfg = ctx.cfg();
    SimplicityVerdict verdict;
    verdict.window = window;

    // enumerate the cone inside the max-norm window, small shifts first
    std::vector<ZVec> zs{ZVec(mu.size(), 0)};
    for (auto& [lo, hi] : ctx.seed().windows) {
        std::vector<std::vector<long>> tuples;
        std::vector<long> cur(hi - lo, 0);
        auto gen = [&](auto&& self, int idx, long maxVal) -> void {
            if (idx == hi - lo) {
                tuples.push_back(cur);
                return;
            }
            for (long t = maxVal; t >= -window; --t) {
                cur[idx] = t;
                self(self, idx + 1, t);
            }
        };
        gen(gen, 0, window);
        std::vector<ZVec> next;
        for (auto& z : zs)
            for (auto& t : tuples) {
                ZVec nz = z;
                for (int p = lo; p < hi; ++p) nz[p] = t[p - lo];
                next.push_back(std::move(nz));
            }
        zs = std::move(next);
    }
    std::sort(zs.begin(), zs.end(), [](const ZVec& a, const ZVec& b) {
        long sa = 0, sb = 0;
        for (auto v : a) sa += std::abs(v);
        for (auto v : b) sb += std::abs(v);
        if (sa != sb) return sa < sb;
        return a < b;
    });

    struct Numerator {
        int k, sign01, i;
        Polynomial f;
    };
    std::vector<Numerator> numerators;
    for (int k = 1; k <= cfg.rprime; ++k)
        for (int sign01 = 0; sign01 < 2; ++sign01)
            for (int i = 1; i <= mu.block_size(k); ++i)
                numerators.push_back({k, sign01, i, cfg.f_ki(k, sign01, i)});

    for (auto& z : zs) {
        Point p = ctx.point_at(z);
        for (auto& n : numerators)
            if (n.f.eval(p) == 0) {
                verdict.kind = SimplicityVerdict::Fails;
                verdict.z = z;
                verdict.k = n.k;
                verdict.i = n.i;
                verdict.sign01 = n.sign01;
                return verdict;
            }
    }

    // attempt a global certificate: factor every numerator into root-like
    // linear forms and solve the integrality conditions over the cone exactly
    auto window_of = [&](int flat) -> int {
        for (std::size_t w = 0; w < ctx.seed().windows.size(); ++w)
            if (flat >= ctx.seed().windows[w].first && flat < ctx.seed().windows[w].second)
                return static_cast<int>(w);
        return -1;
    };
    const Point& vhat = ctx.seed().vhat;

    // returns a cone witness of l(vhat + z) = 0, or nullopt
    auto solve_factor = [&](const LinearForm& l) -> std::optional<ZVec> {
        ZVec z(mu.size(), 0);
        auto fill_window = [&](int w, long value) {
            for (int p = ctx.seed().windows[w].first; p < ctx.seed().windows[w].second; ++p)
                z[p] = value;
        };
        if (l.coeffs().size() == 1) {
            Rational za = -l.constant() - vhat[l.coeffs()[0].first];  // l = x_a - c
            int wa = window_of(l.coeffs()[0].first);
            if (wa < 0) return za == 0 ? std::optional<ZVec>(z) : std::nullopt;
            if (!is_integer(za)) return std::nullopt;
            fill_window(wa, za.get_num().get_si());
            return z;
        }
        // x_a - x_b - c with the canonical +1 coefficient first
        int a = l.coeffs()[0].first, b = l.coeffs()[1].first;
        if (l.coeffs()[0].second < 0) std::swap(a, b);
        Rational cprime = -l.constant() - vhat[a] + vhat[b];  // z_a - z_b = c'
        int wa = window_of(a), wb = window_of(b);
        if (wa < 0 && wb < 0) return cprime == 0 ? std::optional<ZVec>(z) : std::nullopt;
        if (!is_integer(cprime)) return std::nullopt;
        long c = cprime.get_num().get_si();
        if (wa >= 0 && wb >= 0 && wa == wb) {
            // chain constraint inside one window
            if (a < b && c < 0) return std::nullopt;
            if (a > b && c > 0) return std::nullopt;
            auto [lo, hi] = ctx.seed().windows[wa];
            if (a < b) {
                for (int p = lo; p <= a; ++p) z[p] = c;
            } else {
                for (int p = a; p < hi; ++p) z[p] = c;
            }
            return z;
        }
        if (wa >= 0)
            fill_window(wa, c);  // b's window (if any) stays at 0
        else
            fill_window(wb, -c);
        return z;
    };

    bool allCertified = true;
    for (auto& n : numerators) {
        if (n.f.is_zero()) throw InternalError("zero numerator escaped the window sweep");
        if (n.f.is_constant()) continue;
        auto factors = root_like_factors(n.f);
        if (!factors) {
            allCertified = false;  // cannot certify globally; keep scanning for failures
            continue;
        }
        for (auto& l : *factors) {
            auto witness = solve_factor(l);
            if (!witness) continue;
            if (!ctx.in_cone(*witness)) throw InternalError("factor witness escaped the cone");
            if (n.f.eval(ctx.point_at(*witness)) != 0)
                throw InternalError("factor witness does not vanish");
            verdict.kind = SimplicityVerdict::Fails;
            verdict.z = *witness;
            verdict.k = n.k;
            verdict.i = n.i;
            verdict.sign01 = n.sign01;
            return verdict;
        }
    }
    verdict.kind =
        allCertified ? SimplicityVerdict::HoldsEverywhere : SimplicityVerdict::HoldsOnWindow;
    return verdict;
}

// ---- reachability ----------------------------------------------------------------------

namespace {

// action matrix of gamma on the z-component, coordinates in level_basis order
Mat level_matrix(const SeedContext& ctx, const ZVec& z, const Polynomial& gamma) {
    const CoxeterGroup& G = ctx.W();
    const SchubertTable& T = ctx.schub();
    std::vector<int> reps = ctx.level_basis(z);
    Point p = ctx.point_at(z);
    Rational gv = gamma.eval(p);
    Vec d = D_vector(T, p, gamma);
    const std::size_t n = reps.size();
    Mat m(n, Vec(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        m[j][j] = gv;
        for (std::size_t i = 0; i < n; ++i) {
            int tau = reps[i], sigma = reps[j];
            if (tau == sigma || !G.bruhat_leq(tau, sigma)) continue;
            const int gap = G.length(sigma) - G.length(tau);
            Rational coefficient = 0;
            for (std::size_t rho = 0; rho < G.order(); ++rho) {
                if (G.length(static_cast<int>(rho)) != gap || d[rho] == 0) continue;
                Rational lr = T.lr(tau, static_cast<int>(rho), sigma);
                if (lr != 0) coefficient += lr * d[rho];
            }
            m[i][j] = coefficient;
        }
    }
    return m;
}

// Gamma-cyclic closure of a level component
RowSpan level_span(const SeedContext& ctx, const ZVec& z, const Vec& x0) {
    std::vector<Mat> mats;
    for (auto& g : ctx.gamma_gens()) mats.push_back(level_matrix(ctx, z, g));
    RowSpan span(static_cast<int>(x0.size()));
    span.add(x0);
    std::vector<Vec> frontier{x0};
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

}  // namespace

bool reachability_probe(const SeedContext& ctx, const ZVec& zFrom, int sigmaFrom,
                        const ZVec& zTo, int sigmaTo, int maxSteps, int* stepsUsed) {
    (void)basis_vector(ctx, zFrom, sigmaFrom);  // validates
    (void)basis_vector(ctx, zTo, sigmaTo);
    int steps = 0;
    if (stepsUsed) *stepsUsed = 0;

    ZVec zc = zFrom;
    std::vector<int> reps = ctx.level_basis(zc);
    Vec comp(reps.size(), Rational(0));
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (reps[i] == sigmaFrom) comp[i] = 1;
    RowSpan span = level_span(ctx, zc, comp);

    while (zc != zTo) {
        // next move: raise the lexicographically first coordinate that is low,
        // else lower the lexicographically last coordinate that is high
        int target = -1;
        bool plus = false;
        for (int p = 0; p < static_cast<int>(zc.size()); ++p)
            if (zc[p] < zTo[p]) {
                target = p;
                plus = true;
                break;
            }
        if (target < 0)
            for (int p = static_cast<int>(zc.size()) - 1; p >= 0; --p)
                if (zc[p] > zTo[p]) {
                    target = p;
                    plus = false;
                    break;
                }
        if (target < 0) throw InternalError("probe planner lost its target");
        if (!ctx.shift_legal(zc, target, plus))
            throw InternalError("probe planner chose an illegal shift");
        const int k = ctx.shape().block_of(target);
        const int sign01 = plus ? 1 : 0;  // X^- raises, X^+ lowers
        ZVec znext = zc;
        znext[target] += plus ? 1 : -1;

        // carrier candidates inside the current cyclic subspace: exact basis
        // vectors when the span is full, else its reduced basis rows
        std::vector<Vec> carriers;
        if (span.dim() == static_cast<int>(reps.size())) {
            // longest representative first (the ladder choice)
            for (std::size_t i = 0; i < reps.size(); ++i) {
                Vec u(reps.size(), Rational(0));
                u[i] = 1;
                carriers.push_back(std::move(u));
            }
        } else {
            carriers = span.basis();
        }
        bool moved = false;
        for (auto& u : carriers) {
            OperatorVector xu;
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (u[i] != 0) xu.add(zc, reps[i], u[i]);
            ++steps;
            if (steps > maxSteps) return false;
            OperatorVector y = act_generator(ctx, k, sign01, xu);
            std::vector<int> nreps = ctx.level_basis(znext);
            Vec proj(nreps.size(), Rational(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < nreps.size(); ++i) {
                auto it = y.terms.find({znext, nreps[i]});
                if (it != y.terms.end()) {
                    proj[i] = it->second;
                    if (proj[i] != 0) nonzero = true;
                }
            }
            if (!nonzero) continue;
            zc = znext;
            reps = std::move(nreps);
            span = level_span(ctx, zc, proj);
            moved = true;
            break;
        }
        if (!moved) return false;
    }
    if (stepsUsed) *stepsUsed = steps;
    for (auto& row : span.basis()) {
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (reps[i] == sigmaTo && row[i] != 0) return true;
    }
    return false;
}

// ---- operator expansions ----------------------------------------------------------------

OperatorElement expand_dagger(const SeedContext& ctx, int k, int sign01) {
    OperatorElement out;
    for (auto& t : ctx.dagger(k, sign01)) {
        ZVec shift(ctx.shape().size(), 0);
        shift[t.var] = t.shiftSign;
        auto it = out.emplace(shift, StructuredFraction::zero(ctx.shape())).first;
        it->second = it->second + t.coef;
    }
    return out;
}

namespace {

ZVec zvec_permuted(const ZVec& z, const Perm& p) {
    ZVec out(z.size(), 0);
    for (std::size_t i = 0; i < z.size(); ++i) out[p[i]] = z[i];
    return out;
}

// nabla_s acting on an L # V element by the conjugation action
OperatorElement nabla_conj(const CoxeterGroup& G, int s, const OperatorElement& X) {
    const Perm& p = G.perm(G.simple_elt(s));
    OperatorElement diff;
    auto add = [&](const ZVec& shift, const StructuredFraction& c) {
        auto it = diff.emplace(shift, StructuredFraction::zero(c.shape())).first;
        it->second = it->second + c;
    };
    for (auto& [shift, coef] : X) {
        add(shift, coef);
        add(zvec_permuted(shift, p), -(coef.permuted(p)));
    }
    OperatorElement out;
    for (auto& [shift, coef] : diff) {
        if (coef.is_zero()) continue;
        std::vector<LinearForm> den = coef.denominator();
        den.push_back(G.simple_root(s));
        out.emplace(shift, StructuredFraction(coef.numerator(), std::move(den)));
    }
    return out;
}

}  // namespace

OperatorElement expand_dd_form(const SeedContext& ctx, int k, int sign01, const ZVec& z) {
    const CoxeterGroup& G = ctx.W();
    OperatorElement total;
    for (auto& form : ctx.generator_forms(k, sign01, z)) {
        OperatorElement X;
        ZVec shift(ctx.shape().size(), 0);
        shift[form.var] = form.shiftSign;
        X.emplace(shift, form.coef);
        std::vector<int> word = G.canonical_word(form.word);
        for (auto it = word.rbegin(); it != word.rend(); ++it) X = nabla_conj(G, *it, X);
        for (auto& [w, c] : X) {
            if (c.is_zero()) continue;
            auto jt = total.emplace(w, StructuredFraction::zero(ctx.shape())).first;
            jt->second = jt->second + c;
        }
    }
    for (auto it = total.begin(); it != total.end();)
        it = it->second.is_zero() ? total.erase(it) : std::next(it);
    return total;
}

bool operator_elements_equal(const OperatorElement& a, const OperatorElement& b) {
    auto nonzero = [](const OperatorElement& x) {
        std::size_t n = 0;
        for (auto& [w, c] : x)
            if (!c.is_zero()) ++n;
        return n;
    };
    if (nonzero(a) != nonzero(b)) return false;
    for (auto& [w, c] : a) {
        if (c.is_zero()) continue;
        auto it = b.find(w);
        if (it == b.end() || !c.equals(it->second)) return false;
    }
    return true;
}

StructuredFraction apply_operator_element(const OperatorElement& X, const Polynomial& f) {
    StructuredFraction total = StructuredFraction::zero(f.shape());
    for (auto& [shift, coef] : X) {
        Point v(f.shape());
        for (std::size_t i = 0; i < shift.size(); ++i) v[static_cast<int>(i)] = Rational(shift[i]);
        total = total + coef * f.translated(v);
    }
    return total;
}

}  // namespace gt

