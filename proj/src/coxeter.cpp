#include "gt/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace gt {

namespace {

// union-find used for the forest (linear independence) check
struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool join(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

std::size_t CoxeterGroup::default_bound() {
    if (const char* env = std::getenv("GT_MAX_GROUP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000;
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::full_type_a(Shape shape, std::size_t maxElements) {
    std::vector<RootSpec> simple;
    for (int k = 1; k <= shape.blocks(); ++k)
        for (int i = 1; i < shape.block_size(k); ++i)
            simple.push_back({shape.flat(k, i), shape.flat(k, i + 1)});
    return build(std::move(shape), std::move(simple), maxElements);
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::build(Shape shape, std::vector<RootSpec> simple,
                                                        std::size_t maxElements) {
    if (maxElements == 0) maxElements = default_bound();
    auto g = std::shared_ptr<CoxeterGroup>(new CoxeterGroup());
    g->shape_ = std::move(shape);
    const int n = g->shape_.size();
    DSU dsu(n);
    std::set<std::pair<int, int>> seen;
    for (auto& r : simple) {
        if (r.a < 0 || r.a >= n || r.b < 0 || r.b >= n)
            throw OutOfShapeError("simple root variable outside shape");
        if (r.a == r.b) throw AxiomError("simple root x_a - x_a is zero");
        auto key = std::minmax(r.a, r.b);
        if (!seen.insert({key.first, key.second}).second)
            throw AxiomError("simple roots contain a repeated or opposite pair (violates R1)");
        if (!dsu.join(r.a, r.b))
            throw AxiomError("simple roots are linearly dependent");
    }
    g->simple_ = std::move(simple);
    g->enumerate(maxElements);
    g->build_roots();
    g->build_bruhat();
    return g;
}

void CoxeterGroup::enumerate(std::size_t bound) {
    const int n = shape_.size();
    const int r = rank();
    std::vector<Perm> sperm;
    sperm.reserve(r);
    for (auto& s : simple_) sperm.push_back(perm_transposition(n, s.a, s.b));

    auto& index = index_;
    perm_.push_back(perm_identity(n));
    length_.push_back(0);
    rightMul_.push_back(std::vector<int>(r, -1));
    index.emplace(perm_[0], 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (int s = 0; s < r; ++s) {
            if (rightMul_[e][s] >= 0) continue;
            Perm p = perm_mul(perm_[e], sperm[s]);
            auto it = index.find(p);
            int id;
            if (it == index.end()) {
                if (perm_.size() >= bound)
                    throw NotFiniteError("group enumeration exceeded the bound of " +
                                         std::to_string(bound) + " elements");
                id = static_cast<int>(perm_.size());
                perm_.push_back(p);
                length_.push_back(length_[e] + 1);
                rightMul_.push_back(std::vector<int>(r, -1));
                index.emplace(std::move(p), id);
                queue.push_back(id);
            } else {
                id = it->second;
            }
            rightMul_[e][s] = id;
            rightMul_[id][s] = e;  // s is an involution
        }
    }
    simpleElt_.resize(r);
    for (int s = 0; s < r; ++s) simpleElt_[s] = rightMul_[0][s];

    inv_.resize(perm_.size());
    for (std::size_t e = 0; e < perm_.size(); ++e) inv_[e] = index.at(perm_inv(perm_[e]));

    int maxLen = 0, cnt = 0;
    for (std::size_t e = 0; e < perm_.size(); ++e) {
        if (length_[e] > maxLen) {
            maxLen = length_[e];
            longest_ = static_cast<int>(e);
            cnt = 1;
        } else if (length_[e] == maxLen) {
            ++cnt;
        }
    }
    if (perm_.size() > 1 && cnt != 1)
        throw InternalError("longest element is not unique; root data is inconsistent");
}

int CoxeterGroup::element_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int CoxeterGroup::mul(int a, int b) const {
    int e = element_of(perm_mul(perm_[a], perm_[b]));
    if (e < 0) throw InternalError("product escaped the group");
    return e;
}

void CoxeterGroup::build_roots() {
    const int n = shape_.size();
    // adjacency of the simple-root forest: var -> (neighbor, simple index, +1 if stored a->b)
    std::vector<std::vector<std::tuple<int, int, int>>> adj(n);
    for (int s = 0; s < rank(); ++s) {
        adj[simple_[s].a].push_back({simple_[s].b, s, +1});
        adj[simple_[s].b].push_back({simple_[s].a, s, -1});
    }
    // x_p - x_q decomposed over the base; returns coefficient signs or throws
    auto orient = [&](int p, int q) -> int {
        // BFS path p -> q inside the forest
        std::vector<int> prev(n, -2), prevSign(n, 0);
        std::deque<int> bfs{p};
        prev[p] = -1;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            if (u == q) break;
            for (auto& [w, s, dir] : adj[u]) {
                if (prev[w] != -2) continue;
                prev[w] = u;
                prevSign[w] = dir;
                bfs.push_back(w);
            }
        }
        if (prev[q] == -2) throw AxiomError("orbit root is outside the span of the base");
        // walking q back to p: x_p - x_q = sum over path edges of sign * simple root
        int signSeen = 0;
        for (int u = q; u != p; u = prev[u]) {
            int s = prevSign[u];  // edge traversed prev[u] -> u with orientation s
            // edge contributes +simple if traversed along its stored direction
            if (signSeen == 0)
                signSeen = s;
            else if (signSeen != s)
                throw AxiomError("base does not partition the root system (mixed signs)");
        }
        return signSeen;
    };

    std::set<std::pair<int, int>> done;
    for (std::size_t e = 0; e < perm_.size(); ++e) {
        for (auto& s : simple_) {
            int p = perm_[e][s.a], q = perm_[e][s.b];
            auto key = std::minmax(p, q);
            if (!done.insert({key.first, key.second}).second) continue;
            int sign = orient(key.first, key.second);
            RootSpec rs = sign > 0 ? RootSpec{key.first, key.second}
                                   : RootSpec{key.second, key.first};
            posRoot_.push_back(rs);
            posRootForm_.push_back(LinearForm::root(shape_, rs.a, rs.b));
        }
    }
    // deterministic order
    std::vector<std::size_t> ord(posRoot_.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](std::size_t i, std::size_t j) {
        return std::pair(posRoot_[i].a, posRoot_[i].b) < std::pair(posRoot_[j].a, posRoot_[j].b);
    });
    std::vector<RootSpec> pr;
    std::vector<LinearForm> pf;
    for (auto i : ord) {
        pr.push_back(posRoot_[i]);
        pf.push_back(posRootForm_[i]);
    }
    posRoot_ = std::move(pr);
    posRootForm_ = std::move(pf);

    reflElt_.resize(posRoot_.size());
    simpleRootIdx_.assign(rank(), -1);
    for (std::size_t i = 0; i < posRoot_.size(); ++i) {
        int e = element_of(perm_transposition(shape_.size(), posRoot_[i].a, posRoot_[i].b));
        if (e < 0) throw InternalError("reflection of a root is not a group element");
        reflElt_[i] = e;
        for (int s = 0; s < rank(); ++s) {
            auto key = std::minmax(simple_[s].a, simple_[s].b);
            if (std::minmax(posRoot_[i].a, posRoot_[i].b) == key) simpleRootIdx_[s] = static_cast<int>(i);
        }
    }
    for (int s = 0; s < rank(); ++s)
        if (simpleRootIdx_[s] < 0) throw InternalError("simple root missing from positive roots");
}

std::optional<int> CoxeterGroup::root_of_reflection(int e) const {
    for (std::size_t i = 0; i < reflElt_.size(); ++i)
        if (reflElt_[i] == e) return static_cast<int>(i);
    return std::nullopt;
}

void CoxeterGroup::build_bruhat() {
    const std::size_t N = order();
    if (N > 5000)
        return;  // queries on such groups throw below; tables would be impractical
    bruhatLeq_.assign(N, std::vector<char>(N, 0));
    std::vector<int> byLen(N);
    for (std::size_t i = 0; i < N; ++i) byLen[i] = static_cast<int>(i);
    std::sort(byLen.begin(), byLen.end(), [&](int a, int b) { return length_[a] < length_[b]; });
    for (std::size_t i = 0; i < N; ++i) bruhatLeq_[i][i] = 1;
    for (int b : byLen) {
        if (length_[b] == 0) continue;
        for (std::size_t r = 0; r < posRoot_.size(); ++r) {
            int c = mul(b, reflElt_[r]);
            if (length_[c] != length_[b] - 1) continue;
            for (std::size_t a = 0; a < N; ++a)
                if (bruhatLeq_[a][c]) bruhatLeq_[a][b] = 1;
        }
    }
}

std::vector<int> CoxeterGroup::canonical_word(int e) const {
    std::vector<int> word;
    while (e != 0) {
        int best = -1, next = -1;
        for (int s = 0; s < rank(); ++s) {
            int le = element_of(perm_mul(perm_[simpleElt_[s]], perm_[e]));
            if (length_[le] < length_[e]) {
                best = s;
                next = le;
                break;  // simple indices scanned in increasing order
            }
        }
        if (best < 0) throw InternalError("element without left descent");
        word.push_back(best);
        e = next;
    }
    return word;
}

std::vector<std::vector<int>> CoxeterGroup::all_reduced_words(int e) const {
    if (e == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int s = 0; s < rank(); ++s) {
        int le = element_of(perm_mul(perm_[simpleElt_[s]], perm_[e]));
        if (length_[le] >= length_[e]) continue;
        for (auto& tail : all_reduced_words(le)) {
            std::vector<int> w{s};
            w.insert(w.end(), tail.begin(), tail.end());
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::string CoxeterGroup::word_str(int e) const {
    if (e == 0) return "e";
    std::string s;
    for (int letter : canonical_word(e)) {
        if (!s.empty()) s += "*";
        s += "s" + std::to_string(letter + 1);
    }
    return s;
}

int CoxeterGroup::parse_word(const std::string& w) const {
    std::string trimmed;
    for (char c : w)
        if (c != ' ' && c != '\t') trimmed += c;
    if (trimmed.empty() || trimmed == "e") return 0;
    int e = 0;
    std::size_t pos = 0;
    while (pos < trimmed.size()) {
        if (trimmed[pos] != 's') throw SyntaxError("expected 's' in group word", pos);
        ++pos;
        std::size_t start = pos;
        while (pos < trimmed.size() && isdigit(static_cast<unsigned char>(trimmed[pos]))) ++pos;
        if (start == pos) throw SyntaxError("expected simple reflection index", pos);
        int idx = std::stoi(trimmed.substr(start, pos - start));
        if (idx < 1 || idx > rank())
            throw SyntaxError("simple reflection s" + std::to_string(idx) + " out of range", start);
        e = mul(e, simpleElt_[idx - 1]);
        if (pos < trimmed.size()) {
            if (trimmed[pos] != '*') throw SyntaxError("expected '*'", pos);
            ++pos;
        }
    }
    return e;
}

std::vector<int> CoxeterGroup::elements_by_length() const {
    std::vector<int> ids(order());
    for (std::size_t i = 0; i < order(); ++i) ids[i] = static_cast<int>(i);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (length_[a] != length_[b]) return length_[a] < length_[b];
        return canonical_word(a) < canonical_word(b);
    });
    return ids;
}

std::vector<std::pair<int, int>> CoxeterGroup::covers_up(int e) const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t r = 0; r < posRoot_.size(); ++r) {
        int c = mul(e, reflElt_[r]);
        if (length_[c] == length_[e] + 1) out.push_back({c, static_cast<int>(r)});
    }
    return out;
}

std::vector<std::vector<int>> CoxeterGroup::saturated_chains(int a, int b,
                                                             std::size_t orderLimit) const {
    if (order() > orderLimit)
        throw NotFiniteError("saturated-chain enumeration disabled for |W| > " +
                             std::to_string(orderLimit));
    std::vector<std::vector<int>> out;
    if (!bruhat_leq(a, b)) return out;
    std::vector<int> path{a};
    // depth-first over covers, pruned by the Bruhat table
    auto dfs = [&](auto&& self, int cur) -> void {
        if (cur == b) {
            out.push_back(path);
            return;
        }
        for (auto& [c, r] : covers_up(cur)) {
            (void)r;
            if (!bruhat_leq(c, b)) continue;
            path.push_back(c);
            self(self, c);
            path.pop_back();
        }
    };
    dfs(dfs, a);
    return out;
}

std::vector<int> CoxeterGroup::subgroup_elements(const std::vector<int>& theta) const {
    std::set<int> seen{0};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (int s : theta) {
            int f = rightMul_[e][s];
            if (seen.insert(f).second) queue.push_back(f);
        }
    }
    return std::vector<int>(seen.begin(), seen.end());
}

int CoxeterGroup::longest_in(const std::vector<int>& theta) const {
    int best = 0;
    for (int e : subgroup_elements(theta))
        if (length_[e] > length_[best]) best = e;
    return best;
}

std::pair<int, int> CoxeterGroup::coset_decompose(int e, const std::vector<int>& theta) const {
    int rep = e;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int s : theta) {
            int f = rightMul_[rep][s];
            if (length_[f] < length_[rep]) {
                rep = f;
                moved = true;
            }
        }
    }
    return {rep, mul(inv_[rep], e)};
}

bool CoxeterGroup::in_min_reps(int e, const std::vector<int>& theta) const {
    for (int s : theta)
        if (length_[rightMul_[e][s]] < length_[e]) return false;
    return true;
}

std::vector<int> CoxeterGroup::min_coset_reps(const std::vector<int>& theta) const {
    std::vector<int> reps;
    for (std::size_t e = 0; e < order(); ++e)
        if (in_min_reps(static_cast<int>(e), theta)) reps.push_back(static_cast<int>(e));
    std::sort(reps.begin(), reps.end(), [&](int a, int b) {
        if (length_[a] != length_[b]) return length_[a] < length_[b];
        return canonical_word(a) < canonical_word(b);
    });
    return reps;
}

CoxeterGroup::StabilizerData CoxeterGroup::stabilizer_data(const Point& v) const {
    require_same_shape(shape_, v.shape(), "stabilizer computation");
    StabilizerData sd;
    for (int r = 0; r < num_pos_roots(); ++r)
        if (posRootForm_[r].eval(v) == 0) sd.zero_pos_roots.push_back(r);
    for (int s = 0; s < rank(); ++s)
        if (simple_root(s).eval(v) == 0) sd.theta.push_back(s);
    for (std::size_t e = 0; e < order(); ++e)
        if (act(static_cast<int>(e), v) == v) sd.stabilizer.push_back(static_cast<int>(e));
    std::vector<int> gen = subgroup_elements(sd.theta);
    std::set<int> genSet(gen.begin(), gen.end());
    sd.standard = genSet.size() == sd.stabilizer.size();
    if (sd.standard)
        for (int r : sd.zero_pos_roots)
            if (!genSet.count(reflElt_[r])) sd.standard = false;
    return sd;
}

int CoxeterGroup::standardizer(const Point& v) const {
    for (int e : elements_by_length())
        if (is_standard(act(e, v))) return e;
    throw InternalError("no standardizing element found");
}

std::vector<int> CoxeterGroup::min_reps_for_point(const Point& v) const {
    StabilizerData sd = stabilizer_data(v);
    if (!sd.standard)
        throw NotStandardError("point is not standard for this base",
                               word_str(standardizer(v)));
    return min_coset_reps(sd.theta);
}

// ---- divided differences ------------------------------------------------------

Polynomial nabla(const CoxeterGroup& W, int s, const Polynomial& f) {
    Polynomial diff = f - W.act(W.simple_elt(s), f);
    auto q = exact_divide(diff, W.simple_root(s));
    if (!q) throw InternalError("nabla: f - s(f) is not divisible by alpha_s");
    return *q;
}

StructuredFraction nabla(const CoxeterGroup& W, int s, const StructuredFraction& f) {
    StructuredFraction diff = f - f.permuted(W.perm(W.simple_elt(s)));
    std::vector<LinearForm> den = diff.denominator();
    den.push_back(W.simple_root(s));
    return StructuredFraction(diff.numerator(), std::move(den));
}

Polynomial divided_difference(const CoxeterGroup& W, int sigma, const Polynomial& f) {
    std::vector<int> word = W.canonical_word(sigma);
    Polynomial g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = nabla(W, *it, g);
    return g;
}

StructuredFraction divided_difference(const CoxeterGroup& W, int sigma,
                                      const StructuredFraction& f) {
    std::vector<int> word = W.canonical_word(sigma);
    StructuredFraction g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = nabla(W, *it, g);
    return g;
}

}  // namespace gt
