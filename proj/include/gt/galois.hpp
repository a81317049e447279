#pragma once

#include <array>

#include "gt/bgg.hpp"

namespace gt {

// integral shift vector over the flat variable set; coordinates in blocks
// beyond rprime are always zero
using ZVec = std::vector<long>;

// Data of a standard Galois order of type A over the shape: generator pairs
// X_k^+/- with numerators f_k^+- and implicit Vandermonde-type denominators.
// sign01: 0 for '+', 1 for '-'.
struct GaloisConfig {
    Shape mu;
    int rprime = 0;
    std::vector<std::array<Polynomial, 2>> f;  // f[k-1][sign01]

    // invariance of each f_k under the stabilizer of e_{k,1}; NotInvariant on failure
    void validate() const;
    // f^sign_{k,i}: f_{k,1} = f_k / mu_k, the others its conjugates
    Polynomial f_ki(int k, int sign01, int i) const;
};

struct Seed {
    Point vhat;
    Perm sigma;  // vhat = sigma(v) + z
    ZVec z;
    // contiguous flat ranges [begin, end) covering blocks 1..rprime
    std::vector<std::pair<int, int>> windows;
};

// sort integer-difference clusters together, then shift every cluster member
// to the cluster minimum; idempotent on seeds
Seed seed_normalize(const GaloisConfig& cfg, const Point& v);

struct EquivClass {
    int k = 0;            // block
    int ibegin = 0;       // 1-based position range [ibegin, iend]
    int iend = 0;
    int aplus_flat = 0;   // first element (k, ibegin)
    int aminus_flat = 0;  // last element (k, iend)
};

struct DaggerTerm {
    StructuredFraction coef;
    int var = 0;        // flat index of the shifted coordinate
    int shiftSign = 0;  // +1 or -1: the term is coef * t_{shiftSign * e_var}
};

struct DDFormTerm {
    int word = 0;  // divided difference along this subgroup element
    StructuredFraction coef;
    int var = 0;
    int shiftSign = 0;
};

// Everything needed to act on V(Omega, T(vhat)): the subsystem group of the
// seed, its Schubert tables, and the ambient invariant generators.
class SeedContext {
public:
    SeedContext(GaloisConfig cfg, Seed seed);

    const GaloisConfig& cfg() const { return cfg_; }
    const Seed& seed() const { return seed_; }
    const Shape& shape() const { return cfg_.mu; }
    const CoxeterGroup& W() const { return table_->group(); }
    const SchubertTable& schub() const { return *table_; }
    const std::vector<Polynomial>& gamma_gens() const { return gens_; }
    // ambient invariance under S_mu
    bool is_invariant(const Polynomial& g) const;
    void require_invariant(const Polynomial& g) const;

    // --- cone and classes ------------------------------------------------------
    bool in_cone(const ZVec& z) const;
    Point point_at(const ZVec& z) const;  // vhat + z
    std::vector<EquivClass> classes(const ZVec& z) const;
    std::vector<EquivClass> classes_k(const ZVec& z, int k) const;
    // z +- delta at the flat index stays in the cone
    bool shift_legal(const ZVec& z, int flatVar, bool plus) const;
    bool refines(const ZVec& zprime, const ZVec& z) const;

    // basis of the z-component: W^z ids by decreasing length
    std::vector<int> level_basis(const ZVec& z) const;
    int longest_min_rep(const ZVec& z) const;
    std::vector<int> level_theta(const ZVec& z) const;

    // --- generator data ----------------------------------------------------------
    std::vector<DaggerTerm> dagger(int k, int sign01) const;
    std::vector<DDFormTerm> generator_forms(int k, int sign01, const ZVec& z) const;

    // words over the global simple labels of the ambient base
    std::string sigma_str(int elt) const;
    int parse_sigma(const std::string& word) const;

    // cached D-vectors of the dd-form coefficients at vhat + z
    const std::vector<Vec>& form_dvectors(int k, int sign01, const ZVec& z) const;

private:
    GaloisConfig cfg_;
    Seed seed_;
    std::shared_ptr<SchubertTable> table_;
    std::vector<Polynomial> gens_;
    std::vector<int> simpleGlobal_;   // W simple index -> global Sigma-bar label (1-based)
    std::map<int, int> globalSimple_; // global label -> W simple index
    struct Cache {
        std::mutex mutex;
        std::map<std::tuple<int, int, ZVec>, std::vector<Vec>> dvectors;
    };
    std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

// finitely supported functional in the basis {D_sigma^{vhat+z}}
struct OperatorVector {
    std::map<std::pair<ZVec, int>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const ZVec& z, int sigma, const Rational& c);
    OperatorVector& operator+=(const OperatorVector& o);
    OperatorVector operator*(const Rational& c) const;
    bool operator==(const OperatorVector& o) const { return terms == o.terms; }
};

OperatorVector basis_vector(const SeedContext& ctx, const ZVec& z, int sigma);

// module action of the generator X_k^+- (left action through the dagger form)
OperatorVector act_generator(const SeedContext& ctx, int k, int sign01, const OperatorVector& x);
// action of gamma in Gamma, block-diagonal over z
OperatorVector act_gamma(const SeedContext& ctx, const Polynomial& gamma, const OperatorVector& x);

// canonical character key of a z-level: per-block multiset of coordinates
std::string character_key(const SeedContext& ctx, const ZVec& z);
std::map<std::string, OperatorVector> character_decompose(const SeedContext& ctx,
                                                          const OperatorVector& x);

struct SimplicityVerdict {
    enum Kind { HoldsEverywhere, HoldsOnWindow, Fails } kind = HoldsOnWindow;
    int window = 0;
    // witness for Fails
    ZVec z;
    int k = 0, i = 0, sign01 = 0;
};

SimplicityVerdict simplicity_check(const SeedContext& ctx, int window);

// constructive reachability inside the cyclic module of the `from` basis
// vector; steps count generator applications (Gamma moves are free)
bool reachability_probe(const SeedContext& ctx, const ZVec& zFrom, int sigmaFrom,
                        const ZVec& zTo, int sigmaTo, int maxSteps, int* stepsUsed = nullptr);

// term-map expansion of operators in L # V, used to cross-check the two
// generator presentations exactly
using OperatorElement = std::map<ZVec, StructuredFraction>;
OperatorElement expand_dagger(const SeedContext& ctx, int k, int sign01);
OperatorElement expand_dd_form(const SeedContext& ctx, int k, int sign01, const ZVec& z);
bool operator_elements_equal(const OperatorElement& a, const OperatorElement& b);
// apply an expanded operator to a polynomial (sum of coef * f(x + shift))
StructuredFraction apply_operator_element(const OperatorElement& X, const Polynomial& f);

}  // namespace gt
