#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gt/fraction.hpp"
#include "gt/polynomial.hpp"

namespace gt {

// A root x_a - x_b given by flat variable indices, oriented as stored.
struct RootSpec {
    int a = 0, b = 0;
    bool operator==(const RootSpec& o) const { return a == o.a && b == o.b; }
};

// Finite reflection group built from a base of difference roots over a block
// shape.  Every admissible root is a coordinate difference, so elements are
// permutations of the flat variable set.  The table is immutable once built;
// all queries are read-only.
class CoxeterGroup {
public:
    // reads GT_MAX_GROUP, defaults to 10^6 elements
    static std::size_t default_bound();

    static std::shared_ptr<const CoxeterGroup> build(Shape shape, std::vector<RootSpec> simple,
                                                     std::size_t maxElements = 0);
    // full product-of-symmetric-groups system: simple roots x[k,i] - x[k,i+1]
    static std::shared_ptr<const CoxeterGroup> full_type_a(Shape shape, std::size_t maxElements = 0);

    const Shape& shape() const { return shape_; }
    int rank() const { return static_cast<int>(simple_.size()); }
    std::size_t order() const { return perm_.size(); }

    // --- elements -----------------------------------------------------------
    int identity() const { return 0; }
    int longest() const { return longest_; }
    int length(int e) const { return length_[e]; }
    const Perm& perm(int e) const { return perm_[e]; }
    int element_of(const Perm& p) const;  // -1 when absent
    int mul(int a, int b) const;
    int mul_simple(int a, int s) const { return rightMul_[a][s]; }
    int simple_elt(int s) const { return simpleElt_[s]; }
    int inverse(int e) const { return inv_[e]; }
    std::vector<int> elements_by_length() const;  // ids sorted by (length, canonical word)

    // lexicographically least reduced word (simple-reflection indices)
    std::vector<int> canonical_word(int e) const;
    std::vector<std::vector<int>> all_reduced_words(int e) const;
    std::string word_str(int e) const;                // "s1*s2" / "e"
    int parse_word(const std::string& w) const;       // inverse of word_str

    // --- roots ---------------------------------------------------------------
    int num_pos_roots() const { return static_cast<int>(posRoot_.size()); }
    const LinearForm& pos_root(int r) const { return posRootForm_[r]; }
    RootSpec pos_root_spec(int r) const { return posRoot_[r]; }
    const LinearForm& simple_root(int s) const { return posRootForm_[simpleRootIdx_[s]]; }
    RootSpec simple_spec(int s) const { return posRoot_[simpleRootIdx_[s]]; }
    int reflection_elt(int r) const { return reflElt_[r]; }
    std::optional<int> root_of_reflection(int e) const;

    // --- actions --------------------------------------------------------------
    Point act(int e, const Point& v) const { return v.permuted(perm_[e]); }
    Polynomial act(int e, const Polynomial& f) const { return f.permuted(perm_[e]); }
    StructuredFraction act(int e, const StructuredFraction& f) const { return f.permuted(perm_[e]); }

    // --- Bruhat order ----------------------------------------------------------
    // covers sigma < sigma s_alpha: (element, positive root index)
    std::vector<std::pair<int, int>> covers_up(int e) const;
    bool bruhat_leq(int a, int b) const {
        if (bruhatLeq_.empty()) throw NotFiniteError("Bruhat table unavailable for this group size");
        return bruhatLeq_[a][b];
    }
    // all saturated chains a = c_0 < c_1 < ... < c_r = b, as element id paths
    std::vector<std::vector<int>> saturated_chains(int a, int b, std::size_t orderLimit = 120) const;

    // --- parabolic subgroups (theta = simple-reflection index set) -------------
    std::vector<int> subgroup_elements(const std::vector<int>& theta) const;
    int longest_in(const std::vector<int>& theta) const;  // omega_0(theta)
    // sigma = sigma^theta * sigma_theta with additive lengths
    std::pair<int, int> coset_decompose(int e, const std::vector<int>& theta) const;
    std::vector<int> min_coset_reps(const std::vector<int>& theta) const;
    bool in_min_reps(int e, const std::vector<int>& theta) const;

    // --- stabilizers -------------------------------------------------------------
    struct StabilizerData {
        std::vector<int> zero_pos_roots;  // positive root indices vanishing at v
        std::vector<int> stabilizer;      // element ids of W_v
        std::vector<int> theta;           // simple indices with alpha(v) = 0
        bool standard = false;
    };
    StabilizerData stabilizer_data(const Point& v) const;
    bool is_standard(const Point& v) const { return stabilizer_data(v).standard; }
    // some sigma with sigma(v) standard (identity when v already is)
    int standardizer(const Point& v) const;
    // W^v for standard v; throws NotStandard (with suggested conjugator) otherwise
    std::vector<int> min_reps_for_point(const Point& v) const;

private:
    CoxeterGroup() = default;
    void enumerate(std::size_t bound);
    void build_roots();
    void build_bruhat();

    Shape shape_;
    std::vector<RootSpec> simple_;
    std::vector<int> simpleElt_;
    std::vector<int> simpleRootIdx_;

    std::map<Perm, int> index_;
    std::vector<Perm> perm_;
    std::vector<int> length_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> rightMul_;  // [elt][simple]
    int longest_ = 0;

    std::vector<RootSpec> posRoot_;
    std::vector<LinearForm> posRootForm_;
    std::vector<int> reflElt_;

    std::vector<std::vector<char>> bruhatLeq_;
};

// ---- divided differences ------------------------------------------------------

// nabla_s = (1/alpha_s)(1 - s); exact cancellation is guaranteed for
// polynomials (InternalError otherwise).
Polynomial nabla(const CoxeterGroup& W, int s, const Polynomial& f);
StructuredFraction nabla(const CoxeterGroup& W, int s, const StructuredFraction& f);

// divided difference along the canonical reduced word of sigma
Polynomial divided_difference(const CoxeterGroup& W, int sigma, const Polynomial& f);
StructuredFraction divided_difference(const CoxeterGroup& W, int sigma, const StructuredFraction& f);

}  // namespace gt
