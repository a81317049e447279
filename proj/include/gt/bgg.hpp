#pragma once

#include "gt/schubert.hpp"

namespace gt {

// Ambient group G with a standard subsystem base Omega; the evaluated
// operators D_sigma^v restricted to Gamma = Lambda^G span the module studied
// here, with sigma running over the subsystem group W.
class Frame {
public:
    // ambient simple roots + the subset (by index) generating the subsystem
    static Frame make(Shape shape, std::vector<RootSpec> ambientSimple, std::vector<int> omega);
    // ambient = full type A product on the shape
    static Frame type_a(Shape shape, std::vector<int> omega);
    static Frame full(Shape shape);  // omega = all ambient simples

    const Shape& shape() const { return shape_; }
    const CoxeterGroup& sub() const { return table_->group(); }
    const SchubertTable& schub() const { return *table_; }
    const std::vector<RootSpec>& ambient_simple() const { return ambientSimple_; }
    const std::vector<Polynomial>& gamma_gens() const { return gens_; }

    bool is_invariant(const Polynomial& f) const;  // under the ambient group
    void require_invariant(const Polynomial& f) const;

    bool is_standard(const Point& v) const { return sub().is_standard(v); }
    void require_standard(const Point& v) const;
    // W^v ordered by decreasing length (module basis order)
    std::vector<int> basis(const Point& v) const;
    int longest_min_rep(const Point& v) const;

private:
    Shape shape_;
    std::vector<RootSpec> ambientSimple_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<SchubertTable> table_;
};

// finitely supported element of the module at base point v, in the basis
// {D_sigma^v : sigma in W^v}
struct GammaVector {
    Point v;
    std::map<int, Rational> coef;  // element id -> coefficient
};

GammaVector gamma_action(const Frame& F, const Polynomial& gamma, const GammaVector& x);

struct ActionMatrix {
    std::vector<int> basis;  // W^v by decreasing length
    Mat m;                   // m[row][col] acts on coordinates in `basis` order
    Rational eigenvalue;     // gamma(v)
    Point v;
};

ActionMatrix action_matrix(const Frame& F, const Polynomial& gamma, const Point& v);

// gamma in Gamma with t_v(gamma) = S_sigma mod I_W, i.e. D_tau^v(gamma) = delta
Polynomial invariant_preimage(const Frame& F, const Point& v, int sigma);
// the whole dual family at once
std::map<int, Polynomial> dual_family(const Frame& F, const Point& v);

// Jordan block sizes (descending) of [gamma] at eigenvalue gamma(v)
std::vector<int> jordan_profile(const Frame& F, const Polynomial& gamma, const Point& v);

// invariant whose nilpotent part realizes the maximal Jordan block
Polynomial max_block_witness(const Frame& F, const Point& v);

bool cyclicity_check(const Frame& F, const GammaVector& x);
bool kernel_check(const Frame& F, const GammaVector& x);

// Gamma-cyclic subspace generated by x (coordinates in basis(F, x.v) order);
// the constructive side of the cyclicity/kernel criteria
RowSpan gamma_span(const Frame& F, const GammaVector& x);

}  // namespace gt
