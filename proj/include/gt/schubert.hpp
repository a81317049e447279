#pragma once

#include <mutex>

#include "gt/coxeter.hpp"
#include "gt/linalg.hpp"

namespace gt {

// Per-group tables: the normalized Schubert polynomials
// S_sigma = (1/|W|) d_{sigma^{-1} w0} Delta(Phi), the harmonic dual basis
// P_sigma with (P_sigma, S_tau) = delta, and the structure constants
// c^rho_{sigma,tau} of the coinvariant classes.
class SchubertTable {
public:
    explicit SchubertTable(std::shared_ptr<const CoxeterGroup> W);

    const CoxeterGroup& group() const { return *W_; }
    std::shared_ptr<const CoxeterGroup> group_ptr() const { return W_; }

    const Polynomial& vandermonde() const { return delta_; }
    const Polynomial& schubert(int sigma) const { return schubert_[sigma]; }
    const Polynomial& ps(int sigma) const { return ps_[sigma]; }

    // generalized Littlewood-Richardson coefficient c^rho_{sigma,tau}
    Rational lr(int sigma, int tau, int rho) const;

    // generators of Lambda^W: elementary symmetric polynomials of each
    // W-orbit of variables
    const std::vector<Polynomial>& invariant_gens() const { return gens_; }
    // harmonic basis of degree d (kernel of Theta(gen) for all generators)
    const std::vector<Polynomial>& harmonic_basis(int degree) const;
    bool is_invariant(const Polynomial& f) const;

private:
    void build_harmonics();
    void build_ps();

    std::shared_ptr<const CoxeterGroup> W_;
    Polynomial delta_;
    std::vector<Polynomial> schubert_;
    std::vector<Polynomial> ps_;
    std::vector<Polynomial> gens_;
    std::vector<std::vector<Polynomial>> harm_;  // by degree 0..l(w0)
    mutable std::mutex lrMutex_;
    mutable std::map<std::tuple<int, int, int>, Rational> lrMemo_;
};

// ---- expansions and evaluated operators ---------------------------------------

// numeric Schubert-basis coefficients (d_sigma t_at f)(0); throws PoleError
// when f is not regular at `at`
std::map<int, Rational> schubert_expand(const SchubertTable& T, const Polynomial& f,
                                        const Point& at);
std::map<int, Rational> schubert_expand(const SchubertTable& T, const StructuredFraction& f,
                                        const Point& at);
// exact coefficients in Lambda = sum_sigma f_(sigma) S_sigma over Lambda^W
std::map<int, Polynomial> schubert_expand_symbolic(const SchubertTable& T, const Polynomial& f);

// Postnikov-Stanley chain polynomial P_{sigma,tau}; throws NotComparable
Polynomial ps_chain_poly(const SchubertTable& T, int sigma, int tau);

// D_sigma^v(f) = Theta(P_sigma)(t_v f)(0) = (d_sigma t_v f)(0)
Rational D_at(const SchubertTable& T, int sigma, const Point& v, const Polynomial& f);
Rational D_at(const SchubertTable& T, int sigma, const Point& v, const StructuredFraction& f);
// D_{tau,sigma}^v = sum_rho c^sigma_{tau,rho} D_rho^v; requires tau <= sigma
Rational D_pair_at(const SchubertTable& T, int tau, int sigma, const Point& v,
                   const Polynomial& f);
Rational D_pair_at(const SchubertTable& T, int tau, int sigma, const Point& v,
                   const StructuredFraction& f);

// all D values at once, indexed by element id
Vec D_vector(const SchubertTable& T, const Point& v, const Polynomial& f);
Vec D_vector(const SchubertTable& T, const Point& v, const StructuredFraction& f);
// D-vector of a product from the D-vectors of the factors (Leibniz rule)
Vec lr_convolve(const SchubertTable& T, const Vec& df, const Vec& dg);

// sum over reduced words of sigma of prod_i D^0_{s_i}(f)
Rational word_weight_sum(const SchubertTable& T, int sigma, const Polynomial& f);
// sum over saturated chains e -> sigma of prod (cover root, f)_Theta
Rational chain_weight_sum(const SchubertTable& T, int sigma, const Polynomial& f);

}  // namespace gt
