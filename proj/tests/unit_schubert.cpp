#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>

#include "test_support.hpp"

using namespace gt;
using namespace gtt;

namespace {

Point pt(const Shape& s, std::vector<long> coords) {
    Point v(s);
    for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<int>(i)] = Rational(coords[i]);
    return v;
}

SchubertTable make_table(Shape shape) { return SchubertTable(CoxeterGroup::full_type_a(shape)); }

}  // namespace

TEST_CASE("Schubert normalization and degrees") {
    for (auto shape : {Shape({2}), Shape({3}), Shape({2, 2})}) {
        SchubertTable T = make_table(shape);
        const CoxeterGroup& G = T.group();
        CHECK(T.schubert(0) == Polynomial::constant(shape, 1));
        for (std::size_t e = 0; e < G.order(); ++e) {
            CHECK(T.schubert(static_cast<int>(e)).degree().value() == G.length(static_cast<int>(e)));
            CHECK(T.ps(static_cast<int>(e)).degree().value() == G.length(static_cast<int>(e)));
        }
    }
}

TEST_CASE("A1 Schubert and dual polynomials") {
    SchubertTable T = make_table(Shape({2}));
    Shape mu2({2});
    Polynomial x = Polynomial::variable(mu2, 1, 1), y = Polynomial::variable(mu2, 1, 2);
    CHECK(T.schubert(T.group().longest()) == (x - y) * rat(1, 2));
    CHECK(T.ps(T.group().longest()) == x - y);
}

TEST_CASE("S3 values") {
    SchubertTable T = make_table(Shape({3}));
    const CoxeterGroup& G = T.group();
    Shape mu3({3});
    Polynomial x1 = Polynomial::variable(mu3, 1, 1), x2 = Polynomial::variable(mu3, 1, 2),
               x3 = Polynomial::variable(mu3, 1, 3);
    int s1 = G.simple_elt(0), s2 = G.simple_elt(1);
    CHECK(T.ps(s1) == x1 - x2);
    CHECK(T.ps(s2) == x2 - x3);
    // S_{s1} is congruent to x1 modulo I_W: the difference pairs to zero
    // against every dual polynomial
    Polynomial diff = T.schubert(s1) - x1;
    for (std::size_t e = 0; e < G.order(); ++e)
        CHECK(theta_pair(T.ps(static_cast<int>(e)), diff) == 0);
    // d_{w0} Delta(Phi) = |W|
    CHECK(divided_difference(G, G.longest(), T.vandermonde()) ==
          Polynomial::constant(mu3, 6));
}

TEST_CASE("duality of the two bases") {
    for (auto shape : {Shape({2}), Shape({3}), Shape({2, 2})}) {
        SchubertTable T = make_table(shape);
        const CoxeterGroup& G = T.group();
        for (std::size_t a = 0; a < G.order(); ++a)
            for (std::size_t b = 0; b < G.order(); ++b)
                CHECK(theta_pair(T.ps(static_cast<int>(a)), T.schubert(static_cast<int>(b))) ==
                      (a == b ? 1 : 0));
    }
}

TEST_CASE("dual polynomials are harmonic") {
    for (auto shape : {Shape({3}), Shape({2, 2})}) {
        SchubertTable T = make_table(shape);
        const CoxeterGroup& G = T.group();
        for (std::size_t e = 0; e < G.order(); ++e)
            for (auto& g : T.invariant_gens())
                if (g.degree().value() > 0)
                    CHECK(theta_apply(g, T.ps(static_cast<int>(e))).is_zero());
    }
}

TEST_CASE("divided differences along all reduced words agree") {
    SchubertTable T = make_table(Shape({3}));
    const CoxeterGroup& G = T.group();
    Rng rng(51);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = rand_poly(rng, G.shape(), 3);
        for (std::size_t e = 0; e < G.order(); ++e) {
            Polynomial ref = divided_difference(G, static_cast<int>(e), f);
            for (auto& w : G.all_reduced_words(static_cast<int>(e))) {
                Polynomial g = f;
                for (auto it = w.rbegin(); it != w.rend(); ++it) g = nabla(G, *it, g);
                CHECK(g == ref);
            }
        }
    }
}

TEST_CASE("composition law of divided differences") {
    SchubertTable T = make_table(Shape({3}));
    const CoxeterGroup& G = T.group();
    Rng rng(52);
    for (int t = 0; t < 6; ++t) {
        Polynomial f = rand_poly(rng, G.shape(), 4);
        for (std::size_t a = 0; a < G.order(); ++a)
            for (std::size_t b = 0; b < G.order(); ++b) {
                Polynomial lhs = divided_difference(G, static_cast<int>(a),
                                                    divided_difference(G, static_cast<int>(b), f));
                int ab = G.mul(static_cast<int>(a), static_cast<int>(b));
                Polynomial rhs =
                    G.length(ab) == G.length(static_cast<int>(a)) + G.length(static_cast<int>(b))
                        ? divided_difference(G, ab, f)
                        : Polynomial(G.shape());
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("schubert_expand") {
    SchubertTable A1 = make_table(Shape({2}));
    Shape mu2({2});
    Point zero(mu2);
    auto e1 = schubert_expand(A1, Polynomial::constant(mu2, 1), zero);
    CHECK(e1 == std::map<int, Rational>{{0, Rational(1)}});
    auto ex = schubert_expand(A1, Polynomial::variable(mu2, 1, 1), zero);
    CHECK(ex == std::map<int, Rational>{{A1.group().longest(), Rational(1)}});

    // invariants expand on S_e alone at the origin, and factor out of the
    // evaluated coefficients at any base point
    SchubertTable S3 = make_table(Shape({3}));
    Rng rng(53);
    for (int t = 0; t < 8; ++t) {
        Polynomial g = rand_invariant(rng, S3.invariant_gens(), S3.group().shape(), 3);
        Point origin(S3.group().shape());
        auto exp = schubert_expand(S3, g, origin);
        for (auto& [sigma, c] : exp) CHECK((sigma == 0 ? c == g.eval(origin) : c == 0));

        // invariants factor out of the coefficients at the expansion point
        Polynomial f = rand_poly(rng, S3.group().shape(), 3);
        auto gf = schubert_expand(S3, g * f, origin);
        auto ff = schubert_expand(S3, f, origin);
        for (std::size_t e = 0; e < S3.group().order(); ++e) {
            Rational lhs = gf.count(static_cast<int>(e)) ? gf.at(static_cast<int>(e)) : Rational(0);
            Rational rhs = ff.count(static_cast<int>(e)) ? ff.at(static_cast<int>(e)) : Rational(0);
            CHECK(lhs == g.eval(origin) * rhs);
        }
    }
}

TEST_CASE("symbolic Schubert expansion reassembles the input") {
    SchubertTable S3 = make_table(Shape({3}));
    Rng rng(54);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = rand_poly(rng, S3.group().shape(), 4, 5);
        auto exp = schubert_expand_symbolic(S3, f);
        Polynomial sum(S3.group().shape());
        for (auto& [sigma, c] : exp) {
            // coefficients live in Lambda^W
            CHECK(S3.is_invariant(c));
            sum += c * S3.schubert(sigma);
        }
        CHECK(sum == f);
    }
}

TEST_CASE("lr coefficients") {
    SchubertTable S3 = make_table(Shape({3}));
    const CoxeterGroup& G = S3.group();
    int s1 = G.simple_elt(0), s2 = G.simple_elt(1);
    int s1s2 = G.mul(s1, s2), s2s1 = G.mul(s2, s1);
    // unit of the ring
    for (std::size_t e = 0; e < G.order(); ++e)
        CHECK(S3.lr(0, static_cast<int>(e), static_cast<int>(e)) == 1);
    CHECK(S3.lr(s1, s2, s1s2) == 1);
    CHECK(S3.lr(s1, s2, s2s1) == 1);
    CHECK(S3.lr(s1, s1, s1s2) == 0);  // reduction of x1 * x1 has no x1x2 class
    CHECK(S3.lr(s2, s2, s1s2) == 1);
    // degree filter and symmetry
    CHECK(S3.lr(s1, s2, G.longest()) == 0);
    Rng rng(55);
    for (int t = 0; t < 40; ++t) {
        int a = static_cast<int>(rng() % G.order()), b = static_cast<int>(rng() % G.order()),
            c = static_cast<int>(rng() % G.order());
        CHECK(S3.lr(a, b, c) == S3.lr(b, a, c));
    }
}

TEST_CASE("lr coefficients against symbolic reduction") {
    // second route: expand S_sigma S_tau symbolically and evaluate the
    // Lambda^W coefficients at zero
    for (auto shape : {Shape({3}), Shape({2, 2})}) {
        SchubertTable T = make_table(shape);
        const CoxeterGroup& G = T.group();
        Point zero(shape);
        for (std::size_t a = 0; a < G.order(); ++a)
            for (std::size_t b = 0; b < G.order(); ++b) {
                auto exp = schubert_expand_symbolic(T, T.schubert(static_cast<int>(a)) *
                                                           T.schubert(static_cast<int>(b)));
                for (std::size_t r = 0; r < G.order(); ++r) {
                    Rational viaExp = 0;
                    auto it = exp.find(static_cast<int>(r));
                    if (it != exp.end()) viaExp = it->second.eval(zero);
                    CHECK(T.lr(static_cast<int>(a), static_cast<int>(b), static_cast<int>(r)) ==
                          viaExp);
                }
            }
    }
}

TEST_CASE("lr parabolic closure") {
    SchubertTable T = make_table(Shape({3}));
    const CoxeterGroup& G = T.group();
    for (auto theta : std::vector<std::vector<int>>{{0}, {1}}) {
        auto reps = G.min_coset_reps(theta);
        for (int a : reps)
            for (int b : reps)
                for (std::size_t r = 0; r < G.order(); ++r)
                    if (T.lr(a, b, static_cast<int>(r)) != 0)
                        CHECK(G.in_min_reps(static_cast<int>(r), theta));
    }
}

TEST_CASE("chain polynomials") {
    SchubertTable A1 = make_table(Shape({2}));
    Shape mu2({2});
    CHECK(ps_chain_poly(A1, 0, 0) == Polynomial::constant(mu2, 1));
    CHECK(ps_chain_poly(A1, 0, A1.group().longest()) ==
          Polynomial::variable(mu2, 1, 1) - Polynomial::variable(mu2, 1, 2));

    SchubertTable S3 = make_table(Shape({3}));
    const CoxeterGroup& G = S3.group();
    CHECK(ps_chain_poly(S3, 0, G.longest()) == S3.ps(G.longest()));
    CHECK_THROWS_AS(ps_chain_poly(S3, G.longest(), 0), NotComparableError);

    // P_{sigma,tau} = sum_rho c^tau_{sigma,rho} P_rho on all comparable pairs
    for (std::size_t a = 0; a < G.order(); ++a)
        for (std::size_t b = 0; b < G.order(); ++b) {
            if (!G.bruhat_leq(static_cast<int>(a), static_cast<int>(b))) continue;
            Polynomial lhs = ps_chain_poly(S3, static_cast<int>(a), static_cast<int>(b));
            Polynomial rhs(G.shape());
            for (std::size_t r = 0; r < G.order(); ++r) {
                Rational c = S3.lr(static_cast<int>(a), static_cast<int>(r), static_cast<int>(b));
                if (c != 0) rhs += S3.ps(static_cast<int>(r)) * c;
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("evaluated operators") {
    SchubertTable A1 = make_table(Shape({2}));
    Shape mu2({2});
    const CoxeterGroup& G = A1.group();
    Polynomial x = Polynomial::variable(mu2, 1, 1), y = Polynomial::variable(mu2, 1, 2);
    Point v = pt(mu2, {1, 0});
    // sigma = e evaluates
    Rng rng(56);
    Polynomial f = rand_poly(rng, mu2, 3);
    CHECK(D_at(A1, 0, v, f) == f.eval(v));
    // the pinned example
    CHECK(D_at(A1, G.longest(), v, x * y) == -1);
    // invariants scale at the expansion point: D_sigma^0(gamma f) = gamma(0) D_sigma^0(f)
    Polynomial gamma = x * y + (x + y) * rat(1, 2) + Polynomial::constant(mu2, rat(2, 3));
    Point zero(mu2);
    for (std::size_t e = 0; e < G.order(); ++e)
        CHECK(D_at(A1, static_cast<int>(e), zero, gamma * f) ==
              gamma.eval(zero) * D_at(A1, static_cast<int>(e), zero, f));
}

TEST_CASE("D agrees between theta and divided-difference routes") {
    SchubertTable S3 = make_table(Shape({3}));
    const CoxeterGroup& G = S3.group();
    Rng rng(57);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = rand_poly(rng, G.shape(), 3);
        Point v = rand_point(rng, G.shape());
        Point zero(G.shape());
        for (std::size_t e = 0; e < G.order(); ++e) {
            Polynomial viaDD = divided_difference(G, static_cast<int>(e), f.translated(v));
            CHECK(D_at(S3, static_cast<int>(e), v, f) == viaDD.eval(zero));
        }
    }
}

TEST_CASE("D_pair operators") {
    SchubertTable S3 = make_table(Shape({3}));
    const CoxeterGroup& G = S3.group();
    Rng rng(58);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = rand_poly(rng, G.shape(), 3);
        Point v = rand_point(rng, G.shape());
        for (std::size_t e = 0; e < G.order(); ++e) {
            CHECK(D_pair_at(S3, static_cast<int>(e), static_cast<int>(e), v, f) == f.eval(v));
            CHECK(D_pair_at(S3, 0, static_cast<int>(e), v, f) ==
                  D_at(S3, static_cast<int>(e), v, f));
        }
    }
    CHECK_THROWS_AS(D_pair_at(S3, G.longest(), G.simple_elt(0), Point(G.shape()),
                              Polynomial::constant(G.shape(), 1)),
                    NotComparableError);
}

TEST_CASE("Leibniz rule, both orders") {
    SchubertTable S3 = make_table(Shape({3}));
    const CoxeterGroup& G = S3.group();
    Rng rng(59);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = rand_poly(rng, G.shape(), 3), g = rand_poly(rng, G.shape(), 3);
        Point v = rand_point(rng, G.shape());
        Vec df = D_vector(S3, v, f), dg = D_vector(S3, v, g), dfg = D_vector(S3, v, f * g);
        for (std::size_t s = 0; s < G.order(); ++s) {
            Rational first = 0, second = 0;
            for (std::size_t r = 0; r < G.order(); ++r) {
                if (!G.bruhat_leq(static_cast<int>(r), static_cast<int>(s))) continue;
                first += D_pair_at(S3, static_cast<int>(r), static_cast<int>(s), v, f) * dg[r];
                second += df[r] * D_pair_at(S3, static_cast<int>(r), static_cast<int>(s), v, g);
            }
            CHECK(dfg[s] == first);
            CHECK(dfg[s] == second);
        }
    }
}

TEST_CASE("fractions through the operators") {
    SchubertTable S3 = make_table(Shape({3}));
    const CoxeterGroup& G = S3.group();
    Shape mu3({3});
    // 1/(x1-x2) at a generic point
    StructuredFraction f(Polynomial::constant(mu3, 1), {LinearForm::root(mu3, 0, 1)});
    Point v = pt(mu3, {0, 2, 7});
    CHECK(D_at(S3, 0, v, f) == rat(-1, 2));
    CHECK_THROWS_AS(D_at(S3, 0, pt(mu3, {1, 1, 0}), f), PoleError);
    // schubert_expand via fractions matches the polynomial route after clearing
    Rng rng(60);
    for (int t = 0; t < 6; ++t) {
        Polynomial p = rand_poly(rng, mu3, 3);
        StructuredFraction pf(p);
        Point w = rand_generic_point(rng, mu3);
        auto viaPoly = schubert_expand(S3, p, w);
        auto viaFrac = schubert_expand(S3, pf, w);
        CHECK(viaPoly == viaFrac);
    }
    // the two evaluation routes agree on true fractions: Theta(P_sigma) on the
    // jet versus the divided-difference chain
    for (int t = 0; t < 8; ++t) {
        StructuredFraction h = rand_fraction(rng, G, 2);
        Point w = rand_generic_point(rng, mu3);
        Vec viaJet = D_vector(S3, w, h);
        StructuredFraction th = h.translated(w);
        Point zero(mu3);
        for (std::size_t e = 0; e < G.order(); ++e) {
            StructuredFraction dd = divided_difference(G, static_cast<int>(e), th);
            CHECK(viaJet[e] == dd.eval(zero).value());
        }
    }
}

TEST_CASE("tables are safe for concurrent reads") {
    SchubertTable T = make_table(Shape({3}));
    const CoxeterGroup& G = T.group();
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w]() {
            Rng rng(1000 + w);
            for (int t = 0; t < 40; ++t) {
                int a = static_cast<int>(rng() % G.order());
                int b = static_cast<int>(rng() % G.order());
                int c = static_cast<int>(rng() % G.order());
                Rational viaPair = theta_pair(T.ps(c), T.schubert(a) * T.schubert(b));
                if (T.lr(a, b, c) != viaPair) ok = false;
                Polynomial f = rand_poly(rng, G.shape(), 3);
                Point v = rand_point(rng, G.shape());
                if (D_at(T, a, v, f) !=
                    divided_difference(G, a, f.translated(v)).eval(Point(G.shape())))
                    ok = false;
            }
        });
    for (auto& t : workers) t.join();
    CHECK(ok);
}

TEST_CASE("word and chain weight sums") {
    SchubertTable S3 = make_table(Shape({3}));
    const CoxeterGroup& G = S3.group();
    Shape mu3({3});
    int s1 = G.simple_elt(0), s2 = G.simple_elt(1);
    Polynomial witness = S3.schubert(s1) + S3.schubert(s2);  // equals x1 - x3
    CHECK(witness == Polynomial::variable(mu3, 1, 1) - Polynomial::variable(mu3, 1, 3));
    // the reduced-word indicator sum counts the words of w0
    CHECK(word_weight_sum(S3, G.longest(), witness) == 2);
    // the chain-weighted sum equals the true differential power
    Point zero(mu3);
    CHECK(chain_weight_sum(S3, G.longest(), witness) == 6);
    CHECK(theta_pair(S3.ps(G.longest()), witness.pow(3)) == 6);
    // and the identity D_sigma^0(f^l) = chain sum holds for random linear f
    Rng rng(61);
    for (int t = 0; t < 10; ++t) {
        Polynomial f(mu3);
        for (int i = 0; i < 3; ++i)
            f += Polynomial::variable_flat(mu3, i) * rand_rat(rng);
        for (std::size_t e = 0; e < G.order(); ++e) {
            int l = G.length(static_cast<int>(e));
            CHECK(theta_pair(S3.ps(static_cast<int>(e)), f.pow(l)) ==
                  chain_weight_sum(S3, static_cast<int>(e), f));
        }
    }
}
