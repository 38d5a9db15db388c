#include "crn/polynomial.hpp"

#include <doctest.h>

using namespace crn;

namespace {

Polynomial kvar(int i) { return Polynomial(rate_var(i)); }
Polynomial cvar(int i) { return Polynomial(conc_var(i)); }

}  // namespace

TEST_CASE("product of monomials accumulates exponents") {
    Polynomial p = (kvar(0) * cvar(0)) * cvar(0);
    REQUIRE(p.monomial_count() == 1);
    CHECK(p.terms()[0].mono.exponent(conc_var(0)) == 2);
    CHECK(p.terms()[0].mono.exponent(rate_var(0)) == 1);
    CHECK(p.terms()[0].coeff == 1);
}

TEST_CASE("a - a is the zero polynomial") {
    Polynomial a = kvar(0) * cvar(0) + cvar(1).scaled(Rat(7, 2));
    CHECK((a - a).is_zero());
    CHECK(a - a == Polynomial{});
}

TEST_CASE("structural equality is order-insensitive at construction") {
    Polynomial p = cvar(0) + kvar(1);
    Polynomial q = kvar(1) + cvar(0);
    CHECK(p == q);
}

TEST_CASE("graded lex order: degree dominates, earlier variables dominate ties") {
    Monomial k0c0 = Monomial::of(rate_var(0)).times(Monomial::of(conc_var(0)));
    Monomial c1 = Monomial::of(conc_var(1));
    CHECK(c1 < k0c0);  // lower degree

    Monomial k0 = Monomial::of(rate_var(0));
    Monomial k1 = Monomial::of(rate_var(1));
    CHECK(k1 < k0);  // same degree, k0 has the higher exponent on the earlier variable

    Monomial c0 = Monomial::of(conc_var(0));
    CHECK(c0 < k1);  // rate constants order before concentrations

    // Storage is descending: leading term of k1 + k0 is k0.
    Polynomial p = Polynomial(rate_var(1)) + Polynomial(rate_var(0));
    CHECK(p.leading_term().mono == k0);
}

TEST_CASE("derivative") {
    Polynomial p = kvar(0) * cvar(0) * cvar(0);  // k c^2
    Polynomial d = p.derivative(conc_var(0));
    CHECK(d == (kvar(0) * cvar(0)).scaled(2));
    CHECK(p.derivative(conc_var(1)).is_zero());
    CHECK(Polynomial(Rat(5)).derivative(conc_var(0)).is_zero());
}

TEST_CASE("exact division recovers factors") {
    Polynomial a = kvar(0) + cvar(0);
    Polynomial b = cvar(0) * cvar(1) - kvar(1).scaled(Rat(3, 2));
    Polynomial prod = a * b;
    CHECK(prod.divide_exact(a) == b);
    CHECK(prod.divide_exact(b) == a);
    CHECK_THROWS_AS((a * b + Polynomial(Rat(1))).divide_exact(a), InternalError);
}

TEST_CASE("substitute performs partial evaluation") {
    Polynomial p = kvar(0) * cvar(0) + cvar(1);
    Polynomial q = p.substitute({{rate_var(0), Rat(2)}});
    CHECK(q == cvar(0).scaled(2) + cvar(1));
}

TEST_CASE("evaluate is exact and rejects missing variables") {
    Polynomial p = kvar(0) * cvar(0);
    CHECK(p.evaluate({{rate_var(0), Rat(2)}, {conc_var(0), Rat(3, 2)}}) == 3);
    CHECK(Polynomial{}.evaluate({}) == 0);
    CHECK_THROWS_AS(p.evaluate({{rate_var(0), Rat(2)}}), Error);
}

TEST_CASE("evaluate distributes over arithmetic at random points") {
    Polynomial a = kvar(0) * cvar(0) - cvar(1).scaled(Rat(1, 3));
    Polynomial b = cvar(1) * cvar(1) + kvar(0).scaled(4);
    std::uint64_t x = 42;
    auto next = [&x] {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return x;
    };
    for (int t = 0; t < 100; ++t) {
        std::map<Variable, Rat> pt{{rate_var(0), Rat(1 + next() % 50, 1 + next() % 7)},
                                   {conc_var(0), Rat(1 + next() % 50, 1 + next() % 7)},
                                   {conc_var(1), Rat(1 + next() % 50, 1 + next() % 7)}};
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST_CASE("sign_report") {
    CHECK(sign_report(Polynomial{}).cls == SignClass::AllZero);
    CHECK(sign_report(kvar(0) + cvar(1)).cls == SignClass::AllPositive);
    CHECK(sign_report(-(kvar(0) * cvar(1))).cls == SignClass::AllNegative);

    Polynomial mixed = kvar(0) - cvar(0) + kvar(1) * kvar(2) - kvar(0) * kvar(1);
    SignReport rep = sign_report(mixed);
    REQUIRE(rep.cls == SignClass::Mixed);
    // Smallest positive monomial: k0 (degree 1); smallest negative: c0 (degree 1,
    // concentrations order after rate constants).
    CHECK(*rep.positive_witness == Monomial::of(rate_var(0)));
    CHECK(*rep.negative_witness == Monomial::of(conc_var(0)));
}

TEST_CASE("determinants of polynomial matrices") {
    PolyMat one(1, 1);
    one(0, 0) = kvar(0) + cvar(0);
    CHECK(det_fraction_free(one) == kvar(0) + cvar(0));

    PolyMat rep(2, 2);
    rep(0, 0) = kvar(0);
    rep(0, 1) = cvar(0);
    rep(1, 0) = kvar(0);
    rep(1, 1) = cvar(0);
    CHECK(det_fraction_free(rep).is_zero());
}

TEST_CASE("fraction-free elimination matches Leibniz expansion") {
    // Deterministic pseudo-random 5x5 and 6x6 polynomial matrices exercise the
    // Bareiss path (cofactor handles everything up to 4x4).
    std::uint64_t x = 7;
    auto next = [&x] {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return x;
    };
    for (int n : {3, 5, 6}) {
        PolyMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                switch (next() % 4) {
                    case 0: m(i, j) = Polynomial{}; break;
                    case 1: m(i, j) = Polynomial(Rat(static_cast<long long>(next() % 5) - 2)); break;
                    case 2: m(i, j) = kvar(static_cast<int>(next() % 3)); break;
                    default:
                        m(i, j) = cvar(static_cast<int>(next() % 3)).scaled(
                            Rat(static_cast<long long>(next() % 3) + 1));
                }
            }
        CHECK(det_fraction_free(m) == det_leibniz(m));
    }
}

TEST_CASE("rendering uses the canonical descending order") {
    VarNames names{{"k1", "k2"}, {"c1", "c2"}};
    Polynomial p = kvar(0) * cvar(0) - cvar(1).scaled(Rat(1, 2)) + Polynomial(Rat(3));
    CHECK(render(p, names) == "k1*c1 - 1/2*c2 + 3");
    CHECK(render(Polynomial{}, names) == "0");
    Polynomial sq = cvar(1) * cvar(1);
    CHECK(render(sq, names) == "c2^2");
}
