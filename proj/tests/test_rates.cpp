#include "crn/rates.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace crn;
using crn::test::load;
using crn::test::reaction_index;
using crn::test::species_index;
using crn::test::term;

namespace {

// The futile-cycle determinant display: -det equals this 8-monomial
// polynomial with unit coefficients.
Polynomial futile_neg_det(const Network& net) {
    std::vector<Term> t{
        term(net, 1, {"k1", "k3", "k4"}, {{"S1", 1}, {"S2", 1}}),
        term(net, 1, {"k1", "k3", "k4"}, {{"S1", 1}, {"S4", 1}}),
        term(net, 1, {"k1", "k3", "k5"}, {{"S1", 1}}),
        term(net, 1, {"k1", "k4", "k5"}, {{"S1", 1}, {"S2", 1}}),
        term(net, 1, {"k1", "k4", "k5"}, {{"S2", 1}, {"S3", 1}}),
        term(net, 1, {"k2", "k4", "k5"}, {{"S2", 1}}),
        term(net, 1, {"k3", "k4", "k5"}, {{"S2", 1}}),
        term(net, 1, {"k1", "k3", "k6"}, {{"S1", 1}}),
    };
    return Polynomial::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("species rate function of A -> B") {
    Network net = parse_network("A -> B");
    auto f = species_rate_function(net);
    REQUIRE(f.size() == 2);
    Polynomial kc = Polynomial(rate_var(0)) * Polynomial(conc_var(0));
    CHECK(f[0] == -kc);
    CHECK(f[1] == kc);
}

TEST_CASE("an inflow contributes a constant term") {
    Network net = parse_network("0 -> A");
    auto f = species_rate_function(net);
    CHECK(f[0] == Polynomial(rate_var(0)));
}

TEST_CASE("futile cycle rate function components") {
    Network net = load("futile_cycle.crn");
    auto f = species_rate_function(net);
    // d c_1/dt = -k1 c1 c3 + (k2 + k3) c5
    std::vector<Term> expected{
        term(net, -1, {"k1"}, {{"S1", 1}, {"S3", 1}}),
        term(net, 1, {"k2"}, {{"S5", 1}}),
        term(net, 1, {"k3"}, {{"S5", 1}}),
    };
    CHECK(f[species_index(net, "S1")] == Polynomial::from_terms(std::move(expected)));

    // d c_6/dt = k4 c2 c4 - (k5 + k6) c6
    std::vector<Term> expected6{
        term(net, 1, {"k4"}, {{"S2", 1}, {"S4", 1}}),
        term(net, -1, {"k5"}, {{"S6", 1}}),
        term(net, -1, {"k6"}, {{"S6", 1}}),
    };
    CHECK(f[species_index(net, "S6")] == Polynomial::from_terms(std::move(expected6)));
}

TEST_CASE("extended rate function of the futile cycle") {
    Network net = load("futile_cycle.crn");
    ReducedBasis basis = reduced_conservation_basis(net);
    auto ext = extended_rate_function(net, basis);
    REQUIRE(ext.size() == 6);

    // The six displayed components, as structural polynomials, in any order.
    auto lin = [&](std::vector<std::string> names) {
        std::vector<Term> t;
        for (const auto& n : names) t.push_back(term(net, 1, {}, {{n, 1}}));
        return Polynomial::from_terms(std::move(t));
    };
    std::vector<Polynomial> expected{
        lin({"S1", "S5"}),
        lin({"S2", "S6"}),
        lin({"S3", "S4", "S5", "S6"}),
        Polynomial::from_terms({term(net, -1, {"k4"}, {{"S2", 1}, {"S4", 1}}),
                                term(net, 1, {"k3"}, {{"S5", 1}}), term(net, 1, {"k6"}, {{"S6", 1}})}),
        Polynomial::from_terms({term(net, 1, {"k1"}, {{"S1", 1}, {"S3", 1}}),
                                term(net, -1, {"k2"}, {{"S5", 1}}), term(net, -1, {"k3"}, {{"S5", 1}})}),
        Polynomial::from_terms({term(net, 1, {"k4"}, {{"S2", 1}, {"S4", 1}}),
                                term(net, -1, {"k5"}, {{"S6", 1}}), term(net, -1, {"k6"}, {{"S6", 1}})}),
    };
    for (const Polynomial& e : expected) {
        int hits = 0;
        for (const Polynomial& got : ext)
            if (got == e) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("extended rate function of an open network is the rate function") {
    Network net = load("degenerate_open.crn");
    ReducedBasis basis = reduced_conservation_basis(net);
    REQUIRE(basis.d == 0);
    auto ext = extended_rate_function(net, basis);
    auto f = species_rate_function(net);
    CHECK(ext == f);
}

TEST_CASE("extended rate function of A -> B") {
    Network net = parse_network("A -> B");
    ReducedBasis basis = reduced_conservation_basis(net);
    auto ext = extended_rate_function(net, basis);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == Polynomial(conc_var(0)) + Polynomial(conc_var(1)));
    CHECK(ext[1] == Polynomial(rate_var(0)) * Polynomial(conc_var(0)));
}

TEST_CASE("extended Jacobian entries of the futile cycle") {
    Network net = load("futile_cycle.crn");
    ReducedBasis basis = reduced_conservation_basis(net);
    PolyMat j = extended_jacobian(net, basis);

    // Position of a species in the permuted order.
    auto pos = [&](const std::string& name) {
        const int idx = species_index(net, name);
        for (size_t p = 0; p < basis.perm.size(); ++p)
            if (basis.perm[p] == idx) return static_cast<int>(p);
        FAIL("species not found");
        return -1;
    };
    // The f_{S5} row differentiated by c_{S1} is k1 c3.
    Polynomial k1c3 = Polynomial(rate_var(reaction_index(net, "k1"))) *
                      Polynomial(conc_var(species_index(net, "S3")));
    CHECK(j(pos("S5"), pos("S1")) == k1c3);
    // A conservation row is constant: d(c1 + c5)/d c1 = 1.
    const int s1 = pos("S1");
    bool found_const_row = false;
    for (int i = 0; i < basis.d; ++i)
        if (j(i, s1) == Polynomial(Rat(1))) found_const_row = true;
    CHECK(found_const_row);
}

TEST_CASE("futile cycle determinant equals the displayed polynomial") {
    Network net = load("futile_cycle.crn");
    ReducedBasis basis = reduced_conservation_basis(net);
    Polynomial det = det_fraction_free(extended_jacobian(net, basis));
    CHECK(-det == futile_neg_det(net));
}

TEST_CASE("Jacobian of a constant vector is zero; inflows do not alter it") {
    Network net = parse_network("A -> B");
    Network with_inflow = parse_network("A -> B\n0 -> A\n0 -> B");
    std::vector<Variable> vars{conc_var(0), conc_var(1)};
    PolyMat j1 = jacobian(species_rate_function(net), vars);
    PolyMat j2 = jacobian(species_rate_function(with_inflow), vars);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) CHECK(j1(i, k) == j2(i, k));
}

TEST_CASE("evaluating the futile-cycle display at the all-ones point gives 8") {
    Network net = load("futile_cycle.crn");
    Polynomial p = futile_neg_det(net);
    std::map<Variable, Rat> ones;
    for (int j = 0; j < net.reaction_count(); ++j) ones[rate_var(j)] = 1;
    for (int i = 0; i < net.species_count(); ++i) ones[conc_var(i)] = 1;
    CHECK(p.evaluate(ones) == 8);
    CHECK(p.monomial_count() == 8);
}
