#pragma once

#include "crn/conservation.hpp"
#include "crn/network.hpp"
#include "crn/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace crn {

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

// One nonzero product det(Y(R)_I) * det(G(R)_I), where G carries the
// reactant-minus-product columns. These products are, up to the global
// factor (-1)^s and a concentration monomial, the coefficients of the
// extended Jacobian determinant.
struct SubsetWitness {
    std::vector<int> reactions;        // ascending, |.| = s
    std::vector<int> removed_species;  // ascending, |.| = d, within the missing-outflow set
    Rat value;                         // nonzero
};

struct Verdict {
    enum class Kind { Injective, NotInjective, AllDegenerate };
    Kind kind;
    int det_sign = 0;  // Injective only: common sign of the determinant coefficients
    std::optional<SubsetWitness> positive;  // NotInjective: first product > 0
    std::optional<SubsetWitness> negative;  // NotInjective: first product < 0

    bool operator==(const Verdict& o) const { return kind == o.kind && det_sign == o.det_sign; }
};

const char* verdict_name(Verdict::Kind k);

enum class DetMethod { SubsetExpansion, Elimination, Both };

// Number of (R, I) pairs the subset enumeration would visit:
// C(m, s) * C(|missing outflows|, d).
std::uint64_t enumeration_size(const Network& net);

// (-1)^n det(Y(R)) det(G(R)) for a set of n reactions of an open network.
// Throws Error unless the network is open and |R| = n.
Rat sigma(const Network& net, std::span<const int> reactions);

// The nonzero products det(Y(R)_I) det(G(R)_I) of a size-s reaction set,
// listed as (I, value) in ascending I order.
std::vector<std::pair<std::vector<int>, Rat>> sigma_products(const Network& net,
                                                             std::span<const int> reactions);

// Coefficient of the rate-constant monomial of R in the extended Jacobian
// determinant, as a polynomial in the concentrations. When contributions is
// non-null it receives the (I, value) pairs behind the coefficient.
Polynomial coefficient_closed(const Network& net, const ReducedBasis& basis,
                              std::span<const int> reactions,
                              std::vector<std::pair<std::vector<int>, Rat>>* contributions = nullptr);

// Full determinant of the extended Jacobian. SubsetExpansion assembles it
// coefficient by coefficient; Elimination runs fraction-free elimination on
// the symbolic matrix; Both computes the two and requires equality.
Polynomial det_extended_jacobian(const Network& net, const ReducedBasis& basis,
                                 DetMethod method = DetMethod::Both,
                                 std::uint64_t budget = kDefaultBudget);

// Determinant identity between a closed network and its fully open closure:
// lhs  = det of the closure's Jacobian with the added outflow constants set to 1,
// rhs  = (-1)^d det(J - E) where J is the extended Jacobian and E subtracts 1
//        on the diagonal rows of species lacking a declared outflow.
// The two sides are equal as polynomials. Throws Error unless net is closed.
std::pair<Polynomial, Polynomial> det_fully_open_relation(const Network& net);

// Per-species-permutation-independent injectivity decision.
//   AllDegenerate : every product vanishes (the determinant is zero),
//   NotInjective  : products of both signs exist,
//   Injective     : all nonzero products share a sign; det_sign is the
//                   common sign of the determinant coefficients.
// SubsetExpansion enumerates (R, I) in ascending order and short-circuits
// on the first sign conflict; it throws BudgetExceeded when the enumeration
// exceeds the budget. Elimination decides via the determinant's sign report.
Verdict injectivity_verdict(const Network& net, DetMethod method = DetMethod::SubsetExpansion,
                            std::uint64_t budget = kDefaultBudget);

// Picks SubsetExpansion when the enumeration fits the budget, Elimination
// otherwise (the CLI default).
Verdict injectivity_verdict_auto(const Network& net, std::uint64_t budget = kDefaultBudget);

struct DegeneracyResult {
    bool all_degenerate;
    bool reactant_rank_certificate;       // dim span(reactant complexes) < s
    std::optional<SubsetWitness> witness;  // present iff !all_degenerate
};

// Decides whether every steady state of the network is degenerate. A cheap
// rank certificate is tried first; otherwise the subset enumeration either
// finds a witness or exhausts.
DegeneracyResult degeneracy_check(const Network& net, std::uint64_t budget = kDefaultBudget);

struct OpenClosedReport {
    Verdict fully_open_verdict;    // verdict of the fully open closure
    Verdict closed_verdict;        // verdict of the network itself
    bool dichotomy_applies;          // closure injective: the dichotomy below holds
    bool degree_s_monomial_exists; // det(J_1) of the closure, all constants
                                   // symbolic, has a monomial with exactly s
                                   // declared-reaction constants
};

// Relates injectivity of the network and of its fully open closure. When
// the closure is injective, the network verdict is Injective exactly when a
// degree-s declared monomial exists, and AllDegenerate otherwise.
OpenClosedReport open_closed_relation(const Network& net, std::uint64_t budget = kDefaultBudget);

// Determinant of the closure's Jacobian at concentration one with every
// rate constant symbolic (the object behind degree_s_monomial_exists).
Polynomial det_jacobian_at_one_fully_open(const Network& net);

struct WsdResult {
    enum class Kind { Pass, Fail, NotNAC } kind;
    int sigma_sign = 0;  // Pass: 0 when products are >= 0, 1 when <= 0
    std::optional<std::pair<SubsetWitness, SubsetWitness>> conflict;  // Fail with mixed signs
};

// Weak sign determination for non-autocatalytic networks: some global sign
// flip makes every product non-negative with at least one positive.
WsdResult wsd_check(const Network& net, std::uint64_t budget = kDefaultBudget);

}  // namespace crn
