#pragma once

#include "crn/conservation.hpp"
#include "crn/network.hpp"
#include "crn/polynomial.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace crn {

// SplitMix64: the 64-bit mixing generator with the fixed constants
// 0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9, 0x94D049BB133111EB. Identical
// output on every platform, which keeps all sampled points reproducible.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Rational in (0, 10] with denominator in [1, 8].
    Rat positive_rational() {
        const std::uint64_t den = 1 + below(8);
        const std::uint64_t num = 1 + below(10 * den);
        return Rat(num, den);
    }

  private:
    std::uint64_t state_;
};

// A positive sample point for every rate constant and concentration.
std::map<Variable, Rat> random_point(const Network& net, SplitMix64& gen);

struct OracleReport {
    int trials = 0;
    int passes = 0;
    std::vector<std::string> failures;  // one line per failing trial
    bool ok() const { return passes == trials && failures.empty(); }
};

// At seeded random positive points, compares (a) the evaluated symbolic
// determinant of the extended Jacobian against (b) the determinant of the
// entrywise-evaluated Jacobian matrix computed by rational elimination.
OracleReport random_eval_crosscheck(const Network& net, int trials, std::uint64_t seed);

struct RankResult {
    bool full_rank;
    int kernel_dimension;  // 0 when full_rank
};

// Exact rank of the extended Jacobian at one positive point. Full rank is
// equivalent to ker(J(f)) meeting the stoichiometric subspace trivially
// there. Throws Error when the assignment has a non-positive value.
RankResult pointwise_rank_test(const Network& net, const std::map<Variable, Rat>& point);

// Coefficient of the rate-constant monomial of R in the extended Jacobian
// determinant, computed from the permutation-sum expansion. Test oracle;
// guarded to n <= 8.
Polynomial bruteforce_coefficient(const Network& net, std::span<const int> reactions);

}  // namespace crn
