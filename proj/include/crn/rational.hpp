#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace crn {

// Arbitrary-precision rational. All arithmetic in this project is exact;
// there is no floating point anywhere on a result path.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline int sign_of(const Rat& r) { return r.sign(); }

inline std::string to_string(const Rat& r) { return r.str(); }

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal invariant fails (e.g. a supposedly exact division
// leaves a remainder, or two determinant methods disagree). Always a bug.
struct InternalError : Error {
    using Error::Error;
};

// Raised when a requested enumeration exceeds the configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace crn
