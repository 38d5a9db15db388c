#pragma once

#include "crn/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crn {

// A formal variable: either the rate constant of a reaction or the
// concentration of a species. All rate constants order before all
// concentrations, each family by index.
struct Variable {
    enum class Kind : std::uint8_t { RateConstant = 0, Concentration = 1 };
    Kind kind;
    int index;

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable rate_var(int reaction) { return {Variable::Kind::RateConstant, reaction}; }
inline Variable conc_var(int species) { return {Variable::Kind::Concentration, species}; }

// Exponent part of a monomial: (variable, exponent > 0) sorted by variable.
class Monomial {
  public:
    Monomial() = default;

    static Monomial of(Variable v, int exp = 1);

    void multiply_by(Variable v, int exp);
    Monomial times(const Monomial& o) const;

    int exponent(Variable v) const;
    int total_degree() const { return degree_; }
    int degree_in(Variable::Kind kind) const;
    const std::vector<std::pair<Variable, int>>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    bool operator==(const Monomial&) const = default;

    // Graded lexicographic order: total degree first, ties broken so that a
    // higher exponent on an earlier variable makes the monomial larger.
    std::strong_ordering order(const Monomial& o) const;

    bool operator<(const Monomial& o) const { return order(o) == std::strong_ordering::less; }

  private:
    std::vector<std::pair<Variable, int>> exps_;
    int degree_ = 0;
};

struct Term {
    Monomial mono;
    Rat coeff;  // nonzero

    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

// Canonical multivariate polynomial over Q: terms sorted in descending
// graded-lex order, no zero coefficients, no duplicate monomials.
// Structural equality is semantic equality.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Rat& constant);
    explicit Polynomial(Variable v);

    static Polynomial from_term(const Rat& coeff, Monomial m);
    static Polynomial from_terms(std::vector<Term> terms);  // normalizes

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    int monomial_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const;

    // Coefficient of the given monomial (0 when absent).
    Rat coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    Polynomial scaled(const Rat& c) const;

    bool operator==(const Polynomial&) const = default;

    // Formal partial derivative.
    Polynomial derivative(Variable v) const;

    // Exact quotient; throws InternalError if the division is not exact.
    Polynomial divide_exact(const Polynomial& divisor) const;

    // Replaces some variables by rational values.
    Polynomial substitute(const std::map<Variable, Rat>& values) const;

    // Full evaluation; throws Error when a variable of the polynomial has
    // no assigned value.
    Rat evaluate(const std::map<Variable, Rat>& values) const;

    // Sum of the terms whose rate-constant degree equals k.
    Polynomial rate_degree_part(int k) const;

    // Largest per-monomial degree in the given variable family.
    int max_degree_in(Variable::Kind kind) const;

    std::vector<Variable> variables() const;

  private:
    std::vector<Term> terms_;
};

enum class SignClass { AllZero, AllPositive, AllNegative, Mixed };

struct SignReport {
    SignClass cls;
    // For Mixed: the graded-lex-smallest monomial with positive / negative
    // coefficient.
    std::optional<Monomial> positive_witness;
    std::optional<Monomial> negative_witness;
};

// Classifies the coefficient signs of p. Meaningful when all variables of p
// range over positive values, as rate constants and concentrations do.
SignReport sign_report(const Polynomial& p);

// Square matrix of polynomials, row-major.
class PolyMat {
  public:
    PolyMat() = default;
    PolyMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Polynomial& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Polynomial& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Polynomial> a_;
};

// Jacobian of F with respect to the given variables: entry (i,j) is the
// partial derivative of F[i] by vars[j].
PolyMat jacobian(const std::vector<Polynomial>& F, const std::vector<Variable>& vars);

// Exact determinant of a polynomial matrix: cofactor expansion for
// dimensions <= 4, fraction-free (Bareiss) elimination with exact division
// above.
Polynomial det_fraction_free(const PolyMat& m);

// Determinant by the permutation-sum definition. Exponential; used as an
// independent oracle in tests.
Polynomial det_leibniz(const PolyMat& m);

// Maps variables to display names for rendering.
struct VarNames {
    std::vector<std::string> rate;  // by reaction index
    std::vector<std::string> conc;  // by species index
    std::string operator()(Variable v) const;
};

// Canonical textual rendering: terms in descending graded-lex order,
// variables joined by '*', e.g. "k1*k3*k4*c1*c2 - 2*c1".
std::string render(const Polynomial& p, const VarNames& names);
std::string render(const Monomial& m, const VarNames& names);

}  // namespace crn
