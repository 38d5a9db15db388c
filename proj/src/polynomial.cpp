#include "crn/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace crn {

Monomial Monomial::of(Variable v, int exp) {
    Monomial m;
    m.multiply_by(v, exp);
    return m;
}

void Monomial::multiply_by(Variable v, int exp) {
    if (exp == 0) return;
    degree_ += exp;
    auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                               [](const auto& e, Variable x) { return e.first < x; });
    if (it != exps_.end() && it->first == v) {
        it->second += exp;
        if (it->second == 0) exps_.erase(it);
    } else {
        exps_.insert(it, {v, exp});
    }
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    out.degree_ = degree_ + o.degree_;
    out.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first < b->first)
            out.exps_.push_back(*a++);
        else if (b->first < a->first)
            out.exps_.push_back(*b++);
        else {
            out.exps_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    out.exps_.insert(out.exps_.end(), a, exps_.end());
    out.exps_.insert(out.exps_.end(), b, o.exps_.end());
    return out;
}

int Monomial::exponent(Variable v) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                               [](const auto& e, Variable x) { return e.first < x; });
    return (it != exps_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree_in(Variable::Kind kind) const {
    int deg = 0;
    for (const auto& [v, e] : exps_)
        if (v.kind == kind) deg += e;
    return deg;
}

std::strong_ordering Monomial::order(const Monomial& o) const {
    if (auto c = degree_ <=> o.degree_; c != 0) return c;
    // Equal total degree: scan variables in ascending order; the monomial
    // with the higher exponent on the first differing variable is larger.
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first < b->first) return std::strong_ordering::greater;
        if (b->first < a->first) return std::strong_ordering::less;
        if (auto c = a->second <=> b->second; c != 0) return c;
        ++a;
        ++b;
    }
    if (a != exps_.end()) return std::strong_ordering::greater;
    if (b != o.exps_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

namespace {
bool term_before(const Term& a, const Term& b) {
    return a.mono.order(b.mono) == std::strong_ordering::greater;  // descending
}
}  // namespace

Polynomial::Polynomial(const Rat& constant) {
    if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(Variable v) { terms_.push_back({Monomial::of(v), Rat(1)}); }

Polynomial Polynomial::from_term(const Rat& coeff, Monomial m) {
    Polynomial p;
    if (coeff != 0) p.terms_.push_back({std::move(m), coeff});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading_term of zero polynomial");
    return terms_.front();
}

Rat Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
        auto c = t.mono.order(m);
        if (c == std::strong_ordering::equal) return t.coeff;
        if (c == std::strong_ordering::less) break;  // descending order: no match further down
    }
    return 0;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        auto c = a->mono.order(b->mono);
        if (c == std::strong_ordering::greater)
            out.terms_.push_back(*a++);
        else if (c == std::strong_ordering::less)
            out.terms_.push_back(*b++);
        else {
            Rat sum = a->coeff + b->coeff;
            if (sum != 0) out.terms_.push_back({a->mono, std::move(sum)});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, o.terms_.end());
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    *this = *this + o;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    *this = *this - o;
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Term> products;
    products.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) products.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
    return from_terms(std::move(products));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (c == 0) return {};
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Polynomial Polynomial::derivative(Variable v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const int e = t.mono.exponent(v);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.multiply_by(v, -1);
        out.push_back({std::move(m), t.coeff * e});
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw InternalError("exact division by zero polynomial");
    Polynomial remainder = *this;
    std::vector<Term> quotient;
    const Term& dlead = divisor.leading_term();
    while (!remainder.is_zero()) {
        const Term& rlead = remainder.leading_term();
        // The leading monomial of the divisor must divide that of the
        // remainder, or the division is not exact.
        Monomial q = rlead.mono;
        for (const auto& [v, e] : dlead.mono.exponents()) {
            if (q.exponent(v) < e) throw InternalError("polynomial division is not exact");
            q.multiply_by(v, -e);
        }
        Term qt{std::move(q), rlead.coeff / dlead.coeff};
        remainder -= divisor * from_term(qt.coeff, qt.mono);
        quotient.push_back(std::move(qt));
    }
    return from_terms(std::move(quotient));
}

Polynomial Polynomial::substitute(const std::map<Variable, Rat>& values) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Rat coeff = t.coeff;
        Monomial m;
        for (const auto& [v, e] : t.mono.exponents()) {
            auto it = values.find(v);
            if (it == values.end()) {
                m.multiply_by(v, e);
            } else {
                for (int k = 0; k < e; ++k) coeff *= it->second;
            }
        }
        out.push_back({std::move(m), std::move(coeff)});
    }
    return from_terms(std::move(out));
}

Rat Polynomial::evaluate(const std::map<Variable, Rat>& values) const {
    Rat sum = 0;
    for (const auto& t : terms_) {
        Rat prod = t.coeff;
        for (const auto& [v, e] : t.mono.exponents()) {
            auto it = values.find(v);
            if (it == values.end()) throw Error("evaluate: unassigned variable");
            for (int k = 0; k < e; ++k) prod *= it->second;
        }
        sum += prod;
    }
    return sum;
}

Polynomial Polynomial::rate_degree_part(int k) const {
    Polynomial out;
    for (const auto& t : terms_)
        if (t.mono.degree_in(Variable::Kind::RateConstant) == k) out.terms_.push_back(t);
    return out;
}

int Polynomial::max_degree_in(Variable::Kind kind) const {
    int deg = 0;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.exponents())
            if (v.kind == kind) deg = std::max(deg, e);
    return deg;
}

std::vector<Variable> Polynomial::variables() const {
    std::vector<Variable> vars;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.exponents()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

SignReport sign_report(const Polynomial& p) {
    SignReport rep{SignClass::AllZero, {}, {}};
    if (p.is_zero()) return rep;
    // Terms are stored in descending order; scan backwards so the first
    // hits are the graded-lex-smallest witnesses.
    bool pos = false, neg = false;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (it->coeff > 0 && !pos) {
            pos = true;
            rep.positive_witness = it->mono;
        } else if (it->coeff < 0 && !neg) {
            neg = true;
            rep.negative_witness = it->mono;
        }
        if (pos && neg) break;
    }
    if (pos && neg)
        rep.cls = SignClass::Mixed;
    else if (pos) {
        rep.cls = SignClass::AllPositive;
        rep.positive_witness.reset();
    } else {
        rep.cls = SignClass::AllNegative;
        rep.negative_witness.reset();
    }
    return rep;
}

PolyMat jacobian(const std::vector<Polynomial>& F, const std::vector<Variable>& vars) {
    PolyMat j(static_cast<int>(F.size()), static_cast<int>(vars.size()));
    for (size_t i = 0; i < F.size(); ++i)
        for (size_t k = 0; k < vars.size(); ++k)
            j(static_cast<int>(i), static_cast<int>(k)) = F[i].derivative(vars[k]);
    return j;
}

namespace {

Polynomial det_cofactor(const PolyMat& m, std::vector<int>& cols, int row) {
    const int n = m.rows();
    if (row == n) return Polynomial(Rat(1));
    Polynomial sum;
    for (size_t k = 0; k < cols.size(); ++k) {
        const int col = cols[k];
        if (m(row, col).is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Polynomial sub = det_cofactor(m, rest, row + 1);
        if (sub.is_zero()) continue;
        Polynomial contrib = m(row, col) * sub;
        if (k % 2 == 1) contrib = -contrib;
        sum += contrib;
    }
    return sum;
}

}  // namespace

Polynomial det_fraction_free(const PolyMat& m) {
    if (m.rows() != m.cols()) throw Error("det: matrix is not square");
    const int n = m.rows();
    if (n == 0) return Polynomial(Rat(1));
    if (n <= 4) {
        std::vector<int> cols(n);
        std::iota(cols.begin(), cols.end(), 0);
        return det_cofactor(m, cols, 0);
    }

    // Bareiss: after step k every entry is a (k+1)-minor of the input, so
    // the division by the previous pivot is exact over the polynomial ring.
    PolyMat a = m;
    Polynomial prev_pivot(Rat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot_row = -1;
        for (int r = k; r < n; ++r) {
            if (!a(r, k).is_zero()) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) return {};
        if (pivot_row != k) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot_row, j), a(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num.is_zero() ? Polynomial{} : num.divide_exact(prev_pivot);
            }
            a(i, k) = Polynomial{};
        }
        prev_pivot = a(k, k);
    }
    Polynomial result = a(n - 1, n - 1);
    return sign < 0 ? -result : result;
}

Polynomial det_leibniz(const PolyMat& m) {
    if (m.rows() != m.cols()) throw Error("det: matrix is not square");
    const int n = m.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial sum;
    do {
        Polynomial prod(Rat(1));
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            if (m(i, perm[i]).is_zero())
                zero = true;
            else
                prod = prod * m(i, perm[i]);
        }
        if (zero) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        sum += (inversions % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

std::string VarNames::operator()(Variable v) const {
    const auto& table = v.kind == Variable::Kind::RateConstant ? rate : conc;
    if (v.index >= 0 && v.index < static_cast<int>(table.size())) return table[v.index];
    return (v.kind == Variable::Kind::RateConstant ? "k?" : "c?") + std::to_string(v.index);
}

std::string render(const Monomial& m, const VarNames& names) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.exponents()) {
        if (!out.empty()) out += "*";
        out += names(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string render(const Polynomial& p, const VarNames& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff < 0;
        Rat mag = negative ? Rat(-t.coeff) : t.coeff;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1 || t.mono.is_one()) {
            out += to_string(mag);
            if (!t.mono.is_one()) out += "*";
        }
        if (!t.mono.is_one()) out += render(t.mono, names);
    }
    return out;
}

}  // namespace crn
