#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sinecert/rational.hpp"

namespace sinecert {

/// Dense univariate polynomial over Rational. Coefficient i belongs to Y^i.
/// Trailing zero coefficients are trimmed; the zero polynomial has an empty
/// coefficient list and degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Rational c);
    static UniPoly monomial(Rational c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& coeff(int i) const;  ///< 0 for i > degree
    const Rational& lc() const;          ///< leading coefficient, poly must be nonzero
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    double eval_d(double x) const;
    /// Exact sign of eval(x), computed over the integers (no intermediate
    /// rational blowup).
    int sign_at(const Rational& x) const;

    UniPoly derivative() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend UniPoly operator-(const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder of exact rational division.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    /// Division that must leave no remainder.
    UniPoly exact_div(const UniPoly& b) const;

    /// Positive rational c such that p/c has coprime integer coefficients.
    Rational content() const;
    /// p divided by its (positive) content: integer coefficients, sign kept.
    UniPoly positive_scaled() const;
    /// Integer-primitive form with positive leading coefficient.
    UniPoly primitive_int_poslc() const;

    UniPoly squarefree_part() const;

    std::string to_string(const std::string& var = "Y") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Polynomial gcd, normalized to integer-primitive with positive leading
/// coefficient. gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace sinecert
