#pragma once

#include <vector>

#include "sinecert/unipoly.hpp"

namespace sinecert {

/// Resultant of two nonzero polynomials (Sylvester determinant).
Rational resultant(const UniPoly& p, const UniPoly& q);

/// Discriminant with the standard normalization
///   (-1)^{n(n-1)/2} resultant(p, p') / lc(p),  n = degree(p) >= 2.
Rational discriminant(const UniPoly& p);

/// Polynomial in Y whose coefficients are themselves polynomials in a
/// parameter. Index i holds the coefficient of Y^i.
using ParamPoly = std::vector<UniPoly>;

/// Discriminant in Y of a parameter-dependent polynomial, returned as a
/// polynomial in the parameter. Same normalization as discriminant().
UniPoly discriminant_in_y(const ParamPoly& p);

/// Substitutes a rational parameter value, giving a plain polynomial in Y.
UniPoly substitute_param(const ParamPoly& p, const Rational& a);

}  // namespace sinecert
