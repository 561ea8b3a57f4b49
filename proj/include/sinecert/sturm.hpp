#pragma once

#include <optional>
#include <vector>

#include "sinecert/unipoly.hpp"

namespace sinecert {

/// Canonical Sturm sequence: p, p', then sign-preserving scaled negated
/// remainders. The last nonzero element is proportional to gcd(p, p').
struct SturmChain {
    std::vector<UniPoly> polys;

    static SturmChain build(const UniPoly& p);
    int variations_at(const Rational& x) const;
    /// Distinct real roots of the chain's polynomial in (lo, hi).
    /// Endpoints must not be roots.
    int count(const Rational& lo, const Rational& hi) const;
};

/// Exact number of distinct real roots of p in the open interval (lo, hi).
/// Endpoint roots are deflated away first (they are not counted).
int count_real_roots(UniPoly p, const Rational& lo, const Rational& hi);

/// Isolating interval for a single real root. exact == true means the root
/// is the rational number lo == hi.
struct RootInterval {
    Rational lo, hi;
    bool exact = false;
};

/// Isolating intervals for every distinct real root of p inside (lo, hi),
/// pairwise disjoint, with non-root endpoints, sorted left to right.
/// Endpoints lo/hi must not be roots of p.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi);

struct NonnegResult {
    bool nonneg = false;
    std::optional<Rational> witness;  ///< point with p < 0 when nonneg == false
};

/// Decides p >= 0 on the closed interval [lo, hi]. Roots of even multiplicity
/// (tangencies) are admitted; on failure a rational witness is produced.
NonnegResult is_nonneg_on(const UniPoly& p, const Rational& lo, const Rational& hi);

/// A real algebraic number: a defining polynomial together with an
/// isolating interval containing exactly one of its real roots.
/// lo == hi encodes an exact rational root.
struct AlgebraicReal {
    UniPoly poly;
    Rational lo, hi;

    bool is_exact() const { return lo == hi; }
    double to_double() const;
    Rational width() const { return hi - lo; }
    /// Shrinks the isolating interval to the requested width (bisection,
    /// Sturm-count preserving).
    void refine(const Rational& width);
    /// -1, 0, +1 for root < r, == r, > r.
    int compare(const Rational& r) const;
};

AlgebraicReal refine_root(AlgebraicReal a, const Rational& width);

/// All distinct real roots of p, sorted increasing.
std::vector<AlgebraicReal> real_roots_of(const UniPoly& p);

}  // namespace sinecert
