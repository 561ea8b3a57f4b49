#include "sinecert/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace sinecert {

namespace {

UniPoly linear_root_factor(const Rational& r) {
    // Y - r
    return UniPoly({-r, Rational(1)});
}

/// Largest-root bound: every real root of p lies in (-B, B).
Rational cauchy_bound(const UniPoly& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeff(i) / p.lc());
        if (a > m) m = a;
    }
    return m + Rational(1);
}

}  // namespace

SturmChain SturmChain::build(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    SturmChain ch;
    ch.polys.push_back(p);
    UniPoly d = p.derivative();
    if (d.is_zero()) return ch;
    ch.polys.push_back(std::move(d));
    while (true) {
        const UniPoly& a = ch.polys[ch.polys.size() - 2];
        const UniPoly& b = ch.polys.back();
        UniPoly r = UniPoly::divmod(a, b).second;
        if (r.is_zero()) break;
        // scaling by a positive constant keeps every sign variation intact
        ch.polys.push_back((-r).positive_scaled());
    }
    return ch;
}

int SturmChain::variations_at(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& q : polys) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int count_real_roots(UniPoly p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("indeterminate root count");
    if (!(lo < hi)) throw std::invalid_argument("count_real_roots: empty interval");
    // Deflate endpoint roots exactly instead of nudging the interval.
    while (!p.is_zero() && p.sign_at(lo) == 0) p = p.exact_div(linear_root_factor(lo));
    while (!p.is_zero() && p.sign_at(hi) == 0) p = p.exact_div(linear_root_factor(hi));
    if (p.degree() <= 0) return 0;
    return SturmChain::build(p).count(lo, hi);
}

namespace {

/// A point in the open interval (lo, hi) where p does not vanish. Tries the
/// midpoint first, then a deterministic sequence of offsets.
Rational nonroot_point(const UniPoly& p, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / Rational(2);
    if (p.sign_at(mid) != 0) return mid;
    Rational w = hi - lo;
    for (long d = 3;; d = 2 * d + 1) {
        Rational probe = lo + w / Rational(d);
        if (probe > lo && probe < hi && p.sign_at(probe) != 0) return probe;
    }
}

void isolate_rec(const UniPoly& p, const SturmChain& ch, const Rational& lo, const Rational& hi,
                 std::vector<RootInterval>& out) {
    int n = ch.count(lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi, false});
        return;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (p.sign_at(mid) == 0) {
        // exact rational root at the midpoint: carve out a window that
        // isolates just this root, then recurse on both sides of it
        Rational w = (hi - lo) / Rational(4);
        while (true) {
            Rational a = mid - w, b = mid + w;
            if (a > lo && b < hi && p.sign_at(a) != 0 && p.sign_at(b) != 0 &&
                ch.count(a, b) == 1) {
                isolate_rec(p, ch, lo, a, out);
                out.push_back({mid, mid, true});
                isolate_rec(p, ch, b, hi, out);
                return;
            }
            w = w / Rational(2);
        }
    }
    isolate_rec(p, ch, lo, mid, out);
    isolate_rec(p, ch, mid, hi, out);
}

/// One count-preserving bisection step on a non-exact isolating interval.
void shrink(const UniPoly& p, const SturmChain& ch, RootInterval& iv) {
    Rational mid = nonroot_point(p, iv.lo, iv.hi);
    if (ch.count(iv.lo, mid) == 1)
        iv.hi = mid;
    else
        iv.lo = mid;
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0)
        throw std::invalid_argument("isolate_roots: endpoint is a root");
    if (p.degree() <= 0) return {};
    SturmChain ch = SturmChain::build(p);
    std::vector<RootInterval> out;
    isolate_rec(p, ch, lo, hi, out);
    // strictly inside (lo, hi)
    for (auto& iv : out)
        while (!iv.exact && (iv.lo == lo || iv.hi == hi)) shrink(p, ch, iv);
    // pairwise disjoint (intervals from the recursion can share an endpoint)
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (!(out[i].hi < out[i + 1].lo)) {
            if (!out[i].exact)
                shrink(p, ch, out[i]);
            else if (!out[i + 1].exact)
                shrink(p, ch, out[i + 1]);
            else
                break;  // two distinct exact roots never coincide
            if (out[i].hi < out[i + 1].lo) break;
            if (!out[i + 1].exact) shrink(p, ch, out[i + 1]);
        }
    }
    return out;
}

NonnegResult is_nonneg_on(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("is_nonneg_on: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("is_nonneg_on: empty interval");
    if (p.sign_at(lo) < 0) return {false, lo};
    if (p.sign_at(hi) < 0) return {false, hi};
    if (p.degree() <= 0) return {p.coeff(0) >= Rational(0), std::nullopt};

    // Sign changes of p happen only at its distinct roots, i.e. the roots of
    // the squarefree part. Sampling one point in each gap between
    // consecutive roots (plus the closed endpoints, already checked) decides
    // nonnegativity while admitting even-multiplicity tangencies.
    UniPoly s = p.squarefree_part();
    while (!s.is_constant() && s.sign_at(lo) == 0) s = s.exact_div(linear_root_factor(lo));
    while (!s.is_constant() && s.sign_at(hi) == 0) s = s.exact_div(linear_root_factor(hi));
    std::vector<RootInterval> roots;
    if (!s.is_constant()) roots = isolate_roots(s, lo, hi);

    std::vector<Rational> samples;
    if (roots.empty()) {
        samples.push_back(nonroot_point(p, lo, hi));
    } else {
        // gap left of the first root
        const auto& first = roots.front();
        samples.push_back(first.exact ? nonroot_point(p, lo, first.lo) : first.lo);
        // gap right of each root
        for (size_t i = 0; i < roots.size(); ++i) {
            Rational right = (i + 1 < roots.size()) ? roots[i + 1].lo : hi;
            samples.push_back(roots[i].exact ? nonroot_point(p, roots[i].hi, right)
                                             : roots[i].hi);
        }
    }
    for (const auto& t : samples)
        if (p.sign_at(t) < 0) return {false, t};
    return {true, std::nullopt};
}

double AlgebraicReal::to_double() const {
    if (is_exact()) return lo.to_double();
    return ((lo + hi) / Rational(2)).to_double();
}

void AlgebraicReal::refine(const Rational& target) {
    if (is_exact()) return;
    SturmChain ch = SturmChain::build(poly);
    while (hi - lo > target) {
        Rational mid = (lo + hi) / Rational(2);
        if (poly.sign_at(mid) == 0) {
            lo = hi = mid;
            return;
        }
        if (ch.count(lo, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }
}

int AlgebraicReal::compare(const Rational& r) const {
    if (is_exact()) return lo == r ? 0 : (lo < r ? -1 : 1);
    if (r <= lo) return 1;
    if (r >= hi) return -1;
    // r lies inside the isolating interval: it either is the root or the
    // interval can be bisected until r falls outside
    if (poly.sign_at(r) == 0) return 0;
    AlgebraicReal tmp = *this;
    SturmChain ch = SturmChain::build(tmp.poly);
    while (r > tmp.lo && r < tmp.hi) {
        Rational mid = (tmp.lo + tmp.hi) / Rational(2);
        if (tmp.poly.sign_at(mid) == 0) {
            tmp.lo = tmp.hi = mid;
            break;
        }
        if (ch.count(tmp.lo, mid) == 1)
            tmp.hi = mid;
        else
            tmp.lo = mid;
    }
    if (tmp.is_exact()) return tmp.lo == r ? 0 : (tmp.lo < r ? -1 : 1);
    return r <= tmp.lo ? 1 : -1;
}

AlgebraicReal refine_root(AlgebraicReal a, const Rational& width) {
    a.refine(width);
    return a;
}

std::vector<AlgebraicReal> real_roots_of(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("real_roots_of: zero polynomial");
    UniPoly s = p.squarefree_part();
    if (s.degree() <= 0) return {};
    Rational b = cauchy_bound(s);
    auto ivs = isolate_roots(s, -b, b);
    std::vector<AlgebraicReal> out;
    out.reserve(ivs.size());
    for (auto& iv : ivs) out.push_back({s, iv.lo, iv.hi});
    return out;
}

}  // namespace sinecert
