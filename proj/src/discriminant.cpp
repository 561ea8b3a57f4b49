#include "sinecert/discriminant.hpp"

#include <stdexcept>

namespace sinecert {

namespace {

/// Fraction-free Bareiss determinant. Works over any integral domain whose
/// exact division is supplied; all intermediate divisions are exact.
template <class T, class IsZero, class ExactDiv>
T bareiss_det(std::vector<std::vector<T>> m, T one, IsZero is_zero, ExactDiv exact_div) {
    const size_t n = m.size();
    int sign = 1;
    T prev = one;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return T{};  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign < 0 ? T{} - det : det;
}

template <class T, class CoeffP, class CoeffQ>
std::vector<std::vector<T>> sylvester(int n, int m, CoeffP pc, CoeffQ qc, T zero) {
    // rows 0..m-1 hold shifted copies of p (degree n), rows m..m+n-1 of q
    std::vector<std::vector<T>> s(static_cast<size_t>(n + m),
                                  std::vector<T>(static_cast<size_t>(n + m), zero));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = pc(n - i);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = qc(m - i);
    return s;
}

}  // namespace

Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const int n = p.degree(), m = q.degree();
    if (n == 0) return pow_int(p.coeff(0), static_cast<unsigned>(m));
    if (m == 0) return pow_int(q.coeff(0), static_cast<unsigned>(n));
    auto s = sylvester<Rational>(
        n, m, [&](int i) { return p.coeff(i); }, [&](int i) { return q.coeff(i); }, Rational(0));
    return bareiss_det<Rational>(
        std::move(s), Rational(1), [](const Rational& x) { return x.is_zero(); },
        [](const Rational& a, const Rational& b) { return a / b; });
}

Rational discriminant(const UniPoly& p) {
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant: degree must be at least 2");
    Rational r = resultant(p, p.derivative()) / p.lc();
    return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

UniPoly discriminant_in_y(const ParamPoly& p) {
    int n = static_cast<int>(p.size()) - 1;
    while (n >= 0 && p[static_cast<size_t>(n)].is_zero()) --n;
    if (n < 2) throw std::invalid_argument("discriminant_in_y: degree must be at least 2");
    ParamPoly d(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) d[static_cast<size_t>(i - 1)] = Rational(i) * p[static_cast<size_t>(i)];
    const int m = n - 1;
    auto coeff_p = [&](int i) { return i >= 0 && i <= n ? p[static_cast<size_t>(i)] : UniPoly(); };
    auto coeff_d = [&](int i) { return i >= 0 && i <= m ? d[static_cast<size_t>(i)] : UniPoly(); };
    auto s = sylvester<UniPoly>(n, m, coeff_p, coeff_d, UniPoly());
    UniPoly res = bareiss_det<UniPoly>(
        std::move(s), UniPoly::constant(Rational(1)), [](const UniPoly& x) { return x.is_zero(); },
        [](const UniPoly& a, const UniPoly& b) { return a.exact_div(b); });
    UniPoly out = res.exact_div(p[static_cast<size_t>(n)]);
    return (n * (n - 1) / 2) % 2 == 0 ? out : -out;
}

UniPoly substitute_param(const ParamPoly& p, const Rational& a) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& pc : p) c.push_back(pc.eval(a));
    return UniPoly(std::move(c));
}

}  // namespace sinecert
