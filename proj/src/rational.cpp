#include "sinecert/rational.hpp"

#include <ostream>

namespace sinecert {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(n);
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::pow10(int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational pow_int(Rational base, unsigned e) {
    Rational r(1);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace sinecert
