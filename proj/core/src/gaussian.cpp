#include "kaleido/gaussian.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kaleido {

namespace {

// Nearest integer to num/den for den > 0, ties rounded toward +inf.
int64_t div_round(int64_t num, int64_t den) {
    int64_t q = num / den;
    int64_t r = num % den;
    if (r < 0) {
        r += den;
        q -= 1;
    }
    if (2 * r >= den) {
        q += 1;
    }
    return q;
}

}  // namespace

bool GaussianInt::divisible_by(GaussianInt d) const {
    if (d.is_zero()) {
        throw std::domain_error("division by zero Gaussian integer");
    }
    GaussianInt p = *this * d.conj();
    int64_t n = d.norm();
    return p.re % n == 0 && p.im % n == 0;
}

GaussianInt GaussianInt::exact_div(GaussianInt d) const {
    if (!divisible_by(d)) {
        throw std::domain_error(str() + " is not divisible by " + d.str());
    }
    GaussianInt p = *this * d.conj();
    int64_t n = d.norm();
    return {p.re / n, p.im / n};
}

GaussianInt GaussianInt::rounded_div(GaussianInt d) const {
    if (d.is_zero()) {
        throw std::domain_error("division by zero Gaussian integer");
    }
    GaussianInt p = *this * d.conj();
    int64_t n = d.norm();
    return {div_round(p.re, n), div_round(p.im, n)};
}

std::string GaussianInt::str() const {
    std::ostringstream out;
    out << *this;
    return out.str();
}

GaussianInt first_quadrant(GaussianInt a) {
    if (a.is_zero()) {
        return a;
    }
    for (int k = 0; k < 4; k++) {
        GaussianInt b = a * GaussianInt::unit(k);
        if (b.re > 0 && b.im >= 0) {
            return b;
        }
    }
    return a;  // unreachable for nonzero a
}

GaussianInt gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt r = a - b * a.rounded_div(b);
        a = b;
        b = r;
    }
    return first_quadrant(a);
}

std::ostream &operator<<(std::ostream &out, const GaussianInt &z) {
    if (z.im == 0) {
        return out << z.re;
    }
    if (z.re == 0) {
        if (z.im == 1) return out << "i";
        if (z.im == -1) return out << "-i";
        return out << z.im << "i";
    }
    out << z.re << (z.im < 0 ? "-" : "+");
    int64_t m = z.im < 0 ? -z.im : z.im;
    if (m != 1) out << m;
    return out << "i";
}

}  // namespace kaleido
