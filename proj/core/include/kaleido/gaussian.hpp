#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace kaleido {

/// Exact element of Z[i]. All state and operator arithmetic in the library
/// goes through this type; nothing is ever rounded.
struct GaussianInt {
    int64_t re = 0;
    int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(int64_t r, int64_t i = 0) : re(r), im(i) {}

    static constexpr GaussianInt unit(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr bool is_real() const { return im == 0; }
    constexpr int64_t norm() const { return re * re + im * im; }
    constexpr GaussianInt conj() const { return {re, -im}; }

    constexpr GaussianInt operator-() const { return {-re, -im}; }
    constexpr GaussianInt &operator+=(GaussianInt o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr GaussianInt &operator-=(GaussianInt o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    constexpr GaussianInt &operator*=(GaussianInt o) {
        *this = GaussianInt{re * o.re - im * o.im, re * o.im + im * o.re};
        return *this;
    }
    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) { return a += b; }
    friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) { return a -= b; }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) { return a *= b; }
    friend constexpr bool operator==(GaussianInt a, GaussianInt b) = default;

    /// True when `d` divides `*this` in Z[i]. `d` must be nonzero.
    bool divisible_by(GaussianInt d) const;
    /// Exact quotient; throws std::domain_error when not divisible.
    GaussianInt exact_div(GaussianInt d) const;
    /// Division with remainder (quotient rounded to nearest lattice point), N(rem) < N(d).
    GaussianInt rounded_div(GaussianInt d) const;

    std::string str() const;
};

/// Greatest common divisor in Z[i], normalized to the first quadrant (re > 0, im >= 0),
/// or zero when both inputs are zero.
GaussianInt gcd(GaussianInt a, GaussianInt b);

/// Multiplies by a unit so the result has re > 0 and im >= 0.
GaussianInt first_quadrant(GaussianInt a);

std::ostream &operator<<(std::ostream &out, const GaussianInt &z);

}  // namespace kaleido
