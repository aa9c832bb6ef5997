#include "kaleido/exact_matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kaleido {

Mat4 identity4() {
    Mat4 m{};
    for (int i = 0; i < 4; i++) {
        m[i][i] = 1;
    }
    return m;
}

Mat4 operator*(const Mat4 &a, const Mat4 &b) {
    Mat4 c{};
    for (int i = 0; i < 4; i++) {
        for (int k = 0; k < 4; k++) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < 4; j++) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

Mat4 operator+(const Mat4 &a, const Mat4 &b) {
    Mat4 c = a;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            c[i][j] += b[i][j];
        }
    }
    return c;
}

Mat4 operator*(GaussianInt s, const Mat4 &a) {
    Mat4 c = a;
    for (auto &row : c) {
        for (auto &e : row) {
            e *= s;
        }
    }
    return c;
}

Vec4 operator*(const Mat4 &a, const Vec4 &v) {
    Vec4 out{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            out[i] += a[i][j] * v[j];
        }
    }
    return out;
}

Mat4 adjoint(const Mat4 &a) {
    Mat4 c{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            c[i][j] = a[j][i].conj();
        }
    }
    return c;
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 c{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            c[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
        }
    }
    return c;
}

Mat2 pauli2(Letter l) {
    switch (l) {
        case Letter::I: return Mat2{{{1, 0}, {0, 1}}};
        case Letter::X: return Mat2{{{0, 1}, {1, 0}}};
        case Letter::Y: return Mat2{{{0, GaussianInt(0, -1)}, {GaussianInt(0, 1), 0}}};
        case Letter::Z: return Mat2{{{1, 0}, {0, -1}}};
    }
    throw std::invalid_argument("bad letter");
}

Mat4 pauli_matrix(Observable o) { return kron(pauli2(o.letter(1)), pauli2(o.letter(2))); }

int rank(std::span<const Vec4> rows) {
    // Bareiss elimination: every division below is exact in Z[i].
    std::vector<Vec4> m(rows.begin(), rows.end());
    int r = 0;
    GaussianInt prev = 1;
    for (int col = 0; col < 4 && r < static_cast<int>(m.size()); col++) {
        size_t pivot = r;
        while (pivot < m.size() && m[pivot][col].is_zero()) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < m.size(); i++) {
            for (int j = col + 1; j < 4; j++) {
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]).exact_div(prev);
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        r++;
    }
    return r;
}

namespace {

int64_t content(const Mat4 &m) {
    int64_t g = 0;
    for (const auto &row : m) {
        for (const auto &e : row) {
            g = std::gcd(g, std::gcd(e.re, e.im));
        }
    }
    return g;
}

}  // namespace

ScaledMatrix ScaledMatrix::make(const Mat4 &num, int64_t den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    ScaledMatrix s{num, den};
    if (s.den < 0) {
        s.num = GaussianInt(-1) * s.num;
        s.den = -s.den;
    }
    int64_t g = std::gcd(content(s.num), s.den);
    if (g > 1) {
        for (auto &row : s.num) {
            for (auto &e : row) {
                e = {e.re / g, e.im / g};
            }
        }
        s.den /= g;
    }
    return s;
}

ScaledMatrix ScaledMatrix::adjoint() const { return make(kaleido::adjoint(num), den); }

ScaledMatrix operator*(const ScaledMatrix &a, const ScaledMatrix &b) {
    return ScaledMatrix::make(a.num * b.num, a.den * b.den);
}

bool ScaledMatrix::is_identity() const { return den == 1 && num == identity4(); }

std::string ScaledMatrix::str() const {
    std::ostringstream out;
    out << "(1/" << den << ")[";
    for (int i = 0; i < 4; i++) {
        out << (i ? "; " : "");
        for (int j = 0; j < 4; j++) {
            out << (j ? " " : "") << num[i][j];
        }
    }
    out << "]";
    return out.str();
}

ScaledMatrix conjugate(const ScaledMatrix &u, const Mat4 &p) {
    return ScaledMatrix::make(u.num * p * kaleido::adjoint(u.num), u.den * u.den);
}

}  // namespace kaleido
