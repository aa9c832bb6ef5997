#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "kaleido/gaussian.hpp"
#include "kaleido/pauli.hpp"

namespace kaleido {

using Vec4 = std::array<GaussianInt, 4>;
using Mat4 = std::array<Vec4, 4>;  // row-major
using Mat2 = std::array<std::array<GaussianInt, 2>, 2>;

Mat4 identity4();
Mat4 operator*(const Mat4 &a, const Mat4 &b);
Mat4 operator+(const Mat4 &a, const Mat4 &b);
Mat4 operator*(GaussianInt s, const Mat4 &a);
Vec4 operator*(const Mat4 &a, const Vec4 &v);
Mat4 adjoint(const Mat4 &a);
Mat4 kron(const Mat2 &a, const Mat2 &b);

/// Standard Pauli matrix of a single letter, entries in {0, +-1, +-i}.
Mat2 pauli2(Letter l);
/// The 4x4 operator for an observable, built as a Kronecker product of
/// single-qubit Pauli matrices (qubit 1 is the left factor, so the basis
/// order is |00>, |01>, |10>, |11>).
Mat4 pauli_matrix(Observable o);

/// Rank of a set of vectors in C^4, by fraction-free elimination over Z[i].
int rank(std::span<const Vec4> rows);

/// A 4x4 matrix over Q(i), stored as num / den with den > 0 and the content of
/// num coprime to den.
struct ScaledMatrix {
    Mat4 num = identity4();
    int64_t den = 1;

    static ScaledMatrix make(const Mat4 &num, int64_t den);

    ScaledMatrix adjoint() const;
    friend ScaledMatrix operator*(const ScaledMatrix &a, const ScaledMatrix &b);
    friend bool operator==(const ScaledMatrix &, const ScaledMatrix &) = default;

    bool is_identity() const;
    std::string str() const;
};

/// Conjugation u * p * u^dagger with p an integral matrix.
ScaledMatrix conjugate(const ScaledMatrix &u, const Mat4 &p);

}  // namespace kaleido
