#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kaleido/exact_matrix.hpp"
#include "kaleido/golden.hpp"
#include "kaleido/pauli.hpp"

namespace kaleido {

/// An unnormalized two-qubit pure state a|00> + b|01> + c|10> + d|11>.
struct StateVec {
    Vec4 coords{};
    std::optional<int> label;

    std::string str() const;  // "(1,0,0,i)"
};

/// Representative of the projective class of `v`: the first nonzero
/// coordinate is a positive integer and the real and imaginary parts of all
/// coordinates have gcd 1. Throws std::invalid_argument on the zero vector.
Vec4 canonicalize(const Vec4 &v);
std::string coords_str(const Vec4 &v);

/// sum_i conj(a_i) * b_i.
GaussianInt inner_product(const Vec4 &a, const Vec4 &b);
inline GaussianInt inner_product(const StateVec &a, const StateVec &b) { return inner_product(a.coords, b.coords); }
int64_t norm2(const Vec4 &v);

/// All 2x2 minors of the 2x4 coordinate matrix vanish.
bool projective_equal(const Vec4 &a, const Vec4 &b);
inline bool projective_equal(const StateVec &a, const StateVec &b) { return projective_equal(a.coords, b.coords); }

/// |<a|b>|^2 / (|a|^2 |b|^2) as a reduced fraction (numerator, denominator).
std::pair<int64_t, int64_t> overlap_ratio(const Vec4 &a, const Vec4 &b);

/// Eigenvalues of a joint eigenstate under the members of a triad, in member order.
struct Signature {
    std::array<int, 3> signs{};
    int product() const { return signs[0] * signs[1] * signs[2]; }
    friend bool operator==(const Signature &, const Signature &) = default;
};

/// The four joint eigenstates, in sign order (+,+), (+,-), (-,+), (-,-) for
/// the first two members. Each comes from a rank-one projector column.
std::array<Vec4, 4> eigenbasis(const Triad &t);

/// Throws std::invalid_argument if `v` is not a joint eigenstate of `t`.
Signature eigenvalue_signature(const Vec4 &v, const Triad &t);

/// The 60 labeled joint eigenstates of the 15 triads.
class Catalog {
   public:
    static constexpr int kSize = 60;

    const StateVec &state(int label) const;
    const std::vector<StateVec> &states() const { return states_; }
    /// Triads in table row order; labels 4r+1..4r+4 belong to row r.
    const std::vector<Triad> &rows() const { return rows_; }
    const std::vector<bool> &starred() const { return starred_; }
    std::array<int, 4> labels_of(const Triad &t) const;
    const Triad &triad_of(int label) const;
    /// Label of the catalog state projectively equal to `v`, if any.
    std::optional<int> find(const Vec4 &v) const;

    bool orthogonal(int a, int b) const;
    /// Normalized overlap |<a|b>|^2/(|a|^2|b|^2) is exactly 1/4.
    bool quarter_overlap(int a, int b) const;

   private:
    friend Catalog build_catalog(const golden::Tables &);
    std::vector<StateVec> states_;
    std::vector<Triad> rows_;
    std::vector<bool> starred_;
    std::vector<uint64_t> orth_;  // bitmask over labels (bit = label)
};

/// Computes all eigenbases in the reference row order and checks them against
/// the reference state table. Throws ConsistencyError on any mismatch.
Catalog build_catalog(const golden::Tables &tables);

}  // namespace kaleido
