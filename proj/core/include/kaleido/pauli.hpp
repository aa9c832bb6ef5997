#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kaleido/gaussian.hpp"

namespace kaleido {

enum class Letter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);
/// Symplectic bits (x, z) of a single-qubit Pauli letter: X=(1,0), Z=(0,1), Y=(1,1).
constexpr uint8_t letter_x(Letter l) { return l == Letter::X || l == Letter::Y; }
constexpr uint8_t letter_z(Letter l) { return l == Letter::Z || l == Letter::Y; }
constexpr Letter letter_from_bits(uint8_t x, uint8_t z) {
    return x ? (z ? Letter::Y : Letter::X) : (z ? Letter::Z : Letter::I);
}

/// A two-qubit Pauli product modulo phase, held as the symplectic 4-tuple
/// (x1, z1, x2, z2). The packed code reads that tuple as a binary number with
/// x1 most significant; ordering of observables everywhere follows the code.
class Observable {
   public:
    /// The first observable in code order ("IZ"); lets observables live in arrays.
    constexpr Observable() = default;
    static Observable from_bits(uint8_t x1, uint8_t z1, uint8_t x2, uint8_t z2);
    static Observable from_letters(Letter q1, Letter q2);
    /// Throws std::invalid_argument for codes outside 1..15.
    static Observable from_code(uint8_t code);
    /// Parses the two-letter form, e.g. "XZ". Rejects "II" and anything else malformed.
    static Observable parse(std::string_view text);

    /// The fifteen observables in code order.
    static const std::array<Observable, 15> &all();

    constexpr uint8_t code() const { return code_; }
    /// Bits in tuple order: index 0..3 = x1, z1, x2, z2.
    constexpr uint8_t bit(int index) const { return (code_ >> (3 - index)) & 1u; }
    uint8_t x(int qubit) const { return bit(2 * (qubit - 1)); }
    uint8_t z(int qubit) const { return bit(2 * (qubit - 1) + 1); }
    Letter letter(int qubit) const { return letter_from_bits(x(qubit), z(qubit)); }
    /// Number of qubits acted on nontrivially (1 or 2).
    int weight() const;
    std::string str() const;

    friend constexpr auto operator<=>(Observable, Observable) = default;

   private:
    constexpr explicit Observable(uint8_t code) : code_(code) {}
    uint8_t code_ = 1;
};

std::ostream &operator<<(std::ostream &out, Observable o);

/// An element of {+1, +i, -1, -i}, stored as the exponent of i.
class Phase {
   public:
    constexpr Phase() = default;
    static constexpr Phase i_pow(int k) { return Phase(static_cast<uint8_t>(((k % 4) + 4) % 4)); }
    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase minus_one() { return Phase(2); }

    constexpr int exponent() const { return k_; }
    constexpr bool is_real() const { return k_ % 2 == 0; }
    /// +1 or -1; only meaningful when is_real().
    constexpr int sign() const { return k_ == 0 ? 1 : -1; }
    GaussianInt value() const { return GaussianInt::unit(k_); }
    std::string str() const;

    friend constexpr Phase operator*(Phase a, Phase b) { return i_pow(a.k_ + b.k_); }
    friend constexpr bool operator==(Phase, Phase) = default;

   private:
    constexpr explicit Phase(uint8_t k) : k_(k) {}
    uint8_t k_ = 0;
};

struct Product {
    std::optional<Observable> result;  // nullopt is the identity
    Phase phase;
};

/// Symplectic inner product is zero.
bool commutes(Observable a, Observable b);

/// a*b = phase * result, exactly, as operators.
Product multiply(Observable a, Observable b);

/// A maximal set of three mutually commuting observables, with the real
/// scalar `sign` such that O1*O2*O3 = sign * I in any order.
struct Triad {
    std::array<Observable, 3> members;  // sorted by code
    int sign = 1;

    bool contains(Observable o) const;
    bool disjoint(const Triad &other) const;
    std::string str() const;

    friend auto operator<=>(const Triad &a, const Triad &b) { return a.members <=> b.members; }
    friend bool operator==(const Triad &a, const Triad &b) { return a.members == b.members; }
};

/// Builds a triad from three observables, checking commutation and closure.
/// Throws std::invalid_argument otherwise.
Triad make_triad(Observable a, Observable b, Observable c);

/// All 15 triads in canonical (member-lexicographic) order.
const std::vector<Triad> &enumerate_triads();

/// The triad containing both a and b; a != b must commute.
const Triad &triad_through(Observable a, Observable b);

}  // namespace kaleido
