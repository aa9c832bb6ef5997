#pragma once

#include <array>
#include <string>
#include <vector>

#include "kaleido/golden.hpp"
#include "kaleido/pauli.hpp"
#include "kaleido/states.hpp"

namespace kaleido {

/// A single-qubit Pauli operator sitting at a vertex of the hexagon.
struct HexVertex {
    int qubit = 1;  // 1 or 2
    Letter axis = Letter::X;

    std::string str() const;  // "x1", "z2", ...
    friend auto operator<=>(const HexVertex &, const HexVertex &) = default;
};

/// The six vertices: x1, y1, z1, x2, y2, z2.
const std::array<HexVertex, 6> &hex_vertices();

/// Phase-dropped product of the two vertex operators. Same-qubit edges give
/// the third Pauli on that qubit; cross edges give a two-body product.
Observable edge_observable(HexVertex a, HexVertex b);

/// Two vertex-disjoint triangles covering the hexagon. `left` holds x1.
struct TrianglePartition {
    std::array<HexVertex, 3> left;
    std::array<HexVertex, 3> right;

    /// The six observables on the two triangles' edges.
    std::array<Observable, 6> triangle_edges() const;
    /// The nine observables left for the square, in code order.
    std::array<Observable, 9> remaining() const;
    std::string str() const;  // "{x1,y1,z1|x2,y2,z2}"
    friend bool operator==(const TrianglePartition &, const TrianglePartition &) = default;
};

/// The ten partitions, in lexicographic order of the vertex triple holding x1.
std::vector<TrianglePartition> enumerate_triangle_partitions();

using Grid = std::array<std::array<Observable, 3>, 3>;

struct MagicSquare {
    int id = 0;  // 1..10 once labeled, 0 before
    Grid grid{};
    std::array<int, 6> line_signs{};  // rows 1-3 then columns 1-3
    TrianglePartition partition{};

    Triad row(int i) const;
    Triad column(int j) const;
    /// Rows then columns.
    std::array<Triad, 6> lines() const;
    /// The nine observables in code order.
    std::array<Observable, 9> observables() const;
    int negative_lines() const;
    std::string name() const;  // "S1"
    /// Three lines of three observables, row-major.
    std::string text() const;
};

/// Canonical orientation of a square given its row and column triads: every
/// -1 line is a column, the last column is -1, and among the remaining
/// row/column permutations the grid is lexicographically least (row-major,
/// observables compared by code). Throws std::invalid_argument if the triads
/// do not form a 3x3 grid.
MagicSquare orient_square(const std::array<Triad, 3> &rows, const std::array<Triad, 3> &columns);

/// The square left over by one triangle partition. Throws ConsistencyError if the
/// nine leftover observables do not split into the 3+3 triad grid.
MagicSquare build_square(const TrianglePartition &p);

struct MagicReport {
    bool odd_minus_count = false;
    int satisfying_assignments = 0;  // out of 512 +-1 assignments
};

/// Mermin's parity check plus an exhaustive count of noncontextual value assignments.
MagicReport verify_magic(const MagicSquare &s);

/// The 24 states of a square: eigenstates of its row triads, then of its column triads.
struct SquareStates {
    std::array<int, 12> rows{};
    std::array<int, 12> columns{};
    std::array<int, 24> all() const;  // sorted
};
SquareStates square_states(const MagicSquare &s, const Catalog &catalog);

/// S1..S10. S1 is the square on states 1..24; Sj is the square whose state set
/// is the image of S1's states under the j-th reference relabeling. Throws
/// ConsistencyError if this matching is not a bijection or a square fails
/// verify_magic.
std::vector<MagicSquare> enumerate_squares(const Catalog &catalog, const golden::Tables &tables);

}  // namespace kaleido
