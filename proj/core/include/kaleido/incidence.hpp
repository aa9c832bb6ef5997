#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kaleido/hexagon.hpp"
#include "kaleido/states.hpp"

namespace kaleido {

/// Four pairwise-orthogonal states (an orthogonal basis of C^4).
struct Tetrad {
    std::array<int, 4> labels{};  // sorted

    bool contains(int label) const;
    std::string str() const;
    friend auto operator<=>(const Tetrad &, const Tetrad &) = default;
};

/// Three points whose coordinate vectors span a plane.
struct Line {
    std::array<int, 3> points{};  // sorted

    bool contains(int label) const;
    std::string str() const;  // "(1,5,10)"
    friend auto operator<=>(const Line &, const Line &) = default;
};

/// Three non-collinear points with pairwise normalized overlap 1/4 (|<a|b>| = 1/2).
struct Triangle {
    std::array<int, 3> points{};  // sorted

    std::string str() const;  // "{14,19,22}"
    friend auto operator<=>(const Triangle &, const Triangle &) = default;
};

/// 12 points and 16 lines, 3 points per line and 4 lines per point.
struct ReyeConfig {
    std::array<int, 12> points{};  // sorted
    std::vector<Line> lines;        // sorted
};

/// Bijection between the lines of two configurations; every point of one line
/// is orthogonal to every point of its partner.
struct PartnerPairing {
    std::vector<std::pair<Line, Line>> pairs;  // ordered by the first line
};

/// All pairwise-orthogonal 4-subsets of `labels`, sorted.
std::vector<Tetrad> enumerate_tetrads(std::span<const int> labels, const Catalog &catalog);

/// Exact rank test: the three vectors have rank 2.
bool collinear(int a, int b, int c, const Catalog &catalog);

/// Finds all lines among 12 points and checks Reye's incidence counts.
/// Throws std::invalid_argument if the points are not a Reye configuration.
ReyeConfig extract_reye(std::span<const int> points, const Catalog &catalog);

/// Throws std::invalid_argument if some line has zero or several partners.
PartnerPairing partner_pairing(const ReyeConfig &a, const ReyeConfig &b, const Catalog &catalog);

std::vector<Triangle> triangles(const ReyeConfig &c, const Catalog &catalog);

/// Triangles of `c` all of whose points are orthogonal to `point`.
std::vector<Triangle> orthogonal_triangles(int point, const ReyeConfig &c, const Catalog &catalog);

/// Everything incidence-related about one magic square.
struct SquareGeometry {
    int square_id = 0;
    SquareStates states;
    std::vector<Tetrad> tetrads;  // the 24 tetrads on the square's 24 states
    ReyeConfig row_config;
    ReyeConfig column_config;
    PartnerPairing pairing;  // row-config lines to column-config lines
};

SquareGeometry square_geometry(const MagicSquare &s, const Catalog &catalog);

}  // namespace kaleido
