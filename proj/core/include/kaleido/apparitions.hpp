#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kaleido/incidence.hpp"

namespace kaleido {

/// A parity proof carved out of one square's 24 tetrads by excluding either a
/// pair of partner lines (kind 18) or a point plus an orthogonal triangle of
/// the dual configuration (kind 20).
struct Apparition {
    int square_id = 0;
    int kind = 0;                   // 18 or 20
    std::vector<int> excluded;      // kind 18: line, partner line; kind 20: point, triangle
    std::vector<Tetrad> tetrads;    // sorted
    std::map<int, int> multiplicity;

    /// The distinct states, sorted.
    std::vector<int> states() const;
    /// Identity of the apparition: its sorted tetrad list (square id excluded).
    const std::vector<Tetrad> &key() const { return tetrads; }
};

/// One apparition per partner-line pair, in pairing order. Throws
/// ConsistencyError if any falls outside the 9-tetrad, all-twice shape.
std::vector<Apparition> gen18(const SquareGeometry &g);

/// One apparition per (point, orthogonal triangle of the other configuration),
/// row-configuration points first. Throws ConsistencyError if any falls outside
/// the 11-tetrad, 18x2 + 2x4 shape.
std::vector<Apparition> gen20(const SquareGeometry &g, const Catalog &catalog);

/// Odd tetrad count and even multiplicity for every state.
bool parity_check(const Apparition &a);
bool parity_check(std::span<const Tetrad> tetrads);

/// Number of subsets G of `states` meeting every tetrad in exactly one state.
/// Exhaustive over all 2^n subsets for n <= 20, backtracking beyond that.
/// Throws std::invalid_argument if a tetrad leaves `states`.
uint64_t color_search(std::span<const int> states, std::span<const Tetrad> tetrads);
uint64_t color_search_exhaustive(std::span<const int> states, std::span<const Tetrad> tetrads);
uint64_t color_search_backtracking(std::span<const int> states, std::span<const Tetrad> tetrads);

/// gen18 and gen20 over all squares (in the order given). Throws
/// ConsistencyError on duplicates or a failed parity check.
std::vector<Apparition> enumerate_all(std::span<const SquareGeometry> geometries, const Catalog &catalog);

/// For each tetrad of `a`, whether dropping it leaves a colorable set.
std::vector<bool> minimality_probe(const Apparition &a);

}  // namespace kaleido
