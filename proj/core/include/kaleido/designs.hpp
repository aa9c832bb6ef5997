#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kaleido/golden.hpp"
#include "kaleido/hexagon.hpp"
#include "kaleido/incidence.hpp"
#include "kaleido/pauli.hpp"
#include "kaleido/report.hpp"

namespace kaleido {

/// {b, v, r, k; (l1, x1), ...}: every point lies in r of the b blocks of size
/// k and shares exactly l_i blocks with x_i other points.
struct QbdSymbol {
    int b = 0;
    int v = 0;
    int r = 0;
    int k = 0;
    std::vector<std::pair<int, int>> pairs;  // sorted by lambda

    /// bk = vr and r(k-1) = sum of lambda * x.
    bool identities_hold() const;
    std::string str() const;  // "{105,60,7,4;(1,12),(3,3)}"
    friend bool operator==(const QbdSymbol &, const QbdSymbol &) = default;
};

/// The incidence structure is not a quantum block design.
class DesignError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Throws DesignError if a block leaves `points`, block sizes or replication
/// numbers differ, co-occurrence histograms depend on the point, or either
/// identity fails.
QbdSymbol qbd_profile(std::span<const int> points, std::span<const std::vector<int>> blocks);

/// Blocks keyed by observable code / state label.
std::vector<std::vector<int>> as_blocks(std::span<const Triad> triads);
std::vector<std::vector<int>> as_blocks(std::span<const Tetrad> tetrads);

/// Every cross pair has 4 |<a|b>|^2 = |a|^2 |b|^2.
bool unbiased(const std::array<Vec4, 4> &a, const std::array<Vec4, 4> &b);
/// Unbiasedness of the two triads' eigenbases.
bool unbiased(const Triad &a, const Triad &b);

using TriadFamily = std::array<Triad, 5>;

struct MubReport {
    std::vector<Check> checks;
    std::vector<TriadFamily> families;           // the repaired table, parsed
    std::vector<TriadFamily> computed_families;  // every maximal unbiased family, by search
    std::optional<QbdSymbol> cover;              // families as blocks over the 15 triads
    std::vector<int> printed_rows_failing;       // 1-based raw reference rows that are not MUB families
    /// Informational: three pairwise-disjoint maximal families covering all 15 triads.
    std::optional<std::array<int, 3>> disjoint_partition;

    bool passed() const { return all_pass(checks); }
};

/// Checks the shipped maximal MUB families: each is 5 pairwise unbiased
/// triads admitting no sixth, the six are distinct, each triad lies in exactly
/// two of them, the set equals the computed families, the printed table's
/// faulty row has a unique one-triad repair, and any two families are related
/// by one of the 36 local maps.
MubReport verify_mub_sets(const golden::Tables &tables);

/// All maximal sets of pairwise unbiased triads, sorted.
std::vector<TriadFamily> maximal_mub_families();

struct SquareMubReport {
    int square_id = 0;
    bool rows_unbiased = false;            // all 3 row pairs
    bool columns_unbiased = false;         // all 3 column pairs
    int row_column_unbiased_pairs = 0;     // out of 9; expected 0

    bool passed() const { return rows_unbiased && columns_unbiased && row_column_unbiased_pairs == 0; }
};

SquareMubReport square_mub_relations(const MagicSquare &s);

}  // namespace kaleido
