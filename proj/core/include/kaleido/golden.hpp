#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "kaleido/exact_matrix.hpp"

/// Reference tables shipped with the library. Everything here is also
/// recomputed from first principles; the tables exist to pin labels and to
/// cross-check the computations.
namespace kaleido::golden {

struct StateRow {
    std::array<std::string, 3> triad;  // observable names
    bool starred = false;               // operator product of the triad is -I
    std::array<Vec4, 4> states;         // labels 4*row+1 .. 4*row+4
};

using LabelTriple = std::array<int, 3>;
using LabelQuad = std::array<int, 4>;

struct PointTriangles {
    int point = 0;
    std::array<LabelTriple, 4> triangles;
};

/// Per-qubit letter relabeling; images[q] lists where X, Y, Z go on qubit q+1.
struct LocalMapRow {
    int target = 0;
    std::array<std::string, 2> images;
    std::string notation;
};

using MubFamily = std::array<std::array<std::string, 3>, 5>;

struct Tables {
    std::vector<StateRow> states;                            // 15 rows, 60 states
    std::vector<LabelQuad> square1_tetrads;                  // 24 tetrads on states 1..24
    std::vector<std::pair<LabelTriple, LabelTriple>> square1_partner_lines;  // 16 pairs
    std::vector<PointTriangles> square1_point_triangles;    // 24 rows
    std::vector<LabelQuad> all_tetrads;                      // 105 tetrads on states 1..60
    std::array<std::array<int, 24>, 9> relabelings{};        // S1 -> S2..S10; [j][i] = image of label i+1
    std::vector<LocalMapRow> local_maps;                     // S1 -> S2..S5, S7..S10
    std::array<MubFamily, 6> mub_families_printed;           // raw, including one faulty row
    std::array<MubFamily, 6> mub_families;                   // with the row-2 misprint repaired
};

/// The shipped tables.
const Tables &reference();

/// Parses "1,-i,0,1+i" style coordinate text.
Vec4 parse_coords(const std::string &text);

/// Names of the tables for corruption in negative-control runs.
std::vector<std::string> table_names();
/// Returns a copy of `t` with one entry of the named table perturbed.
/// Throws std::invalid_argument for unknown names.
Tables corrupted(const Tables &t, const std::string &table);

}  // namespace kaleido::golden
