#include "kaleido/hexagon.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kaleido/errors.hpp"

namespace kaleido {

std::string HexVertex::str() const {
    return std::string(1, static_cast<char>(letter_char(axis) - 'A' + 'a')) + std::to_string(qubit);
}

const std::array<HexVertex, 6> &hex_vertices() {
    static const std::array<HexVertex, 6> vertices = {
        HexVertex{1, Letter::X}, HexVertex{1, Letter::Y}, HexVertex{1, Letter::Z},
        HexVertex{2, Letter::X}, HexVertex{2, Letter::Y}, HexVertex{2, Letter::Z},
    };
    return vertices;
}

Observable edge_observable(HexVertex a, HexVertex b) {
    if (a == b) {
        throw std::invalid_argument("an edge needs two distinct vertices");
    }
    if (a.qubit == b.qubit) {
        Letter third = letter_from_bits(letter_x(a.axis) ^ letter_x(b.axis), letter_z(a.axis) ^ letter_z(b.axis));
        return a.qubit == 1 ? Observable::from_letters(third, Letter::I) : Observable::from_letters(Letter::I, third);
    }
    if (a.qubit == 2) {
        std::swap(a, b);
    }
    return Observable::from_letters(a.axis, b.axis);
}

std::array<Observable, 6> TrianglePartition::triangle_edges() const {
    return {edge_observable(left[0], left[1]),   edge_observable(left[0], left[2]),
            edge_observable(left[1], left[2]),   edge_observable(right[0], right[1]),
            edge_observable(right[0], right[2]), edge_observable(right[1], right[2])};
}

std::array<Observable, 9> TrianglePartition::remaining() const {
    auto removed = triangle_edges();
    std::array<Observable, 9> out{};
    int n = 0;
    for (Observable o : Observable::all()) {
        if (std::find(removed.begin(), removed.end(), o) == removed.end()) {
            if (n == 9) {
                throw ConsistencyError("triangle edges are not distinct");
            }
            out[n++] = o;
        }
    }
    return out;
}

std::string TrianglePartition::str() const {
    std::ostringstream out;
    out << "{" << left[0].str() << "," << left[1].str() << "," << left[2].str() << "|" << right[0].str() << ","
        << right[1].str() << "," << right[2].str() << "}";
    return out.str();
}

std::vector<TrianglePartition> enumerate_triangle_partitions() {
    const auto &v = hex_vertices();
    std::vector<TrianglePartition> out;
    for (int b = 1; b < 6; b++) {
        for (int c = b + 1; c < 6; c++) {
            TrianglePartition p;
            p.left = {v[0], v[b], v[c]};
            int n = 0;
            for (int k = 1; k < 6; k++) {
                if (k != b && k != c) {
                    p.right[n++] = v[k];
                }
            }
            out.push_back(p);
        }
    }
    return out;
}

Triad MagicSquare::row(int i) const { return make_triad(grid[i][0], grid[i][1], grid[i][2]); }

Triad MagicSquare::column(int j) const { return make_triad(grid[0][j], grid[1][j], grid[2][j]); }

std::array<Triad, 6> MagicSquare::lines() const { return {row(0), row(1), row(2), column(0), column(1), column(2)}; }

std::array<Observable, 9> MagicSquare::observables() const {
    std::array<Observable, 9> out{};
    for (int i = 0; i < 9; i++) {
        out[i] = grid[i / 3][i % 3];
    }
    std::sort(out.begin(), out.end());
    return out;
}

int MagicSquare::negative_lines() const {
    return static_cast<int>(std::count(line_signs.begin(), line_signs.end(), -1));
}

std::string MagicSquare::name() const { return "S" + std::to_string(id); }

std::string MagicSquare::text() const {
    std::ostringstream out;
    for (const auto &r : grid) {
        out << r[0] << " " << r[1] << " " << r[2] << "\n";
    }
    return out.str();
}

namespace {

std::optional<Observable> common(const Triad &a, const Triad &b) {
    std::optional<Observable> found;
    for (Observable o : a.members) {
        if (b.contains(o)) {
            if (found) {
                return std::nullopt;
            }
            found = o;
        }
    }
    return found;
}

}  // namespace

MagicSquare orient_square(const std::array<Triad, 3> &rows, const std::array<Triad, 3> &columns) {
    Grid base{};
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            auto cell = common(rows[i], columns[j]);
            if (!cell) {
                throw std::invalid_argument("row " + rows[i].str() + " and column " + columns[j].str() +
                                            " do not meet in exactly one observable");
            }
            base[i][j] = *cell;
        }
    }
    std::optional<MagicSquare> best;
    std::array<int, 3> rp = {0, 1, 2};
    for (int transpose = 0; transpose < 2; transpose++) {
        const auto &rs = transpose ? columns : rows;
        const auto &cs = transpose ? rows : columns;
        if (std::any_of(rs.begin(), rs.end(), [](const Triad &t) { return t.sign < 0; })) {
            continue;
        }
        std::sort(rp.begin(), rp.end());
        do {
            std::array<int, 3> cp = {0, 1, 2};
            do {
                if (cs[cp[2]].sign > 0) {
                    continue;
                }
                MagicSquare s;
                for (int i = 0; i < 3; i++) {
                    for (int j = 0; j < 3; j++) {
                        s.grid[i][j] = transpose ? base[cp[j]][rp[i]] : base[rp[i]][cp[j]];
                    }
                }
                if (!best || s.grid < best->grid) {
                    best = s;
                }
            } while (std::next_permutation(cp.begin(), cp.end()));
        } while (std::next_permutation(rp.begin(), rp.end()));
    }
    if (!best) {
        throw std::invalid_argument("square has no -1 line");
    }
    auto lines = best->lines();
    for (int k = 0; k < 6; k++) {
        best->line_signs[k] = lines[k].sign;
    }
    return *best;
}

MagicSquare build_square(const TrianglePartition &p) {
    auto nine = p.remaining();
    std::vector<Triad> inside;
    for (const Triad &t : enumerate_triads()) {
        if (std::all_of(t.members.begin(), t.members.end(),
                        [&](Observable o) { return std::find(nine.begin(), nine.end(), o) != nine.end(); })) {
            inside.push_back(t);
        }
    }
    if (inside.size() != 6) {
        throw ConsistencyError(p.str() + ": expected 6 commuting triples, found " + std::to_string(inside.size()));
    }
    // Two families of three pairwise-disjoint triads; each tiles the nine observables.
    std::vector<std::array<Triad, 3>> families;
    for (int a = 0; a < 6; a++) {
        for (int b = a + 1; b < 6; b++) {
            for (int c = b + 1; c < 6; c++) {
                if (inside[a].disjoint(inside[b]) && inside[a].disjoint(inside[c]) && inside[b].disjoint(inside[c])) {
                    families.push_back({inside[a], inside[b], inside[c]});
                }
            }
        }
    }
    if (families.size() != 2) {
        throw ConsistencyError(p.str() + ": triads do not split into rows and columns");
    }
    MagicSquare s;
    try {
        s = orient_square(families[0], families[1]);
    } catch (const std::invalid_argument &e) {
        throw ConsistencyError(p.str() + ": " + e.what());
    }
    s.partition = p;
    return s;
}

MagicReport verify_magic(const MagicSquare &s) {
    MagicReport r;
    r.odd_minus_count = s.negative_lines() % 2 == 1;
    for (int mask = 0; mask < 512; mask++) {
        auto value = [&](int i, int j) { return (mask >> (3 * i + j)) & 1 ? -1 : 1; };
        bool ok = true;
        for (int k = 0; k < 3 && ok; k++) {
            ok = value(k, 0) * value(k, 1) * value(k, 2) == s.line_signs[k] &&
                 value(0, k) * value(1, k) * value(2, k) == s.line_signs[3 + k];
        }
        r.satisfying_assignments += ok;
    }
    return r;
}

std::array<int, 24> SquareStates::all() const {
    std::array<int, 24> out{};
    std::copy(rows.begin(), rows.end(), out.begin());
    std::copy(columns.begin(), columns.end(), out.begin() + 12);
    std::sort(out.begin(), out.end());
    return out;
}

SquareStates square_states(const MagicSquare &s, const Catalog &catalog) {
    SquareStates out;
    for (int k = 0; k < 3; k++) {
        auto r = catalog.labels_of(s.row(k));
        auto c = catalog.labels_of(s.column(k));
        std::copy(r.begin(), r.end(), out.rows.begin() + 4 * k);
        std::copy(c.begin(), c.end(), out.columns.begin() + 4 * k);
    }
    std::sort(out.rows.begin(), out.rows.end());
    std::sort(out.columns.begin(), out.columns.end());
    return out;
}

std::vector<MagicSquare> enumerate_squares(const Catalog &catalog, const golden::Tables &tables) {
    std::vector<std::set<int>> targets;
    std::set<int> first;
    for (int l = 1; l <= 24; l++) first.insert(l);
    targets.push_back(first);
    for (const auto &column : tables.relabelings) {
        targets.emplace_back(column.begin(), column.end());
    }
    std::vector<MagicSquare> out(10);
    std::vector<bool> filled(10, false);
    for (const TrianglePartition &p : enumerate_triangle_partitions()) {
        MagicSquare s = build_square(p);
        auto labels = square_states(s, catalog).all();
        std::set<int> key(labels.begin(), labels.end());
        auto it = std::find(targets.begin(), targets.end(), key);
        if (it == targets.end()) {
            throw ConsistencyError("square from " + p.str() + " matches no relabeling image");
        }
        size_t idx = it - targets.begin();
        if (filled[idx]) {
            throw ConsistencyError("two squares match relabeling image S" + std::to_string(idx + 1));
        }
        MagicReport m = verify_magic(s);
        if (!m.odd_minus_count || m.satisfying_assignments != 0) {
            throw ConsistencyError("square from " + p.str() + " is not magic");
        }
        s.id = static_cast<int>(idx) + 1;
        out[idx] = s;
        filled[idx] = true;
    }
    return out;
}

}  // namespace kaleido
