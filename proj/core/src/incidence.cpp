#include "kaleido/incidence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kaleido {

namespace {

template <size_t N>
std::string join(const std::array<int, N> &xs, char open, char close) {
    std::string s(1, open);
    for (size_t i = 0; i < N; i++) {
        s += (i ? "," : "") + std::to_string(xs[i]);
    }
    return s + close;
}

}  // namespace

bool Tetrad::contains(int label) const { return std::find(labels.begin(), labels.end(), label) != labels.end(); }
std::string Tetrad::str() const { return join(labels, '{', '}'); }

bool Line::contains(int label) const { return std::find(points.begin(), points.end(), label) != points.end(); }
std::string Line::str() const { return join(points, '(', ')'); }

std::string Triangle::str() const { return join(points, '{', '}'); }

std::vector<Tetrad> enumerate_tetrads(std::span<const int> labels, const Catalog &catalog) {
    std::vector<int> pts(labels.begin(), labels.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    std::vector<Tetrad> out;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (!catalog.orthogonal(pts[a], pts[b])) continue;
            for (size_t c = b + 1; c < n; c++) {
                if (!catalog.orthogonal(pts[a], pts[c]) || !catalog.orthogonal(pts[b], pts[c])) continue;
                for (size_t d = c + 1; d < n; d++) {
                    if (catalog.orthogonal(pts[a], pts[d]) && catalog.orthogonal(pts[b], pts[d]) &&
                        catalog.orthogonal(pts[c], pts[d])) {
                        out.push_back(Tetrad{{pts[a], pts[b], pts[c], pts[d]}});
                    }
                }
            }
        }
    }
    return out;
}

bool collinear(int a, int b, int c, const Catalog &catalog) {
    std::array<Vec4, 3> rows = {catalog.state(a).coords, catalog.state(b).coords, catalog.state(c).coords};
    return rank(rows) == 2;
}

ReyeConfig extract_reye(std::span<const int> points, const Catalog &catalog) {
    if (points.size() != 12) {
        throw std::invalid_argument("a Reye configuration has 12 points, got " + std::to_string(points.size()));
    }
    ReyeConfig c;
    std::copy(points.begin(), points.end(), c.points.begin());
    std::sort(c.points.begin(), c.points.end());
    if (std::adjacent_find(c.points.begin(), c.points.end()) != c.points.end()) {
        throw std::invalid_argument("Reye configuration points must be distinct");
    }
    for (int i = 0; i < 12; i++) {
        for (int j = i + 1; j < 12; j++) {
            for (int k = j + 1; k < 12; k++) {
                if (collinear(c.points[i], c.points[j], c.points[k], catalog)) {
                    c.lines.push_back(Line{{c.points[i], c.points[j], c.points[k]}});
                }
            }
        }
    }
    if (c.lines.size() != 16) {
        throw std::invalid_argument("not a Reye configuration: " + std::to_string(c.lines.size()) + " lines");
    }
    std::map<int, int> per_point;
    for (const Line &l : c.lines) {
        for (int p : l.points) per_point[p]++;
    }
    for (int p : c.points) {
        if (per_point[p] != 4) {
            throw std::invalid_argument("not a Reye configuration: point " + std::to_string(p) + " lies on " +
                                        std::to_string(per_point[p]) + " lines");
        }
    }
    return c;
}

PartnerPairing partner_pairing(const ReyeConfig &a, const ReyeConfig &b, const Catalog &catalog) {
    PartnerPairing out;
    std::vector<bool> used(b.lines.size(), false);
    for (const Line &la : a.lines) {
        int found = -1;
        for (size_t j = 0; j < b.lines.size(); j++) {
            bool all = true;
            for (int p : la.points) {
                for (int q : b.lines[j].points) {
                    all = all && catalog.orthogonal(p, q);
                }
            }
            if (all) {
                if (found >= 0) {
                    throw std::invalid_argument("line " + la.str() + " has several partners");
                }
                found = static_cast<int>(j);
            }
        }
        if (found < 0) {
            throw std::invalid_argument("line " + la.str() + " has no partner");
        }
        if (used[found]) {
            throw std::invalid_argument("line " + b.lines[found].str() + " is the partner of two lines");
        }
        used[found] = true;
        out.pairs.emplace_back(la, b.lines[found]);
    }
    return out;
}

std::vector<Triangle> triangles(const ReyeConfig &c, const Catalog &catalog) {
    std::vector<Triangle> out;
    const auto &p = c.points;
    for (int i = 0; i < 12; i++) {
        for (int j = i + 1; j < 12; j++) {
            if (!catalog.quarter_overlap(p[i], p[j])) continue;
            for (int k = j + 1; k < 12; k++) {
                if (catalog.quarter_overlap(p[i], p[k]) && catalog.quarter_overlap(p[j], p[k]) &&
                    !collinear(p[i], p[j], p[k], catalog)) {
                    out.push_back(Triangle{{p[i], p[j], p[k]}});
                }
            }
        }
    }
    return out;
}

std::vector<Triangle> orthogonal_triangles(int point, const ReyeConfig &c, const Catalog &catalog) {
    std::vector<Triangle> out;
    for (const Triangle &t : triangles(c, catalog)) {
        if (std::all_of(t.points.begin(), t.points.end(), [&](int q) { return catalog.orthogonal(point, q); })) {
            out.push_back(t);
        }
    }
    return out;
}

SquareGeometry square_geometry(const MagicSquare &s, const Catalog &catalog) {
    SquareGeometry g;
    g.square_id = s.id;
    g.states = square_states(s, catalog);
    auto all = g.states.all();
    g.tetrads = enumerate_tetrads(all, catalog);
    g.row_config = extract_reye(g.states.rows, catalog);
    g.column_config = extract_reye(g.states.columns, catalog);
    g.pairing = partner_pairing(g.row_config, g.column_config, catalog);
    return g;
}

}  // namespace kaleido
