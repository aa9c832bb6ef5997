#include "kaleido/golden.hpp"

#include <sstream>
#include <stdexcept>

namespace kaleido::golden {

namespace {

struct RawStateRow {
    const char *triad[3];
    bool starred;
    const char *states[4];
};

// Triad columns for rows 3 and 7 are the ones whose joint eigenstates are the listed vectors.
constexpr RawStateRow kStateRows[15] = {
    {{"ZI", "IZ", "ZZ"}, false, {"1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,1"}},
    {{"XI", "IX", "XX"}, false, {"1,1,1,1", "1,-1,1,-1", "1,1,-1,-1", "1,-1,-1,1"}},
    {{"XZ", "ZX", "YY"}, false, {"1,1,1,-1", "1,-1,-1,-1", "1,-1,1,1", "1,1,-1,1"}},
    {{"XI", "IZ", "XZ"}, false, {"1,0,1,0", "0,1,0,1", "1,0,-1,0", "0,1,0,-1"}},
    {{"ZI", "IX", "ZX"}, false, {"1,1,0,0", "1,-1,0,0", "0,0,1,1", "0,0,1,-1"}},
    {{"XX", "ZZ", "YY"}, true, {"1,0,0,1", "0,1,1,0", "1,0,0,-1", "0,1,-1,0"}},
    {{"YZ", "ZY", "XX"}, false, {"1,i,i,1", "1,-i,-i,1", "1,-i,i,-1", "1,i,-i,-1"}},
    {{"XY", "YZ", "ZX"}, true, {"1,-1,i,i", "1,1,-i,i", "1,1,i,-i", "1,-1,-i,-i"}},
    {{"YX", "ZY", "XZ"}, true, {"1,i,-1,i", "1,-i,1,i", "1,i,1,-i", "1,-i,-1,-i"}},
    {{"XY", "YX", "ZZ"}, false, {"1,0,0,i", "1,0,0,-i", "0,1,i,0", "0,1,-i,0"}},
    {{"YI", "IZ", "YZ"}, false, {"1,0,i,0", "1,0,-i,0", "0,1,0,i", "0,1,0,-i"}},
    {{"YI", "IY", "YY"}, false, {"1,i,i,-1", "1,-i,-i,-1", "1,i,-i,1", "1,-i,i,1"}},
    {{"ZI", "IY", "ZY"}, false, {"1,i,0,0", "1,-i,0,0", "0,0,1,i", "0,0,1,-i"}},
    {{"XI", "IY", "XY"}, false, {"1,i,1,i", "1,-i,1,-i", "1,i,-1,-i", "1,-i,-1,i"}},
    {{"YI", "IX", "YX"}, false, {"1,1,i,i", "1,-1,i,-i", "1,1,-i,-i", "1,-1,-i,i"}},
};

constexpr LabelQuad kSquare1Tetrads[24] = {
    {1, 2, 3, 4},     {3, 4, 17, 18},   {6, 8, 17, 19},   {10, 11, 17, 20}, {1, 2, 19, 20},   {5, 6, 7, 8},
    {7, 8, 13, 14},   {10, 12, 13, 16}, {1, 3, 14, 16},   {5, 6, 15, 16},   {9, 10, 11, 12},  {11, 12, 22, 23},
    {1, 4, 22, 24},   {5, 7, 18, 20},   {9, 10, 21, 24},  {13, 14, 15, 16}, {2, 3, 21, 23},   {5, 8, 23, 24},
    {9, 11, 14, 15},  {17, 18, 19, 20}, {2, 4, 13, 15},   {6, 7, 21, 22},   {9, 12, 18, 19},  {21, 22, 23, 24},
};

constexpr std::pair<LabelTriple, LabelTriple> kSquare1PartnerLines[16] = {
    {{1, 5, 10}, {16, 20, 24}}, {{1, 6, 12}, {16, 19, 22}}, {{1, 7, 11}, {14, 20, 22}},
    {{1, 8, 9}, {14, 19, 24}},  {{2, 7, 10}, {13, 20, 21}}, {{2, 5, 11}, {15, 20, 23}},
    {{2, 6, 9}, {15, 19, 21}},  {{2, 8, 12}, {13, 19, 23}}, {{3, 7, 9}, {14, 18, 21}},
    {{3, 6, 10}, {16, 17, 21}}, {{3, 5, 12}, {16, 18, 23}}, {{3, 8, 11}, {14, 17, 23}},
    {{4, 5, 9}, {15, 18, 24}},  {{4, 8, 10}, {13, 17, 24}}, {{4, 7, 12}, {13, 18, 22}},
    {{4, 6, 11}, {15, 17, 22}},
};

constexpr PointTriangles kSquare1PointTriangles[24] = {
    {1, {{{14, 19, 22}, {14, 20, 24}, {16, 19, 24}, {16, 20, 22}}}},
    {2, {{{13, 19, 21}, {13, 20, 23}, {15, 19, 23}, {15, 20, 21}}}},
    {3, {{{14, 17, 21}, {14, 18, 23}, {16, 17, 23}, {16, 18, 21}}}},
    {4, {{{13, 17, 22}, {13, 18, 24}, {15, 17, 24}, {15, 18, 22}}}},
    {5, {{{15, 18, 23}, {15, 20, 24}, {16, 18, 24}, {16, 20, 23}}}},
    {6, {{{15, 17, 21}, {15, 19, 22}, {16, 17, 22}, {16, 19, 21}}}},
    {7, {{{13, 18, 21}, {13, 20, 22}, {14, 18, 22}, {14, 20, 21}}}},
    {8, {{{13, 17, 23}, {13, 19, 24}, {14, 17, 24}, {14, 19, 23}}}},
    {9, {{{14, 18, 24}, {14, 19, 21}, {15, 18, 21}, {15, 19, 24}}}},
    {10, {{{13, 17, 21}, {13, 20, 24}, {16, 17, 24}, {16, 20, 21}}}},
    {11, {{{14, 17, 22}, {14, 20, 23}, {15, 17, 23}, {15, 20, 22}}}},
    {12, {{{13, 18, 23}, {13, 19, 22}, {16, 18, 22}, {16, 19, 23}}}},
    {13, {{{2, 7, 12}, {2, 8, 10}, {4, 7, 10}, {4, 8, 12}}}},
    {14, {{{1, 7, 9}, {1, 8, 11}, {3, 7, 11}, {3, 8, 9}}}},
    {15, {{{2, 5, 9}, {2, 6, 11}, {4, 5, 11}, {4, 6, 9}}}},
    {16, {{{1, 5, 12}, {1, 6, 10}, {3, 5, 10}, {3, 6, 12}}}},
    {17, {{{3, 6, 11}, {3, 8, 10}, {4, 6, 10}, {4, 8, 11}}}},
    {18, {{{3, 5, 9}, {3, 7, 12}, {4, 5, 12}, {4, 7, 9}}}},
    {19, {{{1, 6, 9}, {1, 8, 12}, {2, 6, 12}, {2, 8, 9}}}},
    {20, {{{1, 5, 11}, {1, 7, 10}, {2, 5, 10}, {2, 7, 11}}}},
    {21, {{{2, 6, 10}, {2, 7, 9}, {3, 6, 9}, {3, 7, 10}}}},
    {22, {{{1, 6, 11}, {1, 7, 12}, {4, 6, 12}, {4, 7, 11}}}},
    {23, {{{2, 5, 12}, {2, 8, 11}, {3, 5, 11}, {3, 8, 12}}}},
    {24, {{{1, 5, 9}, {1, 8, 10}, {4, 5, 10}, {4, 8, 9}}}},
};

constexpr LabelQuad kAllTetrads[105] = {
    {1, 2, 3, 4},     {1, 2, 19, 20},   {1, 2, 51, 52},   {1, 3, 14, 16},   {1, 3, 43, 44},   {1, 4, 22, 24},
    {1, 4, 39, 40},   {2, 3, 21, 23},   {2, 3, 37, 38},   {2, 4, 13, 15},   {2, 4, 41, 42},   {3, 4, 17, 18},
    {3, 4, 49, 50},   {5, 6, 7, 8},     {5, 6, 15, 16},   {5, 6, 55, 56},   {5, 7, 18, 20},   {5, 7, 58, 60},
    {5, 8, 23, 24},   {5, 8, 27, 28},   {6, 7, 21, 22},   {6, 7, 25, 26},   {6, 8, 17, 19},   {6, 8, 57, 59},
    {7, 8, 13, 14},   {7, 8, 53, 54},   {9, 10, 11, 12},  {9, 10, 21, 24},  {9, 10, 47, 48},  {9, 11, 14, 15},
    {9, 11, 33, 36},  {9, 12, 18, 19},  {9, 12, 29, 32},  {10, 11, 17, 20}, {10, 11, 30, 31}, {10, 12, 13, 16},
    {10, 12, 34, 35}, {11, 12, 22, 23}, {11, 12, 45, 46}, {13, 14, 15, 16}, {13, 14, 55, 56}, {13, 15, 43, 44},
    {13, 16, 33, 36}, {14, 15, 34, 35}, {14, 16, 41, 42}, {15, 16, 53, 54}, {17, 18, 19, 20}, {17, 18, 51, 52},
    {17, 19, 58, 60}, {17, 20, 29, 32}, {18, 19, 30, 31}, {18, 20, 57, 59}, {19, 20, 49, 50}, {21, 22, 23, 24},
    {21, 22, 27, 28}, {21, 23, 39, 40}, {21, 24, 45, 46}, {22, 23, 47, 48}, {22, 24, 37, 38}, {23, 24, 25, 26},
    {25, 26, 27, 28}, {25, 27, 30, 32}, {25, 27, 42, 43}, {25, 28, 34, 36}, {25, 28, 50, 51}, {26, 27, 33, 35},
    {26, 27, 49, 52}, {26, 28, 29, 31}, {26, 28, 41, 44}, {29, 30, 31, 32}, {29, 30, 38, 39}, {29, 30, 54, 55},
    {29, 31, 42, 43}, {30, 32, 41, 44}, {31, 32, 37, 40}, {31, 32, 53, 56}, {33, 34, 35, 36}, {33, 34, 38, 40},
    {33, 34, 58, 59}, {33, 35, 50, 51}, {34, 36, 49, 52}, {35, 36, 37, 39}, {35, 36, 57, 60}, {37, 38, 39, 40},
    {37, 39, 58, 59}, {37, 40, 54, 55}, {38, 39, 53, 56}, {38, 40, 57, 60}, {41, 42, 43, 44}, {41, 43, 46, 47},
    {41, 43, 59, 60}, {42, 44, 45, 48}, {42, 44, 57, 58}, {45, 46, 47, 48}, {45, 47, 50, 52}, {45, 47, 54, 56},
    {45, 48, 59, 60}, {46, 47, 57, 58}, {46, 48, 49, 51}, {46, 48, 53, 55}, {49, 50, 51, 52}, {49, 51, 54, 56},
    {50, 52, 53, 55}, {53, 54, 55, 56}, {57, 58, 59, 60},
};

// Rows are source labels 1..24, columns are S2..S10.
constexpr int kRelabelingRows[24][9] = {
    {1, 1, 1, 50, 37, 49, 41, 42, 37},     {2, 2, 2, 49, 40, 50, 44, 44, 39},     {3, 3, 3, 51, 39, 51, 42, 41, 40},
    {4, 4, 4, 52, 38, 52, 43, 43, 38},     {53, 57, 25, 57, 26, 5, 54, 5, 5},     {54, 58, 27, 60, 27, 6, 53, 6, 6},
    {55, 59, 28, 59, 28, 7, 55, 7, 7},     {56, 60, 26, 58, 25, 8, 56, 8, 8},     {35, 31, 45, 9, 9, 30, 9, 35, 45},
    {36, 32, 46, 10, 10, 32, 10, 33, 46},  {34, 29, 48, 11, 11, 29, 11, 34, 47},  {33, 30, 47, 12, 12, 31, 12, 36, 48},
    {13, 41, 41, 34, 34, 53, 13, 13, 53},  {14, 43, 44, 33, 36, 54, 14, 14, 54},  {15, 42, 42, 36, 33, 55, 15, 15, 56},
    {16, 44, 43, 35, 35, 56, 16, 16, 55},  {49, 17, 49, 17, 30, 17, 31, 59, 57},  {50, 18, 50, 18, 29, 18, 29, 60, 60},
    {51, 19, 52, 19, 32, 19, 32, 57, 59},  {52, 20, 51, 20, 31, 20, 30, 58, 58},  {37, 37, 21, 48, 21, 25, 48, 26, 21},
    {40, 39, 22, 45, 22, 26, 46, 25, 22},  {38, 38, 23, 46, 23, 28, 45, 28, 23},  {39, 40, 24, 47, 24, 27, 47, 27, 24},
};

// Images of (X, Y, Z) on each qubit.
const LocalMapRow kLocalMaps[8] = {
    {2, {"ZYX", "YXZ"}, "x1<->z1, x2<->y2"},
    {3, {"ZXY", "XYZ"}, "x1->z1->y1->x1"},
    {4, {"YXZ", "YXZ"}, "x1<->y1, x2<->y2"},
    {5, {"ZXY", "YZX"}, "x1->z1->y1->x1, x2->y2->z2->x2"},
    {7, {"XYZ", "YZX"}, "x2->y2->z2->x2"},
    {8, {"XZY", "YXZ"}, "z1<->y1, x2<->y2"},
    {9, {"XZY", "ZYX"}, "y1<->z1, x2<->z2"},
    {10, {"YZX", "YZX"}, "x1->y1->z1->x1, x2->y2->z2->x2"},
};

const MubFamily kMubPrinted[6] = {
    {{{"ZI", "IZ", "ZZ"}, {"XI", "IX", "XX"}, {"YI", "IY", "YY"}, {"XY", "YZ", "ZX"}, {"YX", "ZY", "XZ"}}},
    {{{"ZI", "IZ", "ZZ"}, {"XI", "IX", "XX"}, {"YI", "IX", "YX"}, {"ZX", "XZ", "YY"}, {"YZ", "ZY", "XX"}}},
    {{{"XI", "IZ", "XZ"}, {"ZI", "IX", "ZX"}, {"YI", "IY", "YY"}, {"XY", "YX", "ZZ"}, {"YZ", "ZY", "XX"}}},
    {{{"XI", "IZ", "XZ"}, {"ZI", "IY", "ZY"}, {"YI", "IX", "YX"}, {"XX", "YY", "ZZ"}, {"XY", "YZ", "ZX"}}},
    {{{"ZI", "IX", "ZX"}, {"YI", "IZ", "YZ"}, {"XI", "IY", "XY"}, {"XX", "YY", "ZZ"}, {"YX", "ZY", "XZ"}}},
    {{{"XI", "IX", "XX"}, {"YI", "IZ", "YZ"}, {"ZI", "IY", "ZY"}, {"XY", "YX", "ZZ"}, {"ZX", "XZ", "YY"}}},
};

Tables build_reference() {
    Tables t;
    for (const RawStateRow &raw : kStateRows) {
        StateRow row;
        for (int k = 0; k < 3; k++) row.triad[k] = raw.triad[k];
        row.starred = raw.starred;
        for (int k = 0; k < 4; k++) row.states[k] = parse_coords(raw.states[k]);
        t.states.push_back(row);
    }
    t.square1_tetrads.assign(std::begin(kSquare1Tetrads), std::end(kSquare1Tetrads));
    t.square1_partner_lines.assign(std::begin(kSquare1PartnerLines), std::end(kSquare1PartnerLines));
    t.square1_point_triangles.assign(std::begin(kSquare1PointTriangles), std::end(kSquare1PointTriangles));
    t.all_tetrads.assign(std::begin(kAllTetrads), std::end(kAllTetrads));
    for (int i = 0; i < 24; i++) {
        for (int j = 0; j < 9; j++) {
            t.relabelings[j][i] = kRelabelingRows[i][j];
        }
    }
    t.local_maps.assign(std::begin(kLocalMaps), std::end(kLocalMaps));
    for (int r = 0; r < 6; r++) {
        t.mub_families_printed[r] = kMubPrinted[r];
        t.mub_families[r] = kMubPrinted[r];
    }
    // The second printed family repeats IX; the only one-triad repair is XI,IY,XY.
    t.mub_families[1][1] = {"XI", "IY", "XY"};
    return t;
}

}  // namespace

Vec4 parse_coords(const std::string &text) {
    Vec4 v{};
    std::istringstream in(text);
    std::string tok;
    int n = 0;
    while (std::getline(in, tok, ',')) {
        if (n >= 4) {
            throw std::invalid_argument("too many coordinates in '" + text + "'");
        }
        // Forms: a, -a, i, -i, bi, a+bi, a-bi.
        GaussianInt z;
        if (tok.empty()) {
            throw std::invalid_argument("empty coordinate in '" + text + "'");
        }
        if (tok.back() == 'i') {
            std::string body = tok.substr(0, tok.size() - 1);
            size_t split = body.find_last_of("+-");
            std::string re_part = (split == std::string::npos || split == 0) ? "" : body.substr(0, split);
            std::string im_part = (split == std::string::npos || split == 0) ? body : body.substr(split);
            if (im_part.empty() || im_part == "+") {
                z.im = 1;
            } else if (im_part == "-") {
                z.im = -1;
            } else {
                z.im = std::stoll(im_part);
            }
            z.re = re_part.empty() ? 0 : std::stoll(re_part);
        } else {
            z.re = std::stoll(tok);
        }
        v[n++] = z;
    }
    if (n != 4) {
        throw std::invalid_argument("expected 4 coordinates in '" + text + "'");
    }
    return v;
}

const Tables &reference() {
    static const Tables tables = build_reference();
    return tables;
}

std::vector<std::string> table_names() {
    return {"states", "square1_tetrads", "square1_partner_lines", "square1_point_triangles",
            "all_tetrads", "relabelings", "local_maps", "mub_families"};
}

Tables corrupted(const Tables &t, const std::string &table) {
    Tables c = t;
    if (table == "states") {
        c.states[6].states[0][1] = GaussianInt(0, -1);  // 25 = (1,i,i,1) -> (1,-i,i,1)
    } else if (table == "square1_tetrads") {
        c.square1_tetrads[1] = {3, 4, 17, 19};
    } else if (table == "square1_partner_lines") {
        std::swap(c.square1_partner_lines[0].second, c.square1_partner_lines[1].second);
    } else if (table == "square1_point_triangles") {
        c.square1_point_triangles[0].triangles[0] = {14, 19, 24};
    } else if (table == "all_tetrads") {
        c.all_tetrads.pop_back();
    } else if (table == "relabelings") {
        std::swap(c.relabelings[4][0], c.relabelings[4][4]);
    } else if (table == "local_maps") {
        c.local_maps[0].images[1] = "XYZ";
    } else if (table == "mub_families") {
        c.mub_families[1] = c.mub_families_printed[1];
    } else {
        throw std::invalid_argument("unknown golden table '" + table + "'");
    }
    return c;
}

}  // namespace kaleido::golden
