#include <gtest/gtest.h>

#include <map>
#include <set>

#include "kaleido/incidence.hpp"
#include "kaleido/kaleidoscope.hpp"

using namespace kaleido;

namespace {

const Kaleidoscope &K() { return Kaleidoscope::standard(); }
const Catalog &C() { return K().catalog(); }

GaussianInt det3(const Vec4 &a, const Vec4 &b, const Vec4 &c, int i, int j, int k) {
    return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
           a[k] * (b[i] * c[j] - b[j] * c[i]);
}

// Three vectors span at most a plane iff every 3x3 minor vanishes.
bool minors_vanish(int x, int y, int z) {
    const Vec4 &a = C().state(x).coords;
    const Vec4 &b = C().state(y).coords;
    const Vec4 &c = C().state(z).coords;
    for (auto [i, j, k] : {std::array{0, 1, 2}, std::array{0, 1, 3}, std::array{0, 2, 3}, std::array{1, 2, 3}}) {
        if (!det3(a, b, c, i, j, k).is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST(Tetrads, BruteForceOracleFinds105) {
    std::vector<Tetrad> brute;
    auto orth = [](int a, int b) { return inner_product(C().state(a), C().state(b)).is_zero(); };
    for (int a = 1; a <= 60; a++)
        for (int b = a + 1; b <= 60; b++) {
            if (!orth(a, b)) continue;
            for (int c = b + 1; c <= 60; c++) {
                if (!orth(a, c) || !orth(b, c)) continue;
                for (int d = c + 1; d <= 60; d++)
                    if (orth(a, d) && orth(b, d) && orth(c, d)) brute.push_back(Tetrad{{a, b, c, d}});
            }
        }
    EXPECT_EQ(brute.size(), 105u);
    EXPECT_EQ(brute, K().tetrads());
}

TEST(Tetrads, SquareOneHas24) {
    const auto &ts = K().geometry(1).tetrads;
    ASSERT_EQ(ts.size(), 24u);
    std::map<int, int> per;
    for (const Tetrad &t : ts)
        for (int l : t.labels) per[l]++;
    for (int l = 1; l <= 24; l++) EXPECT_EQ(per[l], 4);
    EXPECT_NE(std::find(ts.begin(), ts.end(), Tetrad{{3, 4, 17, 18}}), ts.end());
}

TEST(Collinear, AgreesWithMinorOracle) {
    const auto all = K().geometry(1).states.all();
    int lines = 0;
    for (size_t i = 0; i < all.size(); i++)
        for (size_t j = i + 1; j < all.size(); j++)
            for (size_t k = j + 1; k < all.size(); k++) {
                bool c = collinear(all[i], all[j], all[k], C());
                EXPECT_EQ(c, minors_vanish(all[i], all[j], all[k]));
                lines += c;
            }
    EXPECT_GE(lines, 32);
}

TEST(Reye, EverySquareHasTwoConfigurations) {
    for (const SquareGeometry &g : K().geometries()) {
        for (const ReyeConfig *c : {&g.row_config, &g.column_config}) {
            ASSERT_EQ(c->lines.size(), 16u);
            std::map<int, int> per;
            for (const Line &l : c->lines) {
                EXPECT_TRUE(minors_vanish(l.points[0], l.points[1], l.points[2]));
                for (int p : l.points) per[p]++;
            }
            EXPECT_EQ(per.size(), 12u);
            for (const auto &[p, n] : per) EXPECT_EQ(n, 4);
        }
    }
}

TEST(Reye, RejectsNonConfigurations) {
    std::vector<int> eleven = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    EXPECT_THROW(extract_reye(eleven, C()), std::invalid_argument);
    std::vector<int> wrong = {1, 2, 3, 4, 5, 6, 7, 8, 13, 14, 15, 16};
    EXPECT_THROW(extract_reye(wrong, C()), std::invalid_argument);
}

TEST(Partners, BijectionWithFullOrthogonality) {
    for (const SquareGeometry &g : K().geometries()) {
        ASSERT_EQ(g.pairing.pairs.size(), 16u);
        std::set<Line> seen;
        for (const auto &[a, b] : g.pairing.pairs) {
            seen.insert(b);
            for (int p : a.points)
                for (int q : b.points) EXPECT_TRUE(C().orthogonal(p, q));
        }
        EXPECT_EQ(seen.size(), 16u);
    }
    const auto &first = K().geometry(1).pairing.pairs.front();
    EXPECT_EQ(first.first, (Line{{1, 5, 10}}));
    EXPECT_EQ(first.second, (Line{{16, 20, 24}}));
}

TEST(Partners, MisalignedConfigurationsThrow) {
    const SquareGeometry &g = K().geometry(1);
    EXPECT_THROW(partner_pairing(g.row_config, g.row_config, C()), std::invalid_argument);
}

TEST(Triangles, FortyEightPerConfigurationFourPerPoint) {
    for (const SquareGeometry &g : K().geometries()) {
        for (const auto &[from, other] : {std::pair{&g.row_config, &g.column_config},
                                          std::pair{&g.column_config, &g.row_config}}) {
            auto ts = triangles(*other, C());
            EXPECT_EQ(ts.size(), 48u);
            for (const Triangle &t : ts) {
                EXPECT_FALSE(minors_vanish(t.points[0], t.points[1], t.points[2]));
                EXPECT_EQ(overlap_ratio(C().state(t.points[0]).coords, C().state(t.points[1]).coords),
                          std::make_pair(int64_t{1}, int64_t{4}));
            }
            for (int p : from->points) EXPECT_EQ(orthogonal_triangles(p, *other, C()).size(), 4u);
        }
    }
}

TEST(Triangles, PointOneOfSquareOne) {
    const SquareGeometry &g = K().geometry(1);
    auto ts = orthogonal_triangles(1, g.column_config, C());
    std::vector<Triangle> want = {{{14, 19, 22}}, {{14, 20, 24}}, {{16, 19, 24}}, {{16, 20, 22}}};
    EXPECT_EQ(ts, want);
}
