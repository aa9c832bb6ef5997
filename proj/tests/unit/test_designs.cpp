#include <gtest/gtest.h>

#include "kaleido/designs.hpp"
#include "kaleido/kaleidoscope.hpp"

using namespace kaleido;

namespace {

const Kaleidoscope &K() { return Kaleidoscope::standard(); }

Triad T(const char *a, const char *b, const char *c) {
    return make_triad(Observable::parse(a), Observable::parse(b), Observable::parse(c));
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; i++) out.push_back(i);
    return out;
}

}  // namespace

TEST(Qbd, ObservablesAndTriads) {
    std::vector<int> codes;
    for (Observable o : Observable::all()) codes.push_back(o.code());
    QbdSymbol q = qbd_profile(codes, as_blocks(enumerate_triads()));
    EXPECT_EQ(q, (QbdSymbol{15, 15, 3, 3, {{1, 6}}}));
    EXPECT_TRUE(q.identities_hold());
    EXPECT_EQ(q.str(), "{15,15,3,3;(1,6)}");
}

TEST(Qbd, SquareStatesAndTetrads) {
    for (const SquareGeometry &g : K().geometries()) {
        auto st = g.states.all();
        EXPECT_EQ(qbd_profile(st, as_blocks(g.tetrads)), (QbdSymbol{24, 24, 4, 4, {{1, 6}, {2, 3}}}));
    }
}

TEST(Qbd, AllStatesAndTetrads) {
    auto labels = range(1, 60);
    QbdSymbol q = qbd_profile(labels, as_blocks(K().tetrads()));
    EXPECT_EQ(q, (QbdSymbol{105, 60, 7, 4, {{1, 12}, {3, 3}}}));
    EXPECT_EQ(q.b * q.k, q.v * q.r);
}

TEST(Qbd, IrregularStructuresAreRejected) {
    auto pts = range(1, 4);
    std::vector<std::vector<int>> sizes = {{1, 2}, {3, 4, 1}};
    EXPECT_THROW(qbd_profile(pts, sizes), DesignError);
    std::vector<std::vector<int>> replication = {{1, 2}, {1, 3}, {1, 4}};
    EXPECT_THROW(qbd_profile(pts, replication), DesignError);
    std::vector<std::vector<int>> outside = {{1, 5}};
    EXPECT_THROW(qbd_profile(pts, outside), DesignError);
    // Regular (r = 2, k = 2) but point 1 meets point 2 twice while point 3 meets 1 and 4 once each.
    auto six = range(1, 6);
    std::vector<std::vector<int>> profile = {{1, 2}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 3}};
    EXPECT_THROW(qbd_profile(six, profile), DesignError);
}

TEST(Qbd, IdentitiesCheckedOnSymbols) {
    EXPECT_FALSE((QbdSymbol{10, 10, 3, 3, {{1, 5}}}).identities_hold());
    EXPECT_TRUE((QbdSymbol{6, 15, 2, 5, {{1, 8}}}).identities_hold());
}

TEST(Unbiased, Examples) {
    EXPECT_TRUE(unbiased(T("ZI", "IZ", "ZZ"), T("XI", "IX", "XX")));
    auto b = eigenbasis(T("ZI", "IZ", "ZZ"));
    EXPECT_FALSE(unbiased(b, b));
    const MagicSquare &s1 = K().square(1);
    EXPECT_FALSE(unbiased(s1.row(0), s1.column(0)));
    EXPECT_FALSE(unbiased(s1.row(0), s1.column(2)));
}

TEST(Unbiased, SymmetricOverAllTriadPairs) {
    for (const Triad &a : enumerate_triads())
        for (const Triad &b : enumerate_triads()) EXPECT_EQ(unbiased(a, b), unbiased(b, a));
}

TEST(Mub, ShippedFamiliesPass) {
    MubReport r = verify_mub_sets(golden::reference());
    for (const Check &c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
    ASSERT_EQ(r.families.size(), 6u);
    ASSERT_TRUE(r.cover);
    EXPECT_EQ(*r.cover, (QbdSymbol{6, 15, 2, 5, {{1, 8}}}));
    EXPECT_EQ(r.computed_families.size(), 6u);
    const TriadFamily &first = r.families.front();
    EXPECT_NE(std::find(first.begin(), first.end(), T("ZI", "IZ", "ZZ")), first.end());
    EXPECT_NE(std::find(first.begin(), first.end(), T("XI", "IX", "XX")), first.end());
}

TEST(Mub, RawReferenceTableHasOneFaultyRow) {
    MubReport r = verify_mub_sets(golden::reference());
    EXPECT_EQ(r.printed_rows_failing, std::vector<int>{2});
}

TEST(Mub, CorruptedFamiliesFail) {
    MubReport r = verify_mub_sets(golden::corrupted(golden::reference(), "mub_families"));
    EXPECT_FALSE(r.passed());
}

TEST(Mub, MaximalFamiliesHaveFiveTriads) {
    for (const TriadFamily &f : maximal_mub_families()) {
        for (size_t i = 0; i < f.size(); i++)
            for (size_t j = i + 1; j < f.size(); j++) EXPECT_TRUE(unbiased(f[i], f[j]));
    }
}

TEST(SquareMub, AllSquares) {
    for (const MagicSquare &s : K().squares()) {
        SquareMubReport r = square_mub_relations(s);
        EXPECT_TRUE(r.rows_unbiased) << s.name();
        EXPECT_TRUE(r.columns_unbiased) << s.name();
        EXPECT_EQ(r.row_column_unbiased_pairs, 0) << s.name();
    }
}
