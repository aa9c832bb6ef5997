#include <gtest/gtest.h>

#include <random>

#include "kaleido/errors.hpp"
#include "kaleido/states.hpp"

using namespace kaleido;

namespace {

const Catalog &catalog() {
    static const Catalog c = build_catalog(golden::reference());
    return c;
}

Vec4 scaled(const Vec4 &v, GaussianInt s) {
    Vec4 out{};
    for (int i = 0; i < 4; i++) out[i] = s * v[i];
    return out;
}

GaussianInt random_nonzero(std::mt19937 &rng) {
    std::uniform_int_distribution<int> d(-6, 6);
    GaussianInt z;
    do {
        z = GaussianInt{d(rng), d(rng)};
    } while (z.is_zero());
    return z;
}

}  // namespace

TEST(Canonicalize, ZeroVectorThrows) { EXPECT_THROW(canonicalize(Vec4{}), std::invalid_argument); }

TEST(Canonicalize, Examples) {
    Vec4 v = {GaussianInt{0, 2}, GaussianInt{2, 0}, GaussianInt{0, 0}, GaussianInt{-2, 2}};
    EXPECT_EQ(coords_str(canonicalize(v)), "(1,-i,0,1+i)");
    EXPECT_EQ(coords_str(catalog().state(37).coords), "(1,0,0,i)");
}

TEST(Canonicalize, IdempotentAndScaleInvariant) {
    std::mt19937 rng(7);
    for (const StateVec &s : catalog().states()) {
        Vec4 c = canonicalize(s.coords);
        EXPECT_EQ(canonicalize(c), c);
        for (int trial = 0; trial < 8; trial++) {
            GaussianInt k = random_nonzero(rng);
            EXPECT_EQ(canonicalize(scaled(s.coords, k)), c);
            EXPECT_TRUE(projective_equal(scaled(s.coords, k), s.coords));
        }
    }
}

TEST(ProjectiveEqual, ConsistentWithCanonicalForms) {
    const auto &states = catalog().states();
    for (const StateVec &a : states) {
        for (const StateVec &b : states) {
            bool same = canonicalize(a.coords) == canonicalize(b.coords);
            EXPECT_EQ(projective_equal(a, b), same);
            EXPECT_EQ(same, a.label == b.label);
        }
    }
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
    Vec4 a = {GaussianInt{0, 1}, GaussianInt{}, GaussianInt{}, GaussianInt{}};
    Vec4 b = {GaussianInt{1, 0}, GaussianInt{}, GaussianInt{}, GaussianInt{}};
    EXPECT_EQ(inner_product(a, b), (GaussianInt{0, -1}));
    EXPECT_EQ(norm2(a), 1);
}

TEST(OverlapRatio, QuarterAndZero) {
    // |00> against (1,1,1,1): |<.|.>|^2 = 1 over norms 1 and 4.
    Vec4 e = {GaussianInt{1, 0}, GaussianInt{}, GaussianInt{}, GaussianInt{}};
    Vec4 u = {GaussianInt{1, 0}, GaussianInt{1, 0}, GaussianInt{1, 0}, GaussianInt{1, 0}};
    EXPECT_EQ(overlap_ratio(e, u), std::make_pair(int64_t{1}, int64_t{4}));
    Vec4 f = {GaussianInt{}, GaussianInt{1, 0}, GaussianInt{}, GaussianInt{}};
    EXPECT_EQ(overlap_ratio(e, f).first, 0);
}

TEST(Eigenbasis, EveryVectorIsAJointEigenvectorByMatrixOracle) {
    for (const Triad &t : enumerate_triads()) {
        auto basis = eigenbasis(t);
        for (const Vec4 &v : basis) {
            for (Observable o : t.members) {
                Vec4 w = pauli_matrix(o) * v;
                bool plus = w == v;
                bool minus = w == scaled(v, GaussianInt{-1, 0});
                EXPECT_TRUE(plus || minus) << t.str();
            }
        }
        for (int i = 0; i < 4; i++) {
            for (int j = i + 1; j < 4; j++) EXPECT_TRUE(inner_product(basis[i], basis[j]).is_zero());
        }
    }
}

TEST(Eigenbasis, SignOrderOfFirstTwoMembers) {
    Triad t = make_triad(Observable::parse("ZI"), Observable::parse("IZ"), Observable::parse("ZZ"));
    auto basis = eigenbasis(t);
    const std::array<std::array<int, 2>, 4> want = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (int i = 0; i < 4; i++) {
        Signature s = eigenvalue_signature(basis[i], t);
        EXPECT_EQ(s.signs[0], want[i][0]);
        EXPECT_EQ(s.signs[1], want[i][1]);
        EXPECT_EQ(s.product(), t.sign);
    }
}

TEST(Eigenbasis, SignatureRejectsNonEigenstate) {
    Triad t = make_triad(Observable::parse("ZI"), Observable::parse("IZ"), Observable::parse("ZZ"));
    Vec4 u = {GaussianInt{1, 0}, GaussianInt{1, 0}, GaussianInt{}, GaussianInt{}};
    EXPECT_THROW(eigenvalue_signature(u, t), std::invalid_argument);
}

TEST(Catalog, SixtyStatesAndStarredRows) {
    const Catalog &c = catalog();
    EXPECT_EQ(c.states().size(), 60u);
    int starred = 0;
    for (size_t r = 0; r < c.rows().size(); r++) {
        starred += c.starred()[r];
        EXPECT_EQ(c.starred()[r], c.rows()[r].sign < 0);
        auto labels = c.labels_of(c.rows()[r]);
        for (int i = 0; i < 4; i++) EXPECT_EQ(labels[i], static_cast<int>(4 * r + i + 1));
    }
    EXPECT_EQ(starred, 3);
    EXPECT_THROW(c.state(0), std::out_of_range);
    EXPECT_THROW(c.state(61), std::out_of_range);
}

TEST(Catalog, OrthogonalityMatchesInnerProducts) {
    const Catalog &c = catalog();
    for (int a = 1; a <= 60; a++) {
        for (int b = 1; b <= 60; b++) {
            EXPECT_EQ(c.orthogonal(a, b), inner_product(c.state(a), c.state(b)).is_zero());
        }
    }
}

TEST(Catalog, FindLocatesScaledStates) {
    const Catalog &c = catalog();
    EXPECT_EQ(c.find(scaled(c.state(25).coords, GaussianInt{0, 3})), 25);
    Vec4 odd = {GaussianInt{1, 0}, GaussianInt{2, 0}, GaussianInt{}, GaussianInt{}};
    EXPECT_FALSE(c.find(odd));
}

TEST(Catalog, CorruptedTableIsRejected) {
    EXPECT_THROW(build_catalog(golden::corrupted(golden::reference(), "states")), ConsistencyError);
}
