#include <gtest/gtest.h>

#include <set>

#include "kaleido/kaleidoscope.hpp"
#include "kaleido/transforms.hpp"

using namespace kaleido;

namespace {

const Kaleidoscope &K() { return Kaleidoscope::standard(); }

Observable O(const char *s) { return Observable::parse(s); }

// U P U^dagger compared against +-P' entry by entry.
int conjugation_sign(const ScaledMatrix &u, Observable from, Observable to) {
    ScaledMatrix c = u * ScaledMatrix::make(pauli_matrix(from), 1) * u.adjoint();
    Mat4 target = pauli_matrix(to);
    for (int s : {1, -1}) {
        if (c == ScaledMatrix::make(GaussianInt{s, 0} * target, 1)) return s;
    }
    return 0;
}

}  // namespace

TEST(Relabeling, ShippedColumns) {
    auto rs = relabelings(K().tables());
    ASSERT_EQ(rs.size(), 9u);
    const Relabeling &to6 = rs[4];
    EXPECT_EQ(to6.target, 6);
    EXPECT_EQ(to6.apply(1), 37);
    const Relabeling &to2 = rs[0];
    for (int l : {1, 2, 3, 4, 13, 14, 15, 16}) EXPECT_EQ(to2.apply(l), l);
    EXPECT_EQ(to2.fixed_points(), 8);
    EXPECT_THROW(to2.apply(25), std::out_of_range);
}

TEST(Relabeling, AllColumnsCarryTetrads) {
    for (const Relabeling &r : relabelings(K().tables())) {
        RelabelingReport rep = apply_relabeling(r, K().geometry(1), K().geometry(r.target));
        EXPECT_TRUE(rep.passed()) << "S" << r.target;
        EXPECT_FALSE(rep.first_mismatch);
    }
}

TEST(Relabeling, CorruptedColumnReportsMismatch) {
    auto rs = relabelings(golden::corrupted(K().tables(), "relabelings"));
    RelabelingReport rep = apply_relabeling(rs[4], K().geometry(1), K().geometry(6));
    EXPECT_FALSE(rep.passed());
    EXPECT_TRUE(rep.first_mismatch);
}

TEST(LocalMap, ShippedRowsReachTheirTargets) {
    for (const golden::LocalMapRow &row : K().tables().local_maps) {
        LocalMap m = LocalMap::parse(row.images[0], row.images[1]);
        auto image = apply_local_map(m, K().square(1), K().squares());
        ASSERT_TRUE(image) << row.notation;
        EXPECT_EQ(image->id, row.target) << row.notation;
        EXPECT_EQ(image->grid, K().square(row.target).grid);
    }
}

TEST(LocalMap, Examples) {
    // x <-> z on qubit 1 and x <-> y on qubit 2 takes S1 to S2.
    auto s2 = apply_local_map(LocalMap::parse("ZYX", "YXZ"), K().square(1), K().squares());
    ASSERT_TRUE(s2);
    EXPECT_EQ(s2->id, 2);
    // The 3-cycle x -> z -> y -> x on qubit 1 takes S1 to S3.
    auto s3 = apply_local_map(LocalMap::parse("ZXY", "XYZ"), K().square(1), K().squares());
    ASSERT_TRUE(s3);
    EXPECT_EQ(s3->id, 3);
    auto s1 = apply_local_map(LocalMap::identity(), K().square(1), K().squares());
    ASSERT_TRUE(s1);
    EXPECT_EQ(s1->id, 1);
    EXPECT_EQ(LocalMap::parse("ZYX", "YXZ").apply(O("XY")), O("ZX"));
}

TEST(LocalMap, RejectsNonPermutations) {
    EXPECT_THROW(LocalMap::parse("XXY", "XYZ"), std::invalid_argument);
    EXPECT_THROW(LocalMap::parse("XYZ", "XY"), std::invalid_argument);
}

TEST(LocalMap, ThirtySixDistinctBlockDiagonalMaps) {
    std::set<SymplecticMap> maps;
    for (const LocalMap &m : all_local_maps()) {
        SymplecticMap s = m.symplectic();
        EXPECT_TRUE(s.is_local());
        EXPECT_TRUE(s.preserves_form());
        for (Observable o : Observable::all()) EXPECT_EQ(s.apply(o), m.apply(o));
        maps.insert(s);
    }
    EXPECT_EQ(maps.size(), 36u);
}

TEST(Symplectic, GroupOrderAndLocalSubgroup) {
    const auto &g = enumerate_symplectic();
    ASSERT_EQ(g.size(), 720u);
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
    std::set<SymplecticMap> all(g.begin(), g.end());
    std::set<SymplecticMap> local;
    for (const SymplecticMap &m : g)
        if (m.is_local()) local.insert(m);
    EXPECT_EQ(local.size(), 36u);
    for (const SymplecticMap &a : local) {
        for (const SymplecticMap &b : local) EXPECT_TRUE(local.contains(a * b));
    }
    for (const SymplecticMap &a : g) EXPECT_TRUE(all.contains(a * g[17]));
}

TEST(Symplectic, EveryMapPreservesCommutationAndIsBijective) {
    for (const SymplecticMap &m : enumerate_symplectic()) {
        std::set<Observable> image;
        for (Observable a : Observable::all()) {
            image.insert(m.apply(a));
            for (Observable b : Observable::all()) ASSERT_EQ(commutes(a, b), commutes(m.apply(a), m.apply(b)));
        }
        EXPECT_EQ(image.size(), 15u);
    }
}

TEST(Symplectic, CompositionActsInOrder) {
    const auto &g = enumerate_symplectic();
    for (size_t i = 0; i < g.size(); i += 37) {
        for (size_t j = 0; j < g.size(); j += 53) {
            for (Observable o : Observable::all()) EXPECT_EQ((g[i] * g[j]).apply(o), g[i].apply(g[j].apply(o)));
        }
    }
}

TEST(Symplectic, RejectsNonSymplectic) {
    SymplecticMap swap_xz({0b0100, 0b1000, 0b0010, 0b0001});  // x1 <-> z1 only: preserves the form
    EXPECT_TRUE(swap_xz.preserves_form());
    SymplecticMap squash({0b1000, 0b1000, 0b0010, 0b0001});
    EXPECT_FALSE(squash.preserves_form());
    EXPECT_THROW(lift_to_unitary(squash), std::invalid_argument);
    EXPECT_THROW(SymplecticMap({16, 0, 0, 0}), std::invalid_argument);
}

TEST(FindMaps, Examples) {
    auto self = find_maps(K().square(1), K().square(1));
    EXPECT_NE(std::find_if(self.begin(), self.end(),
                           [](const FoundMap &f) { return f.map == SymplecticMap::identity(); }),
              self.end());

    auto to2 = find_maps(K().square(1), K().square(2));
    SymplecticMap shipped = LocalMap::parse("ZYX", "YXZ").symplectic();
    auto hit = std::find_if(to2.begin(), to2.end(), [&](const FoundMap &f) { return f.map == shipped; });
    ASSERT_NE(hit, to2.end());
    EXPECT_TRUE(hit->local);

    auto to6 = find_maps(K().square(1), K().square(6));
    EXPECT_FALSE(to6.empty());
    for (const FoundMap &f : to6) EXPECT_FALSE(f.local);
}

TEST(FindMaps, CosetSizesAreUniform) {
    size_t stabilizer = find_maps(K().square(1), K().square(1)).size();
    EXPECT_EQ(stabilizer * 10, enumerate_symplectic().size());
    for (const MagicSquare &a : K().squares()) {
        for (const MagicSquare &b : K().squares()) EXPECT_EQ(find_maps(a, b).size(), stabilizer);
    }
}

TEST(FindMaps, ImagesAreTheTargetSquare) {
    for (const FoundMap &f : find_maps(K().square(1), K().square(6))) {
        auto image = apply_symplectic(f.map, K().square(1), K().squares());
        ASSERT_TRUE(image);
        EXPECT_EQ(image->id, 6);
    }
}

TEST(Lift, IdentityIsIdentity) {
    Lift l = lift_to_unitary(SymplecticMap::identity());
    EXPECT_TRUE(l.unitary.is_identity());
    for (int s : l.signs) EXPECT_EQ(s, 1);
}

TEST(Lift, EveryMapSatisfiesConjugationContract) {
    for (const SymplecticMap &m : enumerate_symplectic()) {
        Lift l = lift_to_unitary(m);
        EXPECT_TRUE((l.unitary * l.unitary.adjoint()).is_identity());
        const auto &all = Observable::all();
        for (size_t k = 0; k < all.size(); k++) {
            int s = conjugation_sign(l.unitary, all[k], m.apply(all[k]));
            ASSERT_NE(s, 0) << m.str() << " " << all[k];
            EXPECT_EQ(s, l.signs[k]);
        }
        EXPECT_EQ(symplectic_image(l.unitary), m);
    }
}

TEST(Lift, LocalMapLiftsToProductOfSingleQubitGates) {
    SymplecticMap m = LocalMap::parse("ZYX", "YXZ").symplectic();
    Lift l = lift_to_unitary(m);
    // A product U1 (x) U2 commutes with nothing in particular, but it maps the
    // single-qubit observables of each qubit among themselves.
    for (Observable o : Observable::all()) {
        if (o.weight() == 1) EXPECT_EQ(o.letter(1) == Letter::I, m.apply(o).letter(1) == Letter::I);
    }
    EXPECT_NE(conjugation_sign(l.unitary, O("XI"), O("ZI")), 0);
}

TEST(Lift, SquareOneToSixLiftsMapTheObservables) {
    auto s6 = K().square(6).observables();
    for (const FoundMap &f : find_maps(K().square(1), K().square(6))) {
        Lift l = lift_to_unitary(f.map);
        for (Observable o : K().square(1).observables()) {
            Observable img = f.map.apply(o);
            EXPECT_NE(std::find(s6.begin(), s6.end(), img), s6.end());
            EXPECT_NE(conjugation_sign(l.unitary, o, img), 0);
        }
    }
}

TEST(SymplecticImage, RejectsNonClifford) {
    // (3 + 4i Y-ish rotation)/5 is unitary over Q(i) but not Clifford.
    Mat2 r = {{{GaussianInt{3, 0}, GaussianInt{0, 4}}, {GaussianInt{0, 4}, GaussianInt{3, 0}}}};
    Mat2 id = {{{GaussianInt{1, 0}, GaussianInt{}}, {GaussianInt{}, GaussianInt{1, 0}}}};
    ScaledMatrix u = ScaledMatrix::make(kron(r, id), 5);
    EXPECT_TRUE((u * u.adjoint()).is_identity());
    EXPECT_THROW(symplectic_image(u), std::invalid_argument);
    EXPECT_FALSE(identify_pauli(ScaledMatrix{}));
}

TEST(ColumnReproduction, SquareOneToSix) {
    auto rs = relabelings(K().tables());
    ColumnReproduction c = reproduce_column(rs[4], K().square(1), K().square(6), K().catalog());
    EXPECT_EQ(c.candidates, 72);
    EXPECT_EQ(c.local_candidates, 0);
    EXPECT_EQ(c.state_set_matches, 72);
    EXPECT_GE(c.exact_matches, 0);
    EXPECT_THROW(reproduce_column(rs[4], K().square(1), K().square(5), K().catalog()), std::invalid_argument);
}
