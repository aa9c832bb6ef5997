#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kaleido/exact_matrix.hpp"
#include "kaleido/golden.hpp"
#include "kaleido/hexagon.hpp"
#include "kaleido/incidence.hpp"

namespace kaleido {

/// A state relabeling from S1's 24 states onto another square's.
struct Relabeling {
    int source = 1;
    int target = 0;
    std::array<int, 24> image{};  // image[l - 1] for label l of the source

    int apply(int label) const;
    int fixed_points() const;
};

/// The shipped relabeling columns, S1 -> S2 .. S1 -> S10.
std::vector<Relabeling> relabelings(const golden::Tables &tables);

struct RelabelingReport {
    int target = 0;
    bool injective = false;
    bool image_is_target_states = false;
    bool tetrads_match = false;
    int fixed_points = 0;
    std::optional<Tetrad> first_mismatch;  // a source tetrad whose image is not a target tetrad

    bool passed() const { return injective && image_is_target_states && tetrads_match && fixed_points == 8; }
};

RelabelingReport apply_relabeling(const Relabeling &r, const SquareGeometry &source, const SquareGeometry &target);

/// A 4x4 matrix over GF(2) acting on (x1, z1, x2, z2) column vectors.
class SymplecticMap {
   public:
    SymplecticMap() = default;
    /// rows[i] packs row i with column 0 in the most significant of 4 bits,
    /// the same layout as Observable::code().
    explicit SymplecticMap(std::array<uint8_t, 4> rows);
    static SymplecticMap identity();
    /// Columns are the images of XI, ZI, IX, IZ.
    static SymplecticMap from_images(std::array<Observable, 4> images);

    uint8_t entry(int row, int col) const { return (rows_[row] >> (3 - col)) & 1u; }
    const std::array<uint8_t, 4> &rows() const { return rows_; }

    uint8_t apply(uint8_t code) const;
    /// Throws std::logic_error if the map is singular.
    Observable apply(Observable o) const;
    bool preserves_form() const;
    /// Block-diagonal: never mixes the two qubits' coordinates.
    bool is_local() const;

    friend SymplecticMap operator*(const SymplecticMap &a, const SymplecticMap &b);
    friend auto operator<=>(const SymplecticMap &, const SymplecticMap &) = default;

    std::string str() const;  // "1000/0100/0010/0001"

   private:
    std::array<uint8_t, 4> rows_{};
};

/// Independent permutations of {X, Y, Z} on each qubit.
struct LocalMap {
    std::array<std::array<Letter, 3>, 2> images{};  // images of X, Y, Z per qubit

    static LocalMap identity();
    /// From strings like "ZYX" (X -> Z, Y -> Y, Z -> X). Throws
    /// std::invalid_argument unless both are permutations of "XYZ".
    static LocalMap parse(const std::string &qubit1, const std::string &qubit2);

    Letter apply(int qubit, Letter l) const;
    Observable apply(Observable o) const;
    SymplecticMap symplectic() const;
    std::string str() const;  // "XYZ->ZYX, XYZ->YXZ"
};

/// All 36 local maps, qubit-1 permutation major.
std::vector<LocalMap> all_local_maps();

/// The image square in canonical orientation, labeled by matching its
/// observables against `squares`; nullopt if it is not one of them.
std::optional<MagicSquare> apply_local_map(const LocalMap &m, const MagicSquare &s,
                                           std::span<const MagicSquare> squares);
std::optional<MagicSquare> apply_symplectic(const SymplecticMap &m, const MagicSquare &s,
                                            std::span<const MagicSquare> squares);

/// Every form-preserving 4x4 GF(2) matrix, sorted; 720 of them.
const std::vector<SymplecticMap> &enumerate_symplectic();

struct FoundMap {
    SymplecticMap map;
    bool local = false;
};

/// Symplectic maps carrying the observables of `from` onto those of `to`.
std::vector<FoundMap> find_maps(const MagicSquare &from, const MagicSquare &to);

/// If p equals c * P for a Pauli observable P and a phase c, returns (P, c).
std::optional<std::pair<Observable, Phase>> identify_pauli(const ScaledMatrix &p);

/// The symplectic action of a Clifford unitary, read off by conjugating XI,
/// ZI, IX, IZ. Throws std::invalid_argument if u is not Clifford.
SymplecticMap symplectic_image(const ScaledMatrix &u);

/// A unitary realizing a symplectic map, with the signs it picks up.
struct Lift {
    ScaledMatrix unitary;
    std::array<int, 15> signs{};  // U O U^dagger = signs[k] * m(O) for Observable::all()[k]
};

/// Looks up a Clifford unitary for `m` (built from H, S, CNOT with entries in
/// Q(i)) and checks the conjugation action on all 15 observables. Throws
/// std::invalid_argument if m is not symplectic, ConsistencyError if the check fails.
Lift lift_to_unitary(const SymplecticMap &m);

/// The 16 Pauli products I..Z x I..Z as unitaries, II first.
std::vector<std::pair<std::string, ScaledMatrix>> pauli_factors();

/// Pushes S1's labeled states through lifted unitaries and compares with a
/// relabeling column.
struct ColumnReproduction {
    int target = 0;
    int candidates = 0;           // symplectic maps S1 -> target
    int local_candidates = 0;
    int state_set_matches = 0;    // candidates whose lift sends S1's states onto the target's
    int exact_matches = 0;        // (candidate, Pauli factor) pairs reproducing the column label by label
    std::optional<SymplecticMap> exact_map;
    std::optional<std::string> exact_pauli;
};

ColumnReproduction reproduce_column(const Relabeling &r, const MagicSquare &source, const MagicSquare &target,
                                    const Catalog &catalog);

}  // namespace kaleido
