#include "kaleido/transforms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "kaleido/errors.hpp"

namespace kaleido {

int Relabeling::apply(int label) const {
    if (label < 1 || label > 24) {
        throw std::out_of_range("relabeling is defined on labels 1..24, got " + std::to_string(label));
    }
    return image[label - 1];
}

int Relabeling::fixed_points() const {
    int n = 0;
    for (int l = 1; l <= 24; l++) n += image[l - 1] == l;
    return n;
}

std::vector<Relabeling> relabelings(const golden::Tables &tables) {
    std::vector<Relabeling> out;
    for (size_t j = 0; j < tables.relabelings.size(); j++) {
        Relabeling r;
        r.target = static_cast<int>(j) + 2;
        r.image = tables.relabelings[j];
        out.push_back(r);
    }
    return out;
}

RelabelingReport apply_relabeling(const Relabeling &r, const SquareGeometry &source, const SquareGeometry &target) {
    RelabelingReport rep;
    rep.target = r.target;
    std::set<int> image(r.image.begin(), r.image.end());
    rep.injective = image.size() == 24;
    auto want = target.states.all();
    rep.image_is_target_states = std::equal(image.begin(), image.end(), want.begin(), want.end());
    rep.fixed_points = r.fixed_points();

    std::set<Tetrad> targets(target.tetrads.begin(), target.tetrads.end());
    std::set<Tetrad> hit;
    for (const Tetrad &t : source.tetrads) {
        Tetrad m;
        for (int i = 0; i < 4; i++) m.labels[i] = r.apply(t.labels[i]);
        std::sort(m.labels.begin(), m.labels.end());
        if (!targets.contains(m)) {
            rep.first_mismatch = t;
            break;
        }
        hit.insert(m);
    }
    rep.tetrads_match = !rep.first_mismatch && hit == targets;
    return rep;
}

namespace {

constexpr uint8_t swap_pairs(uint8_t b) { return static_cast<uint8_t>(((b & 0b1010u) >> 1) | ((b & 0b0101u) << 1)); }

constexpr int form(uint8_t a, uint8_t b) { return __builtin_parity(a & swap_pairs(b)); }

constexpr uint8_t unit_code(int j) { return static_cast<uint8_t>(1u << (3 - j)); }

}  // namespace

SymplecticMap::SymplecticMap(std::array<uint8_t, 4> rows) : rows_(rows) {
    for (uint8_t r : rows_) {
        if (r > 15) {
            throw std::invalid_argument("symplectic map rows hold 4 bits");
        }
    }
}

SymplecticMap SymplecticMap::identity() { return SymplecticMap({0b1000, 0b0100, 0b0010, 0b0001}); }

SymplecticMap SymplecticMap::from_images(std::array<Observable, 4> images) {
    std::array<uint8_t, 4> rows{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            rows[i] |= static_cast<uint8_t>(images[j].bit(i) << (3 - j));
        }
    }
    return SymplecticMap(rows);
}

uint8_t SymplecticMap::apply(uint8_t code) const {
    uint8_t out = 0;
    for (int i = 0; i < 4; i++) {
        out |= static_cast<uint8_t>(__builtin_parity(rows_[i] & code) << (3 - i));
    }
    return out;
}

Observable SymplecticMap::apply(Observable o) const {
    uint8_t c = apply(o.code());
    if (c == 0) {
        throw std::logic_error("singular map sends " + o.str() + " to the identity");
    }
    return Observable::from_code(c);
}

bool SymplecticMap::preserves_form() const {
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            if (form(apply(unit_code(i)), apply(unit_code(j))) != form(unit_code(i), unit_code(j))) {
                return false;
            }
        }
    }
    return true;
}

bool SymplecticMap::is_local() const {
    return (rows_[0] & 0b0011) == 0 && (rows_[1] & 0b0011) == 0 && (rows_[2] & 0b1100) == 0 &&
           (rows_[3] & 0b1100) == 0;
}

SymplecticMap operator*(const SymplecticMap &a, const SymplecticMap &b) {
    std::array<uint8_t, 4> rows{};
    for (int j = 0; j < 4; j++) {
        uint8_t col = a.apply(b.apply(unit_code(j)));
        for (int i = 0; i < 4; i++) {
            rows[i] |= static_cast<uint8_t>(((col >> (3 - i)) & 1u) << (3 - j));
        }
    }
    return SymplecticMap(rows);
}

std::string SymplecticMap::str() const {
    std::string s;
    for (int i = 0; i < 4; i++) {
        if (i) s += '/';
        for (int j = 0; j < 4; j++) s += static_cast<char>('0' + entry(i, j));
    }
    return s;
}

LocalMap LocalMap::identity() { return parse("XYZ", "XYZ"); }

LocalMap LocalMap::parse(const std::string &qubit1, const std::string &qubit2) {
    LocalMap m;
    const std::array<const std::string *, 2> texts = {&qubit1, &qubit2};
    for (int q = 0; q < 2; q++) {
        std::string sorted = *texts[q];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != "XYZ") {
            throw std::invalid_argument("not a permutation of XYZ: " + *texts[q]);
        }
        for (int k = 0; k < 3; k++) {
            char c = (*texts[q])[k];
            m.images[q][k] = c == 'X' ? Letter::X : c == 'Y' ? Letter::Y : Letter::Z;
        }
    }
    return m;
}

Letter LocalMap::apply(int qubit, Letter l) const {
    switch (l) {
        case Letter::I:
            return Letter::I;
        case Letter::X:
            return images[qubit - 1][0];
        case Letter::Y:
            return images[qubit - 1][1];
        case Letter::Z:
            return images[qubit - 1][2];
    }
    return Letter::I;
}

Observable LocalMap::apply(Observable o) const {
    return Observable::from_letters(apply(1, o.letter(1)), apply(2, o.letter(2)));
}

SymplecticMap LocalMap::symplectic() const {
    return SymplecticMap::from_images({apply(Observable::parse("XI")), apply(Observable::parse("ZI")),
                                       apply(Observable::parse("IX")), apply(Observable::parse("IZ"))});
}

std::string LocalMap::str() const {
    std::string s;
    for (int q = 0; q < 2; q++) {
        if (q) s += ", ";
        s += "XYZ->";
        for (Letter l : images[q]) s += letter_char(l);
    }
    return s;
}

std::vector<LocalMap> all_local_maps() {
    std::vector<LocalMap> out;
    std::array<Letter, 3> p1 = {Letter::X, Letter::Y, Letter::Z};
    do {
        std::array<Letter, 3> p2 = {Letter::X, Letter::Y, Letter::Z};
        do {
            out.push_back(LocalMap{{p1, p2}});
        } while (std::next_permutation(p2.begin(), p2.end()));
    } while (std::next_permutation(p1.begin(), p1.end()));
    return out;
}

namespace {

template <typename F>
std::optional<MagicSquare> map_square(F &&f, const MagicSquare &s, std::span<const MagicSquare> squares) {
    std::array<Triad, 3> rows{};
    std::array<Triad, 3> cols{};
    for (int k = 0; k < 3; k++) {
        rows[k] = make_triad(f(s.grid[k][0]), f(s.grid[k][1]), f(s.grid[k][2]));
        cols[k] = make_triad(f(s.grid[0][k]), f(s.grid[1][k]), f(s.grid[2][k]));
    }
    MagicSquare image = orient_square(rows, cols);
    for (const MagicSquare &candidate : squares) {
        if (candidate.observables() == image.observables()) {
            image.id = candidate.id;
            image.partition = candidate.partition;
            return image;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<MagicSquare> apply_local_map(const LocalMap &m, const MagicSquare &s,
                                           std::span<const MagicSquare> squares) {
    return map_square([&](Observable o) { return m.apply(o); }, s, squares);
}

std::optional<MagicSquare> apply_symplectic(const SymplecticMap &m, const MagicSquare &s,
                                            std::span<const MagicSquare> squares) {
    return map_square([&](Observable o) { return m.apply(o); }, s, squares);
}

const std::vector<SymplecticMap> &enumerate_symplectic() {
    static const std::vector<SymplecticMap> maps = [] {
        std::vector<SymplecticMap> out;
        for (uint32_t k = 0; k < (1u << 16); k++) {
            SymplecticMap m({static_cast<uint8_t>(k >> 12), static_cast<uint8_t>((k >> 8) & 15u),
                             static_cast<uint8_t>((k >> 4) & 15u), static_cast<uint8_t>(k & 15u)});
            if (m.preserves_form()) out.push_back(m);
        }
        return out;
    }();
    return maps;
}

std::vector<FoundMap> find_maps(const MagicSquare &from, const MagicSquare &to) {
    auto src = from.observables();
    auto dst = to.observables();
    std::vector<FoundMap> out;
    for (const SymplecticMap &m : enumerate_symplectic()) {
        std::array<Observable, 9> img{};
        for (int k = 0; k < 9; k++) img[k] = m.apply(src[k]);
        std::sort(img.begin(), img.end());
        if (img == dst) out.push_back({m, m.is_local()});
    }
    return out;
}

std::optional<std::pair<Observable, Phase>> identify_pauli(const ScaledMatrix &p) {
    const GaussianInt den{p.den, 0};
    for (Observable o : Observable::all()) {
        Mat4 base = pauli_matrix(o);
        for (int k = 0; k < 4; k++) {
            Phase c = Phase::i_pow(k);
            if ((c.value() * den) * base == p.num) {
                return std::make_pair(o, c);
            }
        }
    }
    return std::nullopt;
}

SymplecticMap symplectic_image(const ScaledMatrix &u) {
    static const std::array<Observable, 4> basis = {Observable::parse("XI"), Observable::parse("ZI"),
                                                    Observable::parse("IX"), Observable::parse("IZ")};
    std::array<Observable, 4> images{};
    for (int j = 0; j < 4; j++) {
        auto id = identify_pauli(conjugate(u, pauli_matrix(basis[j])));
        if (!id) {
            throw std::invalid_argument("unitary does not conjugate " + basis[j].str() + " to a Pauli");
        }
        images[j] = id->first;
    }
    return SymplecticMap::from_images(images);
}

namespace {

Mat2 mat2(int64_t a, int64_t b, int64_t c, int64_t d) {
    return {{{GaussianInt{a, 0}, GaussianInt{b, 0}}, {GaussianInt{c, 0}, GaussianInt{d, 0}}}};
}

std::vector<ScaledMatrix> clifford_generators() {
    const Mat2 id = mat2(1, 0, 0, 1);
    const Mat2 h = mat2(1, 1, 1, -1);
    Mat2 s = mat2(1, 0, 0, 0);
    s[1][1] = GaussianInt{0, 1};
    // (1+i)/2 has modulus 1/sqrt(2), so H stays inside Q(i).
    const GaussianInt half_root{1, 1};
    Mat4 cnot{};
    cnot[0][0] = cnot[1][1] = cnot[2][3] = cnot[3][2] = GaussianInt{1, 0};
    return {
        ScaledMatrix::make(half_root * kron(h, id), 2),
        ScaledMatrix::make(half_root * kron(id, h), 2),
        ScaledMatrix::make(kron(s, id), 1),
        ScaledMatrix::make(kron(id, s), 1),
        ScaledMatrix::make(cnot, 1),
    };
}

const std::map<SymplecticMap, ScaledMatrix> &clifford_table() {
    static const std::map<SymplecticMap, ScaledMatrix> table = [] {
        std::map<SymplecticMap, ScaledMatrix> found;
        auto gens = clifford_generators();
        std::deque<ScaledMatrix> queue;
        found.emplace(SymplecticMap::identity(), ScaledMatrix{});
        queue.push_back(ScaledMatrix{});
        while (!queue.empty()) {
            ScaledMatrix u = queue.front();
            queue.pop_front();
            for (const ScaledMatrix &g : gens) {
                ScaledMatrix v = g * u;
                if (found.emplace(symplectic_image(v), v).second) {
                    queue.push_back(v);
                }
            }
        }
        if (found.size() != enumerate_symplectic().size()) {
            throw ConsistencyError("Clifford generators reach " + std::to_string(found.size()) +
                                   " symplectic maps, expected " + std::to_string(enumerate_symplectic().size()));
        }
        return found;
    }();
    return table;
}

}  // namespace

Lift lift_to_unitary(const SymplecticMap &m) {
    if (!m.preserves_form()) {
        throw std::invalid_argument("map " + m.str() + " is not symplectic");
    }
    Lift lift;
    lift.unitary = clifford_table().at(m);
    if (!(lift.unitary * lift.unitary.adjoint()).is_identity()) {
        throw ConsistencyError("lift of " + m.str() + " is not unitary");
    }
    const auto &all = Observable::all();
    for (size_t k = 0; k < all.size(); k++) {
        auto id = identify_pauli(conjugate(lift.unitary, pauli_matrix(all[k])));
        if (!id || id->first != m.apply(all[k]) || !id->second.is_real()) {
            throw ConsistencyError("lift of " + m.str() + " fails the conjugation check on " + all[k].str());
        }
        lift.signs[k] = id->second.sign();
    }
    return lift;
}

std::vector<std::pair<std::string, ScaledMatrix>> pauli_factors() {
    static constexpr std::array<Letter, 4> letters = {Letter::I, Letter::X, Letter::Y, Letter::Z};
    std::vector<std::pair<std::string, ScaledMatrix>> out;
    for (Letter a : letters) {
        for (Letter b : letters) {
            out.emplace_back(std::string{letter_char(a), letter_char(b)},
                             ScaledMatrix::make(kron(pauli2(a), pauli2(b)), 1));
        }
    }
    return out;
}

ColumnReproduction reproduce_column(const Relabeling &r, const MagicSquare &source, const MagicSquare &target,
                                    const Catalog &catalog) {
    if (source.id != r.source || target.id != r.target) {
        throw std::invalid_argument("relabeling S" + std::to_string(r.source) + "->S" + std::to_string(r.target) +
                                    " does not fit the given squares");
    }
    ColumnReproduction rep;
    rep.target = r.target;
    auto want = square_states(target, catalog).all();
    const std::set<int> target_states(want.begin(), want.end());
    const auto factors = pauli_factors();
    auto image_label = [&](const ScaledMatrix &w, int label) { return catalog.find(w.num * catalog.state(label).coords); };

    for (const FoundMap &f : find_maps(source, target)) {
        rep.candidates++;
        rep.local_candidates += f.local;
        const ScaledMatrix u = lift_to_unitary(f.map).unitary;
        std::set<int> image;
        for (int l = 1; l <= 24; l++) {
            if (auto m = image_label(u, l)) image.insert(*m);
        }
        rep.state_set_matches += image == target_states;
        for (const auto &[name, p] : factors) {
            const ScaledMatrix w = u * p;
            bool exact = true;
            for (int l = 1; l <= 24 && exact; l++) {
                exact = image_label(w, l) == r.apply(l);
            }
            if (exact) {
                rep.exact_matches++;
                if (!rep.exact_map) {
                    rep.exact_map = f.map;
                    rep.exact_pauli = name;
                }
            }
        }
    }
    return rep;
}

}  // namespace kaleido
