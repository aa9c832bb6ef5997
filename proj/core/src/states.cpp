#include "kaleido/states.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kaleido/errors.hpp"

namespace kaleido {

std::string coords_str(const Vec4 &v) {
    std::ostringstream out;
    out << "(" << v[0] << "," << v[1] << "," << v[2] << "," << v[3] << ")";
    return out.str();
}

std::string StateVec::str() const { return coords_str(coords); }

Vec4 canonicalize(const Vec4 &v) {
    auto first = std::find_if(v.begin(), v.end(), [](GaussianInt z) { return !z.is_zero(); });
    if (first == v.end()) {
        throw std::invalid_argument("the zero vector is not a state");
    }
    GaussianInt rotate = first->conj();
    Vec4 w{};
    int64_t g = 0;
    for (int i = 0; i < 4; i++) {
        w[i] = v[i] * rotate;
        g = std::gcd(g, std::gcd(w[i].re, w[i].im));
    }
    for (auto &z : w) {
        z = {z.re / g, z.im / g};
    }
    return w;
}

GaussianInt inner_product(const Vec4 &a, const Vec4 &b) {
    GaussianInt s;
    for (int i = 0; i < 4; i++) {
        s += a[i].conj() * b[i];
    }
    return s;
}

int64_t norm2(const Vec4 &v) { return inner_product(v, v).re; }

bool projective_equal(const Vec4 &a, const Vec4 &b) {
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::pair<int64_t, int64_t> overlap_ratio(const Vec4 &a, const Vec4 &b) {
    int64_t num = inner_product(a, b).norm();
    int64_t den = norm2(a) * norm2(b);
    int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

std::array<Vec4, 4> eigenbasis(const Triad &t) {
    const Mat4 id = identity4();
    const Mat4 o1 = pauli_matrix(t.members[0]);
    const Mat4 o2 = pauli_matrix(t.members[1]);
    std::array<Vec4, 4> out{};
    int n = 0;
    for (int e1 : {1, -1}) {
        for (int e2 : {1, -1}) {
            // 4P = (I + e1 O1)(I + e2 O2); the third member's eigenvalue follows from the triad sign.
            Mat4 p = (id + GaussianInt(e1) * o1) * (id + GaussianInt(e2) * o2);
            std::array<Vec4, 4> cols{};
            for (int j = 0; j < 4; j++) {
                for (int i = 0; i < 4; i++) {
                    cols[j][i] = p[i][j];
                }
            }
            if (rank(cols) != 1) {
                throw ConsistencyError("projector for " + t.str() + " does not have rank 1");
            }
            auto col = std::find_if(cols.begin(), cols.end(), [](const Vec4 &c) {
                return std::any_of(c.begin(), c.end(), [](GaussianInt z) { return !z.is_zero(); });
            });
            out[n++] = canonicalize(*col);
        }
    }
    return out;
}

Signature eigenvalue_signature(const Vec4 &v, const Triad &t) {
    Signature s;
    for (int k = 0; k < 3; k++) {
        Vec4 w = pauli_matrix(t.members[k]) * v;
        if (w == v) {
            s.signs[k] = 1;
        } else {
            Vec4 neg = v;
            for (auto &z : neg) z = -z;
            if (w != neg) {
                throw std::invalid_argument(coords_str(v) + " is not an eigenstate of " + t.members[k].str());
            }
            s.signs[k] = -1;
        }
    }
    return s;
}

const StateVec &Catalog::state(int label) const {
    if (label < 1 || label > kSize) {
        throw std::out_of_range("state label out of range: " + std::to_string(label));
    }
    return states_[label - 1];
}

std::array<int, 4> Catalog::labels_of(const Triad &t) const {
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r] == t) {
            int base = static_cast<int>(4 * r) + 1;
            return {base, base + 1, base + 2, base + 3};
        }
    }
    throw std::invalid_argument("unknown triad " + t.str());
}

const Triad &Catalog::triad_of(int label) const {
    state(label);
    return rows_[(label - 1) / 4];
}

std::optional<int> Catalog::find(const Vec4 &v) const {
    for (const StateVec &s : states_) {
        if (projective_equal(s.coords, v)) {
            return s.label;
        }
    }
    return std::nullopt;
}

bool Catalog::orthogonal(int a, int b) const {
    state(a);
    state(b);
    return (orth_[a] >> b) & 1u;
}

bool Catalog::quarter_overlap(int a, int b) const {
    auto [num, den] = overlap_ratio(state(a).coords, state(b).coords);
    return num == 1 && den == 4;
}

Catalog build_catalog(const golden::Tables &tables) {
    if (tables.states.size() != 15) {
        throw ConsistencyError("state table must have 15 rows");
    }
    Catalog c;
    for (size_t r = 0; r < tables.states.size(); r++) {
        const golden::StateRow &row = tables.states[r];
        Triad t = make_triad(Observable::parse(row.triad[0]), Observable::parse(row.triad[1]),
                             Observable::parse(row.triad[2]));
        if ((t.sign == -1) != row.starred) {
            throw ConsistencyError("row " + std::to_string(r + 1) + ": star mark disagrees with the sign of " +
                                   t.str());
        }
        std::array<Vec4, 4> computed = eigenbasis(t);
        std::array<bool, 4> used{};
        for (int k = 0; k < 4; k++) {
            const Vec4 &ref = row.states[k];
            int label = static_cast<int>(4 * r) + k + 1;
            int match = -1;
            for (int j = 0; j < 4; j++) {
                if (!used[j] && projective_equal(computed[j], ref)) {
                    match = j;
                }
            }
            if (match < 0) {
                throw ConsistencyError("state " + std::to_string(label) + " = " + coords_str(ref) +
                                       " is not an eigenstate of " + t.str());
            }
            if (computed[match] != ref) {
                throw ConsistencyError("state " + std::to_string(label) + ": canonical form " +
                                       coords_str(computed[match]) + " differs from table " + coords_str(ref));
            }
            used[match] = true;
            c.states_.push_back(StateVec{computed[match], label});
        }
        c.rows_.push_back(t);
        c.starred_.push_back(row.starred);
    }
    std::vector<Triad> sorted_rows = c.rows_;
    std::sort(sorted_rows.begin(), sorted_rows.end());
    if (sorted_rows != enumerate_triads()) {
        throw ConsistencyError("state table rows do not cover the 15 triads exactly once");
    }
    c.orth_.assign(Catalog::kSize + 1, 0);
    for (int a = 1; a <= Catalog::kSize; a++) {
        for (int b = 1; b <= Catalog::kSize; b++) {
            if (a != b && projective_equal(c.state(a).coords, c.state(b).coords)) {
                throw ConsistencyError("states " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
            }
            if (inner_product(c.state(a).coords, c.state(b).coords).is_zero()) {
                c.orth_[a] |= uint64_t{1} << b;
            }
        }
    }
    return c;
}

}  // namespace kaleido
