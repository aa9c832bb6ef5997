#include "kaleido/apparitions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kaleido/errors.hpp"

namespace kaleido {

std::vector<int> Apparition::states() const {
    std::vector<int> out;
    for (const auto &[label, count] : multiplicity) {
        out.push_back(label);
    }
    return out;
}

namespace {

Apparition carve(const SquareGeometry &g, int kind, std::vector<int> excluded) {
    Apparition a;
    a.square_id = g.square_id;
    a.kind = kind;
    a.excluded = std::move(excluded);
    for (const Tetrad &t : g.tetrads) {
        bool hit = std::any_of(a.excluded.begin(), a.excluded.end(), [&](int x) { return t.contains(x); });
        if (!hit) {
            a.tetrads.push_back(t);
            for (int l : t.labels) a.multiplicity[l]++;
        }
    }
    return a;
}

std::map<int, int> multiplicity_histogram(const Apparition &a) {
    std::map<int, int> h;
    for (const auto &[label, count] : a.multiplicity) h[count]++;
    return h;
}

}  // namespace

std::vector<Apparition> gen18(const SquareGeometry &g) {
    std::vector<Apparition> out;
    for (const auto &[la, lb] : g.pairing.pairs) {
        std::vector<int> ex(la.points.begin(), la.points.end());
        ex.insert(ex.end(), lb.points.begin(), lb.points.end());
        Apparition a = carve(g, 18, ex);
        if (a.tetrads.size() != 9 || multiplicity_histogram(a) != std::map<int, int>{{2, 18}}) {
            throw ConsistencyError("S" + std::to_string(g.square_id) + " partner pair " + la.str() + "/" +
                                   lb.str() + " does not give a 9-tetrad, 18-state apparition");
        }
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Apparition> gen20(const SquareGeometry &g, const Catalog &catalog) {
    std::vector<Apparition> out;
    auto run = [&](const ReyeConfig &from, const ReyeConfig &other) {
        for (int p : from.points) {
            for (const Triangle &t : orthogonal_triangles(p, other, catalog)) {
                Apparition a = carve(g, 20, {p, t.points[0], t.points[1], t.points[2]});
                if (a.tetrads.size() != 11 || multiplicity_histogram(a) != std::map<int, int>{{2, 18}, {4, 2}}) {
                    throw ConsistencyError("S" + std::to_string(g.square_id) + " point " + std::to_string(p) +
                                           " with triangle " + t.str() + " does not give an 11-tetrad apparition");
                }
                out.push_back(std::move(a));
            }
        }
    };
    run(g.row_config, g.column_config);
    run(g.column_config, g.row_config);
    return out;
}

bool parity_check(std::span<const Tetrad> tetrads) {
    if (tetrads.size() % 2 == 0) {
        return false;
    }
    std::map<int, int> mult;
    for (const Tetrad &t : tetrads) {
        for (int l : t.labels) mult[l]++;
    }
    return std::all_of(mult.begin(), mult.end(), [](const auto &kv) { return kv.second % 2 == 0; });
}

bool parity_check(const Apparition &a) { return parity_check(a.tetrads); }

namespace {

struct Encoded {
    int n = 0;
    std::vector<uint64_t> tetrads;
};

Encoded encode(std::span<const int> states, std::span<const Tetrad> tetrads) {
    std::vector<int> pts(states.begin(), states.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() > 64) {
        throw std::invalid_argument("color search supports at most 64 states");
    }
    Encoded e;
    e.n = static_cast<int>(pts.size());
    for (const Tetrad &t : tetrads) {
        uint64_t m = 0;
        for (int l : t.labels) {
            auto it = std::lower_bound(pts.begin(), pts.end(), l);
            if (it == pts.end() || *it != l) {
                throw std::invalid_argument("tetrad " + t.str() + " uses a state outside the given set");
            }
            m |= uint64_t{1} << (it - pts.begin());
        }
        e.tetrads.push_back(m);
    }
    return e;
}

inline bool single_bit(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

uint64_t backtrack(const std::vector<uint64_t> &tetrads, const std::vector<uint64_t> &touching, uint64_t universe,
                   uint64_t green, uint64_t red) {
    // Pick the unsatisfied tetrad with the fewest undetermined states.
    int best = -1;
    int best_free = 5;
    for (size_t i = 0; i < tetrads.size(); i++) {
        if (tetrads[i] & green) continue;
        int free = __builtin_popcountll(tetrads[i] & ~red);
        if (free < best_free) {
            best_free = free;
            best = static_cast<int>(i);
            if (free == 0) return 0;
        }
    }
    if (best < 0) {
        // Every tetrad has its green; states in no tetrad are free either way.
        int loose = __builtin_popcountll(universe & ~green & ~red);
        return uint64_t{1} << loose;
    }
    uint64_t total = 0;
    uint64_t options = tetrads[best] & ~red;
    while (options) {
        uint64_t s = options & (~options + 1);
        options &= options - 1;
        int idx = __builtin_ctzll(s);
        uint64_t forced_red = touching[idx] & ~s;
        if (forced_red & green) continue;
        total += backtrack(tetrads, touching, universe, green | s, red | forced_red);
    }
    return total;
}

}  // namespace

uint64_t color_search_exhaustive(std::span<const int> states, std::span<const Tetrad> tetrads) {
    Encoded e = encode(states, tetrads);
    if (e.n > 30) {
        throw std::invalid_argument("exhaustive color search limited to 30 states");
    }
    const uint64_t limit = uint64_t{1} << e.n;
    uint64_t count = 0;
    for (uint64_t m = 0; m < limit; m++) {
        bool ok = true;
        for (uint64_t t : e.tetrads) {
            if (!single_bit(m & t)) {
                ok = false;
                break;
            }
        }
        count += ok;
    }
    return count;
}

uint64_t color_search_backtracking(std::span<const int> states, std::span<const Tetrad> tetrads) {
    Encoded e = encode(states, tetrads);
    std::vector<uint64_t> touching(e.n, 0);
    for (uint64_t t : e.tetrads) {
        for (int i = 0; i < e.n; i++) {
            if ((t >> i) & 1u) touching[i] |= t;
        }
    }
    uint64_t universe = e.n == 64 ? ~uint64_t{0} : (uint64_t{1} << e.n) - 1;
    return backtrack(e.tetrads, touching, universe, 0, 0);
}

uint64_t color_search(std::span<const int> states, std::span<const Tetrad> tetrads) {
    std::set<int> distinct(states.begin(), states.end());
    return distinct.size() <= 20 ? color_search_exhaustive(states, tetrads)
                                 : color_search_backtracking(states, tetrads);
}

std::vector<Apparition> enumerate_all(std::span<const SquareGeometry> geometries, const Catalog &catalog) {
    std::vector<Apparition> out;
    for (const SquareGeometry &g : geometries) {
        auto a18 = gen18(g);
        auto a20 = gen20(g, catalog);
        std::move(a18.begin(), a18.end(), std::back_inserter(out));
        std::move(a20.begin(), a20.end(), std::back_inserter(out));
    }
    std::set<std::vector<Tetrad>> seen;
    for (const Apparition &a : out) {
        if (!parity_check(a)) {
            throw ConsistencyError("apparition of S" + std::to_string(a.square_id) + " fails the parity check");
        }
        if (!seen.insert(a.key()).second) {
            throw ConsistencyError("duplicate apparition in S" + std::to_string(a.square_id));
        }
    }
    return out;
}

std::vector<bool> minimality_probe(const Apparition &a) {
    std::vector<bool> out;
    for (size_t drop = 0; drop < a.tetrads.size(); drop++) {
        std::vector<Tetrad> rest;
        for (size_t i = 0; i < a.tetrads.size(); i++) {
            if (i != drop) rest.push_back(a.tetrads[i]);
        }
        auto st = a.states();
        out.push_back(color_search(st, rest) > 0);
    }
    return out;
}

}  // namespace kaleido
