#include "kaleido/designs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kaleido/states.hpp"
#include "kaleido/transforms.hpp"

namespace kaleido {

bool QbdSymbol::identities_hold() const {
    int sum = 0;
    for (const auto &[lambda, x] : pairs) sum += lambda * x;
    return b * k == v * r && r * (k - 1) == sum;
}

std::string QbdSymbol::str() const {
    std::string s = "{" + std::to_string(b) + "," + std::to_string(v) + "," + std::to_string(r) + "," +
                    std::to_string(k) + ";";
    for (size_t i = 0; i < pairs.size(); i++) {
        s += (i ? ",(" : "(") + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return s + "}";
}

QbdSymbol qbd_profile(std::span<const int> points, std::span<const std::vector<int>> blocks) {
    std::vector<int> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty() || blocks.empty()) {
        throw DesignError("a design needs points and blocks");
    }
    auto index = [&](int p) {
        auto it = std::lower_bound(pts.begin(), pts.end(), p);
        if (it == pts.end() || *it != p) {
            throw DesignError("block member " + std::to_string(p) + " is not a point");
        }
        return static_cast<size_t>(it - pts.begin());
    };

    const size_t n = pts.size();
    const size_t k = blocks.front().size();
    std::vector<int> replication(n, 0);
    std::vector<std::vector<int>> together(n, std::vector<int>(n, 0));
    for (const auto &block : blocks) {
        if (block.size() != k) {
            throw DesignError("blocks of sizes " + std::to_string(k) + " and " + std::to_string(block.size()));
        }
        std::vector<size_t> idx;
        for (int p : block) idx.push_back(index(p));
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
            throw DesignError("a block repeats a point");
        }
        for (size_t a : idx) {
            replication[a]++;
            for (size_t c : idx) {
                if (a != c) together[a][c]++;
            }
        }
    }

    QbdSymbol sym;
    sym.b = static_cast<int>(blocks.size());
    sym.v = static_cast<int>(n);
    sym.k = static_cast<int>(k);
    sym.r = replication[0];
    for (size_t p = 0; p < n; p++) {
        if (replication[p] != sym.r) {
            throw DesignError("point " + std::to_string(pts[p]) + " lies in " + std::to_string(replication[p]) +
                              " blocks, point " + std::to_string(pts[0]) + " in " + std::to_string(sym.r));
        }
        std::map<int, int> hist;
        for (size_t q = 0; q < n; q++) {
            if (q != p && together[p][q] > 0) hist[together[p][q]]++;
        }
        std::vector<std::pair<int, int>> pairs(hist.begin(), hist.end());
        if (p == 0) {
            sym.pairs = pairs;
        } else if (pairs != sym.pairs) {
            throw DesignError("co-occurrence profile of point " + std::to_string(pts[p]) + " differs from point " +
                              std::to_string(pts[0]));
        }
    }
    if (!sym.identities_hold()) {
        throw DesignError("symbol " + sym.str() + " violates bk = vr or r(k-1) = sum lambda x");
    }
    return sym;
}

std::vector<std::vector<int>> as_blocks(std::span<const Triad> triads) {
    std::vector<std::vector<int>> out;
    for (const Triad &t : triads) {
        out.push_back({t.members[0].code(), t.members[1].code(), t.members[2].code()});
    }
    return out;
}

std::vector<std::vector<int>> as_blocks(std::span<const Tetrad> tetrads) {
    std::vector<std::vector<int>> out;
    for (const Tetrad &t : tetrads) out.emplace_back(t.labels.begin(), t.labels.end());
    return out;
}

bool unbiased(const std::array<Vec4, 4> &a, const std::array<Vec4, 4> &b) {
    for (const Vec4 &x : a) {
        for (const Vec4 &y : b) {
            if (4 * inner_product(x, y).norm() != norm2(x) * norm2(y)) return false;
        }
    }
    return true;
}

namespace {

size_t triad_index(const Triad &t) {
    const auto &all = enumerate_triads();
    return static_cast<size_t>(std::lower_bound(all.begin(), all.end(), t) - all.begin());
}

const std::array<std::array<bool, 15>, 15> &unbiased_table() {
    static const auto table = [] {
        std::array<std::array<bool, 15>, 15> u{};
        const auto &all = enumerate_triads();
        std::vector<std::array<Vec4, 4>> bases;
        for (const Triad &t : all) bases.push_back(eigenbasis(t));
        for (size_t i = 0; i < 15; i++) {
            for (size_t j = 0; j < 15; j++) u[i][j] = unbiased(bases[i], bases[j]);
        }
        return u;
    }();
    return table;
}

bool pairwise_unbiased(std::span<const Triad> ts) {
    const auto &u = unbiased_table();
    for (size_t a = 0; a < ts.size(); a++) {
        for (size_t b = a + 1; b < ts.size(); b++) {
            if (!u[triad_index(ts[a])][triad_index(ts[b])]) return false;
        }
    }
    return true;
}

bool extendable(std::span<const Triad> ts) {
    for (const Triad &t : enumerate_triads()) {
        if (std::find(ts.begin(), ts.end(), t) != ts.end()) continue;
        std::vector<Triad> more(ts.begin(), ts.end());
        more.push_back(t);
        if (pairwise_unbiased(more)) return true;
    }
    return false;
}

bool maximal_family(const TriadFamily &f) {
    std::set<Triad> distinct(f.begin(), f.end());
    return distinct.size() == 5 && pairwise_unbiased(f) && !extendable(f);
}

std::optional<TriadFamily> parse_family(const golden::MubFamily &row) {
    TriadFamily f{};
    try {
        for (int i = 0; i < 5; i++) {
            f[i] = make_triad(Observable::parse(row[i][0]), Observable::parse(row[i][1]), Observable::parse(row[i][2]));
        }
    } catch (const std::invalid_argument &) {
        return std::nullopt;
    }
    std::sort(f.begin(), f.end());
    return f;
}

std::string family_str(const TriadFamily &f) {
    std::string s;
    for (const Triad &t : f) s += t.str();
    return s;
}

TriadFamily map_family(const LocalMap &m, const TriadFamily &f) {
    TriadFamily out{};
    for (int i = 0; i < 5; i++) {
        out[i] = make_triad(m.apply(f[i].members[0]), m.apply(f[i].members[1]), m.apply(f[i].members[2]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool unbiased(const Triad &a, const Triad &b) { return unbiased_table()[triad_index(a)][triad_index(b)]; }

bool all_pass(std::span<const Check> checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::vector<TriadFamily> maximal_mub_families() {
    const auto &all = enumerate_triads();
    std::vector<TriadFamily> out;
    std::array<int, 5> idx = {0, 1, 2, 3, 4};
    // Walk all 5-subsets of the 15 triads in lexicographic order.
    while (true) {
        TriadFamily f{};
        for (int i = 0; i < 5; i++) f[i] = all[idx[i]];
        if (maximal_family(f)) out.push_back(f);
        int i = 4;
        while (i >= 0 && idx[i] == 10 + i) i--;
        if (i < 0) break;
        idx[i]++;
        for (int j = i + 1; j < 5; j++) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

MubReport verify_mub_sets(const golden::Tables &tables) {
    MubReport rep;
    auto check = [&](std::string name, bool pass, std::string detail = "") {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    for (size_t r = 0; r < tables.mub_families.size(); r++) {
        const std::string row = "family " + std::to_string(r + 1);
        auto f = parse_family(tables.mub_families[r]);
        if (!f) {
            check(row + " parses as five triads", false, "a listed triple is not a commuting triad");
            continue;
        }
        rep.families.push_back(*f);
        std::set<Triad> distinct(f->begin(), f->end());
        check(row + " has 5 distinct triads", distinct.size() == 5, family_str(*f));
        check(row + " is pairwise unbiased", pairwise_unbiased(*f), family_str(*f));
        check(row + " admits no sixth unbiased triad", !extendable(*f), family_str(*f));
    }

    std::set<TriadFamily> distinct(rep.families.begin(), rep.families.end());
    check("six distinct families", rep.families.size() == 6 && distinct.size() == 6);

    std::map<Triad, int> uses;
    for (const TriadFamily &f : rep.families) {
        for (const Triad &t : f) uses[t]++;
    }
    bool twice = uses.size() == 15 &&
                 std::all_of(uses.begin(), uses.end(), [](const auto &kv) { return kv.second == 2; });
    check("every triad lies in exactly two families", twice);

    std::vector<int> points;
    for (const Triad &t : enumerate_triads()) points.push_back(static_cast<int>(triad_index(t)));
    std::vector<std::vector<int>> blocks;
    for (const TriadFamily &f : rep.families) {
        std::vector<int> b;
        for (const Triad &t : f) b.push_back(static_cast<int>(triad_index(t)));
        blocks.push_back(b);
    }
    try {
        rep.cover = qbd_profile(points, blocks);
        check("families form the design {6,15,2,5;(1,8)}",
              *rep.cover == QbdSymbol{6, 15, 2, 5, {{1, 8}}}, rep.cover->str());
    } catch (const DesignError &e) {
        check("families form the design {6,15,2,5;(1,8)}", false, e.what());
    }

    rep.computed_families = maximal_mub_families();
    std::vector<TriadFamily> shipped(distinct.begin(), distinct.end());
    check("shipped families equal the computed maximal families", shipped == rep.computed_families,
          std::to_string(rep.computed_families.size()) + " computed");

    // A raw reference row that is not a maximal family must have exactly one
    // single-triad replacement that is, and it must be the shipped row.
    for (size_t r = 0; r < tables.mub_families_printed.size(); r++) {
        auto printed = parse_family(tables.mub_families_printed[r]);
        if (printed && maximal_family(*printed)) continue;
        rep.printed_rows_failing.push_back(static_cast<int>(r) + 1);
        std::vector<TriadFamily> repairs;
        for (int pos = 0; pos < 5; pos++) {
            for (const Triad &t : enumerate_triads()) {
                golden::MubFamily candidate = tables.mub_families_printed[r];
                auto parsed = parse_family(candidate);
                TriadFamily f{};
                if (parsed) {
                    // Replace the triad at sorted position `pos`.
                    f = *parsed;
                    f[pos] = t;
                } else {
                    // The unparsable triple is the one to replace.
                    bool ok = true;
                    for (int i = 0; i < 5 && ok; i++) {
                        if (i == pos) {
                            f[i] = t;
                            continue;
                        }
                        try {
                            f[i] = make_triad(Observable::parse(candidate[i][0]), Observable::parse(candidate[i][1]),
                                              Observable::parse(candidate[i][2]));
                        } catch (const std::invalid_argument &) {
                            ok = false;
                        }
                    }
                    if (!ok) continue;
                }
                std::sort(f.begin(), f.end());
                if (maximal_family(f) && std::find(repairs.begin(), repairs.end(), f) == repairs.end()) {
                    repairs.push_back(f);
                }
            }
        }
        auto shipped_row = parse_family(tables.mub_families[r]);
        check("raw reference row " + std::to_string(r + 1) + " has a unique one-triad repair equal to the shipped row",
              repairs.size() == 1 && shipped_row && repairs.front() == *shipped_row,
              std::to_string(repairs.size()) + " repairs");
    }

    const auto locals = all_local_maps();
    bool related = true;
    std::string missing;
    for (size_t a = 0; a < rep.families.size(); a++) {
        for (size_t b = 0; b < rep.families.size(); b++) {
            bool any = std::any_of(locals.begin(), locals.end(),
                                   [&](const LocalMap &m) { return map_family(m, rep.families[a]) == rep.families[b]; });
            if (!any && missing.empty()) {
                missing = "families " + std::to_string(a + 1) + " and " + std::to_string(b + 1);
            }
            related = related && any;
        }
    }
    check("any two families are related by a local map", related, missing);

    const auto &fams = rep.computed_families;
    for (size_t a = 0; a < fams.size() && !rep.disjoint_partition; a++) {
        for (size_t b = a + 1; b < fams.size() && !rep.disjoint_partition; b++) {
            for (size_t c = b + 1; c < fams.size() && !rep.disjoint_partition; c++) {
                std::set<Triad> u;
                for (size_t i : {a, b, c}) u.insert(fams[i].begin(), fams[i].end());
                if (u.size() == 15) {
                    rep.disjoint_partition = std::array<int, 3>{static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                                                                static_cast<int>(c) + 1};
                }
            }
        }
    }
    return rep;
}

SquareMubReport square_mub_relations(const MagicSquare &s) {
    SquareMubReport rep;
    rep.square_id = s.id;
    rep.rows_unbiased = unbiased(s.row(0), s.row(1)) && unbiased(s.row(0), s.row(2)) && unbiased(s.row(1), s.row(2));
    rep.columns_unbiased = unbiased(s.column(0), s.column(1)) && unbiased(s.column(0), s.column(2)) &&
                           unbiased(s.column(1), s.column(2));
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) rep.row_column_unbiased_pairs += unbiased(s.row(i), s.column(j));
    }
    return rep;
}

}  // namespace kaleido
