#include "kaleido_cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "kaleido/apparitions.hpp"
#include "kaleido/designs.hpp"
#include "kaleido/errors.hpp"
#include "kaleido/kaleidoscope.hpp"
#include "kaleido/transforms.hpp"

namespace kaleido::cli {

void VerificationReport::check(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

void VerificationReport::count(std::string name, int64_t value) { counts.emplace_back(std::move(name), value); }

const std::vector<std::string> &scopes() {
    static const std::vector<std::string> s = {"all",  "observables", "squares",   "states",
                                               "reye", "apparitions", "designs", "transforms"};
    return s;
}

namespace {

std::string sq(int id) { return "S" + std::to_string(id); }

void observables_suite(VerificationReport &r) {
    const auto &all = Observable::all();
    r.count("observables", static_cast<int64_t>(all.size()));

    std::map<Observable, std::pair<HexVertex, HexVertex>> edge_of;
    const auto &v = hex_vertices();
    for (int a = 0; a < 6; a++) {
        for (int b = a + 1; b < 6; b++) edge_of[edge_observable(v[a], v[b])] = {v[a], v[b]};
    }
    r.check("hexagon edges give 15 distinct observables", edge_of.size() == 15);
    int exceptions = 0;
    int pairs = 0;
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = i + 1; j < all.size(); j++) {
            auto [a1, a2] = edge_of[all[i]];
            auto [b1, b2] = edge_of[all[j]];
            bool disjoint = a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2;
            exceptions += commutes(all[i], all[j]) != disjoint;
            pairs++;
        }
    }
    r.check("commutation matches hexagon edge disjointness", exceptions == 0,
            std::to_string(pairs) + " pairs, " + std::to_string(exceptions) + " exceptions");

    int mismatches = 0;
    for (Observable a : all) {
        for (Observable b : all) {
            Product p = multiply(a, b);
            Mat4 got = p.result ? p.phase.value() * pauli_matrix(*p.result) : p.phase.value() * identity4();
            mismatches += got != pauli_matrix(a) * pauli_matrix(b);
        }
    }
    r.check("multiply agrees with matrix products", mismatches == 0, "225 ordered pairs");

    const auto &triads = enumerate_triads();
    r.count("triads", static_cast<int64_t>(triads.size()));
    int negative = 0;
    bool negative_two_body = true;
    for (const Triad &t : triads) {
        if (t.sign < 0) {
            negative++;
            negative_two_body = negative_two_body && std::all_of(t.members.begin(), t.members.end(),
                                                                 [](Observable o) { return o.weight() == 2; });
        }
    }
    r.count("negative_triads", negative);
    r.check("15 triads", triads.size() == 15);
    r.check("3 triads with product -I, all two-body", negative == 3 && negative_two_body);
    bool three_each = std::all_of(all.begin(), all.end(), [&](Observable o) {
        return std::count_if(triads.begin(), triads.end(), [&](const Triad &t) { return t.contains(o); }) == 3;
    });
    r.check("every observable lies in 3 triads", three_each);

    int commuting_quads = 0;
    for (size_t a = 0; a < 15; a++)
        for (size_t b = a + 1; b < 15; b++)
            for (size_t c = b + 1; c < 15; c++)
                for (size_t d = c + 1; d < 15; d++) {
                    std::array<Observable, 4> q = {all[a], all[b], all[c], all[d]};
                    bool ok = true;
                    for (int x = 0; x < 4 && ok; x++)
                        for (int y = x + 1; y < 4 && ok; y++) ok = commutes(q[x], q[y]);
                    commuting_quads += ok;
                }
    r.check("no four observables commute pairwise", commuting_quads == 0);
}

void squares_suite(const Kaleidoscope &k, VerificationReport &r) {
    r.count("partitions", static_cast<int64_t>(enumerate_triangle_partitions().size()));
    r.count("squares", static_cast<int64_t>(k.squares().size()));
    r.check("10 squares from the triangle partitions", k.squares().size() == 10);
    for (const MagicSquare &s : k.squares()) {
        MagicReport m = verify_magic(s);
        r.check(s.name() + " is magic", m.odd_minus_count && m.satisfying_assignments == 0,
                "negative lines " + std::to_string(s.negative_lines()) + ", " + std::to_string(m.satisfying_assignments) +
                    "/512 assignments");
    }
    bool pairs_ok = true;
    std::string bad;
    for (int i = 1; i <= 10; i++) {
        for (int j = i + 1; j <= 10; j++) {
            const MagicSquare &a = k.square(i);
            const MagicSquare &b = k.square(j);
            auto bl = b.lines();
            int rows = 0;
            int cols = 0;
            for (int x = 0; x < 3; x++) {
                rows += std::find(bl.begin(), bl.end(), a.row(x)) != bl.end();
                cols += std::find(bl.begin(), bl.end(), a.column(x)) != bl.end();
            }
            auto sa = k.geometry(i).states.all();
            auto sb = k.geometry(j).states.all();
            std::vector<int> common;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
            bool ok = rows == 1 && cols == 1 && common.size() == 8;
            if (!ok && bad.empty()) bad = sq(i) + "/" + sq(j);
            pairs_ok = pairs_ok && ok;
        }
    }
    r.check("any two squares share one row triad, one column triad and 8 states", pairs_ok, bad);
}

void states_suite(const Kaleidoscope &k, VerificationReport &r) {
    const Catalog &c = k.catalog();
    r.count("states", static_cast<int64_t>(c.states().size()));
    bool canonical = true;
    bool idempotent = true;
    bool signatures = true;
    bool projective = true;
    for (size_t row = 0; row < c.rows().size(); row++) {
        const Triad &t = c.rows()[row];
        std::set<std::array<int, 3>> seen;
        for (int i = 0; i < 4; i++) {
            const StateVec &s = c.state(static_cast<int>(4 * row + i + 1));
            const Vec4 &ref = k.tables().states[row].states[i];
            canonical = canonical && coords_str(canonicalize(s.coords)) == coords_str(ref);
            idempotent = idempotent && canonicalize(canonicalize(s.coords)) == canonicalize(s.coords);
            projective = projective && projective_equal(s.coords, ref);
            Signature sig = eigenvalue_signature(s.coords, t);
            signatures = signatures && seen.insert(sig.signs).second && sig.product() == t.sign &&
                         (t.sign < 0) == static_cast<bool>(c.starred()[row]);
        }
    }
    r.check("computed eigenbases match the reference table projectively", projective);
    r.check("canonical forms are byte-identical to the reference table", canonical);
    r.check("canonicalization is idempotent", idempotent);
    r.check("signatures unique within each row; products equal the triad sign", signatures);

    bool orth_rows = true;
    for (int row = 0; row < 15; row++)
        for (int a = 1; a <= 4; a++)
            for (int b = a + 1; b <= 4; b++) orth_rows = orth_rows && c.orthogonal(4 * row + a, 4 * row + b);
    r.check("each row is an orthogonal basis", orth_rows);
}

void reye_suite(const Kaleidoscope &k, VerificationReport &r) {
    const golden::Tables &g = k.tables();
    int64_t lines = 0;
    bool shape = true;
    for (const SquareGeometry &geo : k.geometries()) {
        for (const ReyeConfig *cfg : {&geo.row_config, &geo.column_config}) {
            lines += static_cast<int64_t>(cfg->lines.size());
            std::map<int, int> per_point;
            for (const Line &l : cfg->lines)
                for (int p : l.points) per_point[p]++;
            shape = shape && cfg->lines.size() == 16 && per_point.size() == 12 &&
                    std::all_of(per_point.begin(), per_point.end(), [](const auto &kv) { return kv.second == 4; });
        }
        shape = shape && geo.pairing.pairs.size() == 16 && geo.tetrads.size() == 24;
    }
    r.count("lines", lines);
    r.check("every square has two Reye configurations, 16 partner pairs and 24 tetrads", shape);

    const SquareGeometry &s1 = k.geometry(1);
    std::vector<golden::LabelQuad> tetrads;
    for (const Tetrad &t : s1.tetrads) tetrads.push_back(t.labels);
    auto ref_tetrads = g.square1_tetrads;
    std::sort(ref_tetrads.begin(), ref_tetrads.end());
    r.check("S1 tetrads equal the reference list", tetrads == ref_tetrads);

    std::vector<std::pair<golden::LabelTriple, golden::LabelTriple>> pairing;
    for (const auto &[a, b] : s1.pairing.pairs) pairing.emplace_back(a.points, b.points);
    auto ref_pairs = g.square1_partner_lines;
    std::sort(pairing.begin(), pairing.end());
    std::sort(ref_pairs.begin(), ref_pairs.end());
    r.check("S1 partner lines equal the reference pairs", pairing == ref_pairs);

    std::map<int, std::vector<golden::LabelTriple>> computed;
    for (const auto &[from, other] : {std::pair{&s1.row_config, &s1.column_config},
                                      std::pair{&s1.column_config, &s1.row_config}}) {
        for (int p : from->points)
            for (const Triangle &t : orthogonal_triangles(p, *other, k.catalog())) computed[p].push_back(t.points);
    }
    std::map<int, std::vector<golden::LabelTriple>> reference;
    for (const golden::PointTriangles &row : g.square1_point_triangles) {
        auto ts = std::vector<golden::LabelTriple>(row.triangles.begin(), row.triangles.end());
        for (auto &t : ts) std::sort(t.begin(), t.end());
        std::sort(ts.begin(), ts.end());
        reference[row.point] = ts;
    }
    for (auto &[p, ts] : computed) std::sort(ts.begin(), ts.end());
    r.check("S1 point/triangle table equals the reference table", computed == reference,
            std::to_string(computed.size()) + " points");

    r.count("tetrads", static_cast<int64_t>(k.tetrads().size()));
    std::vector<golden::LabelQuad> all;
    for (const Tetrad &t : k.tetrads()) all.push_back(t.labels);
    auto ref_all = g.all_tetrads;
    for (auto &t : ref_all) std::sort(t.begin(), t.end());
    std::sort(ref_all.begin(), ref_all.end());
    r.check("105 tetrads over the 60 states equal the reference list", all.size() == 105 && all == ref_all);
    std::map<int, int> per_state;
    for (const Tetrad &t : k.tetrads())
        for (int l : t.labels) per_state[l]++;
    r.check("every state lies in 7 tetrads",
            per_state.size() == 60 &&
                std::all_of(per_state.begin(), per_state.end(), [](const auto &kv) { return kv.second == 7; }));
}

void apparitions_suite(const Kaleidoscope &k, VerificationReport &r) {
    const auto &apps = k.apparitions();
    r.count("apparitions", static_cast<int64_t>(apps.size()));
    std::map<std::pair<int, int>, int> per;
    for (const Apparition &a : apps) per[{a.square_id, a.kind}]++;
    bool shape = true;
    for (int id = 1; id <= 10; id++) shape = shape && per[{id, 18}] == 16 && per[{id, 20}] == 96;
    r.check("16 kind-18 and 96 kind-20 apparitions per square", shape);
    std::set<std::vector<Tetrad>> distinct;
    for (const Apparition &a : apps) distinct.insert(a.key());
    r.check("1120 distinct apparitions", apps.size() == 1120 && distinct.size() == 1120);
    r.check("every apparition passes the parity check",
            std::all_of(apps.begin(), apps.end(), [](const Apparition &a) { return parity_check(a); }));

    int colorable = 0;
    for (const Apparition &a : apps) {
        auto st = a.states();
        colorable += color_search(st, a.tetrads) != 0;
    }
    r.check("no apparition admits a coloring (exhaustive search)", colorable == 0,
            std::to_string(colorable) + " colorable");

    std::vector<int> labels;
    for (int l = 1; l <= Catalog::kSize; l++) labels.push_back(l);
    uint64_t full = color_search_backtracking(labels, k.tetrads());
    r.check("the 105-tetrad system admits no coloring (backtracking)", full == 0);

    int critical = 0;
    int probed = 0;
    for (const Apparition &a : apps) {
        if (a.square_id != 1 || a.kind != 18) continue;
        for (bool colorable_after : minimality_probe(a)) {
            probed++;
            critical += colorable_after;
        }
    }
    r.notes.push_back("S1 kind-18 minimality probe: " + std::to_string(critical) + " of " + std::to_string(probed) +
                      " single-tetrad removals leave a colorable set");
}

void designs_suite(const Kaleidoscope &k, VerificationReport &r) {
    auto profile = [&](const std::string &name, std::span<const int> points, const std::vector<std::vector<int>> &blocks,
                       const QbdSymbol &want) {
        try {
            QbdSymbol got = qbd_profile(points, blocks);
            r.check(name + " is the design " + want.str(), got == want && got.identities_hold(), got.str());
        } catch (const DesignError &e) {
            r.check(name + " is the design " + want.str(), false, e.what());
        }
    };
    std::vector<int> codes;
    for (Observable o : Observable::all()) codes.push_back(o.code());
    profile("observables and triads", codes, as_blocks(enumerate_triads()), {15, 15, 3, 3, {{1, 6}}});
    for (const SquareGeometry &g : k.geometries()) {
        auto st = g.states.all();
        profile(sq(g.square_id) + " states and tetrads", st, as_blocks(g.tetrads), {24, 24, 4, 4, {{1, 6}, {2, 3}}});
    }
    std::vector<int> labels;
    for (int l = 1; l <= Catalog::kSize; l++) labels.push_back(l);
    profile("60 states and 105 tetrads", labels, as_blocks(k.tetrads()), {105, 60, 7, 4, {{1, 12}, {3, 3}}});

    MubReport mub = verify_mub_sets(k.tables());
    for (const Check &c : mub.checks) r.checks.push_back(c);
    r.count("mub_families", static_cast<int64_t>(mub.computed_families.size()));
    std::string failing;
    for (int row : mub.printed_rows_failing) failing += (failing.empty() ? "" : ",") + std::to_string(row);
    r.notes.push_back("raw reference MUB rows that are not maximal families: " + (failing.empty() ? "none" : failing));
    r.notes.push_back(std::string("partition of the 15 triads into three disjoint maximal families: ") +
                      (mub.disjoint_partition ? "exists" : "does not exist"));

    for (const MagicSquare &s : k.squares()) {
        SquareMubReport m = square_mub_relations(s);
        r.check(s.name() + " rows and columns are each mutually unbiased, rows against columns never", m.passed(),
                std::to_string(m.row_column_unbiased_pairs) + "/9 row-column pairs unbiased");
    }
}

void transforms_suite(const Kaleidoscope &k, VerificationReport &r) {
    for (const Relabeling &rel : relabelings(k.tables())) {
        RelabelingReport rep = apply_relabeling(rel, k.geometry(1), k.geometry(rel.target));
        r.check("relabeling S1->" + sq(rel.target) + " carries tetrads onto tetrads", rep.passed(),
                std::to_string(rep.fixed_points) + " fixed states" +
                    (rep.first_mismatch ? ", first mismatch " + rep.first_mismatch->str() : ""));
    }
    for (const golden::LocalMapRow &row : k.tables().local_maps) {
        std::string name = "local map S1->" + sq(row.target);
        try {
            LocalMap m = LocalMap::parse(row.images[0], row.images[1]);
            auto image = apply_local_map(m, k.square(1), k.squares());
            r.check(name, image && image->id == row.target, image ? image->name() : "not a square");
        } catch (const std::invalid_argument &e) {
            r.check(name, false, e.what());
        }
    }

    const auto &group = enumerate_symplectic();
    r.count("symplectic_maps", static_cast<int64_t>(group.size()));
    std::set<SymplecticMap> local;
    for (const SymplecticMap &m : group)
        if (m.is_local()) local.insert(m);
    r.count("local_maps", static_cast<int64_t>(local.size()));
    std::set<SymplecticMap> from_letters;
    for (const LocalMap &m : all_local_maps()) from_letters.insert(m.symplectic());
    bool closed = true;
    for (const SymplecticMap &a : local)
        for (const SymplecticMap &b : local) closed = closed && local.contains(a * b);
    r.check("720 symplectic maps, 36 local forming a subgroup",
            group.size() == 720 && local.size() == 36 && from_letters == local && closed);

    const auto &all = Observable::all();
    bool preserve = true;
    for (const SymplecticMap &m : group)
        for (Observable a : all)
            for (Observable b : all) preserve = preserve && commutes(a, b) == commutes(m.apply(a), m.apply(b));
    r.check("every symplectic map preserves commutation", preserve);

    bool nonempty = true;
    std::set<size_t> sizes;
    for (const MagicSquare &a : k.squares()) {
        for (const MagicSquare &b : k.squares()) {
            size_t n = find_maps(a, b).size();
            nonempty = nonempty && n > 0;
            sizes.insert(n);
        }
    }
    r.check("maps exist between every ordered pair of squares, equally many for each",
            nonempty && sizes.size() == 1, std::to_string(*sizes.begin()) + " per pair");

    auto s16 = find_maps(k.square(1), k.square(6));
    bool none_local = std::none_of(s16.begin(), s16.end(), [](const FoundMap &f) { return f.local; });
    r.check("S1->S6 maps exist and none is local", !s16.empty() && none_local,
            std::to_string(s16.size()) + " maps");
    r.count("s1_to_s6_maps", static_cast<int64_t>(s16.size()));
    for (int id = 2; id <= 10; id++) {
        if (id == 6) continue;
        auto maps = find_maps(k.square(1), k.square(id));
        r.check("S1->" + sq(id) + " has a local map",
                std::any_of(maps.begin(), maps.end(), [](const FoundMap &f) { return f.local; }));
    }

    int lifted = 0;
    std::string failure;
    for (const SymplecticMap &m : group) {
        try {
            lift_to_unitary(m);
            lifted++;
        } catch (const std::exception &e) {
            if (failure.empty()) failure = e.what();
        }
    }
    r.check("every symplectic map lifts to a unitary with the +-conjugation action", lifted == 720,
            failure.empty() ? std::to_string(lifted) + " lifts" : failure);

    for (const Relabeling &rel : relabelings(k.tables())) {
        ColumnReproduction c = reproduce_column(rel, k.square(1), k.square(rel.target), k.catalog());
        std::string note = "S1->" + sq(rel.target) + ": " + std::to_string(c.candidates) + " maps (" +
                           std::to_string(c.local_candidates) + " local), " + std::to_string(c.state_set_matches) +
                           " send S1's states onto " + sq(rel.target) + "'s, " + std::to_string(c.exact_matches) +
                           " (map, Pauli factor) pairs reproduce the relabeling exactly";
        if (c.exact_map) note += ", e.g. " + c.exact_map->str() + " with " + *c.exact_pauli;
        r.notes.push_back(note);
    }
}

}  // namespace

VerificationReport run_suite(const std::string &scope, const golden::Tables &tables) {
    if (std::find(scopes().begin(), scopes().end(), scope) == scopes().end()) {
        throw std::invalid_argument("unknown scope: " + scope);
    }
    auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.suite = scope;
    auto want = [&](const char *s) { return scope == "all" || scope == s; };

    if (want("observables")) observables_suite(r);
    if (scope != "observables") {
        std::unique_ptr<Kaleidoscope> k;
        try {
            k = std::make_unique<Kaleidoscope>(tables);
            r.check("reference tables agree with the construction", true);
        } catch (const ConsistencyError &e) {
            r.check("reference tables agree with the construction", false, e.what());
        }
        if (k) {
            if (want("squares")) squares_suite(*k, r);
            if (want("states")) states_suite(*k, r);
            if (want("reye")) reye_suite(*k, r);
            if (want("apparitions")) apparitions_suite(*k, r);
            if (want("designs")) designs_suite(*k, r);
            if (want("transforms")) transforms_suite(*k, r);
        }
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace kaleido::cli
