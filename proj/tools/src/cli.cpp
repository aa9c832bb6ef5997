#include "kaleido_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "kaleido/designs.hpp"
#include "kaleido/errors.hpp"
#include "kaleido/kaleidoscope.hpp"
#include "kaleido/serialize.hpp"
#include "kaleido_cli/suites.hpp"

namespace kaleido::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, JsonArray, Csv };

Format parse_format(const std::string &f) {
    if (f == "text") return Format::Text;
    if (f == "json") return Format::Json;
    if (f == "json-array") return Format::JsonArray;
    if (f == "csv") return Format::Csv;
    throw UsageError("unknown format: " + f);
}

std::string csv_cell(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

template <typename Seq>
std::string joined(const Seq &xs, const std::string &sep = " ") {
    std::ostringstream out;
    bool first = true;
    for (const auto &x : xs) {
        if (!first) out << sep;
        out << x;
        first = false;
    }
    return out.str();
}

/// Streams records in the selected format.
class Emitter {
   public:
    Emitter(Format f, std::ostream &out, std::vector<std::string> header)
        : format_(f), out_(out), header_(std::move(header)) {}

    void record(const json &j, const std::string &text, const std::vector<std::string> &csv) {
        switch (format_) {
            case Format::Text:
                out_ << text << "\n";
                break;
            case Format::Json:
                out_ << j.dump() << "\n";
                break;
            case Format::JsonArray:
                array_.push_back(j);
                break;
            case Format::Csv:
                if (!header_done_) {
                    out_ << joined(header_, ",") << "\n";
                    header_done_ = true;
                }
                std::vector<std::string> cells;
                for (const auto &c : csv) cells.push_back(csv_cell(c));
                out_ << joined(cells, ",") << "\n";
                break;
        }
    }

    void finish() {
        if (format_ == Format::JsonArray) out_ << array_.dump() << "\n";
        if (format_ == Format::Csv && !header_done_) out_ << joined(header_, ",") << "\n";
    }

   private:
    Format format_;
    std::ostream &out_;
    std::vector<std::string> header_;
    json array_ = json::array();
    bool header_done_ = false;
};

std::string label_list(std::span<const int> xs) { return "{" + joined(xs, ",") + "}"; }

std::string signs_text(std::span<const int> signs) {
    std::string s;
    for (int x : signs) s += x > 0 ? '+' : '-';
    return s;
}

struct Options {
    std::string format = "text";
    std::string square;
    std::string kind;
    bool check = false;
    bool lift = false;
    bool dump_golden = false;
    std::string corrupt;
    std::string scope = "all";
    std::string list_kind;
    bool all = false;
    std::string from;
    std::string to;
    std::string output;
};

std::optional<int> square_filter(const Options &o) {
    if (o.square.empty() || o.square == "all" || o.all) return std::nullopt;
    try {
        return parse_square_id(o.square);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

void emit_report(const VerificationReport &r, Format f, std::ostream &out) {
    if (f == Format::Json || f == Format::JsonArray) {
        json counts = json::object();
        for (const auto &[k, v] : r.counts) counts[k] = v;
        json j{{"suite", r.suite},    {"passed", r.passed()}, {"checks", r.checks},
               {"counts", counts},    {"notes", r.notes},      {"elapsed_ms", std::round(r.elapsed_ms)}};
        out << (f == Format::Json ? j.dump() : json::array({j}).dump()) << "\n";
        return;
    }
    if (f == Format::Csv) {
        out << "check,pass,detail\n";
        for (const Check &c : r.checks) {
            out << csv_cell(c.name) << "," << (c.pass ? "true" : "false") << "," << csv_cell(c.detail) << "\n";
        }
        return;
    }
    out << "suite " << r.suite << "\n";
    for (const Check &c : r.checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    for (const auto &[k, v] : r.counts) out << "count " << k << " = " << v << "\n";
    for (const std::string &n : r.notes) out << "note " << n << "\n";
    size_t failed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check &c) { return !c.pass; });
    out << "result " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << failed
        << " failed, " << std::fixed << std::setprecision(0) << r.elapsed_ms << " ms)\n";
}

int cmd_verify(const Options &o, const golden::Tables &tables, std::ostream &out) {
    if (std::find(scopes().begin(), scopes().end(), o.scope) == scopes().end()) {
        throw UsageError("unknown scope '" + o.scope + "'; expected one of: " + joined(scopes(), ", "));
    }
    VerificationReport r = run_suite(o.scope, tables);
    emit_report(r, parse_format(o.format), out);
    return r.passed() ? kOk : kVerificationFailed;
}

void list_records(const Options &o, const Kaleidoscope &k, std::ostream &out) {
    const Format f = parse_format(o.format);
    const auto sel = square_filter(o);
    const std::string &kind = o.list_kind;
    if (kind == "observables") {
        Emitter e(f, out, {"observable", "x1", "z1", "x2", "z2"});
        for (Observable ob : Observable::all()) {
            std::vector<int> bits = {ob.bit(0), ob.bit(1), ob.bit(2), ob.bit(3)};
            e.record(json{{"observable", ob}, {"symplectic", bits}}, ob.str() + "  " + joined(bits, ""),
                     {ob.str(), std::to_string(bits[0]), std::to_string(bits[1]), std::to_string(bits[2]),
                      std::to_string(bits[3])});
        }
        e.finish();
    } else if (kind == "triads") {
        Emitter e(f, out, {"members", "sign"});
        for (const Triad &t : enumerate_triads()) {
            std::string sign = t.sign > 0 ? "+1" : "-1";
            e.record(t, t.str() + " " + sign, {joined(t.members), sign});
        }
        e.finish();
    } else if (kind == "states") {
        Emitter e(f, out, {"label", "coords", "triad"});
        for (const StateVec &s : k.catalog().states()) {
            const Triad &t = k.catalog().triad_of(*s.label);
            e.record(s, std::to_string(*s.label) + " " + s.str() + " " + t.str(),
                     {std::to_string(*s.label), s.str(), t.str()});
        }
        e.finish();
    } else if (kind == "squares") {
        Emitter e(f, out, {"id", "rows", "line_signs"});
        for (const MagicSquare &s : k.squares()) {
            if (sel && s.id != *sel) continue;
            std::vector<std::string> rows;
            for (const auto &r : s.grid) rows.push_back(joined(r));
            e.record(s, s.name() + "  " + joined(rows, " | ") + "  " + signs_text(s.line_signs),
                     {s.name(), joined(rows, " | "), signs_text(s.line_signs)});
        }
        e.finish();
    } else if (kind == "tetrads") {
        Emitter e(f, out, {"tetrad"});
        const auto &ts = sel ? k.geometry(*sel).tetrads : k.tetrads();
        for (const Tetrad &t : ts) e.record(t, t.str(), {joined(t.labels)});
        e.finish();
    } else if (kind == "lines") {
        Emitter e(f, out, {"square", "config", "line", "partner"});
        for (const SquareGeometry &g : k.geometries()) {
            if (sel && g.square_id != *sel) continue;
            std::string name = "S" + std::to_string(g.square_id);
            for (const auto &[a, b] : g.pairing.pairs) {
                e.record(json{{"square", name}, {"config", "rows"}, {"points", a}, {"partner", b}},
                         name + " rows " + a.str() + " <-> " + b.str(), {name, "rows", joined(a.points), joined(b.points)});
            }
            for (const auto &[a, b] : g.pairing.pairs) {
                e.record(json{{"square", name}, {"config", "columns"}, {"points", b}, {"partner", a}},
                         name + " columns " + b.str() + " <-> " + a.str(),
                         {name, "columns", joined(b.points), joined(a.points)});
            }
        }
        e.finish();
    } else if (kind == "configs") {
        Emitter e(f, out, {"square", "config", "points", "lines"});
        for (const SquareGeometry &g : k.geometries()) {
            if (sel && g.square_id != *sel) continue;
            std::string name = "S" + std::to_string(g.square_id);
            for (const auto &[label, cfg] : {std::pair{"rows", &g.row_config}, std::pair{"columns", &g.column_config}}) {
                json j = *cfg;
                j["square"] = name;
                j["config"] = label;
                std::vector<std::string> lines;
                for (const Line &l : cfg->lines) lines.push_back(l.str());
                e.record(j, name + " " + label + " " + label_list(cfg->points) + " " + joined(lines),
                         {name, label, joined(cfg->points), joined(lines)});
            }
        }
        e.finish();
    } else if (kind == "pairing") {
        Emitter e(f, out, {"square", "pairing"});
        for (const SquareGeometry &g : k.geometries()) {
            if (sel && g.square_id != *sel) continue;
            std::string name = "S" + std::to_string(g.square_id);
            std::vector<std::string> pairs;
            for (const auto &[a, b] : g.pairing.pairs) pairs.push_back(a.str() + "<->" + b.str());
            e.record(json{{"square", name}, {"pairing", g.pairing}}, name + " " + joined(pairs),
                     {name, joined(pairs)});
        }
        e.finish();
    } else if (kind == "mubsets") {
        Emitter e(f, out, {"family", "triads"});
        MubReport mub = verify_mub_sets(k.tables());
        for (size_t i = 0; i < mub.families.size(); i++) {
            std::vector<std::string> ts;
            for (const Triad &t : mub.families[i]) ts.push_back(t.str());
            e.record(json{{"family", i + 1}, {"triads", mub.families[i]}},
                     std::to_string(i + 1) + " " + joined(ts), {std::to_string(i + 1), joined(ts)});
        }
        e.finish();
    } else {
        throw UsageError("unknown list kind '" + kind +
                         "'; expected observables, triads, states, squares, tetrads, lines, configs, pairing or mubsets");
    }
}

int cmd_apparitions(const Options &o, const Kaleidoscope &k, std::ostream &out) {
    const Format f = parse_format(o.format);
    const auto sel = square_filter(o);
    std::optional<int> kind;
    if (!o.kind.empty() && o.kind != "all") {
        if (o.kind != "18" && o.kind != "20") throw UsageError("--kind must be 18, 20 or all");
        kind = std::stoi(o.kind);
    }
    std::vector<std::string> header = {"square", "kind", "excluded", "tetrads"};
    if (o.check) header.push_back("colorings");
    Emitter e(f, out, header);
    bool clean = true;
    for (const Apparition &a : k.apparitions()) {
        if ((sel && a.square_id != *sel) || (kind && a.kind != *kind)) continue;
        json j = a;
        std::vector<std::string> ts;
        for (const Tetrad &t : a.tetrads) ts.push_back(t.str());
        std::string name = "S" + std::to_string(a.square_id);
        std::string text = name + " " + std::to_string(a.kind) + " excluded " + label_list(a.excluded) + " " + joined(ts);
        std::vector<std::string> csv = {name, std::to_string(a.kind), joined(a.excluded), joined(ts)};
        if (o.check) {
            auto st = a.states();
            uint64_t colorings = color_search(st, a.tetrads);
            clean = clean && colorings == 0 && parity_check(a);
            j["colorings"] = colorings;
            text += " colorings " + std::to_string(colorings);
            csv.push_back(std::to_string(colorings));
        }
        e.record(j, text, csv);
    }
    e.finish();
    return clean ? kOk : kVerificationFailed;
}

int cmd_find_map(const Options &o, const Kaleidoscope &k, std::ostream &out) {
    int from = 0;
    int to = 0;
    try {
        from = parse_square_id(o.from);
        to = parse_square_id(o.to);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    const Format f = parse_format(o.format);
    std::vector<std::string> header = {"map", "local"};
    if (o.lift) header.insert(header.end(), {"signs", "unitary"});
    Emitter e(f, out, header);
    auto maps = find_maps(k.square(from), k.square(to));
    for (const FoundMap &m : maps) {
        json j{{"map", m.map}, {"local", m.local}};
        std::string tag = m.local ? "local" : "non-local";
        std::string text = m.map.str() + " " + tag;
        std::vector<std::string> csv = {m.map.str(), m.local ? "true" : "false"};
        if (o.lift) {
            Lift l = lift_to_unitary(m.map);
            j["lift"] = json{{"matrix", l.unitary}, {"signs", l.signs}};
            text += " signs " + signs_text(l.signs) + " U = " + l.unitary.str();
            csv.push_back(signs_text(l.signs));
            csv.push_back(l.unitary.str());
        }
        e.record(j, text, csv);
    }
    e.finish();
    return maps.empty() ? kVerificationFailed : kOk;
}

json export_document(const Kaleidoscope &k) {
    json doc;
    doc["observables"] = Observable::all();
    doc["triads"] = enumerate_triads();
    doc["states"] = k.catalog().states();
    doc["squares"] = k.squares();
    doc["tetrads"] = k.tetrads();
    json geo = json::array();
    for (const SquareGeometry &g : k.geometries()) {
        geo.push_back(json{{"square", "S" + std::to_string(g.square_id)},
                           {"tetrads", g.tetrads},
                           {"row_config", g.row_config},
                           {"column_config", g.column_config},
                           {"pairing", g.pairing}});
    }
    doc["geometry"] = geo;
    doc["apparitions"] = k.apparitions();
    std::vector<int> codes;
    for (Observable o : Observable::all()) codes.push_back(o.code());
    std::vector<int> labels;
    for (int l = 1; l <= Catalog::kSize; l++) labels.push_back(l);
    auto s1 = k.geometry(1).states.all();
    MubReport mub = verify_mub_sets(k.tables());
    doc["designs"] = json{{"observables", qbd_profile(codes, as_blocks(enumerate_triads()))},
                          {"square", qbd_profile(s1, as_blocks(k.geometry(1).tetrads))},
                          {"states", qbd_profile(labels, as_blocks(k.tetrads()))},
                          {"mub_cover", mub.cover ? json(*mub.cover) : json()},
                          {"mub_families", mub.families}};
    return doc;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact enumeration and verification of two-qubit parity proofs", "kaleido"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "json-array", "csv"}));
    app.add_option("--square", o.square, "Square id (S1..S10) or 'all'");
    app.add_option("--kind", o.kind, "Apparition kind: 18, 20 or all");
    app.add_flag("--check", o.check, "Run a coloring search on every apparition");
    app.add_flag("--lift", o.lift, "Print a lifted unitary for every map");
    app.add_flag("--dump-golden", o.dump_golden, "Print the shipped reference tables as JSON and exit");
    app.add_option("--corrupt-golden", o.corrupt)->group("");

    auto *verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("scope", o.scope, "all, observables, squares, states, reye, apparitions, designs or transforms");
    auto *list = app.add_subcommand("list", "List objects in canonical order");
    list->add_option("kind", o.list_kind,
                     "observables, triads, states, squares, tetrads, lines, configs, pairing or mubsets")
        ->required();
    auto *apps = app.add_subcommand("apparitions", "Stream parity-proof apparitions");
    apps->add_flag("--all", o.all, "All squares");
    auto *find = app.add_subcommand("find-map", "Symplectic maps between two squares");
    find->add_option("from", o.from)->required();
    find->add_option("to", o.to)->required();
    auto *exp = app.add_subcommand("export", "Write all derived data as one JSON document");
    exp->add_option("-o,--output", o.output, "Output file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        golden::Tables tables = golden::reference();
        if (!o.corrupt.empty()) {
            try {
                tables = golden::corrupted(tables, o.corrupt);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
        if (o.dump_golden) {
            out << json(tables).dump(2) << "\n";
            return kOk;
        }
        parse_format(o.format);
        if (app.got_subcommand(verify)) return cmd_verify(o, tables, out);
        if (app.get_subcommands().empty()) {
            err << app.help();
            return kUsageError;
        }

        std::unique_ptr<Kaleidoscope> owned;
        const Kaleidoscope *k = &Kaleidoscope::standard();
        if (!o.corrupt.empty()) {
            owned = std::make_unique<Kaleidoscope>(tables);
            k = owned.get();
        }
        if (app.got_subcommand(list)) {
            list_records(o, *k, out);
            return kOk;
        }
        if (app.got_subcommand(apps)) return cmd_apparitions(o, *k, out);
        if (app.got_subcommand(find)) return cmd_find_map(o, *k, out);
        if (app.got_subcommand(exp)) {
            json doc = export_document(*k);
            if (o.output.empty()) {
                out << doc.dump() << "\n";
            } else {
                std::ofstream file(o.output);
                if (!file) throw UsageError("cannot write " + o.output);
                file << doc.dump() << "\n";
            }
            return kOk;
        }
        return kUsageError;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception &e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    }
}

}  // namespace kaleido::cli
