#include "kaleido/serialize.hpp"

#include <numeric>
#include <stdexcept>

#include "kaleido/kaleidoscope.hpp"

namespace kaleido {

void to_json(json &j, const Observable &o) { j = o.str(); }
void from_json(const json &j, Observable &o) { o = Observable::parse(j.get<std::string>()); }

void to_json(json &j, const GaussianInt &z) { j = json::array({z.re, z.im}); }
void from_json(const json &j, GaussianInt &z) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("a complex number is [re, im]");
    }
    z = GaussianInt{j[0].get<int64_t>(), j[1].get<int64_t>()};
}

void to_json(json &j, const Triad &t) { j = json{{"members", t.members}, {"sign", t.sign}}; }
void from_json(const json &j, Triad &t) {
    auto m = j.at("members").get<std::array<Observable, 3>>();
    t = make_triad(m[0], m[1], m[2]);
    if (j.contains("sign") && j["sign"].get<int>() != t.sign) {
        throw std::invalid_argument("sign does not match triad " + t.str());
    }
}

void to_json(json &j, const StateVec &s) {
    j = json::object();
    if (s.label) j["label"] = *s.label;
    j["coords"] = s.coords;
}
void from_json(const json &j, StateVec &s) {
    s.coords = j.at("coords").get<Vec4>();
    s.label = j.contains("label") ? std::optional<int>(j["label"].get<int>()) : std::nullopt;
}

void to_json(json &j, const MagicSquare &s) {
    j = json{{"id", s.name()}, {"rows", s.grid}, {"line_signs", s.line_signs}};
}
void from_json(const json &j, MagicSquare &s) {
    s = MagicSquare{};
    s.id = parse_square_id(j.at("id").get<std::string>());
    s.grid = j.at("rows").get<Grid>();
    s.line_signs = j.at("line_signs").get<std::array<int, 6>>();
}

void to_json(json &j, const Tetrad &t) { j = t.labels; }
void from_json(const json &j, Tetrad &t) { t.labels = j.get<std::array<int, 4>>(); }

void to_json(json &j, const Line &l) { j = l.points; }
void from_json(const json &j, Line &l) { l.points = j.get<std::array<int, 3>>(); }

void to_json(json &j, const ReyeConfig &c) { j = json{{"points", c.points}, {"lines", c.lines}}; }
void from_json(const json &j, ReyeConfig &c) {
    c.points = j.at("points").get<std::array<int, 12>>();
    c.lines = j.at("lines").get<std::vector<Line>>();
}

void to_json(json &j, const PartnerPairing &p) {
    j = json::array();
    for (const auto &[a, b] : p.pairs) j.push_back(json::array({a, b}));
}
void from_json(const json &j, PartnerPairing &p) {
    p.pairs.clear();
    for (const json &pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("a partner pair is two lines");
        }
        p.pairs.emplace_back(pair[0].get<Line>(), pair[1].get<Line>());
    }
}

void to_json(json &j, const Apparition &a) {
    j = json{{"square", "S" + std::to_string(a.square_id)},
             {"kind", a.kind},
             {"excluded", a.excluded},
             {"tetrads", a.tetrads}};
}
void from_json(const json &j, Apparition &a) {
    a = Apparition{};
    a.square_id = parse_square_id(j.at("square").get<std::string>());
    a.kind = j.at("kind").get<int>();
    a.excluded = j.at("excluded").get<std::vector<int>>();
    a.tetrads = j.at("tetrads").get<std::vector<Tetrad>>();
    for (const Tetrad &t : a.tetrads) {
        for (int l : t.labels) a.multiplicity[l]++;
    }
}

void to_json(json &j, const QbdSymbol &q) {
    json pairs = json::array();
    for (const auto &[l, x] : q.pairs) pairs.push_back(json::array({l, x}));
    j = json{{"b", q.b}, {"v", q.v}, {"r", q.r}, {"k", q.k}, {"pairs", pairs}};
}
void from_json(const json &j, QbdSymbol &q) {
    q.b = j.at("b").get<int>();
    q.v = j.at("v").get<int>();
    q.r = j.at("r").get<int>();
    q.k = j.at("k").get<int>();
    q.pairs.clear();
    for (const json &p : j.at("pairs")) q.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
}

void to_json(json &j, const SymplecticMap &m) {
    j = json::array();
    for (int i = 0; i < 4; i++) {
        json row = json::array();
        for (int c = 0; c < 4; c++) row.push_back(m.entry(i, c));
        j.push_back(row);
    }
}
void from_json(const json &j, SymplecticMap &m) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("a symplectic map is four rows");
    }
    std::array<uint8_t, 4> rows{};
    for (int i = 0; i < 4; i++) {
        if (!j[i].is_array() || j[i].size() != 4) {
            throw std::invalid_argument("a symplectic map row is four bits");
        }
        for (int c = 0; c < 4; c++) {
            int bit = j[i][c].get<int>();
            if (bit != 0 && bit != 1) {
                throw std::invalid_argument("symplectic map entries are 0 or 1");
            }
            rows[i] |= static_cast<uint8_t>(bit << (3 - c));
        }
    }
    m = SymplecticMap(rows);
}

void to_json(json &j, const ScaledMatrix &m) {
    j = json::array();
    for (const Vec4 &row : m.num) {
        json out = json::array();
        for (const GaussianInt &z : row) {
            int64_t g = std::gcd(std::gcd(z.re, z.im), m.den);
            out.push_back(json{{"num", GaussianInt{z.re / g, z.im / g}}, {"den", m.den / g}});
        }
        j.push_back(out);
    }
}
void from_json(const json &j, ScaledMatrix &m) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("a matrix is four rows");
    }
    int64_t den = 1;
    for (const json &row : j) {
        for (const json &e : row) {
            int64_t d = e.at("den").get<int64_t>();
            if (d <= 0) throw std::invalid_argument("denominators are positive");
            den = std::lcm(den, d);
        }
    }
    Mat4 num{};
    for (int r = 0; r < 4; r++) {
        if (!j[r].is_array() || j[r].size() != 4) {
            throw std::invalid_argument("a matrix row is four entries");
        }
        for (int c = 0; c < 4; c++) {
            auto z = j[r][c].at("num").get<GaussianInt>();
            int64_t scale = den / j[r][c]["den"].get<int64_t>();
            num[r][c] = GaussianInt{z.re * scale, z.im * scale};
        }
    }
    m = ScaledMatrix::make(num, den);
}

void to_json(json &j, const Check &c) { j = json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

namespace golden {

void to_json(json &j, const Tables &t) {
    json states = json::array();
    int label = 1;
    for (const StateRow &row : t.states) {
        json r{{"triad", row.triad}, {"starred", row.starred}, {"states", json::array()}};
        for (const Vec4 &v : row.states) r["states"].push_back(json{{"label", label++}, {"coords", v}});
        states.push_back(r);
    }
    json partners = json::array();
    for (const auto &[a, b] : t.square1_partner_lines) partners.push_back(json::array({a, b}));
    json triangles = json::array();
    for (const PointTriangles &p : t.square1_point_triangles) {
        triangles.push_back(json{{"point", p.point}, {"triangles", p.triangles}});
    }
    json relabel = json::array();
    for (size_t c = 0; c < t.relabelings.size(); c++) {
        relabel.push_back(json{{"target", "S" + std::to_string(c + 2)}, {"image", t.relabelings[c]}});
    }
    json locals = json::array();
    for (const LocalMapRow &m : t.local_maps) {
        locals.push_back(json{{"target", "S" + std::to_string(m.target)},
                              {"qubit1", m.images[0]},
                              {"qubit2", m.images[1]},
                              {"notation", m.notation}});
    }
    j = json{{"states", states},
             {"square1_tetrads", t.square1_tetrads},
             {"square1_partner_lines", partners},
             {"square1_point_triangles", triangles},
             {"all_tetrads", t.all_tetrads},
             {"relabelings", relabel},
             {"local_maps", locals},
             {"mub_families_printed", t.mub_families_printed},
             {"mub_families", t.mub_families}};
}

}  // namespace golden

}  // namespace kaleido
