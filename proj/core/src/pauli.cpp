#include "kaleido/pauli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace kaleido {

namespace {

// Single-qubit product a*b = i^k * c. Returns (c, k).
std::pair<Letter, int> letter_product(Letter a, Letter b) {
    Letter c = letter_from_bits(letter_x(a) ^ letter_x(b), letter_z(a) ^ letter_z(b));
    if (a == Letter::I || b == Letter::I || a == b) {
        return {c, 0};
    }
    // Cyclic X -> Y -> Z gives +i, anticyclic gives -i.
    auto idx = [](Letter l) { return static_cast<int>(l); };
    int d = (idx(b) - idx(a) + 3) % 3;
    return {c, d == 1 ? 1 : 3};
}

}  // namespace

char letter_char(Letter l) { return "IXYZ"[static_cast<int>(l)]; }

Observable Observable::from_bits(uint8_t x1, uint8_t z1, uint8_t x2, uint8_t z2) {
    return from_code(static_cast<uint8_t>(((x1 & 1) << 3) | ((z1 & 1) << 2) | ((x2 & 1) << 1) | (z2 & 1)));
}

Observable Observable::from_letters(Letter q1, Letter q2) {
    return from_bits(letter_x(q1), letter_z(q1), letter_x(q2), letter_z(q2));
}

Observable Observable::from_code(uint8_t code) {
    if (code == 0 || code > 15) {
        throw std::invalid_argument("observable code out of range 1..15: " + std::to_string(code));
    }
    return Observable(code);
}

Observable Observable::parse(std::string_view text) {
    auto to_letter = [&](char c) {
        switch (c) {
            case 'I': return Letter::I;
            case 'X': return Letter::X;
            case 'Y': return Letter::Y;
            case 'Z': return Letter::Z;
        }
        throw std::invalid_argument("bad observable '" + std::string(text) + "'");
    };
    if (text.size() != 2) {
        throw std::invalid_argument("bad observable '" + std::string(text) + "'");
    }
    Letter a = to_letter(text[0]);
    Letter b = to_letter(text[1]);
    if (a == Letter::I && b == Letter::I) {
        throw std::invalid_argument("the identity \"II\" is not an observable");
    }
    return from_letters(a, b);
}

const std::array<Observable, 15> &Observable::all() {
    static const std::array<Observable, 15> table = {
        Observable(1), Observable(2),  Observable(3),  Observable(4),  Observable(5),
        Observable(6), Observable(7),  Observable(8),  Observable(9),  Observable(10),
        Observable(11), Observable(12), Observable(13), Observable(14), Observable(15)};
    return table;
}

int Observable::weight() const { return (letter(1) != Letter::I) + (letter(2) != Letter::I); }

std::string Observable::str() const { return {letter_char(letter(1)), letter_char(letter(2))}; }

std::ostream &operator<<(std::ostream &out, Observable o) { return out << o.str(); }

std::string Phase::str() const {
    static const char *names[] = {"+1", "+i", "-1", "-i"};
    return names[k_];
}

bool commutes(Observable a, Observable b) {
    int s = a.x(1) * b.z(1) + a.z(1) * b.x(1) + a.x(2) * b.z(2) + a.z(2) * b.x(2);
    return s % 2 == 0;
}

Product multiply(Observable a, Observable b) {
    auto [c1, k1] = letter_product(a.letter(1), b.letter(1));
    auto [c2, k2] = letter_product(a.letter(2), b.letter(2));
    Product p;
    p.phase = Phase::i_pow(k1 + k2);
    if (c1 != Letter::I || c2 != Letter::I) {
        p.result = Observable::from_letters(c1, c2);
    }
    return p;
}

bool Triad::contains(Observable o) const { return std::find(members.begin(), members.end(), o) != members.end(); }

bool Triad::disjoint(const Triad &other) const {
    return std::none_of(members.begin(), members.end(), [&](Observable o) { return other.contains(o); });
}

std::string Triad::str() const {
    return "{" + members[0].str() + "," + members[1].str() + "," + members[2].str() + "}";
}

Triad make_triad(Observable a, Observable b, Observable c) {
    if (!commutes(a, b) || !commutes(a, c) || !commutes(b, c) || a == b || a == c || b == c) {
        throw std::invalid_argument("not three distinct commuting observables");
    }
    Product ab = multiply(a, b);
    if (!ab.result || *ab.result != c) {
        throw std::invalid_argument("commuting observables do not close into a triad");
    }
    // a*b*c = phase * c*c = phase.
    Triad t{{a, b, c}, ab.phase.sign()};
    std::sort(t.members.begin(), t.members.end());
    return t;
}

const std::vector<Triad> &enumerate_triads() {
    static const std::vector<Triad> triads = [] {
        std::vector<Triad> out;
        const auto &obs = Observable::all();
        for (size_t i = 0; i < obs.size(); i++) {
            for (size_t j = i + 1; j < obs.size(); j++) {
                for (size_t k = j + 1; k < obs.size(); k++) {
                    if (commutes(obs[i], obs[j]) && commutes(obs[i], obs[k]) && commutes(obs[j], obs[k])) {
                        out.push_back(make_triad(obs[i], obs[j], obs[k]));
                    }
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return triads;
}

const Triad &triad_through(Observable a, Observable b) {
    for (const Triad &t : enumerate_triads()) {
        if (a != b && t.contains(a) && t.contains(b)) {
            return t;
        }
    }
    throw std::invalid_argument(a.str() + " and " + b.str() + " lie in no common triad");
}

}  // namespace kaleido
