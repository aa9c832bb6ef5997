#include "kaleido/kaleidoscope.hpp"

#include <stdexcept>

namespace kaleido {

Kaleidoscope::Kaleidoscope(golden::Tables tables)
    : tables_(std::move(tables)), catalog_(build_catalog(tables_)), squares_(enumerate_squares(catalog_, tables_)) {
    for (const MagicSquare &s : squares_) {
        geometries_.push_back(square_geometry(s, catalog_));
    }
    std::vector<int> labels;
    for (int l = 1; l <= Catalog::kSize; l++) labels.push_back(l);
    tetrads_ = enumerate_tetrads(labels, catalog_);
    apparitions_ = enumerate_all(geometries_, catalog_);
}

const Kaleidoscope &Kaleidoscope::standard() {
    static const Kaleidoscope k(golden::reference());
    return k;
}

const MagicSquare &Kaleidoscope::square(int id) const {
    if (id < 1 || id > static_cast<int>(squares_.size())) {
        throw std::out_of_range("no square S" + std::to_string(id));
    }
    return squares_[id - 1];
}

const SquareGeometry &Kaleidoscope::geometry(int id) const {
    square(id);
    return geometries_[id - 1];
}

int parse_square_id(const std::string &text) {
    std::string digits = text;
    if (!digits.empty() && (digits[0] == 'S' || digits[0] == 's')) digits.erase(0, 1);
    if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad square id: " + text);
    }
    int id = std::stoi(digits);
    if (id < 1 || id > 10) {
        throw std::invalid_argument("square id out of range: " + text);
    }
    return id;
}

}  // namespace kaleido
