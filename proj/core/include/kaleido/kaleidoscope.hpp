#pragma once

#include <vector>

#include "kaleido/apparitions.hpp"
#include "kaleido/golden.hpp"
#include "kaleido/hexagon.hpp"
#include "kaleido/incidence.hpp"
#include "kaleido/states.hpp"

namespace kaleido {

/// Everything derived from one set of reference tables: the state catalog,
/// the ten squares with their geometry, the 105 tetrads and all apparitions.
class Kaleidoscope {
   public:
    /// Throws ConsistencyError if the tables disagree with the computation.
    explicit Kaleidoscope(golden::Tables tables);

    /// Built once from the shipped tables.
    static const Kaleidoscope &standard();

    const golden::Tables &tables() const { return tables_; }
    const Catalog &catalog() const { return catalog_; }
    const std::vector<MagicSquare> &squares() const { return squares_; }
    /// Throws std::out_of_range for ids outside 1..10.
    const MagicSquare &square(int id) const;
    const SquareGeometry &geometry(int id) const;
    const std::vector<SquareGeometry> &geometries() const { return geometries_; }
    const std::vector<Tetrad> &tetrads() const { return tetrads_; }
    const std::vector<Apparition> &apparitions() const { return apparitions_; }

   private:
    golden::Tables tables_;
    Catalog catalog_;
    std::vector<MagicSquare> squares_;
    std::vector<SquareGeometry> geometries_;
    std::vector<Tetrad> tetrads_;
    std::vector<Apparition> apparitions_;
};

/// Parses "S3" or "3". Throws std::invalid_argument outside S1..S10.
int parse_square_id(const std::string &text);

}  // namespace kaleido
