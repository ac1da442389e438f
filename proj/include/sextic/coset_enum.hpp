#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/presentation.hpp"

namespace sextic::fpgroup {

inline constexpr std::size_t kDefaultCosetLimit = 1'000'000;

class Overflow : public std::runtime_error {
 public:
  explicit Overflow(std::size_t limit)
      : std::runtime_error("coset enumeration overflow (limit " + std::to_string(limit) + ")"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

// Complete coset table.  Row 0 is the subgroup coset.  Column 2g is the
// action of generator g, column 2g+1 that of its inverse.
class CosetTable {
 public:
  CosetTable(int ngens, std::size_t rows, std::vector<std::int32_t> data)
      : ngens_(ngens), rows_(rows), data_(std::move(data)) {}

  int generators() const { return ngens_; }
  std::size_t index() const { return rows_; }
  int columns() const { return 2 * ngens_; }

  std::int32_t act(std::size_t coset, int column) const {
    return data_[coset * static_cast<std::size_t>(columns()) + static_cast<std::size_t>(column)];
  }
  // Image of a coset under a word (right action).
  std::size_t act(std::size_t coset, const Word& w) const;

  const std::vector<std::int32_t>& data() const { return data_; }

 private:
  int ngens_;
  std::size_t rows_;
  std::vector<std::int32_t> data_;
};

struct EnumerationStats {
  std::size_t max_cosets = 0;     // peak live cosets
  std::size_t total_defined = 0;  // cosets ever defined
  int lookaheads = 0;
};

// Hasse-Lengthen-Trotter enumeration with lookahead: when the table is full,
// relators are scanned from every live coset without defining new cosets,
// coincidences are collapsed and the table compacted before resuming.
CosetTable coset_enumerate(const Presentation& pres, const std::vector<Word>& subgroup = {},
                           std::size_t limit = kDefaultCosetLimit, EnumerationStats* stats = nullptr);

// Group order via enumeration over the trivial subgroup.
std::size_t group_order(const Presentation& pres, std::size_t limit = kDefaultCosetLimit);

// True when every generator column is a permutation and every relator and
// subgroup generator acts as required.
bool table_is_consistent(const CosetTable& table, const Presentation& pres,
                         const std::vector<Word>& subgroup = {});

}  // namespace sextic::fpgroup
