#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sextic/classify.hpp"
#include "sextic/coset_enum.hpp"
#include "sextic/enumerate.hpp"

namespace sextic::acceptance {

struct Config {
  std::size_t limit = fpgroup::kDefaultCosetLimit;
  std::uint64_t seed = 1;
  enumerate::Backend backend = enumerate::Backend::Parallel;
};

struct Outcome {
  int id = 0;
  std::string title;
  bool pass = false;
  bool overflow = false;  // a coset enumeration hit the limit
  std::vector<std::string> details;
  double seconds = 0;

  nlohmann::json to_json() const;
};

// A row as printed in the classification tables.  `lmn` is the printed
// triple with "-" for omitted relations, "" when the column is blank.
struct PrintedRow {
  int number;
  const char* set;
  int n_r, n_c;
  const char* lmn;
  bool exceptional;  // no (l,m,n) reading: v not trivalent, circle, isotrivial
};

const std::vector<PrintedRow>& printed_table(classify::Kind kind);

inline constexpr int kCriteria = 9;

// Runs criteria 1..9 in order; `report` is called after each one.
std::vector<Outcome> run_all(const Config& config, const std::function<void(const Outcome&)>& report = {});

}  // namespace sextic::acceptance
