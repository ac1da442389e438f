#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sextic/word.hpp"

namespace sextic::fpgroup {

// Finitely presented group <a1..an | relators>.  Relators are stored freely
// and cyclically reduced; trivial relators are dropped.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(int ngens, std::vector<Word> relators = {});

  int generators() const { return ngens_; }
  const std::vector<Word>& relators() const { return relators_; }

  Presentation& add(const Word& relator);
  Presentation& add(const std::vector<Word>& relators);
  Presentation with(const Word& relator) const;

  // Drop relator i (used for redundancy checks).
  Presentation without(std::size_t i) const;

  // Line 1: generator count; every further line: one relator.
  std::string to_text() const;
  static Presentation from_text(std::string_view text);

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  int ngens_ = 0;
  std::vector<Word> relators_;
};

}  // namespace sextic::fpgroup
