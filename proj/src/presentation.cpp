#include "sextic/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace sextic::fpgroup {

Presentation::Presentation(int ngens, std::vector<Word> relators) : ngens_(ngens) {
  if (ngens < 0) throw std::invalid_argument("Presentation: negative generator count");
  add(relators);
}

Presentation& Presentation::add(const Word& relator) {
  if (relator.max_generator() >= ngens_)
    throw std::invalid_argument("Presentation: relator uses an undeclared generator");
  Word w = relator.cyclically_reduced();
  if (!w.empty()) relators_.push_back(std::move(w));
  return *this;
}

Presentation& Presentation::add(const std::vector<Word>& relators) {
  for (const auto& r : relators) add(r);
  return *this;
}

Presentation Presentation::with(const Word& relator) const {
  Presentation p = *this;
  p.add(relator);
  return p;
}

Presentation Presentation::without(std::size_t i) const {
  Presentation p = *this;
  p.relators_.erase(p.relators_.begin() + static_cast<long>(i));
  return p;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << ngens_ << '\n';
  for (const auto& r : relators_) os << r.str() << '\n';
  return os.str();
}

Presentation Presentation::from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("Presentation: empty text");
  int n = std::stoi(line);
  Presentation p(n);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    p.add(Word::parse(line));
  }
  return p;
}

}  // namespace sextic::fpgroup
