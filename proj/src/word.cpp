#include "sextic/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace sextic::fpgroup {

namespace {

std::vector<int> free_reduce(const std::vector<int>& in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int x : in) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

}  // namespace

Word::Word(std::vector<int> packed) : letters_(std::move(packed)) {
  for (int x : letters_)
    if (x == 0) throw std::invalid_argument("Word: zero letter");
}

Word Word::gen(int g) {
  if (g < 0) throw std::invalid_argument("Word::gen: negative generator");
  return Word(std::vector<int>{g + 1});
}

Word Word::from_letters(std::initializer_list<Letter> letters) {
  std::vector<int> packed;
  for (auto l : letters) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("Word: exponent must be +-1");
    packed.push_back(l.exp * (l.gen + 1));
  }
  return Word(std::move(packed));
}

Letter Word::letter(std::size_t i) const {
  int x = letters_.at(i);
  return x > 0 ? Letter{x - 1, 1} : Letter{-x - 1, -1};
}

int Word::max_generator() const {
  int m = -1;
  for (int x : letters_) m = std::max(m, std::abs(x) - 1);
  return m;
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& x : out) x = -x;
  return Word(std::move(out));
}

Word Word::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  std::vector<int> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(free_reduce(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(free_reduce(out));
}

Word& Word::operator*=(const Word& rhs) {
  *this = *this * rhs;
  return *this;
}

Word Word::reduced() const { return Word(free_reduce(letters_)); }

Word Word::cyclically_reduced() const {
  auto w = free_reduce(letters_);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<int>(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi)));
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == -letters_[i - 1]) return false;
  return true;
}

std::vector<std::int64_t> Word::exponent_sums(int ngens) const {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(ngens), 0);
  for (int x : letters_) {
    int g = std::abs(x) - 1;
    if (g >= ngens) throw std::out_of_range("Word::exponent_sums: generator out of range");
    sums[static_cast<std::size_t>(g)] += x > 0 ? 1 : -1;
  }
  return sums;
}

Word Word::substitute(const std::vector<Word>& images) const {
  std::vector<int> out;
  for (int x : letters_) {
    std::size_t g = static_cast<std::size_t>(std::abs(x) - 1);
    if (g >= images.size()) throw std::out_of_range("Word::substitute: missing image");
    const auto& img = x > 0 ? images[g].letters_ : images[g].inverse().letters_;
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(free_reduce(out));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    int x = letters_[i];
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == x) ++j;
    long run = static_cast<long>(j - i);
    if (!first) os << ' ';
    first = false;
    os << 'a' << std::abs(x);
    long e = x > 0 ? run : -run;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

Word Word::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto read_int = [&](int& value) {
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) throw std::invalid_argument("Word::parse: expected integer");
    i = static_cast<std::size_t>(ptr - text.data());
  };
  skip_ws();
  if (text.substr(i) == "1") return Word();
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != 'a') throw std::invalid_argument("Word::parse: expected 'a<k>'");
    ++i;
    int g = 0;
    read_int(g);
    if (g <= 0) throw std::invalid_argument("Word::parse: generator index must be positive");
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      read_int(e);
      if (e == 0) throw std::invalid_argument("Word::parse: zero exponent");
    }
    for (int k = 0; k < std::abs(e); ++k) out.push_back(e > 0 ? g : -g);
  }
  return Word(std::move(out));
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word braid_bracket(const Word& a, const Word& b, int m) {
  if (m < 0) throw std::invalid_argument("braid_bracket: m must be nonnegative");
  const int k = m / 2;
  const Word ab = a * b;
  const Word ba = b * a;
  if (m % 2 == 0) return ab.pow(k) * ba.pow(k).inverse();
  return (ab.pow(k) * a) * (ba.pow(k) * b).inverse();
}

}  // namespace sextic::fpgroup
