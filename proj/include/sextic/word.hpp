#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sextic::fpgroup {

// A letter is a generator index with exponent +1 or -1.  Internally it is
// packed as a signed integer: generator g is +(g+1), its inverse -(g+1).
struct Letter {
  int gen = 0;
  int exp = 1;

  friend bool operator==(Letter, Letter) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> packed);

  // Word consisting of a single generator (0-based).
  static Word gen(int g);
  static Word from_letters(std::initializer_list<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  const std::vector<int>& packed() const { return letters_; }
  Letter letter(std::size_t i) const;
  int max_generator() const;  // -1 for the empty word

  Word inverse() const;
  Word pow(int k) const;

  // Concatenation followed by free reduction.
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);

  Word conj(const Word& by) const { return by * (*this) * by.inverse(); }

  Word reduced() const;
  Word cyclically_reduced() const;
  bool is_reduced() const;

  // Exponent sum of each generator, sized to `ngens`.
  std::vector<std::int64_t> exponent_sums(int ngens) const;

  // Substitute a word for every generator.
  Word substitute(const std::vector<Word>& images) const;

  // Text form "a1 a2^-1 a1 a2^3"; runs collapse into powers; the empty word
  // is written "1".
  std::string str() const;
  static Word parse(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

// {a,b}_m: (ab)^k (ba)^-k for m = 2k, ((ab)^k a)((ba)^k b)^-1 for m = 2k+1.
// Setting it to 1 is equivalent to sigma^m = id for the generator sigma of
// the two-strand braid group acting on <a,b>.
Word braid_bracket(const Word& a, const Word& b, int m);

// Relator form of the equation lhs = rhs.
inline Word equate(const Word& lhs, const Word& rhs) { return (lhs * rhs.inverse()).reduced(); }

}  // namespace sextic::fpgroup
