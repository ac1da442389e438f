#include "sextic/braid.hpp"

#include <stdexcept>

namespace sextic::fpgroup {

namespace {

std::vector<Word> generator_images(int s) {
  const Word x1 = Word::gen(0), x2 = Word::gen(1), x3 = Word::gen(2);
  switch (s) {
    case 1:
      return {x1 * x2 * x1.inverse(), x1, x3};
    case -1:
      return {x2, x2.inverse() * x1 * x2, x3};
    case 2:
      return {x1, x2 * x3 * x2.inverse(), x2};
    case -2:
      return {x1, x3, x3.inverse() * x2 * x3};
    default:
      throw std::invalid_argument("artin_action: braid letters must be +-1 or +-2");
  }
}

}  // namespace

std::vector<Word> artin_images(const BraidWord& braid) {
  std::vector<Word> images{Word::gen(0), Word::gen(1), Word::gen(2)};
  // phi_{s_1} o ... o phi_{s_k}(x) = phi_{s_1}(... phi_{s_k}(x)): substituting
  // the images of phi_{s_j} into the current images composes on the left.
  for (auto it = braid.rbegin(); it != braid.rend(); ++it) {
    auto step = generator_images(*it);
    for (auto& w : images) w = w.substitute(step);
  }
  return images;
}

Word artin_action(const BraidWord& braid, const Word& w) {
  if (w.max_generator() > 2) throw std::invalid_argument("artin_action: word must use three generators");
  return w.substitute(artin_images(braid));
}

BraidWord braid_power(const BraidWord& b, int k) {
  BraidWord out;
  if (k < 0) {
    BraidWord inv(b.rbegin(), b.rend());
    for (int& s : inv) s = -s;
    return braid_power(inv, -k);
  }
  for (int i = 0; i < k; ++i) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace sextic::fpgroup
