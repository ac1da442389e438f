#pragma once

#include <vector>

#include "sextic/word.hpp"

namespace sextic::fpgroup {

// A braid word on three strands: entries +-1, +-2 for sigma_1^{+-1},
// sigma_2^{+-1}.
using BraidWord = std::vector<int>;

// Artin automorphism of the free group <x1,x2,x3>:
//   sigma_1: x1 -> x1 x2 x1^-1, x2 -> x1, x3 -> x3
//   sigma_2: x2 -> x2 x3 x2^-1, x3 -> x2, x1 -> x1
// A braid s_1 s_2 ... s_k acts as phi_{s_1} o phi_{s_2} o ... o phi_{s_k}.
Word artin_action(const BraidWord& braid, const Word& w);

// Images of the three generators under the braid.
std::vector<Word> artin_images(const BraidWord& braid);

BraidWord braid_power(const BraidWord& b, int k);

}  // namespace sextic::fpgroup
