#pragma once

#include <cstdint>
#include <vector>

#include "sextic/presentation.hpp"

namespace sextic::fpgroup {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithForm {
  IntMatrix D;  // diagonal, d1 | d2 | ... (nonnegative)
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix V;  // cols x cols, unimodular
};

// Computes U*A*V = D and checks the identity, unimodularity of U and V, and
// the divisibility chain before returning; throws std::logic_error if any
// check fails.
SmithForm smith_normal_form(const IntMatrix& A);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::int64_t determinant(const IntMatrix& square);  // fraction-free (Bareiss)

// Relator exponent matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& pres);

// Invariant factors of the abelianization, d1 | d2 | ..., with 0 for each
// free factor; trivial factors 1 are dropped, so the trivial group gives [].
std::vector<std::int64_t> abelian_invariants(const Presentation& pres);

// Product of the invariant factors, or 0 if the abelianization is infinite.
std::int64_t abelianization_order(const std::vector<std::int64_t>& invariants);

// [6] -> [2, 3]; [0, 12] -> [3, 4, 0].  Prime powers sorted ascending, free
// factors last.
std::vector<std::int64_t> elementary_divisors(const std::vector<std::int64_t>& invariants);

}  // namespace sextic::fpgroup
