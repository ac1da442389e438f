#include "sextic/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace sextic::fpgroup {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix I(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

std::int64_t checked_mul_sub(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw std::overflow_error("smith_normal_form: int64 overflow");
  return out;
}

// row_i -= q * row_j
void row_axpy(IntMatrix& M, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t k = 0; k < M[i].size(); ++k) M[i][k] = checked_mul_sub(M[i][k], q, M[j][k]);
}

// col_i -= q * col_j
void col_axpy(IntMatrix& M, std::size_t i, std::size_t j, std::int64_t q) {
  for (auto& row : M) row[i] = checked_mul_sub(row[i], q, row[j]);
}

void swap_cols(IntMatrix& M, std::size_t i, std::size_t j) {
  for (auto& row : M) std::swap(row[i], row[j]);
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  }
  return c;
}

std::int64_t determinant(const IntMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> M(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (square[i].size() != n) throw std::invalid_argument("determinant: not square");
    for (std::size_t j = 0; j < n; ++j) M[i][j] = square[i][j];
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && M[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return static_cast<std::int64_t>(sign * M[n - 1][n - 1]);
}

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.size();
  const std::size_t n = m == 0 ? 0 : A[0].size();
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("smith_normal_form: ragged matrix");
  SmithForm S{A, identity(m), identity(n)};
  auto& D = S.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (pi == m || std::llabs(D[i][j]) < std::llabs(D[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      std::swap(D[t], D[pi]);
      std::swap(S.U[t], S.U[pi]);
      swap_cols(D, t, pj);
      swap_cols(S.V, t, pj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        std::int64_t q = D[i][t] / D[t][t];
        row_axpy(D, i, t, q);
        row_axpy(S.U, i, t, q);
        dirty = dirty || D[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        std::int64_t q = D[t][j] / D[t][t];
        col_axpy(D, j, t, q);
        col_axpy(S.V, j, t, q);
        dirty = dirty || D[t][j] != 0;
      }
      if (dirty) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(D, t, bad, -1);
      row_axpy(S.U, t, bad, -1);
    }
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : S.U[t]) x = -x;
    }
  }

  if (multiply(multiply(S.U, A), S.V) != D) throw std::logic_error("smith_normal_form: U*A*V != D");
  if (std::llabs(determinant(S.U)) != 1 || std::llabs(determinant(S.V)) != 1)
    throw std::logic_error("smith_normal_form: transform not unimodular");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && D[i][j] != 0) throw std::logic_error("smith_normal_form: not diagonal");
  for (std::size_t t = 0; t + 1 < std::min(m, n); ++t) {
    std::int64_t a = D[t][t], b = D[t + 1][t + 1];
    if (a == 0 ? b != 0 : b % a != 0) throw std::logic_error("smith_normal_form: divisibility chain broken");
  }
  return S;
}

IntMatrix relation_matrix(const Presentation& pres) {
  IntMatrix M;
  for (const auto& r : pres.relators()) M.push_back(r.exponent_sums(pres.generators()));
  return M;
}

std::vector<std::int64_t> abelian_invariants(const Presentation& pres) {
  const auto n = static_cast<std::size_t>(pres.generators());
  std::vector<std::int64_t> out;
  std::size_t rank = 0;
  auto M = relation_matrix(pres);
  if (!M.empty() && n > 0) {
    auto S = smith_normal_form(M);
    for (std::size_t t = 0; t < std::min(M.size(), n); ++t) {
      std::int64_t d = S.D[t][t];
      if (d == 0) break;
      ++rank;
      if (d != 1) out.push_back(d);
    }
  }
  for (std::size_t k = rank; k < n; ++k) out.push_back(0);
  return out;
}

std::int64_t abelianization_order(const std::vector<std::int64_t>& invariants) {
  std::int64_t order = 1;
  for (auto d : invariants) {
    if (d == 0) return 0;
    order *= d;
  }
  return order;
}

std::vector<std::int64_t> elementary_divisors(const std::vector<std::int64_t>& invariants) {
  std::vector<std::int64_t> out;
  std::size_t zeros = 0;
  for (auto d : invariants) {
    if (d == 0) {
      ++zeros;
      continue;
    }
    for (std::int64_t p = 2; d > 1; ++p) {
      if (p * p > d) p = d;
      std::int64_t q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      if (q > 1) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  out.insert(out.end(), zeros, 0);
  return out;
}

}  // namespace sextic::fpgroup
