#include "sextic/enumerate.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sextic::enumerate {

using cmap::CombinatorialMap;
using cmap::Role;
using cmap::Skeleton;

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<VertexSpec> specs_for_total(int total, int min_white) {
  std::vector<VertexSpec> out;
  for (int d = 0; 2 * d <= total; ++d) {
    const int budget = total - 2 * d;
    for (int w = min_white; 3 * w <= budget; ++w)
      for (int a = 0; 3 * a + 3 * w <= budget; ++a)
        for (int b = 0; 3 * a + 4 * b + 3 * w <= budget; ++b) {
          int c = budget - 3 * a - 4 * b - 3 * w;
          out.push_back({a, b, c, w});
        }
  }
  return out;
}

namespace {

struct Layout {
  std::vector<int> sigma;
  std::vector<int> vertex;
  std::vector<Role> roles;
  std::vector<char> white_dart;
  int vertices = 0;
};

Layout make_layout(const VertexSpec& s) {
  Layout L;
  auto add_vertex = [&](int valency, Role role) {
    const int first = static_cast<int>(L.sigma.size());
    for (int k = 0; k < valency; ++k) {
      L.sigma.push_back(first + (k + 1) % valency);
      L.vertex.push_back(L.vertices);
      L.white_dart.push_back(role == Role::White);
    }
    L.roles.push_back(role);
    ++L.vertices;
  };
  for (int i = 0; i < s.mono; ++i) add_vertex(1, Role::Black);
  for (int i = 0; i < s.bi; ++i) add_vertex(2, Role::Black);
  for (int i = 0; i < s.tri; ++i) add_vertex(3, Role::Black);
  for (int i = 0; i < s.white; ++i) add_vertex(1, Role::White);
  return L;
}

// Connected and V - E + F = 2.
bool spherical(const Layout& L, const std::vector<int>& theta) {
  const int n = static_cast<int>(theta.size());
  // connectivity over vertices joined by edges
  std::vector<int> parent(static_cast<std::size_t>(L.vertices));
  for (int v = 0; v < L.vertices; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  int components = L.vertices;
  for (int d = 0; d < n; ++d) {
    int a = find(L.vertex[static_cast<std::size_t>(d)]), b = find(L.vertex[static_cast<std::size_t>(theta[static_cast<std::size_t>(d)])]);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  if (components != 1) return false;
  int faces = 0;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int d = 0; d < n; ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    ++faces;
    int e = d;
    do {
      seen[static_cast<std::size_t>(e)] = 1;
      e = L.sigma[static_cast<std::size_t>(theta[static_cast<std::size_t>(e)])];
    } while (e != d);
  }
  return L.vertices - n / 2 + faces == 2;
}

struct Collector {
  std::map<std::string, Skeleton> found;
  long long matchings = 0;
  long long spherical = 0;
};

void record(const Layout& L, const std::vector<int>& theta, Distinguish mode, Collector& out) {
  ++out.matchings;
  if (!spherical(L, theta)) return;
  ++out.spherical;
  CombinatorialMap m = CombinatorialMap::build_unchecked(L.sigma, theta, L.roles);  // spherical() already checked
  auto insert = [&](Skeleton sk) {
    auto code = cmap::canonical_code(sk);
    if (!out.found.count(code)) out.found.emplace(std::move(code), cmap::canonical_form(sk));
  };
  if (mode == Distinguish::None) {
    insert(Skeleton{m, std::nullopt});
    return;
  }
  for (int v = 0; v < m.vertices(); ++v) {
    bool pick = mode == Distinguish::White ? m.role(v) == Role::White
                                           : m.role(v) == Role::Black && m.valency(v) == 1;
    if (pick) insert(Skeleton{m, v});
  }
}

// Completes a partial pairing by always matching the smallest free dart.
void complete(const Layout& L, std::vector<int>& theta, Distinguish mode, Collector& out) {
  const int n = static_cast<int>(theta.size());
  int i = 0;
  while (i < n && theta[static_cast<std::size_t>(i)] != -1) ++i;
  if (i == n) {
    record(L, theta, mode, out);
    return;
  }
  for (int j = i + 1; j < n; ++j) {
    if (theta[static_cast<std::size_t>(j)] != -1) continue;
    if (L.white_dart[static_cast<std::size_t>(i)] && L.white_dart[static_cast<std::size_t>(j)]) continue;
    theta[static_cast<std::size_t>(i)] = j;
    theta[static_cast<std::size_t>(j)] = i;
    complete(L, theta, mode, out);
    theta[static_cast<std::size_t>(i)] = theta[static_cast<std::size_t>(j)] = -1;
  }
}

// Partial pairings of the first `depth` smallest free darts, used as
// independent work items.
void prefixes(const Layout& L, std::vector<int>& theta, int depth, std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(theta.size());
  int i = 0;
  while (i < n && theta[static_cast<std::size_t>(i)] != -1) ++i;
  if (depth == 0 || i == n) {
    out.push_back(theta);
    return;
  }
  for (int j = i + 1; j < n; ++j) {
    if (theta[static_cast<std::size_t>(j)] != -1) continue;
    if (L.white_dart[static_cast<std::size_t>(i)] && L.white_dart[static_cast<std::size_t>(j)]) continue;
    theta[static_cast<std::size_t>(i)] = j;
    theta[static_cast<std::size_t>(j)] = i;
    prefixes(L, theta, depth - 1, out);
    theta[static_cast<std::size_t>(i)] = theta[static_cast<std::size_t>(j)] = -1;
  }
}

}  // namespace

EnumerationResult enumerate_skeletons(const VertexSpec& spec, Distinguish mode, Backend backend) {
  EnumerationResult result;
  const Layout L = make_layout(spec);
  const int n = static_cast<int>(L.sigma.size());
  if (n == 0 || n % 2 != 0) return result;

  std::vector<int> theta(static_cast<std::size_t>(n), -1);
  Collector total;
  if (backend == Backend::Serial) {
    complete(L, theta, mode, total);
  } else {
    std::vector<std::vector<int>> work;
    prefixes(L, theta, 2, work);
    std::vector<Collector> parts(work.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(work.size()); ++k) {
      auto t = work[static_cast<std::size_t>(k)];
      complete(L, t, mode, parts[static_cast<std::size_t>(k)]);
    }
    // merging in work order keeps the result independent of scheduling
    for (auto& p : parts) {
      total.matchings += p.matchings;
      total.spherical += p.spherical;
      for (auto& [code, sk] : p.found) total.found.emplace(code, std::move(sk));
    }
  }
  result.matchings = total.matchings;
  result.spherical = total.spherical;
  for (auto& [code, sk] : total.found) {
    result.codes.push_back(code);
    result.skeletons.push_back(std::move(sk));
  }
  return result;
}

}  // namespace sextic::enumerate
