#include "sextic/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace sextic::fpgroup {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::uint64_t perm_order(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Perm perm_from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Perm p = perm_identity(n);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0 || c[k] > n) throw std::out_of_range("perm_from_cycles: point out of range");
      p[c[k] - 1] = c[(k + 1) % c.size()] - 1;
    }
  return p;
}

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ > kMaxDegree) throw DegreeTooLarge(degree_);
  for (const auto& g : gens_)
    if (g.size() != degree_) throw std::invalid_argument("PermGroup: generator of wrong degree");
  schreier_sims();
}

std::vector<std::size_t> PermGroup::level_gens(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < strong_.size(); ++k) {
    bool fixes = true;
    for (std::size_t b = 0; b < i && fixes; ++b) fixes = strong_[k][base_[b]] == base_[b];
    if (fixes) out.push_back(k);
  }
  return out;
}

void PermGroup::build_level(std::size_t i) {
  Level& L = levels_[i];
  L.point = base_[i];
  L.pos.assign(degree_, -1);
  L.orbit.assign(1, L.point);
  L.u.assign(1, perm_identity(degree_));
  L.uinv.assign(1, perm_identity(degree_));
  L.pos[L.point] = 0;
  auto gens = level_gens(i);
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    std::uint32_t x = L.orbit[k];
    for (auto g : gens) {
      std::uint32_t y = strong_[g][x];
      if (L.pos[y] != -1) continue;
      L.pos[y] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(y);
      Perm uy = perm_mul(L.u[k], strong_[g]);
      L.uinv.push_back(perm_inv(uy));
      L.u.push_back(std::move(uy));
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    std::int32_t k = levels_[i].pos[p[levels_[i].point]];
    if (k == -1) return {std::move(p), i};
    p = perm_mul(p, levels_[i].uinv[static_cast<std::size_t>(k)]);
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
  auto moved_point = [](const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != i) return static_cast<std::uint32_t>(i);
    return static_cast<std::uint32_t>(p.size());
  };
  auto new_level_for = [&](const Perm& p) {
    base_.push_back(moved_point(p));
    levels_.emplace_back();
  };
  for (const auto& g : gens_) {
    if (perm_is_identity(g)) continue;
    strong_.push_back(g);
    bool fixes_all = true;
    for (auto b : base_) fixes_all = fixes_all && g[b] == b;
    if (fixes_all) new_level_for(g);
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) build_level(i);

  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restart = false;
    auto gens = level_gens(i);
    const Level& L = levels_[i];
    for (std::size_t k = 0; !restart && k < L.orbit.size(); ++k) {
      for (auto g : gens) {
        Perm s = perm_mul(L.u[k], strong_[g]);
        s = perm_mul(s, L.uinv[static_cast<std::size_t>(L.pos[s[L.point]])]);
        auto [h, j] = sift(std::move(s), i + 1);
        if (perm_is_identity(h)) continue;
        strong_.push_back(h);
        if (j == levels_.size()) new_level_for(h);
        for (std::size_t t = i + 1; t <= j && t < levels_.size(); ++t) build_level(t);
        // levels between i and j also see the new generator
        for (std::size_t t = 0; t <= i; ++t) build_level(t);
        i = j + 1;
        restart = true;
        break;
      }
    }
  }
  order_ = 1;
  for (const auto& L : levels_) order_ *= L.orbit.size();
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& L : levels_) out.push_back(L.orbit.size());
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  return perm_is_identity(sift(p, 0).first);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (perm_mul(gens_[i], gens_[j]) != perm_mul(gens_[j], gens_[i])) return false;
  return true;
}

Perm PermGroup::evaluate(const Word& w) const {
  Perm p = perm_identity(degree_);
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto l = w.letter(i);
    if (static_cast<std::size_t>(l.gen) >= gens_.size()) throw std::out_of_range("PermGroup::evaluate: generator");
    p = perm_mul(p, l.exp > 0 ? gens_[static_cast<std::size_t>(l.gen)] : perm_inv(gens_[static_cast<std::size_t>(l.gen)]));
  }
  return p;
}

std::vector<Perm> PermGroup::elements() const {
  std::vector<Perm> out{perm_identity(degree_)};
  std::unordered_set<Perm, PermHash> seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens_) {
      Perm p = perm_mul(out[k], g);
      if (seen.insert(p).second) out.push_back(std::move(p));
    }
  return out;
}

PermGroup regular_rep(const CosetTable& table) {
  const std::size_t n = table.index();
  std::vector<Perm> gens;
  for (int g = 0; g < table.generators(); ++g) {
    Perm p(n);
    for (std::size_t c = 0; c < n; ++c) p[c] = static_cast<std::uint32_t>(table.act(c, 2 * g));
    gens.push_back(std::move(p));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup derived_subgroup(const PermGroup& G) {
  const auto& g = G.generators();
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Perm c = perm_mul(perm_mul(perm_inv(g[i]), perm_inv(g[j])), perm_mul(g[i], g[j]));
      if (!perm_is_identity(c)) gens.push_back(c);
    }
  PermGroup H(G.degree(), gens);
  // normal closure
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < gens.size() && !grew; ++k)
      for (const auto& x : g) {
        Perm c = perm_mul(perm_mul(perm_inv(x), gens[k]), x);
        if (!H.contains(c)) {
          gens.push_back(c);
          H = PermGroup(G.degree(), gens);
          grew = true;
          break;
        }
      }
  }
  return H;
}

bool is_perfect(const PermGroup& G) { return derived_subgroup(G).order() == G.order(); }

std::uint64_t element_order(const PermGroup& G, const Word& w) { return perm_order(G.evaluate(w)); }

PermGroup centralizer(const PermGroup& G, const PermGroup& H) {
  std::vector<Perm> found;
  for (const auto& x : G.elements()) {
    bool commutes = true;
    for (const auto& h : H.generators())
      if (perm_mul(x, h) != perm_mul(h, x)) {
        commutes = false;
        break;
      }
    if (commutes && !perm_is_identity(x)) found.push_back(x);
  }
  // keep only generators that enlarge the subgroup
  std::vector<Perm> gens;
  PermGroup C(G.degree(), {});
  for (const auto& x : found) {
    if (C.contains(x)) continue;
    gens.push_back(x);
    C = PermGroup(G.degree(), gens);
  }
  return C;
}

std::uint64_t intersection_order(const PermGroup& A, const PermGroup& B) {
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& big = A.order() <= B.order() ? B : A;
  std::uint64_t n = 0;
  for (const auto& x : small.elements())
    if (big.contains(x)) ++n;
  return n;
}

std::uint64_t subgroup_index(const PermGroup& G, const std::vector<Word>& gens) {
  std::vector<Perm> images;
  for (const auto& w : gens) images.push_back(G.evaluate(w));
  PermGroup H(G.degree(), images);
  for (const auto& p : images)
    if (!G.contains(p)) throw std::logic_error("subgroup_index: image outside G");
  return G.order() / H.order();
}

std::size_t count_involutions(const PermGroup& G) {
  std::size_t n = 0;
  for (const auto& x : G.elements())
    if (perm_order(x) == 2) ++n;
  return n;
}

bool is_cyclic(const PermGroup& G) {
  if (!G.is_abelian()) return false;
  for (const auto& x : G.elements())
    if (perm_order(x) == G.order()) return true;
  return false;
}

std::string StructureTag::str() const {
  switch (kind) {
    case StructureKind::Cyclic:
      return "C" + std::to_string(n);
    case StructureKind::SL25:
      return "SL(2,5)";
    default:
      return "unknown";
  }
}

StructureTag identify(const PermGroup& G) {
  if (is_cyclic(G)) return {StructureKind::Cyclic, G.order()};
  if (G.order() == 120 && is_perfect(G) && count_involutions(G) == 1) return {StructureKind::SL25, 120};
  return {};
}

}  // namespace sextic::fpgroup
