#include "sextic/cmap.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace sextic::cmap {

namespace {

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> hit(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

bool connected(const CombinatorialMap& m) {
  if (m.darts() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(m.darts()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int e : {m.sigma(d), m.theta(d)})
      if (!seen[static_cast<std::size_t>(e)]) {
        seen[static_cast<std::size_t>(e)] = 1;
        ++count;
        stack.push_back(e);
      }
  }
  return count == m.darts();
}

}  // namespace

CombinatorialMap CombinatorialMap::assemble(std::vector<int> sigma, std::vector<int> theta, std::vector<Role> roles) {
  if (sigma.size() != theta.size()) throw MapError(MapErrorKind::Malformed, "sigma and theta act on different dart sets");
  if (!is_permutation(sigma)) throw MapError(MapErrorKind::Malformed, "sigma is not a permutation");
  if (!is_permutation(theta)) throw MapError(MapErrorKind::NotInvolution, "theta is not a permutation");
  for (std::size_t d = 0; d < theta.size(); ++d) {
    if (theta[static_cast<std::size_t>(theta[d])] != static_cast<int>(d))
      throw MapError(MapErrorKind::NotInvolution, "theta is not an involution");
    if (theta[d] == static_cast<int>(d)) throw MapError(MapErrorKind::FixedPointInPairing, "theta fixes a dart");
  }
  CombinatorialMap m;
  const std::size_t n = sigma.size();
  m.sigma_ = std::move(sigma);
  m.theta_ = std::move(theta);
  m.sigma_inv_.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) m.sigma_inv_[static_cast<std::size_t>(m.sigma_[d])] = static_cast<int>(d);
  m.vertex_.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    if (m.vertex_[d] != -1) continue;
    const int v = static_cast<int>(m.vertex_darts_.size());
    m.vertex_darts_.emplace_back();
    int e = static_cast<int>(d);
    do {
      m.vertex_[static_cast<std::size_t>(e)] = v;
      m.vertex_darts_.back().push_back(e);
      e = m.sigma_[static_cast<std::size_t>(e)];
    } while (e != static_cast<int>(d));
  }
  if (roles.size() != m.vertex_darts_.size())
    throw MapError(MapErrorKind::Malformed, "role list does not match the vertex count");
  m.roles_ = std::move(roles);
  if (!connected(m)) throw MapError(MapErrorKind::Disconnected, "map is disconnected");
  return m;
}

CombinatorialMap CombinatorialMap::build_unchecked(std::vector<int> sigma, std::vector<int> theta, std::vector<Role> roles) {
  return assemble(std::move(sigma), std::move(theta), std::move(roles));
}

CombinatorialMap CombinatorialMap::build(std::vector<int> sigma, std::vector<int> theta, std::vector<Role> roles) {
  if (sigma.empty()) throw MapError(MapErrorKind::Malformed, "empty map; use CombinatorialMap::circle()");
  CombinatorialMap m = assemble(std::move(sigma), std::move(theta), std::move(roles));
  if (genus(m) != 0) throw MapError(MapErrorKind::NonSphericalGenus, "map is not spherical");
  for (int v = 0; v < m.vertices(); ++v) {
    if (m.role(v) == Role::Black && m.valency(v) > 3)
      throw MapError(MapErrorKind::BadValency, "black vertex of valency > 3");
    if (m.role(v) == Role::White) {
      if (m.valency(v) != 1) throw MapError(MapErrorKind::BadValency, "white vertex of valency != 1");
      int d = m.vertex_darts(v).front();
      if (m.role(m.vertex_of(m.theta(d))) != Role::Black)
        throw MapError(MapErrorKind::BadValency, "white vertex not adjacent to a black one");
    }
  }
  return m;
}

CombinatorialMap CombinatorialMap::circle() {
  CombinatorialMap m;
  m.circle_ = true;
  return m;
}

CombinatorialMap::VertexCounts CombinatorialMap::vertex_counts() const {
  VertexCounts c;
  for (int v = 0; v < vertices(); ++v) {
    if (role(v) == Role::White) {
      ++c.white;
      continue;
    }
    switch (valency(v)) {
      case 1: ++c.mono; break;
      case 2: ++c.bi; break;
      default: ++c.tri; break;
    }
  }
  return c;
}

CombinatorialMap CombinatorialMap::mirror() const {
  if (circle_) return *this;
  // sigma^-1 has the same orbits, and the smallest dart of each orbit is
  // unchanged, so the vertex numbering and roles carry over.
  return assemble(sigma_inv_, theta_, roles_);
}

nlohmann::json CombinatorialMap::to_json() const {
  nlohmann::json j;
  j["darts"] = darts();
  j["sigma"] = sigma_;
  j["theta"] = theta_;
  std::vector<std::string> roles;
  for (auto r : roles_) roles.push_back(r == Role::Black ? "black" : "white");
  j["roles"] = roles;
  if (circle_) j["circle"] = true;
  return j;
}

CombinatorialMap CombinatorialMap::from_json(const nlohmann::json& j) {
  if (j.value("circle", false)) return circle();
  std::vector<Role> roles;
  for (const auto& r : j.at("roles")) {
    const auto s = r.get<std::string>();
    if (s == "black")
      roles.push_back(Role::Black);
    else if (s == "white")
      roles.push_back(Role::White);
    else
      throw MapError(MapErrorKind::Malformed, "unknown role '" + s + "'");
  }
  auto sigma = j.at("sigma").get<std::vector<int>>();
  if (j.at("darts").get<int>() != static_cast<int>(sigma.size()))
    throw MapError(MapErrorKind::Malformed, "dart count mismatch");
  return build(std::move(sigma), j.at("theta").get<std::vector<int>>(), std::move(roles));
}

std::vector<Region> faces(const CombinatorialMap& map) {
  if (map.is_circle()) return {Region{}, Region{}};
  std::vector<Region> out;
  std::vector<char> seen(static_cast<std::size_t>(map.darts()), 0);
  for (int d = 0; d < map.darts(); ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    Region r;
    int e = d;
    do {
      seen[static_cast<std::size_t>(e)] = 1;
      r.boundary.push_back(e);
      // e starts right after the corner (theta(prev), e) at its vertex
      if (map.role(map.vertex_of(e)) == Role::Black) ++r.gonality;
      e = map.phi(e);
    } while (e != d);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> face_of_dart(const CombinatorialMap& map) {
  std::vector<int> out(static_cast<std::size_t>(map.darts()), -1);
  auto fs = faces(map);
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int d : fs[f].boundary) out[static_cast<std::size_t>(d)] = static_cast<int>(f);
  return out;
}

int genus(const CombinatorialMap& map) {
  if (map.is_circle()) return 0;
  const int chi = map.vertices() - map.edges() + static_cast<int>(faces(map).size());
  return (2 - chi) / 2;
}

int Skeleton::vertex_flag(int v) const {
  return (map.role(v) == Role::White ? 1 : 0) + (distinguished && *distinguished == v ? 2 : 0);
}

namespace {

struct Trace {
  std::vector<int> code;
  std::vector<int> order;  // order[k] = dart receiving label k
};

Trace bfs_trace(const Skeleton& sk, int start, bool inverse) {
  const auto& m = sk.map;
  const int n = m.darts();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  Trace t;
  t.order.reserve(static_cast<std::size_t>(n));
  label[static_cast<std::size_t>(start)] = 0;
  t.order.push_back(start);
  for (std::size_t k = 0; k < t.order.size(); ++k) {
    int d = t.order[k];
    for (int e : {inverse ? m.sigma_inv(d) : m.sigma(d), m.theta(d)})
      if (label[static_cast<std::size_t>(e)] == -1) {
        label[static_cast<std::size_t>(e)] = static_cast<int>(t.order.size());
        t.order.push_back(e);
      }
  }
  t.code.reserve(static_cast<std::size_t>(3 * n));
  for (int d : t.order) {
    t.code.push_back(label[static_cast<std::size_t>(inverse ? m.sigma_inv(d) : m.sigma(d))]);
    t.code.push_back(label[static_cast<std::size_t>(m.theta(d))]);
    t.code.push_back(sk.vertex_flag(m.vertex_of(d)));
  }
  return t;
}

Trace best_trace(const Skeleton& sk, bool allow_mirror) {
  Trace best;
  bool have = false;
  // isomorphisms fix the distinguished vertex, so its darts suffice as starts
  std::vector<int> starts;
  if (sk.distinguished) {
    starts = sk.map.vertex_darts(*sk.distinguished);
  } else {
    for (int s = 0; s < sk.map.darts(); ++s) starts.push_back(s);
  }
  for (int inv = 0; inv <= (allow_mirror ? 1 : 0); ++inv)
    for (int s : starts) {
      Trace t = bfs_trace(sk, s, inv != 0);
      if (!have || t.code < best.code) {
        best = std::move(t);
        have = true;
      }
    }
  return best;
}

}  // namespace

std::string canonical_code(const Skeleton& sk, Orientation orientation) {
  if (sk.map.is_circle()) return "circle";
  if (sk.map.darts() > 255) throw std::invalid_argument("canonical_code: too many darts");
  Trace t = best_trace(sk, orientation == Orientation::Either);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * (t.code.size() + 1));
  auto put = [&](int x) {
    out += hex[(x >> 4) & 15];
    out += hex[x & 15];
  };
  put(sk.map.darts());
  for (int x : t.code) put(x);
  return out;
}

Skeleton relabel(const Skeleton& sk, const std::vector<int>& order) {
  if (sk.map.is_circle()) return sk;
  const auto& m = sk.map;
  const int n = m.darts();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("relabel: order must list every dart");
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) label[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  if (std::find(label.begin(), label.end(), -1) != label.end()) throw std::invalid_argument("relabel: not a permutation");
  std::vector<int> sigma(static_cast<std::size_t>(n)), theta(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    sigma[static_cast<std::size_t>(label[static_cast<std::size_t>(d)])] = label[static_cast<std::size_t>(m.sigma(d))];
    theta[static_cast<std::size_t>(label[static_cast<std::size_t>(d)])] = label[static_cast<std::size_t>(m.theta(d))];
  }
  // vertices of the relabeled map in order of smallest new dart
  std::vector<int> new_vertex_of_old(static_cast<std::size_t>(m.vertices()), -1);
  std::vector<Role> roles;
  for (int k = 0; k < n; ++k) {
    int v = m.vertex_of(order[static_cast<std::size_t>(k)]);
    if (new_vertex_of_old[static_cast<std::size_t>(v)] == -1) {
      new_vertex_of_old[static_cast<std::size_t>(v)] = static_cast<int>(roles.size());
      roles.push_back(m.role(v));
    }
  }
  Skeleton out{CombinatorialMap::build_unchecked(std::move(sigma), std::move(theta), std::move(roles)), std::nullopt};
  if (sk.distinguished) out.distinguished = new_vertex_of_old[static_cast<std::size_t>(*sk.distinguished)];
  return out;
}

Skeleton canonical_form(const Skeleton& sk) {
  if (sk.map.is_circle()) return sk;
  return relabel(sk, best_trace(sk, false).order);
}

namespace {

// Extends phi(0) = target to a map automorphism, or returns empty.
std::vector<int> extend(const Skeleton& sk, int target, bool reversing) {
  const auto& m = sk.map;
  const int n = m.darts();
  std::vector<int> phi(static_cast<std::size_t>(n), -1), pre(static_cast<std::size_t>(n), -1);
  auto assign = [&](int d, int e) {
    if (phi[static_cast<std::size_t>(d)] == -1) {
      if (pre[static_cast<std::size_t>(e)] != -1) return false;
      if (sk.vertex_flag(m.vertex_of(d)) != sk.vertex_flag(m.vertex_of(e))) return false;
      phi[static_cast<std::size_t>(d)] = e;
      pre[static_cast<std::size_t>(e)] = d;
      return true;
    }
    return phi[static_cast<std::size_t>(d)] == e;
  };
  if (!assign(0, target)) return {};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    int e = phi[static_cast<std::size_t>(d)];
    std::pair<int, int> steps[2] = {{m.sigma(d), reversing ? m.sigma_inv(e) : m.sigma(e)}, {m.theta(d), m.theta(e)}};
    for (auto [dd, ee] : steps) {
      bool fresh = phi[static_cast<std::size_t>(dd)] == -1;
      if (!assign(dd, ee)) return {};
      if (fresh) stack.push_back(dd);
    }
  }
  return phi;
}

}  // namespace

Symmetries symmetries(const Skeleton& sk) {
  Symmetries out;
  if (sk.map.is_circle()) return out;
  for (int reversing = 0; reversing <= 1; ++reversing)
    for (int t = 0; t < sk.map.darts(); ++t) {
      auto phi = extend(sk, t, reversing != 0);
      if (phi.empty()) continue;
      (reversing ? out.reversing : out.preserving).push_back(std::move(phi));
    }
  return out;
}

bool brute_force_isomorphic(const Skeleton& a, const Skeleton& b, bool reversing) {
  if (a.map.is_circle() || b.map.is_circle()) return a.map.is_circle() && b.map.is_circle();
  const auto& ma = a.map;
  const auto& mb = b.map;
  const int n = ma.darts();
  if (mb.darts() != n) return false;
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto sb = [&](int e) { return reversing ? mb.sigma_inv(e) : mb.sigma(e); };
  // A partial bijection is consistent if it commutes with sigma and theta
  // wherever both sides are defined.
  auto consistent = [&](int d) {
    int e = img[static_cast<std::size_t>(d)];
    if (a.vertex_flag(ma.vertex_of(d)) != b.vertex_flag(mb.vertex_of(e))) return false;
    for (int x = 0; x < n; ++x) {
      int y = img[static_cast<std::size_t>(x)];
      if (y == -1) continue;
      if (ma.sigma(x) == d && sb(y) != e) return false;
      if (x == d && img[static_cast<std::size_t>(ma.sigma(d))] != -1 && img[static_cast<std::size_t>(ma.sigma(d))] != sb(e)) return false;
      if (ma.theta(x) == d && mb.theta(y) != e) return false;
    }
    return true;
  };
  std::function<bool(int)> go = [&](int d) {
    if (d == n) return true;
    for (int e = 0; e < n; ++e) {
      if (used[static_cast<std::size_t>(e)]) continue;
      img[static_cast<std::size_t>(d)] = e;
      used[static_cast<std::size_t>(e)] = 1;
      if (consistent(d) && go(d + 1)) return true;
      used[static_cast<std::size_t>(e)] = 0;
      img[static_cast<std::size_t>(d)] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace sextic::cmap
