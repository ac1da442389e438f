#include "sextic/ade.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace sextic::ade {

namespace {

int kind_rank(Kind k) { return k == Kind::E ? 0 : k == Kind::D ? 1 : 2; }

bool canonical_less(const Label& a, const Label& b) {
  if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
  return a.k > b.k;
}

char kind_char(Kind k) { return k == Kind::A ? 'A' : k == Kind::D ? 'D' : 'E'; }

}  // namespace

std::string Label::str() const { return std::string(1, kind_char(kind)) + std::to_string(k); }

SingularitySet& SingularitySet::add(Kind kind, int k, int count) {
  if (count < 0) throw std::invalid_argument("SingularitySet: negative count");
  if (kind == Kind::A && k == 0) return *this;
  if (kind == Kind::D && k == 2) return add(Kind::A, 1, 2 * count);
  if (kind == Kind::D && k == 3) return add(Kind::A, 3, count);
  const bool ok = (kind == Kind::A && k >= 1) || (kind == Kind::D && k >= 4) || (kind == Kind::E && k >= 6 && k <= 8);
  if (!ok) throw std::invalid_argument("SingularitySet: no simple singularity " + Label{kind, k}.str());
  for (int i = 0; i < count; ++i) {
    Label l{kind, k};
    labels_.insert(std::upper_bound(labels_.begin(), labels_.end(), l, canonical_less), l);
  }
  return *this;
}

SingularitySet& SingularitySet::add(const SingularitySet& other) {
  for (const auto& l : other.labels_) add(l);
  return *this;
}

int SingularitySet::milnor() const {
  int mu = 0;
  for (const auto& l : labels_) mu += l.milnor();
  return mu;
}

std::string SingularitySet::str() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size();) {
    std::size_t j = i;
    while (j < labels_.size() && labels_[j] == labels_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += labels_[i].str();
    i = j;
  }
  return out;
}

SingularitySet SingularitySet::parse(std::string_view text) {
  SingularitySet s;
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("SingularitySet::parse: bad text '" + std::string(text) + "'"); };
  if (text.empty()) return s;
  while (true) {
    while (i < text.size() && text[i] == ' ') ++i;
    int count = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), count);
      if (ec != std::errc()) fail();
      i = static_cast<std::size_t>(p - text.data());
    }
    if (i >= text.size()) fail();
    Kind kind;
    switch (text[i]) {
      case 'A': case 'a': kind = Kind::A; break;
      case 'D': case 'd': kind = Kind::D; break;
      case 'E': case 'e': kind = Kind::E; break;
      default: fail(); return s;
    }
    ++i;
    int k = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), k);
    if (ec != std::errc()) fail();
    i = static_cast<std::size_t>(p - text.data());
    s.add(kind, k, count);
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    if (text[i] != '+') fail();
    ++i;
  }
  return s;
}

namespace {

// Nodes 0..n-1; for D and E the branch node is attached as the last node.
std::vector<std::vector<int>> dynkin_graph(const Label& t) {
  const int n = t.k;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  switch (t.kind) {
    case Kind::A:
      if (n < 1) throw UnsupportedDiagram("A_k needs k >= 1");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Kind::D:
      if (n < 4) throw UnsupportedDiagram("D_k needs k >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);  // chain 0..n-2
      link(n - 3, n - 1);
      break;
    case Kind::E:
      if (n < 6 || n > 8) throw UnsupportedDiagram("E_k needs 6 <= k <= 8");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);  // chain 0..n-2
      link(2, n - 1);
      break;
  }
  return adj;
}

}  // namespace

Label classify_tree(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) throw UnsupportedDiagram("empty diagram");
  int edges = 0, branch = -1;
  for (int v = 0; v < n; ++v) {
    const auto deg = adj[static_cast<std::size_t>(v)].size();
    edges += static_cast<int>(deg);
    if (deg > 3) throw UnsupportedDiagram("vertex of degree > 3");
    if (deg == 3) {
      if (branch != -1) throw UnsupportedDiagram("more than one branch vertex");
      branch = v;
    }
  }
  if (edges / 2 != n - 1) throw UnsupportedDiagram("not a tree");
  if (branch == -1) return {Kind::A, n};
  std::vector<int> arms;
  for (int start : adj[static_cast<std::size_t>(branch)]) {
    int len = 1, prev = branch, cur = start;
    while (adj[static_cast<std::size_t>(cur)].size() == 2) {
      int next = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1] : adj[static_cast<std::size_t>(cur)][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Kind::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Kind::E, n};
  throw UnsupportedDiagram("tree is not of type A, D or E");
}

std::vector<SingularitySet> dynkin_induced(const Label& type, int budget) {
  auto adj = dynkin_graph(type);
  const int n = type.k;
  if (budget < 0 || budget > n) return {};
  std::set<std::string> seen;
  std::vector<SingularitySet> out;
  std::vector<int> keep(static_cast<std::size_t>(n), 0);
  std::fill(keep.begin(), keep.begin() + budget, 1);
  std::sort(keep.begin(), keep.end());
  do {
    SingularitySet s;
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      if (!keep[static_cast<std::size_t>(v)] || comp[static_cast<std::size_t>(v)] != -1) continue;
      // collect the component and relabel it
      std::vector<int> nodes{v};
      comp[static_cast<std::size_t>(v)] = v;
      for (std::size_t k = 0; k < nodes.size(); ++k)
        for (int w : adj[static_cast<std::size_t>(nodes[k])])
          if (keep[static_cast<std::size_t>(w)] && comp[static_cast<std::size_t>(w)] == -1) {
            comp[static_cast<std::size_t>(w)] = v;
            nodes.push_back(w);
          }
      std::vector<std::vector<int>> sub(nodes.size());
      for (std::size_t a = 0; a < nodes.size(); ++a)
        for (int w : adj[static_cast<std::size_t>(nodes[a])]) {
          auto it = std::find(nodes.begin(), nodes.end(), w);
          if (it != nodes.end()) sub[a].push_back(static_cast<int>(it - nodes.begin()));
        }
      s.add(classify_tree(sub));
    }
    if (seen.insert(s.str()).second) out.push_back(s);
  } while (std::next_permutation(keep.begin(), keep.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sextic::ade
