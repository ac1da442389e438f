#include "sextic/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sextic::classify {

using cmap::CombinatorialMap;
using cmap::Orientation;
using cmap::Role;
using enumerate::Backend;
using enumerate::Distinguish;

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::string face_profile(const CombinatorialMap& m) {
  std::vector<int> g;
  for (const auto& r : cmap::faces(m)) g.push_back(r.gonality);
  std::sort(g.rbegin(), g.rend());
  std::string out;
  for (int x : g) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::vector<Skeleton> sigma2_census(Backend backend) {
  std::map<std::string, Skeleton> found;
  for (const auto& spec : enumerate::specs_for_total(4)) {
    auto r = enumerate::enumerate_skeletons(spec, Distinguish::None, backend);
    for (std::size_t i = 0; i < r.skeletons.size(); ++i) found.emplace(r.codes[i], r.skeletons[i]);
  }
  std::vector<Skeleton> out;
  for (auto& [code, sk] : found) out.push_back(std::move(sk));
  out.push_back(Skeleton{CombinatorialMap::circle(), std::nullopt});
  return out;
}

std::vector<Marking> splitting_markings(const Skeleton& sk) {
  const auto& m = sk.map;
  std::vector<Marking> out;
  if (m.is_circle()) return out;
  std::vector<int> tri;
  for (int v = 0; v < m.vertices(); ++v) {
    if (m.role(v) != Role::Black) continue;
    if (m.valency(v) != 3) return out;
    tri.push_back(v);
  }
  Marking mk(at(m.vertices()), -1);
  // index of dart d at its (marked) vertex: 1 for e1, 2 for e2, 3 for e3
  auto index = [&](int d) {
    int e1 = mk[at(m.vertex_of(d))];
    if (e1 == -1) return 0;
    if (d == e1) return 1;
    return m.sigma(e1) == d ? 2 : 3;
  };
  auto edge_ok = [&](int d) {
    int e = m.theta(d);
    int vd = m.vertex_of(d), ve = m.vertex_of(e);
    bool bd = m.role(vd) == Role::Black, be = m.role(ve) == Role::Black;
    if (bd && be) {
      if (mk[at(vd)] == -1 || mk[at(ve)] == -1) return true;
      int i = index(d), j = index(e);
      return (i == 1 && j == 1) || (i == 2 && j == 3) || (i == 3 && j == 2);
    }
    int black_end = bd ? d : e;
    if (mk[at(m.vertex_of(black_end))] == -1) return true;
    return index(black_end) == 1;
  };
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == tri.size()) {
      out.push_back(mk);
      return;
    }
    int v = tri[k];
    for (int e1 : m.vertex_darts(v)) {
      mk[at(v)] = e1;
      bool ok = true;
      for (int d : m.vertex_darts(v)) ok = ok && edge_ok(d);
      if (ok) go(k + 1);
    }
    mk[at(v)] = -1;
  };
  go(0);
  return out;
}

Skeleton attach(const Skeleton& skp, int site) {
  const auto& m = skp.map;
  if (m.is_circle()) return circle_insertion_skeleton();
  const int n = m.darts();
  if (site < 0 || site >= n) throw std::out_of_range("attach: no dart " + std::to_string(site));
  std::vector<int> sigma = m.sigma_perm(), theta = m.theta_perm();
  std::vector<Role> roles = m.roles();
  const int vu = n, vd = n + 1, ve = n + 2, ud = n + 3;
  const int e = theta[at(site)];
  sigma.insert(sigma.end(), {vd, ve, vu, ud});
  theta.insert(theta.end(), {ud, site, e, vu});
  theta[at(site)] = vd;
  theta[at(e)] = ve;
  roles.push_back(Role::Black);
  roles.push_back(Role::White);
  auto out = CombinatorialMap::build(std::move(sigma), std::move(theta), std::move(roles));
  return {out, out.vertex_of(ud)};
}

Skeleton remove_insertion(const Skeleton& sk) {
  const auto& m = sk.map;
  if (!sk.distinguished || m.is_circle()) throw std::invalid_argument("remove_insertion: no insertion");
  const int u = *sk.distinguished;
  if (m.role(u) != Role::White) throw std::invalid_argument("remove_insertion: distinguished vertex is not white");
  const int ud = m.vertex_darts(u)[0];
  const int vu = m.theta(ud);
  const int v = m.vertex_of(vu);
  if (m.valency(v) != 3) throw std::invalid_argument("remove_insertion: v is not trivalent");
  const int a = m.sigma(vu), b = m.sigma(a);
  if (m.theta(a) == b) return {CombinatorialMap::circle(), std::nullopt};
  const int n = m.darts();
  std::vector<int> renum(at(n), -1);
  int next = 0;
  for (int d = 0; d < n; ++d)
    if (d != ud && d != vu && d != a && d != b) renum[at(d)] = next++;
  std::vector<int> sigma(at(next)), theta(at(next));
  for (int d = 0; d < n; ++d) {
    if (renum[at(d)] == -1) continue;
    sigma[at(renum[at(d)])] = renum[at(m.sigma(d))];
    int t = m.theta(d);
    if (t == a) t = m.theta(b);
    else if (t == b) t = m.theta(a);
    theta[at(renum[at(d)])] = renum[at(t)];
  }
  std::vector<Role> roles;
  for (int w = 0; w < m.vertices(); ++w)
    if (w != u && w != v) roles.push_back(m.role(w));
  return {CombinatorialMap::build(std::move(sigma), std::move(theta), std::move(roles)), std::nullopt};
}

bool is_reducible(const Skeleton& skp, int site) {
  if (skp.map.is_circle()) return true;
  return !splitting_markings(attach(skp, site)).empty();
}

FiberData fiber_data(const Skeleton& sk, int total) {
  FiberData f;
  const auto& m = sk.map;
  int weighted = 0;
  for (int v = 0; v < m.vertices(); ++v) {
    const int val = m.valency(v);
    if (m.role(v) == Role::White) {
      weighted += 3;
      if (!(sk.distinguished && *sk.distinguished == v)) ++f.e7;
    } else if (val == 1) {
      weighted += 3;
      ++f.e6;
    } else if (val == 2) {
      weighted += 4;
      ++f.e8;
    } else {
      weighted += 1;
    }
  }
  const int rest = total - weighted;
  if (rest < 0 || rest % 2 != 0)
    throw CountViolation("skeleton weight " + std::to_string(weighted) + " incompatible with total " + std::to_string(total));
  f.d = rest / 2;
  for (const auto& r : cmap::faces(m)) f.gonalities.push_back(r.gonality);
  return f;
}

ade::SingularitySet singularity_set(const Skeleton& sk, const std::vector<int>& d_regions) {
  auto f = fiber_data(sk);
  ade::SingularitySet s;
  s.add(ade::Kind::E, 8);
  s.add(ade::Kind::E, 6, f.e6);
  s.add(ade::Kind::E, 8, f.e8);
  s.add(ade::Kind::E, 7, f.e7);
  for (std::size_t r = 0; r < f.gonalities.size(); ++r) {
    const int g = f.gonalities[r];
    if (std::find(d_regions.begin(), d_regions.end(), static_cast<int>(r)) != d_regions.end())
      s.add(ade::Kind::D, g + 4);
    else
      s.add(ade::Kind::A, std::max(0, g - 1));
  }
  return s;
}

namespace {

// Region permutations induced by the symmetries.  A reversing symmetry
// sends the region of d to the region of theta(psi(d)).
struct RegionAction {
  std::vector<std::vector<int>> preserving, reversing;
};

RegionAction region_action(const Skeleton& sk) {
  RegionAction out;
  const auto& m = sk.map;
  const auto fod = cmap::face_of_dart(m);
  const auto regs = cmap::faces(m);
  auto sy = cmap::symmetries(sk);
  auto convert = [&](const std::vector<int>& psi, bool rev) {
    std::vector<int> p(regs.size());
    for (std::size_t r = 0; r < regs.size(); ++r) {
      int d = regs[r].boundary.front();
      int img = psi[at(d)];
      p[r] = fod[at(rev ? m.theta(img) : img)];
    }
    return p;
  };
  for (const auto& psi : sy.preserving) out.preserving.push_back(convert(psi, false));
  for (const auto& psi : sy.reversing) out.reversing.push_back(convert(psi, true));
  return out;
}

std::vector<int> apply(const std::vector<int>& perm, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int r : subset) out.push_back(perm[at(r)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

}  // namespace

std::vector<CurveClass> deformation_classes(const Skeleton& sk) {
  const auto f = fiber_data(sk);
  const int nreg = static_cast<int>(f.gonalities.size());
  const auto act = region_action(sk);
  const bool chiral = act.reversing.empty();
  const bool reducible = !splitting_markings(sk).empty();

  std::map<std::vector<int>, int> orbit_of;
  std::vector<std::vector<int>> reps;
  for (const auto& s : subsets(nreg, f.d)) {
    if (orbit_of.count(s)) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(s);
    for (const auto& p : act.preserving) orbit_of[apply(p, s)] = id;
    orbit_of[s] = id;
  }
  std::vector<CurveClass> out;
  std::set<int> skipped;
  for (int id = 0; id < static_cast<int>(reps.size()); ++id) {
    if (skipped.count(id)) continue;
    const auto& s = reps[static_cast<std::size_t>(id)];
    bool real = false;
    for (const auto& p : act.reversing) {
      int img = orbit_of.at(apply(p, s));
      if (img == id) real = true;
      else skipped.insert(img);  // the mirror class of a pair
    }
    CurveClass c;
    c.sk = sk;
    c.d_regions = s;
    c.reducible = reducible;
    c.real = real && !chiral;
    c.set = singularity_set(sk, s);
    out.push_back(std::move(c));
  }
  return out;
}

Skeleton monovalent_v_skeleton() {
  auto m = CombinatorialMap::build({0, 1}, {1, 0}, {Role::Black, Role::White});
  return {m, 1};
}

Skeleton bivalent_v_skeleton() {
  // v: darts 0,1; x: darts 2,3,4 with the loop {3,4}; u: dart 5
  auto m = CombinatorialMap::build({1, 0, 3, 4, 2, 5}, {5, 2, 1, 4, 3, 0}, {Role::Black, Role::Black, Role::White});
  return {m, 2};
}

Skeleton circle_insertion_skeleton() {
  auto m = CombinatorialMap::build({1, 2, 0, 3}, {3, 2, 1, 0}, {Role::Black, Role::White});
  return {m, 1};
}

namespace {

struct Insertion {
  Skeleton sk;
  Shape shape;
  std::string profile;  // face profile of the Sigma_2 skeleton
};

// Insertions deduplicated up to orientation-preserving isomorphism, keyed by
// the preserving code.
std::map<std::string, Insertion> insertions(Backend backend) {
  std::map<std::string, Insertion> out;
  for (const auto& skp : sigma2_census(backend)) {
    if (skp.map.is_circle()) continue;
    const auto prof = face_profile(skp.map);
    for (int d = 0; d < skp.map.darts(); ++d) {
      auto sk = attach(skp, d);
      out.emplace(cmap::canonical_code(sk), Insertion{cmap::canonical_form(sk), Shape::General, prof});
    }
  }
  auto extra = [&](Skeleton sk, Shape shape) {
    out.emplace(cmap::canonical_code(sk), Insertion{cmap::canonical_form(sk), shape, ""});
  };
  extra(monovalent_v_skeleton(), Shape::MonovalentV);
  extra(bivalent_v_skeleton(), Shape::BivalentV);
  extra(circle_insertion_skeleton(), Shape::Circle);
  return out;
}

std::string figure_letter(Kind kind, Shape shape, const std::string& profile) {
  static const std::map<std::string, std::string> irreducible{
      {"3,3,3,3", "a"}, {"9,1,1,1", "b"}, {"6,3,2,1", "c"}, {"5,5,1,1", "d"}, {"8,2,1,1", "e"},
      {"4,1,1", "f"},   {"3,1", "g"},     {"2,1", "h"},     {"1,1", "i"}};
  static const std::map<std::string, std::string> reducible{
      {"6,3,2,1", "a"}, {"4,4,2,2", "b"}, {"8,2,1,1", "c"}, {"2,2,2", "d"}, {"4,1,1", "e"}, {"2,1", "f"}};
  switch (shape) {
    case Shape::MonovalentV: return "k";
    case Shape::BivalentV: return "j";
    case Shape::Circle: return "g";
    case Shape::Isotrivial: return "isotrivial";
    case Shape::General: break;
  }
  const auto& table = kind == Kind::Irreducible ? irreducible : reducible;
  auto it = table.find(profile);
  return it == table.end() ? "?" : it->second;
}

int letter_rank(const std::string& f) { return f == "isotrivial" ? 1000 : f.empty() ? 999 : f[0]; }

}  // namespace

std::vector<Skeleton> all_insertions(Backend backend) {
  std::vector<Skeleton> out;
  for (auto& [code, ins] : insertions(backend)) out.push_back(std::move(ins.sk));
  return out;
}

std::vector<Skeleton> direct_insertions(Backend backend) {
  std::map<std::string, Skeleton> found;
  for (const auto& spec : enumerate::specs_for_total(8, 1)) {
    auto r = enumerate::enumerate_skeletons(spec, Distinguish::White, backend);
    for (std::size_t i = 0; i < r.skeletons.size(); ++i) found.emplace(r.codes[i], r.skeletons[i]);
  }
  std::vector<Skeleton> out;
  for (auto& [code, sk] : found) out.push_back(std::move(sk));
  return out;
}

std::vector<TableRow> classify(Kind kind, Backend backend) {
  const bool want_reducible = kind == Kind::Reducible;
  // one skeleton per mirror pair
  std::map<std::string, Insertion> by_mirror;
  for (auto& [code, ins] : insertions(backend)) by_mirror.emplace(cmap::canonical_code(ins.sk, Orientation::Either), ins);

  std::map<std::pair<std::string, std::string>, TableRow> rows;
  for (const auto& [code, ins] : by_mirror) {
    for (auto& c : deformation_classes(ins.sk)) {
      if (c.reducible != want_reducible) continue;
      c.shape = ins.shape;
      c.fragment = figure_letter(kind, ins.shape, ins.profile);
      auto& row = rows[{c.fragment, c.set.str()}];
      row.set = c.set;
      row.fragment = c.fragment;
      row.reducible = c.reducible;
      row.shape = c.shape;
      (c.real ? row.n_r : row.n_c) += 1;
      row.classes.push_back(std::move(c));
    }
  }
  std::vector<TableRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  if (want_reducible) {
    TableRow iso;
    iso.set = ade::SingularitySet::parse("E8+E7+D4");
    iso.fragment = "isotrivial";
    iso.n_r = 1;
    iso.reducible = true;
    iso.shape = Shape::Isotrivial;
    out.push_back(std::move(iso));
  }
  std::stable_sort(out.begin(), out.end(), [](const TableRow& a, const TableRow& b) {
    if (letter_rank(a.fragment) != letter_rank(b.fragment)) return letter_rank(a.fragment) < letter_rank(b.fragment);
    if (a.set.milnor() != b.set.milnor()) return a.set.milnor() < b.set.milnor();
    // larger leading non-E8 singularity first
    return b.set < a.set;
  });
  return out;
}

Totals totals(const std::vector<TableRow>& rows) {
  Totals t;
  std::set<std::string> sets;
  for (const auto& r : rows) {
    t.classes += r.n_r + 2 * r.n_c;
    t.real += r.n_r;
    t.pairs += r.n_c;
    sets.insert(r.set.str());
  }
  t.sets = static_cast<int>(sets.size());
  return t;
}

std::vector<Skeleton> e8_perturbation_census(Backend backend) {
  std::map<std::string, Skeleton> found;
  for (const auto& spec : enumerate::specs_for_total(6)) {
    if (spec.mono < 1) continue;
    auto r = enumerate::enumerate_skeletons(spec, Distinguish::MonoBlack, backend);
    for (std::size_t i = 0; i < r.skeletons.size(); ++i) found.emplace(r.codes[i], r.skeletons[i]);
  }
  std::vector<Skeleton> out;
  for (auto& [code, sk] : found) out.push_back(std::move(sk));
  return out;
}

std::vector<ade::SingularitySet> e8_perturbation_sets(const std::vector<Skeleton>& census) {
  std::set<std::string> seen;
  std::vector<ade::SingularitySet> out;
  for (const auto& sk : census) {
    const auto& m = sk.map;
    int weighted = 0, e6 = 0, e8 = 0, e7 = 0;
    for (int v = 0; v < m.vertices(); ++v) {
      const int val = m.valency(v);
      const bool u = sk.distinguished && *sk.distinguished == v;
      if (m.role(v) == Role::White) weighted += 3, ++e7;
      else if (val == 1) weighted += 3, e6 += u ? 0 : 1;
      else if (val == 2) weighted += 4, ++e8;
      else weighted += 1;
    }
    const int rest = 6 - weighted;
    if (rest < 0 || rest % 2 != 0) throw CountViolation("perturbation skeleton of wrong weight");
    const auto regs = cmap::faces(m);
    for (const auto& s : subsets(static_cast<int>(regs.size()), rest / 2)) {
      ade::SingularitySet set;
      set.add(ade::Kind::E, 6, e6).add(ade::Kind::E, 8, e8).add(ade::Kind::E, 7, e7);
      for (std::size_t r = 0; r < regs.size(); ++r) {
        const int g = regs[r].gonality;
        if (std::find(s.begin(), s.end(), static_cast<int>(r)) != s.end()) set.add(ade::Kind::D, g + 4);
        else set.add(ade::Kind::A, std::max(0, g - 1));
      }
      if (seen.insert(set.str()).second) out.push_back(set);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sextic::classify
