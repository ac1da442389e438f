#include "sextic/vankampen.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "sextic/braid.hpp"
#include "sextic/smith.hpp"

namespace sextic::vankampen {

using fpgroup::braid_bracket;
using fpgroup::commutator;
using fpgroup::equate;

Word alpha(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("alpha index must be 1..3");
  return Word::gen(i - 1);
}

Word rho() { return alpha(1) * alpha(2) * alpha(3); }
Word alpha_s() { return alpha(3).conj(alpha(2)); }
Word alpha_t() { return alpha(3).conj(alpha(1) * alpha(2)); }

std::vector<Word> relations_at_infinity(bool short_form) {
  const Word a1 = alpha(1), a2 = alpha(2), a3 = alpha(3);
  Word r1 = short_form ? (a1 * a2.inverse()).pow(5) * a2.pow(6) : equate(rho().pow(3), a1 * a2.pow(2));
  return {r1, equate(a2 * a1 * a2.inverse(), a3), commutator(a1, a2.pow(3))};
}

Presentation standard_group(const SexticGroupSpec& spec) {
  Presentation p(3, relations_at_infinity(spec.short_form));
  // braid_bracket(.., 0) is the empty word and is dropped by add()
  p.add(braid_bracket(alpha(1), alpha(2), spec.l));
  p.add(braid_bracket(alpha(1), alpha_s(), spec.m));
  p.add(braid_bracket(alpha(2), alpha_t(), spec.n));
  p.add(spec.extra);
  if (spec.quotient_central) p.add(*spec.quotient_central);
  return p;
}

std::size_t size(const SexticGroupSpec& spec, std::size_t limit) {
  return fpgroup::group_order(standard_group(spec), limit);
}

std::size_t size(int l, int m, int n, std::size_t limit) { return size(SexticGroupSpec{l, m, n, {}, {}, false}, limit); }

std::size_t size2(int l, int m, int n, std::size_t limit) {
  return size(SexticGroupSpec{l, m, n, {}, alpha(2).pow(3), false}, limit);
}

// ---------------------------------------------------------------------------
// (l,m,n)

std::string Lmn::str() const {
  if (fragment == Fragment::LeafOut) return "";
  auto f = [](int x) { return x == 0 ? std::string("-") : std::to_string(x); };
  return "(" + f(l) + "," + f(m) + "," + f(n) + ")";
}

namespace {

struct Corners {
  int r = -1, s = -1;
  int t[2] = {-1, -1};  // region of t for the two sides; -1 if no trivalent neighbour
};

// v is the black neighbour of u; its darts in rotation order are vu, a, b.
// r contains u (and the corners at vu and a), s is the third corner.  The
// side through a (resp. b) continues to the neighbour w = vertex(theta(a));
// t is the corner of w two steps further in the rotation.
Corners corners(const cmap::Skeleton& sk) {
  const auto& m = sk.map;
  const int ud = m.vertex_darts(*sk.distinguished).front();
  const int vu = m.theta(ud);
  const int a = m.sigma(vu), b = m.sigma(a);
  const auto fod = cmap::face_of_dart(m);
  Corners c;
  c.r = fod[static_cast<std::size_t>(vu)];
  c.s = fod[static_cast<std::size_t>(b)];
  int i = 0;
  for (int side : {a, b}) {
    const int p = m.theta(side);
    const int w = m.vertex_of(p);
    if (m.role(w) == cmap::Role::Black && m.valency(w) == 3)
      c.t[i] = fod[static_cast<std::size_t>(m.sigma(m.sigma(p)))];
    ++i;
  }
  return c;
}

Lmn lmn_for_side(const classify::CurveClass& curve, const Corners& c, int side) {
  if (curve.shape != classify::Shape::General)
    throw NotApplicable("(l,m,n) is undefined for the exceptional classes");
  const auto regions = cmap::faces(curve.sk.map);
  auto is_d = [&](int f) {
    return std::find(curve.d_regions.begin(), curve.d_regions.end(), f) != curve.d_regions.end();
  };
  auto gon = [&](int f) { return f < 0 || is_d(f) ? 0 : regions[static_cast<std::size_t>(f)].gonality; };

  Lmn out;
  if (gon(c.s) == 2) {
    out.m = 2;
    out.fragment = Fragment::LeafOut;
    return out;
  }
  if (gon(c.r) == 3) {
    out.l = 3;
    out.fragment = Fragment::LeafIn;
    return out;
  }
  for (int i : {side, 1 - side}) {
    if (gon(c.t[i]) == 1) {
      out.n = 1;
      out.fragment = Fragment::Stem;
      return out;
    }
  }
  out.l = gon(c.r);
  out.m = gon(c.s);
  out.n = gon(c.t[side]);
  return out;
}

}  // namespace

Lmn lmn_of(const classify::CurveClass& curve, bool conjugate) {
  if (curve.shape != classify::Shape::General)
    throw NotApplicable("(l,m,n) is undefined for the exceptional classes");
  return lmn_for_side(curve, corners(curve.sk), conjugate ? 1 : 0);
}

Lmn lmn_of(const classify::TableRow& row) {
  if (row.shape != classify::Shape::General || row.classes.empty())
    throw NotApplicable("(l,m,n) is undefined for " + row.set.str());
  const auto& curve = row.classes.front();
  const Corners c = corners(curve.sk);
  int side = 0;
  if (!curve.real) {
    auto third = [&](int i) { return c.t[i] >= 0 && c.t[i] != c.r && c.t[i] != c.s; };
    if (!third(0) && third(1)) side = 1;
  }
  return lmn_for_side(curve, c, side);
}

// ---------------------------------------------------------------------------
// Special cases

std::string to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::TwoE8A3: return "2E8+A3";
    case SpecialCase::E8E6D5: return "E8+E6+D5";
    case SpecialCase::E8D6A5: return "E8+D6+A5";
    case SpecialCase::E8D6D5: return "E8+D6+D5";
    case SpecialCase::Isotrivial: return "E8+E7+D4";
  }
  return "?";
}

std::optional<SpecialCase> special_case_of(const classify::TableRow& row) {
  using classify::Shape;
  switch (row.shape) {
    case Shape::BivalentV: return SpecialCase::TwoE8A3;
    case Shape::MonovalentV: return SpecialCase::E8E6D5;
    case Shape::Circle: return SpecialCase::E8D6D5;
    case Shape::Isotrivial: return SpecialCase::Isotrivial;
    case Shape::General: break;
  }
  if (row.set.str() == "E8+D6+A5") return SpecialCase::E8D6A5;
  return std::nullopt;
}

Presentation special_group(SpecialCase c) {
  const Word a1 = alpha(1), a2 = alpha(2), a3 = alpha(3), r = rho();
  Presentation p(3, relations_at_infinity());
  switch (c) {
    case SpecialCase::TwoE8A3:
      p.add(equate(a2, a3.conj(r.pow(2))));
      break;
    case SpecialCase::E8E6D5:
      p.add(equate(a3, a2.conj(r)));
      break;
    case SpecialCase::E8D6A5:
      p = standard_group({6, 0, 6, {}, {}, false});
      p.add(equate(a3, a1.conj((a2 * a1 * a2).inverse())));
      break;
    case SpecialCase::E8D6D5:
      p.add(commutator(a3, a1 * a2));
      break;
    case SpecialCase::Isotrivial:
      p.add(equate(a1, a3));
      p.add(commutator(a1, a2));
      break;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Analysis

nlohmann::json GroupReport::to_json() const {
  nlohmann::json j;
  j["order"] = order;
  j["quotient"] = quotient;
  if (quotient) j["central"] = central;
  j["abelian_invariants"] = abelian_invariants;
  j["elementary_divisors"] = elementary_divisors;
  j["quotient_invariants"] = quotient_invariants;
  j["abelian"] = abelian;
  j["derived_order"] = derived_order;
  j["perfect"] = perfect;
  j["derived_structure"] = derived_tag;
  j["generator_orders"] = generator_orders;
  j["centralizer_order"] = centralizer_order;
  j["centralizer_structure"] = centralizer_tag;
  j["centralizer_meet_derived"] = centralizer_meet;
  j["max_cosets"] = max_cosets;
  j["milliseconds"] = milliseconds;
  j["notes"] = notes;
  return j;
}

GroupReport analyze(const Presentation& pres, const std::optional<Word>& central, std::size_t limit,
                    bool structure) {
  const auto t0 = std::chrono::steady_clock::now();
  GroupReport rep;
  rep.abelian_invariants = fpgroup::abelian_invariants(pres);
  rep.elementary_divisors = fpgroup::elementary_divisors(rep.abelian_invariants);

  Presentation q = pres;
  if (central) {
    q.add(*central);
    rep.quotient = true;
    rep.central = central->str();
  }
  rep.quotient_invariants = fpgroup::abelian_invariants(q);

  fpgroup::EnumerationStats stats;
  const auto table = fpgroup::coset_enumerate(q, {}, limit, &stats);
  rep.order = table.index();
  rep.max_cosets = stats.max_cosets;
  rep.abelian = static_cast<std::int64_t>(rep.order) == fpgroup::abelianization_order(rep.quotient_invariants);

  if (rep.quotient) {
    // A central element of infinite order in H1 meets [G,G] trivially, so
    // the commutator subgroups of G and G/<central> coincide.
    auto free_rank = [](const std::vector<std::int64_t>& inv) { return std::count(inv.begin(), inv.end(), 0); };
    if (free_rank(rep.quotient_invariants) < free_rank(rep.abelian_invariants))
      rep.notes.push_back(rep.central + " has infinite order in H1: commutator subgroup lifts isomorphically");
    else
      rep.notes.push_back(rep.central + " has finite order in H1: quotient data does not lift");
  }

  if (structure && rep.order <= fpgroup::kMaxDegree) {
    const auto G = fpgroup::regular_rep(table);
    const auto D = fpgroup::derived_subgroup(G);
    rep.derived_order = D.order();
    rep.perfect = fpgroup::is_perfect(D);
    rep.derived_tag = fpgroup::identify(D).str();
    for (int g = 0; g < pres.generators(); ++g) rep.generator_orders.push_back(fpgroup::element_order(G, Word::gen(g)));
    const auto C = fpgroup::centralizer(G, D);
    rep.centralizer_order = C.order();
    rep.centralizer_tag = fpgroup::identify(C).str();
    rep.centralizer_meet = fpgroup::intersection_order(C, D);
  } else if (structure) {
    rep.notes.push_back("structure skipped: order exceeds permutation degree bound");
  }
  rep.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}


// ---------------------------------------------------------------------------
// Table rows

namespace {

// The two sets whose groups are not abelian, with their expected orders.
std::size_t nonabelian_order(const classify::TableRow& row) {
  const auto text = row.set.str();
  if (text == "E8+A4+A3+2A2") return 720;
  if (text == "E8+D6+A3+A2") return 1800;
  return 0;
}

}  // namespace

RowCheck check_row(const classify::TableRow& row, std::size_t limit) {
  RowCheck rc;
  const Word central = alpha(2).pow(3);
  if (auto special = special_case_of(row)) {
    rc.method = *special == SpecialCase::Isotrivial ? "isotrivial" : "special";
    rc.pres = special_group(*special);
    // Over C6 the two irreducible cases close up; the rest are certified
    // through the quotient by the central a2^3.
    rc.quotient = *special != SpecialCase::TwoE8A3 && *special != SpecialCase::E8E6D5;
    if (*special == SpecialCase::E8D6A5) rc.lmn = Lmn{6, 0, 6, Fragment::General};
  } else {
    rc.lmn = lmn_of(row);
    // A leaf-out fragment gives an infinite (abelian) group even for
    // irreducible curves, so it always goes through the quotient.
    rc.quotient = row.reducible || rc.lmn.fragment == Fragment::LeafOut;
    rc.method = rc.quotient ? "size2" : "size";
    rc.pres = standard_group({rc.lmn.l, rc.lmn.m, rc.lmn.n, {}, {}, false});
  }
  if (rc.quotient) rc.pres.add(central);
  rc.expected_abelian = rc.quotient ? 15 : 6;
  rc.invariants = fpgroup::abelian_invariants(rc.pres);
  rc.order = fpgroup::group_order(rc.pres, limit);
  rc.abelian = static_cast<std::int64_t>(rc.order) == fpgroup::abelianization_order(rc.invariants);
  if (const auto big = nonabelian_order(row)) rc.expected_abelian = big;
  return rc;
}

// ---------------------------------------------------------------------------
// Perturbations of E8

const std::vector<E8Kind>& all_e8_kinds() {
  static const std::vector<E8Kind> kinds{E8Kind::A4A3, E8Kind::A4A2A1, E8Kind::D5A2, E8Kind::A7,
                                         E8Kind::A6A1, E8Kind::D7,     E8Kind::E6A1, E8Kind::E7};
  return kinds;
}

std::string to_string(E8Kind k) {
  switch (k) {
    case E8Kind::A4A3: return "A4+A3";
    case E8Kind::A4A2A1: return "A4+A2+A1";
    case E8Kind::D5A2: return "D5+A2";
    case E8Kind::A7: return "A7";
    case E8Kind::A6A1: return "A6+A1";
    case E8Kind::D7: return "D7";
    case E8Kind::E6A1: return "E6+A1";
    case E8Kind::E7: return "E7";
  }
  return "?";
}

E8Kind parse_e8_kind(const std::string& text) {
  std::string norm;
  try {
    norm = ade::SingularitySet::parse(text).str();
  } catch (const std::exception&) {
    throw InvalidPerturbation("not a singularity set: " + text);
  }
  for (auto k : all_e8_kinds())
    if (to_string(k) == norm) return k;
  throw InvalidPerturbation("not a maximal perturbation of E8: " + text);
}

bool nonabelian(E8Kind k) { return k == E8Kind::A4A3 || k == E8Kind::A4A2A1 || k == E8Kind::D5A2; }

Presentation local_e8_group() {
  const Word c1 = Word::gen(0), c2 = Word::gen(1), c3 = Word::gen(2);
  const Word r = c1 * c2 * c3, r2 = r.pow(2);
  return Presentation(3, {equate(c1 * r2, r2 * c2), equate(c2 * r2, r2 * c3), equate(c3 * r, r * c1)});
}

std::vector<Word> b_in_c() {
  const Word c1 = Word::gen(0), c2 = Word::gen(1), c3 = Word::gen(2);
  return {c2.conj(c1), c1, c3};
}

namespace {

Presentation e8_b_basis(E8Kind k) {
  const Word b1 = Word::gen(0), b2 = Word::gen(1), b3 = Word::gen(2);
  const Word r = b1 * b2 * b3;
  Presentation p(3);
  switch (k) {
    case E8Kind::A4A3:
      p.add({braid_bracket(b1, b2, 4), braid_bracket(b2, b3, 5), equate(b2, b1.conj(b3))});
      break;
    case E8Kind::A4A2A1:
      p.add({braid_bracket(b1, b2, 5), braid_bracket(b2, b3, 3), commutator(b1, b3)});
      break;
    case E8Kind::D5A2:
      p.add({braid_bracket(b1, b2, 3), commutator(b1, b2 * b3), equate(b3, b2.conj(r))});
      break;
    case E8Kind::A7:
      p.add({equate(b1, b3), equate(b2, b3.inverse() * b2.inverse() * b1 * b2 * b3), braid_bracket(b1, b2, 8)});
      break;
    case E8Kind::A6A1:
      p.add({commutator(b2, b3), braid_bracket(b1, b2, 7), equate(b3, b2.conj(b1))});
      break;
    case E8Kind::D7:
      p.add({equate(b2, b3), commutator(b3, b1 * b2)});
      break;
    case E8Kind::E6A1:
      p.add({commutator(b2, b3), equate(b2, b1.conj(r)), equate(b3, b2.conj(r))});
      break;
    case E8Kind::E7:
      p.add({equate(b1, b2), commutator(b2, b1 * b2 * b3 * b1)});
      break;
  }
  return p;
}

}  // namespace

Presentation e8_perturbation_group(E8Kind k, Basis basis) {
  if (basis == Basis::B) return e8_b_basis(k);
  const Word c1 = Word::gen(0), c2 = Word::gen(1), c3 = Word::gen(2);
  Presentation p(3);
  switch (k) {
    case E8Kind::A4A3:
      p.add({braid_bracket(c1, c2, 4), braid_bracket(c1, c3, 5), equate(c1, (c1 * c2 * c1.inverse()).conj(c3))});
      return p;
    case E8Kind::A4A2A1:
      p.add({braid_bracket(c1, c2, 5), braid_bracket(c1, c3, 3), commutator(c2.conj(c1), c3)});
      return p;
    case E8Kind::D5A2:
      p.add({braid_bracket(c1, c2, 3), commutator(c2, c3 * c1), equate(c3, c1.conj(c1 * c2 * c3))});
      return p;
    default:
      break;
  }
  const auto images = b_in_c();
  const Presentation b = e8_b_basis(k);
  for (const auto& rel : b.relators()) p.add(rel.substitute(images));
  return p;
}

// ---------------------------------------------------------------------------
// Perturbations of D_m

std::string DmPerturbation::label() const {
  std::string out = "D" + std::to_string(p);
  std::vector<int> sorted = s_list;
  std::sort(sorted.rbegin(), sorted.rend());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += "A" + std::to_string(sorted[i]);
    i = j;
  }
  return out;
}

DmPerturbation dm_perturbation_group(int m, int p, const std::vector<int>& s_list) {
  if (m < 5) throw InvalidPerturbation("D_m perturbations need m > 4");
  if (p < 2 || p >= m) throw InvalidPerturbation("D_p needs 2 <= p < m");
  DmPerturbation out;
  out.m = m;
  out.p = p;
  out.s_list = s_list;
  out.d = m - p;
  int g = 0;
  for (int s : s_list) {
    if (s < 1) throw InvalidPerturbation("A_s needs s >= 1");
    out.d -= s + 1;
    g = std::gcd(g, s + 1);
  }
  if (out.d < 0) throw InvalidPerturbation("d = m - p - sum(s_i + 1) is negative");
  out.s = out.d == 0 ? g : 1;
  out.abelian = out.s == 1 || (out.s == 2 && m % 2 == 0);

  const Word c1 = Word::gen(0), c2 = Word::gen(1), c3 = Word::gen(2);
  const auto images = fpgroup::artin_images(fpgroup::braid_power({1}, m - 2));
  out.pres = Presentation(3);
  out.pres.add(braid_bracket(c1, c2, out.s));
  out.pres.add(equate(c1.conj(c3.inverse()), images[0]));
  out.pres.add(equate(c2.conj(c3.inverse()), images[1]));
  return out;
}

std::vector<DmPerturbation> dm_perturbations(int m) {
  std::vector<DmPerturbation> out;
  std::vector<int> current;
  // s lists are non-increasing with sum(s_i + 1) <= budget
  auto rec = [&](auto&& self, int p, int budget, int max_s) -> void {
    out.push_back(dm_perturbation_group(m, p, current));
    for (int s = std::min(max_s, budget - 1); s >= 1; --s) {
      current.push_back(s);
      self(self, p, budget - s - 1, s);
      current.pop_back();
    }
  };
  for (int p = m - 1; p >= 2; --p) rec(rec, p, m - p, m);
  return out;
}

std::vector<fpgroup::Perm> nonabelian_image(const Presentation& pres, int max_degree) {
  using fpgroup::Perm;
  const int ngens = pres.generators();
  for (int n = 2; n <= max_degree; ++n) {
    std::vector<Perm> all;
    Perm p = fpgroup::perm_identity(static_cast<std::size_t>(n));
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<Perm> inv;
    for (const auto& x : all) inv.push_back(fpgroup::perm_inv(x));

    // The first image only matters up to conjugacy: one per cycle type.
    std::vector<std::size_t> first;
    {
      std::map<std::vector<std::size_t>, bool> seen;
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<std::size_t> type;
        std::vector<bool> done(static_cast<std::size_t>(n), false);
        for (int x = 0; x < n; ++x) {
          std::size_t len = 0;
          for (auto y = static_cast<std::size_t>(x); !done[y]; y = all[i][y]) done[y] = true, ++len;
          if (len) type.push_back(len);
        }
        std::sort(type.begin(), type.end());
        if (!seen[type]) seen[type] = true, first.push_back(i);
      }
    }

    // relators grouped by the last generator they involve
    std::vector<std::vector<const Word*>> due(static_cast<std::size_t>(ngens));
    for (const auto& r : pres.relators()) due[static_cast<std::size_t>(std::max(0, r.max_generator()))].push_back(&r);

    std::vector<std::size_t> choice(static_cast<std::size_t>(ngens));
    auto eval = [&](const Word& w) {
      Perm acc = fpgroup::perm_identity(static_cast<std::size_t>(n));
      for (int x : w.packed()) {
        const std::size_t idx = choice[static_cast<std::size_t>(std::abs(x) - 1)];
        acc = fpgroup::perm_mul(acc, x > 0 ? all[idx] : inv[idx]);
      }
      return acc;
    };
    std::vector<Perm> found;
    auto rec = [&](auto&& self, int g) -> bool {
      const auto& pool_first = first;
      const std::size_t count = g == 0 ? pool_first.size() : all.size();
      for (std::size_t k = 0; k < count; ++k) {
        choice[static_cast<std::size_t>(g)] = g == 0 ? pool_first[k] : k;
        bool ok = true;
        for (const Word* r : due[static_cast<std::size_t>(g)])
          if (!fpgroup::perm_is_identity(eval(*r))) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (g + 1 < ngens) {
          if (self(self, g + 1)) return true;
          continue;
        }
        std::vector<Perm> images;
        for (auto c : choice) images.push_back(all[c]);
        bool commutes = true;
        for (std::size_t i = 0; i < images.size() && commutes; ++i)
          for (std::size_t j = i + 1; j < images.size() && commutes; ++j)
            commutes = fpgroup::perm_mul(images[i], images[j]) == fpgroup::perm_mul(images[j], images[i]);
        if (!commutes) {
          found = std::move(images);
          return true;
        }
      }
      return false;
    };
    if (ngens > 0 && rec(rec, 0)) return found;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Perturbations of the two nonabelian sextics

std::string to_string(Base b) { return b == Base::G6 ? "G6" : "Ginf"; }

Base parse_base(const std::string& text) {
  if (text == "G6") return Base::G6;
  if (text == "Ginf" || text == "G_inf" || text == "Ginfty") return Base::Ginf;
  throw std::invalid_argument("unknown base group: " + text);
}

SexticGroupSpec base_spec(Base b) {
  if (b == Base::G6) return {5, 4, 3, {}, {}, false};
  return {4, 3, 0, {}, alpha(2).pow(3), false};
}

std::vector<Word> c_images() { return {alpha_t(), alpha(1), alpha(3)}; }

namespace {

GlobalResult finish(Base base, Presentation pres, std::size_t limit) {
  GlobalResult out;
  auto spec = base_spec(base);
  std::optional<Word> central = spec.quotient_central;
  spec.quotient_central.reset();
  const Presentation base_pres = standard_group(spec);
  out.pres = std::move(pres);
  out.invariants = fpgroup::abelian_invariants(out.pres);
  Presentation q = out.pres;
  Presentation base_q = base_pres;
  if (central) {
    out.central = central->str();
    q.add(*central);
    base_q.add(*central);
  }
  out.order = fpgroup::group_order(q, limit);
  out.base_order = fpgroup::group_order(base_q, limit);
  out.abelian = static_cast<std::int64_t>(out.order) == fpgroup::abelianization_order(fpgroup::abelian_invariants(q));
  out.isomorphism = out.order == out.base_order && out.invariants == fpgroup::abelian_invariants(base_pres);
  if (base == Base::Ginf) {
    try {
      out.alt_order = fpgroup::group_order(out.pres.with(alpha(1).pow(3)), limit);
    } catch (const fpgroup::Overflow&) {
      out.alt_order = 0;
    }
  }
  return out;
}

}  // namespace

GlobalResult global_perturbation(Base base, E8Kind local, std::size_t limit) {
  auto spec = base_spec(base);
  spec.quotient_central.reset();
  Presentation p = standard_group(spec);
  const auto images = c_images();
  const Presentation c = e8_perturbation_group(local, Basis::C);
  for (const auto& rel : c.relators()) p.add(rel.substitute(images));
  return finish(base, std::move(p), limit);
}

GlobalResult global_perturbation(Base base, int l, int m, int n, std::size_t limit) {
  return finish(base, standard_group({l, m, n, {}, {}, false}), limit);
}

}  // namespace sextic::vankampen
