#include "sextic/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "sextic/ade.hpp"
#include "sextic/braid.hpp"
#include "sextic/perm_group.hpp"
#include "sextic/smith.hpp"
#include "sextic/vankampen.hpp"

namespace sextic::acceptance {

namespace vk = vankampen;
using classify::Kind;
using fpgroup::Presentation;
using fpgroup::Word;

nlohmann::json Outcome::to_json() const {
  return {{"id", id}, {"title", title}, {"pass", pass}, {"overflow", overflow}, {"details", details}, {"seconds", seconds}};
}

const std::vector<PrintedRow>& printed_table(Kind kind) {
  static const std::vector<PrintedRow> irreducible{
      {1, "E8+A4+A3+2A2", 1, 0, "(5,4,3)", false},  {2, "E8+A11", 0, 1, "(-,-,1)", false},
      {3, "E8+A9+A2", 1, 0, "(3,-,-)", false},      {4, "E8+A10+A1", 1, 0, "", false},
      {5, "E8+A7+2A2", 1, 0, "(8,3,3)", false},     {6, "E8+A6+A3+A2", 1, 0, "(4,7,3)", false},
      {7, "E8+A5+A4+A2", 1, 0, "(5,3,6)", false},   {8, "E8+A6+A4+A1", 0, 1, "(5,7,2)", false},
      {9, "E8+A8+A2+A1", 0, 1, "(-,-,1)", false},   {10, "E8+A6+2A2+A1", 1, 0, "(3,-,-)", false},
      {11, "E8+A6+A5", 0, 1, "(7,-,-)", false},     {12, "E8+A7+A4", 0, 1, "(-,-,1)", false},
      {13, "E8+A5+A4+A2", 1, 0, "(3,-,-)", false},  {14, "E8+A6+A4+A1", 1, 0, "", false},
      {15, "E8+A8+A3", 1, 0, "(4,9,9)", false},     {16, "E8+A10+A1", 0, 1, "(-,-,1)", false},
      {17, "E8+A8+A2+A1", 1, 0, "(3,-,-)", false},  {18, "E8+D11", 1, 0, "(-,-,1)", false},
      {19, "E8+D5+A6", 0, 1, "(-,-,1)", false},     {20, "E8+D9+A2", 1, 0, "(3,-,-)", false},
      {21, "E8+D7+A4", 1, 0, "(-,5,5)", false},     {22, "E8+D5+A4+A2", 1, 0, "(3,-,-)", false},
      {23, "E8+E6+A5", 0, 1, "(-,-,1)", false},     {24, "E8+E6+A3+A2", 1, 0, "(3,-,-)", false},
      {25, "E8+E6+A4+A1", 1, 0, "", false},         {26, "E8+E7+A4", 0, 1, "(-,-,1)", false},
      {27, "E8+E7+2A2", 1, 0, "(3,-,-)", false},    {28, "2E8+A2+A1", 1, 0, "", false},
      {29, "2E8+A3", 1, 0, "", true},               {30, "E8+E6+D5", 1, 0, "", true},
  };
  static const std::vector<PrintedRow> reducible{
      {1, "E8+A5+2A3", 1, 0, "(4,4,6)", false},        {2, "E8+A7+A3+A1", 0, 1, "(8,4,2)", false},
      {3, "E8+A7+A2+2A1", 1, 0, "", false},            {4, "E8+A5+A4+2A1", 1, 0, "(6,5,2)", false},
      {5, "E8+A5+A3+A2+A1", 1, 0, "(6,3,4)", false},   {6, "E8+A4+2A3+A1", 1, 0, "(4,5,4)", false},
      {7, "E8+A9+A2", 1, 0, "(10,3,-)", false},        {8, "E8+A9+2A1", 1, 0, "", false},
      {9, "E8+D8+A2+A1", 1, 0, "(-,3,2)", false},      {10, "E8+D7+A3+A1", 1, 0, "(4,-,2)", false},
      {11, "E8+D6+A3+A2", 1, 0, "(4,3,-)", false},     {12, "E8+D10+A1", 1, 0, "", false},
      {13, "E8+D6+A5", 1, 0, "(6,-,6)", false},        {14, "E8+D5+A5+A1", 1, 0, "", false},
      {15, "E8+E7+A3+A1", 1, 0, "", false},            {16, "E8+D6+D5", 1, 0, "", true},
      {17, "E8+E7+D4", 1, 0, "", true},
  };
  return kind == Kind::Irreducible ? irreducible : reducible;
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Criteria share the classification and its row checks.
class Suite {
 public:
  explicit Suite(const Config& cfg) : cfg_(cfg) {}

  const std::vector<classify::TableRow>& rows(Kind kind) {
    auto& slot = kind == Kind::Irreducible ? irr_ : red_;
    if (!slot) slot = classify::classify(kind, cfg_.backend);
    return *slot;
  }

  Outcome run(int id) {
    Outcome out;
    out.id = id;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      switch (id) {
        case 1: table_counts(out, Kind::Irreducible, {39, 26, 21, 9}); break;
        case 2: table_counts(out, Kind::Reducible, {18, 17, 16, 1}); break;
        case 3: lmn_column(out); break;
        case 4: group_orders(out); break;
        case 5: structure(out); break;
        case 6: local_e8(out); break;
        case 7: global(out); break;
        case 8: censuses(out); break;
        case 9: properties(out); break;
        default: throw std::out_of_range("no such criterion");
      }
    } catch (const fpgroup::Overflow& e) {
      out.pass = false;
      out.overflow = true;
      out.details.push_back(e.what());
    } catch (const std::exception& e) {
      out.pass = false;
      out.details.push_back(std::string("error: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }

 private:
  Config cfg_;
  std::optional<std::vector<classify::TableRow>> irr_, red_;

  static void check(Outcome& out, bool ok, const std::string& what) {
    if (!ok) out.details.push_back("mismatch: " + what);
  }

  std::size_t order(const Presentation& p) { return fpgroup::group_order(p, cfg_.limit); }

  // 1, 2 ---------------------------------------------------------------------
  void table_counts(Outcome& out, Kind kind, classify::Totals want) {
    out.title = kind == Kind::Irreducible ? "classification, irreducible" : "classification, reducible";
    const auto& rs = rows(kind);
    const auto t = classify::totals(rs);
    std::ostringstream os;
    os << "classes " << t.classes << ", sets " << t.sets << ", real " << t.real << ", pairs " << t.pairs;
    out.details.push_back(os.str());
    check(out, t.classes == want.classes && t.sets == want.sets && t.real == want.real && t.pairs == want.pairs,
          "totals");
    std::multiset<std::tuple<std::string, int, int>> got, expected;
    for (const auto& r : rs) got.insert({r.set.str(), r.n_r, r.n_c});
    for (const auto& p : printed_table(kind)) expected.insert({p.set, p.n_r, p.n_c});
    for (const auto& e : expected)
      if (got.count(e) != expected.count(e)) check(out, false, "row " + std::get<0>(e));
    for (const auto& g : got)
      if (!expected.count(g)) check(out, false, "unexpected row " + std::get<0>(g));
    for (const auto& r : rs)
      if (r.set.milnor() != 19) check(out, false, r.set.str() + " is not maximal");
    out.pass = out.details.size() == 1;
  }

  // 3 ------------------------------------------------------------------------
  void lmn_column(Outcome& out) {
    out.title = "(l,m,n) column";
    int compared = 0, matched = 0;
    for (Kind kind : {Kind::Irreducible, Kind::Reducible}) {
      const char* tag = kind == Kind::Irreducible ? "" : "'";
      // rows sharing (set, counts) are compared as multisets
      std::map<std::tuple<std::string, int, int>, std::multiset<std::string>> got, want;
      std::map<std::tuple<std::string, int, int>, std::vector<int>> numbers;
      for (const auto& p : printed_table(kind)) {
        if (p.exceptional) continue;
        want[{p.set, p.n_r, p.n_c}].insert(p.lmn);
        numbers[{p.set, p.n_r, p.n_c}].push_back(p.number);
      }
      for (const auto& r : rows(kind)) {
        if (r.shape != classify::Shape::General) continue;
        got[{r.set.str(), r.n_r, r.n_c}].insert(vk::lmn_of(r).str());
      }
      for (const auto& [key, printed] : want) {
        const auto& computed = got[key];
        compared += static_cast<int>(printed.size());
        std::multiset<std::string> common;
        std::set_intersection(printed.begin(), printed.end(), computed.begin(), computed.end(),
                              std::inserter(common, common.begin()));
        matched += static_cast<int>(common.size());
        if (common.size() != printed.size()) {
          std::string rowlist;
          for (int n : numbers[key]) rowlist += (rowlist.empty() ? "" : ",") + std::to_string(n) + tag;
          std::string p, c;
          for (const auto& s : printed) p += (p.empty() ? "" : " ") + (s.empty() ? std::string("blank") : s);
          for (const auto& s : computed) c += (c.empty() ? "" : " ") + (s.empty() ? std::string("blank") : s);
          check(out, false, "row " + rowlist + " " + std::get<0>(key) + ": printed " + p + ", computed " + c);
        }
      }
    }
    out.details.insert(out.details.begin(), std::to_string(matched) + "/" + std::to_string(compared) + " rows match");
    out.pass = matched == compared;
  }

  // 4 ------------------------------------------------------------------------
  void group_orders(Outcome& out) {
    out.title = "group orders";
    check(out, vk::size(5, 4, 3, cfg_.limit) == 720, "size(5,4,3) = 720");
    check(out, vk::size(0, 0, 1, cfg_.limit) == 6, "size(0,0,1) = 6");
    check(out, vk::size(3, 0, 0, cfg_.limit) == 6, "size(3,0,0) = 6");
    check(out, vk::size2(4, 3, 0, cfg_.limit) == 1800, "size2(4,3,-) = 1800");
    int rows_ok = 0, rows_total = 0;
    for (Kind kind : {Kind::Irreducible, Kind::Reducible}) {
      for (const auto& r : rows(kind)) {
        const auto rc = vk::check_row(r, cfg_.limit);
        ++rows_total;
        const bool big = rc.expected_abelian == 720 || rc.expected_abelian == 1800;
        const bool ok = rc.order == rc.expected_abelian && (big || rc.abelian);
        rows_ok += ok;
        check(out, ok,
              r.set.str() + " via " + rc.method + rc.lmn.str() + ": order " + std::to_string(rc.order) + ", expected " +
                  std::to_string(rc.expected_abelian));
      }
    }
    out.details.push_back(std::to_string(rows_ok) + "/" + std::to_string(rows_total) +
                          " rows certified from computed (l,m,n)");
    // the printed triples, independently of the (l,m,n) reading
    int printed_ok = 0, printed_total = 0;
    for (Kind kind : {Kind::Irreducible, Kind::Reducible}) {
      for (const auto& p : printed_table(kind)) {
        std::string s = p.lmn;
        if (p.exceptional || s.empty() || std::string(p.set) == "E8+D6+A5") continue;
        int v[3] = {0, 0, 0};
        s = s.substr(1, s.size() - 2);
        std::istringstream is(s);
        std::string item;
        for (int i = 0; i < 3 && std::getline(is, item, ','); ++i) v[i] = item == "-" ? 0 : std::stoi(item);
        std::size_t want = kind == Kind::Irreducible ? 6 : 15;
        if (std::string(p.set) == "E8+A4+A3+2A2") want = 720;
        if (std::string(p.set) == "E8+D6+A3+A2") want = 1800;
        const auto got = kind == Kind::Irreducible ? vk::size(v[0], v[1], v[2], cfg_.limit)
                                                   : vk::size2(v[0], v[1], v[2], cfg_.limit);
        ++printed_total;
        printed_ok += got == want;
        check(out, got == want, std::string("printed ") + p.lmn + " for " + p.set);
      }
    }
    out.details.push_back(std::to_string(printed_ok) + "/" + std::to_string(printed_total) +
                          " printed triples give the stated order");
    check(out, order(vk::special_group(vk::SpecialCase::TwoE8A3)) == 6, "2E8+A3 order 6");
    check(out, order(vk::special_group(vk::SpecialCase::E8E6D5)) == 6, "E8+E6+D5 order 6");
    check(out, order(vk::special_group(vk::SpecialCase::E8D6A5).with(vk::alpha(2).pow(3))) == 15,
          "E8+D6+A5 quotient 15");
    check(out, fpgroup::abelian_invariants(vk::special_group(vk::SpecialCase::E8D6D5)) == std::vector<std::int64_t>{0},
          "E8+D6+D5 invariants [0]");
    out.pass = std::none_of(out.details.begin(), out.details.end(),
                            [](const std::string& d) { return d.rfind("mismatch", 0) == 0; });
  }

  // 5 ------------------------------------------------------------------------
  void structure(Outcome& out) {
    out.title = "structure of G6 and of the 1800-quotient";
    const auto g6 = vk::standard_group({5, 4, 3, {}, {}, false});
    const auto r = vk::analyze(g6, std::nullopt, cfg_.limit);
    out.details.push_back("G6: order " + std::to_string(r.order) + ", [G,G] " + std::to_string(r.derived_order) + " " +
                          r.derived_tag + ", C " + r.centralizer_tag + ", meet " + std::to_string(r.centralizer_meet));
    check(out, r.order == 720, "|G6| = 720");
    check(out, r.derived_order == 120 && r.perfect && r.derived_tag == "SL(2,5)", "[G6,G6] = SL(2,5)");
    check(out, r.generator_orders == std::vector<std::uint64_t>{12, 12, 12}, "generator orders 12");
    check(out, r.centralizer_tag == "C12" && r.centralizer_meet == 2, "centralizer C12 meeting [G,G] in 2");
    check(out, r.centralizer_order * r.derived_order / std::max<std::uint64_t>(r.centralizer_meet, 1) == r.order,
          "central product 12*120/2 = 720");
    {
      const auto table = fpgroup::coset_enumerate(g6, {}, cfg_.limit);
      const auto G = fpgroup::regular_rep(table);
      const auto D = fpgroup::derived_subgroup(G);
      check(out, fpgroup::count_involutions(D) == 1, "[G6,G6] has one involution");
      check(out, fpgroup::subgroup_index(G, {vk::alpha_s(), vk::alpha(1), vk::alpha(3)}) == 1,
            "G6 generated by a2 a3 a2^-1, a1, a3");
    }
    check(out, order(vk::standard_group({5, 0, 0, {}, {}, false})) == 720, "dropping the last two relators keeps 720");
    check(out, order(vk::standard_group({5, 4, 3, {}, {}, true})) == 720, "short form keeps 720");

    const auto ginf = vk::standard_group({4, 3, 0, {}, {}, false});
    const auto q = vk::analyze(ginf, vk::alpha(2).pow(3), cfg_.limit);
    out.details.push_back("Ginf/a2^3: order " + std::to_string(q.order) + ", [G,G] " + std::to_string(q.derived_order) +
                          " " + q.derived_tag + ", C " + q.centralizer_tag + ", meet " +
                          std::to_string(q.centralizer_meet));
    check(out, q.order == 1800, "|Ginf/a2^3| = 1800");
    check(out, q.derived_order == 120 && q.perfect, "[G,G] perfect of order 120");
    check(out, q.centralizer_tag == "C30" && q.centralizer_meet == 2, "centralizer C30 meeting [G,G] in 2");
    check(out, vk::size2(4, 0, 0, cfg_.limit) == 1800 && vk::size2(0, 3, 0, cfg_.limit) == 1800,
          "dropping either relator keeps 1800");
    {
      const auto table = fpgroup::coset_enumerate(ginf.with(vk::alpha(2).pow(3)), {}, cfg_.limit);
      const auto G = fpgroup::regular_rep(table);
      check(out, fpgroup::subgroup_index(G, {vk::alpha_s(), vk::alpha(1), vk::alpha(3)}) == 1,
            "quotient generated by a2 a3 a2^-1, a1, a3");
    }
    out.pass = out.details.size() == 2;
  }

  // 6 ------------------------------------------------------------------------
  void local_e8(Outcome& out) {
    out.title = "E8 local perturbations";
    using vk::E8Kind;
    const Word b1 = Word::gen(0), b2 = Word::gen(1);
    const Word b1c = vk::b_in_c()[0];  // c1 c2 c1^-1
    struct Q {
      E8Kind kind;
      int power;
      std::size_t want;
    };
    for (const Q& q : {Q{E8Kind::A4A3, 3, 360}, Q{E8Kind::A4A2A1, 2, 120}, Q{E8Kind::D5A2, 5, 600},
                       Q{E8Kind::D5A2, 12, 12}}) {
      const auto ob = order(vk::e8_perturbation_group(q.kind, vk::Basis::B).with(b1.pow(q.power)));
      const auto oc = order(vk::e8_perturbation_group(q.kind, vk::Basis::C).with(b1c.pow(q.power)));
      out.details.push_back(vk::to_string(q.kind) + " mod b1^" + std::to_string(q.power) + ": " + std::to_string(ob) +
                            " (c-basis " + std::to_string(oc) + ")");
      check(out, ob == q.want, vk::to_string(q.kind) + " quotient order");
      check(out, oc == ob, vk::to_string(q.kind) + " basis change");
    }
    const auto a6 = order(vk::e8_perturbation_group(E8Kind::A6A1, vk::Basis::B).with((b1 * b2).pow(7)));
    out.details.push_back("A6+A1 mod (b1b2)^7: " + std::to_string(a6));
    check(out, a6 == 14, "A6+A1 quotient 14");
    // abelian kinds: finite quotients are abelian
    for (auto k : {E8Kind::A7, E8Kind::A6A1, E8Kind::D7, E8Kind::E6A1, E8Kind::E7}) {
      for (int n : {4, 6}) {
        auto p = vk::e8_perturbation_group(k, vk::Basis::B);
        for (int g = 0; g < 3; ++g) p.add(Word::gen(g).pow(n));
        const auto o = order(p);
        check(out, static_cast<std::int64_t>(o) == fpgroup::abelianization_order(fpgroup::abelian_invariants(p)),
              vk::to_string(k) + " quotient by " + std::to_string(n) + "-th powers is abelian");
      }
    }
    out.pass = std::none_of(out.details.begin(), out.details.end(),
                            [](const std::string& d) { return d.rfind("mismatch", 0) == 0; });
  }

  // 7 ------------------------------------------------------------------------
  void global(Outcome& out) {
    out.title = "global perturbations";
    using vk::Base;
    using vk::E8Kind;
    const std::vector<E8Kind> kinds{E8Kind::A4A3, E8Kind::A4A2A1, E8Kind::D5A2};
    const std::vector<std::size_t> g6_want{720, 6, 6}, ginf_want{15, 15, 1800};
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      const auto a = vk::global_perturbation(Base::G6, kinds[i], cfg_.limit);
      const auto b = vk::global_perturbation(Base::Ginf, kinds[i], cfg_.limit);
      out.details.push_back(vk::to_string(kinds[i]) + ": G6 " + std::to_string(a.order) + ", Ginf/a2^3 " +
                            std::to_string(b.order) + " (Ginf/a1^3 " + std::to_string(b.alt_order) + ")");
      check(out, a.order == g6_want[i], "G6 + " + vk::to_string(kinds[i]));
      check(out, b.order == ginf_want[i], "Ginf + " + vk::to_string(kinds[i]));
      check(out, a.isomorphism == (g6_want[i] == 720), "G6 isomorphism flag");
      check(out, b.isomorphism == (ginf_want[i] == 1800), "Ginf isomorphism flag");
      if (g6_want[i] != 720) check(out, a.abelian, "G6 + " + vk::to_string(kinds[i]) + " abelian");
      if (ginf_want[i] != 1800) check(out, b.abelian, "Ginf + " + vk::to_string(kinds[i]) + " abelian");
    }
    for (auto t : {std::array<int, 3>{1, 4, 3}, {5, 2, 3}, {5, 4, 1}}) {
      const auto r = vk::global_perturbation(Base::G6, t[0], t[1], t[2], cfg_.limit);
      check(out, r.order == 6 && r.abelian, "G6 with modified parameters");
    }
    for (auto t : {std::array<int, 3>{2, 3, 0}, {4, 1, 0}, {4, 3, 4}}) {
      const auto r = vk::global_perturbation(Base::Ginf, t[0], t[1], t[2], cfg_.limit);
      check(out, r.order == 15 && r.abelian, "Ginf with modified parameters");
    }
    // D6 -> A3+A2 makes the curve irreducible (H1 = C6), so the a2^3
    // quotient is C3 rather than C15; the certificate is abelianness.
    const auto r = vk::global_perturbation(Base::Ginf, 4, 3, 3, cfg_.limit);
    out.details.push_back("Ginf (4,3,3): H1 " + join(r.invariants) + ", quotient order " + std::to_string(r.order) +
                          (r.abelian ? ", abelian" : ", not abelian"));
    check(out, r.abelian && vk::size(4, 3, 3, cfg_.limit) == 6, "Ginf (4,3,3) abelian");
    out.pass = std::none_of(out.details.begin(), out.details.end(),
                            [](const std::string& d) { return d.rfind("mismatch", 0) == 0; });
  }

  // 8 ------------------------------------------------------------------------
  void censuses(Outcome& out) {
    out.title = "perturbation censuses";
    const auto census = classify::e8_perturbation_census(cfg_.backend);
    const auto sets = classify::e8_perturbation_sets(census);
    std::vector<std::string> got;
    for (const auto& s : sets) got.push_back(s.str());
    std::sort(got.begin(), got.end());
    std::vector<std::string> want{"A4+A2+A1", "A4+A3", "A6+A1", "A7", "D5+A2", "D7", "E6+A1", "E7"};
    std::sort(want.begin(), want.end());
    out.details.push_back(std::to_string(census.size()) + " skeletons, " + std::to_string(sets.size()) + " sets");
    check(out, census.size() == 7, "7 skeletons");
    check(out, got == want, "perturbation sets");
    std::vector<std::string> dynkin;
    for (const auto& s : ade::dynkin_induced({ade::Kind::E, 8}, 7)) dynkin.push_back(s.str());
    std::sort(dynkin.begin(), dynkin.end());
    check(out, dynkin == want, "induced subgraphs of E8");

    std::vector<std::string> nonab;
    for (const auto& d : vk::dm_perturbations(6)) {
      if (!d.abelian) {
        nonab.push_back(d.label());
        check(out, !vk::nonabelian_image(d.pres, 5).empty(), d.label() + " has a nonabelian image");
      } else {
        auto p = d.pres;
        for (int g = 0; g < 3; ++g) p.add(Word::gen(g).pow(4));
        check(out,
              static_cast<std::int64_t>(order(p)) == fpgroup::abelianization_order(fpgroup::abelian_invariants(p)),
              d.label() + " quotient abelian");
      }
    }
    std::sort(nonab.begin(), nonab.end());
    std::string list;
    for (const auto& s : nonab) list += (list.empty() ? "" : ", ") + s;
    out.details.push_back("D6 nonabelian: " + list);
    check(out, nonab == std::vector<std::string>{"D2+A3", "D3+A2"}, "D6 nonabelian perturbations");
    out.pass = std::none_of(out.details.begin(), out.details.end(),
                            [](const std::string& d) { return d.rfind("mismatch", 0) == 0; });
  }

  // 9 ------------------------------------------------------------------------
  void properties(Outcome& out) {
    out.title = "property suites";
    std::mt19937_64 rng(cfg_.seed);

    // Euler characteristic and corner count on every census skeleton
    std::vector<cmap::Skeleton> pool;
    for (auto& s : classify::sigma2_census(cfg_.backend)) pool.push_back(s);
    for (auto& s : classify::all_insertions(cfg_.backend)) pool.push_back(s);
    for (auto& s : classify::e8_perturbation_census(cfg_.backend)) pool.push_back(s);
    int euler_ok = 0, counted = 0;
    for (const auto& s : pool) {
      if (s.map.is_circle()) continue;
      ++counted;
      const auto regions = cmap::faces(s.map);
      int corners = 0, black = 0;
      for (const auto& r : regions) corners += r.gonality;
      for (int v = 0; v < s.map.vertices(); ++v)
        if (s.map.role(v) == cmap::Role::Black) black += s.map.valency(v);
      const bool ok = s.map.vertices() - s.map.edges() + static_cast<int>(regions.size()) == 2 && corners == black;
      euler_ok += ok;
    }
    out.details.push_back("Euler/corners: " + std::to_string(euler_ok) + "/" + std::to_string(counted));
    check(out, euler_ok == counted, "Euler/corner conservation");

    // canonical codes against backtracking isomorphism
    std::vector<cmap::Skeleton> small;
    for (const auto& s : pool) {
      if (s.map.is_circle() || s.map.darts() > 12) continue;
      small.push_back(s);
      std::vector<int> order(static_cast<std::size_t>(s.map.darts()));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      small.push_back(cmap::relabel(s, order));
      small.push_back(s.mirror());
    }
    std::vector<std::string> codes;
    for (const auto& s : small) codes.push_back(cmap::canonical_code(s));
    int pairs = 0, agree = 0;
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = i + 1; j < small.size(); ++j) {
        if (small[i].map.darts() != small[j].map.darts() ||
            small[i].map.vertex_counts().white != small[j].map.vertex_counts().white ||
            small[i].distinguished.has_value() != small[j].distinguished.has_value())
          continue;
        ++pairs;
        agree += (codes[i] == codes[j]) == cmap::brute_force_isomorphic(small[i], small[j]);
      }
    out.details.push_back("canonical vs brute force: " + std::to_string(agree) + "/" + std::to_string(pairs) + " pairs");
    check(out, agree == pairs, "canonical code agreement");

    // braid relation and full twist on random words
    std::uniform_int_distribution<int> letter(0, 5), length(0, 12);
    int braid_ok = 0;
    const Word delta = Word::gen(0) * Word::gen(1) * Word::gen(2);
    for (int k = 0; k < 200; ++k) {
      std::vector<int> packed;
      for (int i = length(rng); i > 0; --i) {
        const int x = letter(rng);
        packed.push_back(x < 3 ? x + 1 : -(x - 2));
      }
      const Word w = Word(packed).reduced();
      const bool rel = fpgroup::artin_action({1, 2, 1}, w) == fpgroup::artin_action({2, 1, 2}, w);
      const bool inv = fpgroup::artin_action({1, -1, 2, -2}, w) == w;
      const bool twist = fpgroup::artin_action(fpgroup::braid_power({1, 2}, 3), w) == w.conj(delta).reduced();
      braid_ok += rel && inv && twist;
    }
    out.details.push_back("braid identities: " + std::to_string(braid_ok) + "/200 words");
    check(out, braid_ok == 200, "braid relation");

    // Smith normal form: the invariant factors multiply to |det|
    std::uniform_int_distribution<int> entry(-9, 9), dim(1, 5);
    int snf_ok = 0;
    for (int k = 0; k < 100; ++k) {
      const int n = dim(rng);
      fpgroup::IntMatrix a(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
      for (auto& row : a)
        for (auto& x : row) x = entry(rng);
      const auto f = fpgroup::smith_normal_form(a);  // verifies U A V = D itself
      std::int64_t prod = 1;
      for (int i = 0; i < n; ++i) prod *= f.D[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      snf_ok += prod == std::abs(fpgroup::determinant(a));
    }
    out.details.push_back("Smith forms: " + std::to_string(snf_ok) + "/100");
    check(out, snf_ok == 100, "Smith normal form");

    // regular representations of the finite groups of the suite
    std::vector<Presentation> groups{vk::standard_group({5, 4, 3, {}, {}, false}),
                                     vk::standard_group({4, 3, 0, {}, vk::alpha(2).pow(3), false}),
                                     vk::special_group(vk::SpecialCase::TwoE8A3),
                                     vk::special_group(vk::SpecialCase::E8E6D5)};
    for (Kind kind : {Kind::Irreducible, Kind::Reducible})
      for (const auto& r : rows(kind)) groups.push_back(vk::check_row(r, cfg_.limit).pres);
    int reg_ok = 0;
    for (const auto& p : groups) {
      const auto table = fpgroup::coset_enumerate(p, {}, cfg_.limit);
      const auto G = fpgroup::regular_rep(table);
      reg_ok += G.degree() == table.index() && G.order() == table.index();
    }
    out.details.push_back("regular representations: " + std::to_string(reg_ok) + "/" + std::to_string(groups.size()));
    check(out, reg_ok == static_cast<int>(groups.size()), "regular representation");

    // {a,b}_m = {a,b}_n = 1 against {a,b}_gcd = 1: equal solution sets in S4
    std::vector<fpgroup::Perm> s4;
    {
      fpgroup::Perm p = fpgroup::perm_identity(4);
      do s4.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    }
    auto holds = [&](const fpgroup::Perm& x, const fpgroup::Perm& y, int m) {
      const Word w = fpgroup::braid_bracket(Word::gen(0), Word::gen(1), m);
      return fpgroup::perm_is_identity(fpgroup::PermGroup(4, {x, y}).evaluate(w));
    };
    int equiv_ok = 0, equiv_total = 0;
    for (int m = 1; m <= 6; ++m)
      for (int n = m; n <= 6; ++n) {
        ++equiv_total;
        const int g = std::gcd(m, n);
        bool same = true;
        for (const auto& x : s4)
          for (const auto& y : s4)
            if ((holds(x, y, m) && holds(x, y, n)) != holds(x, y, g)) same = false;
        equiv_ok += same;
      }
    out.details.push_back("bracket gcd rule: " + std::to_string(equiv_ok) + "/" + std::to_string(equiv_total) +
                          " (m,n) pairs in S4");
    check(out, equiv_ok == equiv_total, "bracket gcd rule");
    out.pass = std::none_of(out.details.begin(), out.details.end(),
                            [](const std::string& d) { return d.rfind("mismatch", 0) == 0; });
  }
};

}  // namespace

std::vector<Outcome> run_all(const Config& config, const std::function<void(const Outcome&)>& report) {
  Suite suite(config);
  std::vector<Outcome> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(suite.run(id));
    if (report) report(out.back());
  }
  return out;
}

}  // namespace sextic::acceptance
