#include <doctest.h>

#include <algorithm>
#include <set>

#include "sextic/ade.hpp"
#include "sextic/classify.hpp"
#include "sextic/enumerate.hpp"

using namespace sextic;
using namespace sextic::classify;
using R = cmap::Role;

namespace {

Skeleton theta_graph() {
  return {cmap::CombinatorialMap::build({1, 2, 0, 5, 3, 4}, {3, 4, 5, 0, 1, 2}, {R::Black, R::Black}), std::nullopt};
}

// loop 0-1 at vertex 0, bridge 2-5, loop 3-4 at vertex 1
Skeleton dumbbell() {
  return {cmap::CombinatorialMap::build({1, 2, 0, 4, 5, 3}, {1, 0, 5, 4, 3, 2}, {R::Black, R::Black}), std::nullopt};
}

std::vector<std::string> strs(const std::vector<ade::SingularitySet>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

}  // namespace

TEST_SUITE("ade") {
  TEST_CASE("set text form") {
    CHECK(ade::SingularitySet::parse("A2+E8+A3+A2+A4").str() == "E8+A4+A3+2A2");
    CHECK(ade::SingularitySet::parse("D3+A2").str() == "A3+A2");
    CHECK(ade::SingularitySet::parse("D2+A3").str() == "A3+2A1");
    CHECK(ade::SingularitySet::parse("E8+A4+A3+2A2").milnor() == 19);
    CHECK_THROWS(ade::SingularitySet::parse("E9"));
  }

  TEST_CASE("induced subdiagrams") {
    CHECK(strs(ade::dynkin_induced({ade::Kind::A, 3}, 2)) == std::vector<std::string>{"2A1", "A2"});
    auto d6 = strs(ade::dynkin_induced({ade::Kind::D, 6}, 5));
    std::vector<std::string> want{"A5", "D5", "D4+A1", "A3+A2", "A3+2A1"};
    std::sort(want.begin(), want.end());
    CHECK(d6 == want);
    CHECK(ade::dynkin_induced({ade::Kind::E, 8}, 7).size() == 8);
  }
}

TEST_SUITE("classify") {
  TEST_CASE("splitting markings") {
    CHECK(splitting_markings(theta_graph()).size() == 3);
    CHECK(splitting_markings(dumbbell()).size() == 1);
    CHECK(splitting_markings(bivalent_v_skeleton()).empty());
  }

  TEST_CASE("insertions") {
    CHECK(face_profile(attach(dumbbell(), 2).map) == "7,1,1");
    for (int site = 0; site < 6; ++site) {
      CHECK(face_profile(attach(theta_graph(), site).map) == "4,3,2");
      CHECK(is_reducible(theta_graph(), site));
    }
    // the two sides of a loop edge
    const auto p0 = face_profile(attach(dumbbell(), 0).map), p1 = face_profile(attach(dumbbell(), 1).map);
    CHECK(std::set<std::string>{p0, p1}.count("5,3,1") == 1);
    CHECK(is_reducible(dumbbell(), 0) != is_reducible(dumbbell(), 1));
    for (const auto& s : sigma2_census())
      if (!s.map.is_circle() && splitting_markings(s).empty())
        for (int site = 0; site < s.map.darts(); ++site) CHECK_FALSE(is_reducible(s, site));
  }

  TEST_CASE("attach and remove are inverse") {
    for (const auto& s : sigma2_census()) {
      if (s.map.is_circle()) continue;
      for (int site = 0; site < s.map.darts(); ++site) {
        const auto back = remove_insertion(attach(s, site));
        CHECK(cmap::canonical_code(back) == cmap::canonical_code(s));
      }
    }
  }

  TEST_CASE("exceptional shapes") {
    CHECK(fiber_data(bivalent_v_skeleton()).d == 0);
    CHECK(fiber_data(bivalent_v_skeleton()).e8 == 1);
    CHECK(fiber_data(monovalent_v_skeleton()).d == 1);
    CHECK(fiber_data(circle_insertion_skeleton()).d == 2);
    const auto circle = deformation_classes(circle_insertion_skeleton());
    REQUIRE(circle.size() == 1);
    CHECK(circle[0].set.str() == "E8+D6+D5");
    const auto biv = deformation_classes(bivalent_v_skeleton());
    REQUIRE(biv.size() == 1);
    CHECK(biv[0].set.str() == "2E8+A3");
  }

  TEST_CASE("bridge insertion on the dumbbell") {
    const auto classes = deformation_classes(attach(dumbbell(), 2));
    std::multiset<std::pair<std::string, bool>> got;
    for (const auto& c : classes) got.insert({c.set.str(), c.real});
    CHECK(got == std::multiset<std::pair<std::string, bool>>{{"E8+D11", true}, {"E8+D5+A6", false}});
  }

  TEST_CASE("tables") {
    const auto irr = classify::classify(Kind::Irreducible);
    const auto t = totals(irr);
    CHECK(t.classes == 39);
    CHECK(t.sets == 26);
    CHECK(t.real == 21);
    CHECK(t.pairs == 9);
    const auto red = totals(classify::classify(Kind::Reducible));
    CHECK(red.classes == 18);
    CHECK(red.sets == 17);
    CHECK(red.real == 16);
    CHECK(red.pairs == 1);
    auto row = std::find_if(irr.begin(), irr.end(), [](const auto& r) { return r.set.str() == "E8+A11"; });
    REQUIRE(row != irr.end());
    CHECK(row->n_r == 0);
    CHECK(row->n_c == 1);
  }

  TEST_CASE("insertion census agrees with the direct enumeration") {
    std::vector<std::string> a, b;
    for (const auto& s : all_insertions()) a.push_back(cmap::canonical_code(s));
    for (const auto& s : direct_insertions()) b.push_back(cmap::canonical_code(s));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }

  TEST_CASE("E8 perturbation census") {
    const auto census = e8_perturbation_census();
    CHECK(census.size() == 7);
    CHECK(strs(e8_perturbation_sets(census)) == strs(ade::dynkin_induced({ade::Kind::E, 8}, 7)));
  }
}

TEST_SUITE("enumerate") {
  TEST_CASE("serial and parallel backends agree") {
    // the censuses the library uses: Sigma_2 skeletons, and skeletons with u
    struct Run {
      int total, min_white;
      enumerate::Distinguish mode;
    };
    for (const Run& run : {Run{4, 0, enumerate::Distinguish::None}, Run{6, 1, enumerate::Distinguish::White},
                           Run{8, 1, enumerate::Distinguish::White}}) {
      for (const auto& spec : enumerate::specs_for_total(run.total, run.min_white)) {
        const auto s = enumerate::enumerate_skeletons(spec, run.mode, enumerate::Backend::Serial);
        const auto p = enumerate::enumerate_skeletons(spec, run.mode, enumerate::Backend::Parallel);
        CHECK(s.codes == p.codes);
        CHECK(s.matchings == p.matchings);
        CHECK(s.spherical == p.spherical);
      }
    }
  }
}
