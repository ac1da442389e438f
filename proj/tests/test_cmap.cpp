#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sextic/classify.hpp"
#include "sextic/cmap.hpp"

using namespace sextic::cmap;
using R = Role;

namespace {

// Two trivalent black vertices joined by three edges.
CombinatorialMap theta_graph() {
  return CombinatorialMap::build({1, 2, 0, 5, 3, 4}, {3, 4, 5, 0, 1, 2}, {R::Black, R::Black});
}

// Two loops joined by a bridge.
CombinatorialMap dumbbell() {
  return CombinatorialMap::build({1, 2, 0, 4, 5, 3}, {1, 0, 5, 4, 3, 2}, {R::Black, R::Black});
}

std::vector<int> gonalities(const CombinatorialMap& m) {
  std::vector<int> g;
  for (const auto& f : faces(m)) g.push_back(f.gonality);
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

TEST_SUITE("cmap") {
  TEST_CASE("small maps and their regions") {
    const auto t = theta_graph();
    CHECK(t.vertices() - t.edges() + static_cast<int>(faces(t).size()) == 2);
    CHECK(gonalities(t) == std::vector<int>{2, 2, 2});
    CHECK(gonalities(dumbbell()) == std::vector<int>{1, 1, 4});
    const auto c = CombinatorialMap::circle();
    CHECK(gonalities(c) == std::vector<int>{0, 0});
    CHECK(genus(t) == 0);
  }

  TEST_CASE("invalid maps") {
    try {
      CombinatorialMap::build({1, 0}, {0, 1}, {R::Black});
      FAIL("accepted a fixed point");
    } catch (const MapError& e) {
      CHECK(e.kind() == MapErrorKind::FixedPointInPairing);
    }
    // one vertex, two interleaved loops
    const auto torus = CombinatorialMap::build_unchecked({1, 2, 3, 0}, {2, 3, 0, 1}, {R::Black});
    CHECK(genus(torus) == 1);
    CHECK(faces(torus).size() == 1);
    CHECK_THROWS_AS(CombinatorialMap::build({1, 2, 3, 0}, {2, 3, 0, 1}, {R::Black}), MapError);
    // a white vertex must be monovalent
    CHECK_THROWS_AS(CombinatorialMap::build({1, 0}, {1, 0}, {R::White}), MapError);
  }

  TEST_CASE("canonical codes") {
    const Skeleton t{theta_graph(), std::nullopt}, d{dumbbell(), std::nullopt};
    CHECK(canonical_code(relabel(t, {3, 4, 5, 0, 1, 2})) == canonical_code(t));
    CHECK(canonical_code(t) != canonical_code(d));
    CHECK(canonical_form(relabel(d, {5, 4, 3, 2, 1, 0})).map == canonical_form(d).map);

    bool chiral = false;
    for (const auto& s : sextic::classify::all_insertions()) {
      if (s.map.is_circle() || canonical_code(s) == canonical_code(s.mirror())) continue;
      chiral = true;
      CHECK(canonical_code(s, Orientation::Either) == canonical_code(s.mirror(), Orientation::Either));
      CHECK_FALSE(brute_force_isomorphic(s, s.mirror()));
      break;
    }
    CHECK(chiral);
  }

  TEST_CASE("canonical codes are invariant under random relabeling") {
    const auto pool = sextic::classify::all_insertions();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      std::mt19937_64 rng(seed);
      const auto& s = pool[seed % pool.size()];
      if (s.map.is_circle()) continue;
      std::vector<int> order(static_cast<std::size_t>(s.map.darts()));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const auto r = relabel(s, order);
      CHECK(canonical_code(r) == canonical_code(s));
      CHECK(canonical_form(r).map == canonical_form(s).map);
      CHECK(brute_force_isomorphic(r, s));
    }
  }

  TEST_CASE("symmetries") {
    CHECK(symmetries({theta_graph(), std::nullopt}).preserving.size() == 6);
    const auto sym = symmetries({dumbbell(), std::nullopt});
    // the loop darts 1 and 4 are exchanged by some symmetry
    CHECK(std::any_of(sym.preserving.begin(), sym.preserving.end(), [](const auto& p) { return p[1] == 4; }));
    bool asymmetric = false;
    for (const auto& s : sextic::classify::sigma2_census())
      if (!s.map.is_circle() && s.map.vertex_counts().tri == 4 && sextic::classify::face_profile(s.map) == "6,3,2,1")
        asymmetric = symmetries(s).preserving.size() == 1;
    CHECK(asymmetric);
  }

  TEST_CASE("json round trip") {
    const auto d = dumbbell();
    CHECK(CombinatorialMap::from_json(d.to_json()) == d);
  }
}
