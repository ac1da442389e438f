#include <doctest.h>

#include <random>

#include "sextic/braid.hpp"
#include "sextic/coset_enum.hpp"
#include "sextic/perm_group.hpp"
#include "sextic/smith.hpp"
#include "sextic/vankampen.hpp"

using namespace sextic::fpgroup;

namespace {
Word a() { return Word::gen(0); }
Word b() { return Word::gen(1); }

Word random_word(std::mt19937_64& rng, int ngens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), g(1, ngens), sign(0, 1);
  std::vector<int> packed;
  for (int i = len(rng); i > 0; --i) packed.push_back(sign(rng) ? g(rng) : -g(rng));
  return Word(packed).reduced();
}
}  // namespace

TEST_SUITE("fpgroup") {
  TEST_CASE("word text round trip and reduction") {
    const auto w = Word::parse("a1 a2^-1 a2 a1 a3^2");
    CHECK(w.reduced().str() == "a1^2 a3^2");
    CHECK(Word().str() == "1");
    CHECK(Word::parse(w.reduced().str()) == w.reduced());
    CHECK((a() * a().inverse()).empty());
    CHECK(Word::parse("a1 a2").conj(a()).str() == "a1^2 a2 a1^-1");
  }

  TEST_CASE("bracket relations") {
    CHECK(braid_bracket(a(), b(), 0).empty());
    CHECK(braid_bracket(a(), b(), 1) == (a() * b().inverse()));
    CHECK(braid_bracket(a(), b(), 2) == commutator(a(), b()));
    CHECK(braid_bracket(a(), b(), 3).str() == "a1 a2 a1 a2^-1 a1^-1 a2^-1");
  }

  TEST_CASE("coset enumeration: small orders") {
    CHECK(group_order(Presentation(1, {a().pow(5)})) == 5);
    // (2,3,5) triangle group; oracle: the permutation model a=(1 2)(3 4), b=(1 3 5)
    const PermGroup model(5, {perm_from_cycles(5, {{1, 2}, {3, 4}}), perm_from_cycles(5, {{1, 3, 5}})});
    REQUIRE(perm_is_identity(model.evaluate((a() * b()).pow(5))));
    const Presentation tri(2, {a().pow(2), b().pow(3), (a() * b()).pow(5)});
    CHECK(group_order(tri) == model.order());
    CHECK(model.order() == 60);
    const auto table = coset_enumerate(tri);
    CHECK(table_is_consistent(table, tri));
    CHECK(coset_enumerate(tri, {a()}).index() == 30);
  }

  TEST_CASE("coset enumeration overflow") {
    CHECK_THROWS_AS(group_order(Presentation(2, {commutator(a(), b())}), 1000), Overflow);
  }

  TEST_CASE("abelian invariants") {
    using sextic::vankampen::standard_group;
    const auto g6 = standard_group({5, 4, 3, {}, {}, false});
    CHECK(abelian_invariants(g6) == std::vector<std::int64_t>{6});
    CHECK(elementary_divisors({6}) == std::vector<std::int64_t>{2, 3});
    const auto q = standard_group({4, 3, 0, {}, sextic::vankampen::alpha(2).pow(3), false});
    CHECK(abelian_invariants(q) == std::vector<std::int64_t>{15});
    CHECK(elementary_divisors({15}) == std::vector<std::int64_t>{3, 5});
    CHECK(abelian_invariants(Presentation(2)) == std::vector<std::int64_t>{0, 0});
  }

  TEST_CASE("Smith normal form on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
    for (int k = 0; k < 50; ++k) {
      const auto rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
      IntMatrix m(rows, std::vector<std::int64_t>(cols));
      for (auto& r : m)
        for (auto& x : r) x = entry(rng);
      const auto f = smith_normal_form(m);
      CHECK(multiply(multiply(f.U, m), f.V) == f.D);
      for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
        const auto d = f.D[i][i], e = f.D[i + 1][i + 1];
        CHECK(d >= 0);
        if (d != 0) CHECK(e % d == 0);
        else CHECK(e == 0);
      }
    }
  }

  TEST_CASE("regular representation and structure tags") {
    const auto c5 = regular_rep(coset_enumerate(Presentation(1, {a().pow(5)})));
    CHECK(c5.degree() == 5);
    CHECK(c5.order() == 5);
    CHECK(identify(regular_rep(coset_enumerate(Presentation(1, {a().pow(6)})))).str() == "C6");
    const PermGroup s4(4, {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{1, 2, 3, 4}})});
    CHECK(s4.order() == 24);
    CHECK(identify(s4).kind == StructureKind::Unknown);
  }

  TEST_CASE("G6 as a permutation group") {
    namespace vk = sextic::vankampen;
    const auto G = regular_rep(coset_enumerate(vk::standard_group({5, 4, 3, {}, {}, false})));
    CHECK(G.order() == 720);
    const auto D = derived_subgroup(G);
    CHECK(D.order() == 120);
    CHECK(is_perfect(D));
    CHECK(identify(D).kind == StructureKind::SL25);
    CHECK(element_order(G, vk::alpha(1)) == 12);
    const auto C = centralizer(G, D);
    CHECK(identify(C).str() == "C12");
    CHECK(intersection_order(C, D) == 2);
    CHECK(subgroup_index(G, {vk::alpha_s(), vk::alpha(1), vk::alpha(3)}) == 1);
  }

  TEST_CASE("Artin action") {
    std::mt19937_64 rng(3);
    const Word delta = Word::parse("a1 a2 a3");
    for (int k = 0; k < 100; ++k) {
      const Word w = random_word(rng, 3, 10);
      CHECK(artin_action({1, 2, 1}, w) == artin_action({2, 1, 2}, w));
      CHECK(artin_action({2, -2, -1, 1}, w) == w);
      // the full twist acts as conjugation by the product of the generators
      CHECK(artin_action(braid_power({1, 2}, 3), w) == w.conj(delta).reduced());
      CHECK(artin_action({1}, w).exponent_sums(3) == w.substitute({Word::gen(1), Word::gen(0), Word::gen(2)})
                                                         .exponent_sums(3));
    }
    CHECK(artin_images({1})[0].str() == "a1 a2 a1^-1");
    CHECK(artin_images({1})[1].str() == "a1");
  }
}
