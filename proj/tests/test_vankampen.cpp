#include <doctest.h>

#include <algorithm>

#include "sextic/classify.hpp"
#include "sextic/smith.hpp"
#include "sextic/vankampen.hpp"

using namespace sextic;
using namespace sextic::vankampen;
using fpgroup::group_order;

namespace {

const classify::TableRow& row_of(classify::Kind kind, const std::string& set) {
  static const auto irr = classify::classify(classify::Kind::Irreducible);
  static const auto red = classify::classify(classify::Kind::Reducible);
  const auto& rows = kind == classify::Kind::Irreducible ? irr : red;
  auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.set.str() == set; });
  REQUIRE(it != rows.end());
  return *it;
}

}  // namespace

TEST_SUITE("vankampen") {
  TEST_CASE("relations at infinity") {
    const auto rel = relations_at_infinity();
    REQUIRE(rel.size() == 3);
    // rho^3 = a1 a2^2 abelianizes to 3(a+b+c) - (a+2b)
    CHECK(rel[0].exponent_sums(3) == std::vector<std::int64_t>{2, 1, 3});
    CHECK(rel[1].exponent_sums(3) == std::vector<std::int64_t>{1, 0, -1});
    CHECK(rel[2].exponent_sums(3) == std::vector<std::int64_t>{0, 0, 0});
  }

  TEST_CASE("(l,m,n) of table rows") {
    CHECK(lmn_of(row_of(classify::Kind::Irreducible, "E8+A4+A3+2A2")).str() == "(5,4,3)");
    CHECK(lmn_of(row_of(classify::Kind::Irreducible, "E8+A7+2A2")).str() == "(8,3,3)");
    CHECK(lmn_of(row_of(classify::Kind::Reducible, "E8+D8+A2+A1")).str() == "(-,3,2)");
    CHECK(lmn_of(row_of(classify::Kind::Reducible, "E8+A5+2A3")).str() == "(4,4,6)");
    CHECK(lmn_of(row_of(classify::Kind::Irreducible, "E8+A11")).fragment == Fragment::Stem);
  }

  TEST_CASE("orders") {
    CHECK(size(5, 4, 3) == 720);
    CHECK(size(0, 0, 1) == 6);
    CHECK(size(3, 0, 0) == 6);
    CHECK(size2(4, 3, 0) == 1800);
    CHECK(size({5, 4, 3, {}, {}, true}) == 720);
  }

  TEST_CASE("special cases") {
    CHECK(group_order(special_group(SpecialCase::TwoE8A3)) == 6);
    CHECK(group_order(special_group(SpecialCase::E8E6D5)) == 6);
    CHECK(group_order(special_group(SpecialCase::E8D6A5).with(alpha(2).pow(3))) == 15);
    CHECK(fpgroup::abelian_invariants(special_group(SpecialCase::E8D6D5)) == std::vector<std::int64_t>{0});
  }

  TEST_CASE("isotrivial quotients have order 5N") {
    // Oracle by hand: a1 = a3 and the first relator give a2 = -5 a1 in H1,
    // so H1 = Z and the quotient by a2^N is cyclic of order 5N.
    const auto iso = special_group(SpecialCase::Isotrivial);
    CHECK(fpgroup::abelian_invariants(iso) == std::vector<std::int64_t>{0});
    for (int n : {2, 3, 5}) {
      const auto q = iso.with(alpha(2).pow(n));
      CHECK(fpgroup::abelian_invariants(q) == std::vector<std::int64_t>{5 * n});
      CHECK(group_order(q) == static_cast<std::size_t>(5 * n));
    }
  }

  TEST_CASE("analyze") {
    const auto g6 = analyze(standard_group({5, 4, 3, {}, {}, false}));
    CHECK(g6.order == 720);
    CHECK(g6.abelian_invariants == std::vector<std::int64_t>{6});
    CHECK(g6.elementary_divisors == std::vector<std::int64_t>{2, 3});
    CHECK(g6.derived_tag == "SL(2,5)");
    CHECK(g6.centralizer_tag == "C12");
    const auto q = analyze(standard_group({4, 3, 0, {}, {}, false}), alpha(2).pow(3));
    CHECK(q.order == 1800);
    CHECK(q.derived_order == 120);
    CHECK(q.centralizer_tag == "C30");
    CHECK(q.centralizer_meet == 2);
    CHECK(q.to_json().at("order") == 1800);
  }

  TEST_CASE("E8 perturbations") {
    const Word b1 = Word::gen(0);
    CHECK(group_order(e8_perturbation_group(E8Kind::A4A3, Basis::B).with(b1.pow(3))) == 360);
    CHECK(group_order(e8_perturbation_group(E8Kind::A4A2A1, Basis::B).with(b1.pow(2))) == 120);
    CHECK(group_order(e8_perturbation_group(E8Kind::D5A2, Basis::B).with(b1.pow(5))) == 600);
    CHECK(group_order(e8_perturbation_group(E8Kind::D5A2, Basis::B).with(b1.pow(12))) == 12);
    CHECK(group_order(e8_perturbation_group(E8Kind::A6A1, Basis::B).with((b1 * Word::gen(1)).pow(7))) == 14);
    CHECK(parse_e8_kind("A2+A4+A1") == E8Kind::A4A2A1);
    CHECK_THROWS_AS(parse_e8_kind("A5"), InvalidPerturbation);
  }

  TEST_CASE("D6 perturbations") {
    const auto a = dm_perturbation_group(6, 3, {2});
    CHECK(a.s == 3);
    CHECK_FALSE(a.abelian);
    CHECK(a.label() == "D3+A2");
    const auto b = dm_perturbation_group(6, 2, {3});
    CHECK(b.s == 4);
    CHECK_FALSE(b.abelian);
    const auto c = dm_perturbation_group(6, 4, {1});
    CHECK(c.s == 2);
    CHECK(c.abelian);
    CHECK_FALSE(nonabelian_image(a.pres).empty());
    CHECK(nonabelian_image(c.pres).empty());
    CHECK_THROWS_AS(dm_perturbation_group(4, 2, {1}), InvalidPerturbation);
    CHECK_THROWS_AS(dm_perturbation_group(6, 6, {}), InvalidPerturbation);
  }

  TEST_CASE("global perturbations") {
    const auto iso = global_perturbation(Base::G6, E8Kind::A4A3);
    CHECK(iso.order == 720);
    CHECK(iso.isomorphism);
    CHECK(global_perturbation(Base::G6, E8Kind::D5A2).order == 6);
    CHECK(global_perturbation(Base::G6, 5, 2, 3).order == 6);
    const auto inf = global_perturbation(Base::Ginf, E8Kind::D5A2);
    CHECK(inf.order == 1800);
    CHECK(inf.isomorphism);
    CHECK(global_perturbation(Base::Ginf, 4, 1, 0).order == 15);
    CHECK(parse_base("G_inf") == Base::Ginf);
    CHECK_THROWS(parse_base("G7"));
  }

  TEST_CASE("row checks") {
    const auto rc = check_row(row_of(classify::Kind::Irreducible, "E8+A7+2A2"));
    CHECK(rc.method == "size");
    CHECK(rc.order == 6);
    CHECK(rc.abelian);
    const auto rr = check_row(row_of(classify::Kind::Reducible, "E8+D6+A3+A2"));
    CHECK(rr.method == "size2");
    CHECK(rr.order == 1800);
  }
}
