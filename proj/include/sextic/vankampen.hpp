#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sextic/classify.hpp"
#include "sextic/coset_enum.hpp"
#include "sextic/perm_group.hpp"
#include "sextic/presentation.hpp"
#include "sextic/word.hpp"

namespace sextic::vankampen {

using fpgroup::Presentation;
using fpgroup::Word;

class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPerturbation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical basis alpha_1..alpha_3 (generators 0..2) and derived elements.
Word alpha(int i);
Word rho();      // a1 a2 a3
Word alpha_s();  // a2 a3 a2^-1
Word alpha_t();  // (a1 a2) a3 (a1 a2)^-1

// rho^3 = a1 a2^2, a3 = a2 a1 a2^-1, [a1, a2^3] = 1.  The short form
// replaces the first relator by (a1 a2^-1)^5 a2^6, which holds once a3 is
// eliminated through the second.
std::vector<Word> relations_at_infinity(bool short_form = false);

// Parameters of the three bracket relations {a1,a2}_l, {a1,as}_m,
// {a2,at}_n.  Zero omits a relation.
struct SexticGroupSpec {
  int l = 0, m = 0, n = 0;
  std::vector<Word> extra;
  std::optional<Word> quotient_central;  // e.g. a2^3
  bool short_form = false;
};

Presentation standard_group(const SexticGroupSpec& spec);
std::size_t size(const SexticGroupSpec& spec, std::size_t limit = fpgroup::kDefaultCosetLimit);
// The two workhorse functions: plain order and order modulo a2^3.
std::size_t size(int l, int m, int n, std::size_t limit = fpgroup::kDefaultCosetLimit);
std::size_t size2(int l, int m, int n, std::size_t limit = fpgroup::kDefaultCosetLimit);

// How the parameters of a class are read off its skeleton.
enum class Fragment {
  Stem,      // insertion next to a loop: (-,-,1)
  LeafIn,    // insertion inside a loop: (3,-,-)
  LeafOut,   // insertion just outside a loop: (-,2,-)
  General,   // all three regions around v
};

struct Lmn {
  int l = 0, m = 0, n = 0;
  Fragment fragment = Fragment::General;

  // "(5,4,3)", omitted relations as "-"; leaf-out triples print empty.
  std::string str() const;
  friend bool operator==(const Lmn&, const Lmn&) = default;
};

// Regions around the trivalent vertex v next to u, with the marking at v
// chosen so that [v,u] is e2: r holds u, s is the region across v, and t
// is the far corner at the neighbour reached through sigma(vu) (for the
// conjugate curve, through sigma^2(vu)).  Regions carrying a D-type fiber
// contribute 0.
Lmn lmn_of(const classify::CurveClass& curve, bool conjugate = false);

// Parameters for a table row.  For a pair of conjugate curves the member
// whose t is a third region (distinct from r and s) is used when one
// exists.
Lmn lmn_of(const classify::TableRow& row);

enum class SpecialCase { TwoE8A3, E8E6D5, E8D6A5, E8D6D5, Isotrivial };

std::string to_string(SpecialCase c);
std::optional<SpecialCase> special_case_of(const classify::TableRow& row);
Presentation special_group(SpecialCase c);

// Structure of a finite group, or of its quotient by a central element.
struct GroupReport {
  std::size_t order = 0;
  bool quotient = false;
  std::string central;  // word factored out, if any
  std::vector<std::int64_t> abelian_invariants;    // of the presentation itself
  std::vector<std::int64_t> elementary_divisors;
  std::vector<std::int64_t> quotient_invariants;   // of the finite group analyzed
  std::uint64_t derived_order = 0;
  bool perfect = false;
  bool abelian = false;
  std::string derived_tag;
  std::vector<std::uint64_t> generator_orders;
  std::uint64_t centralizer_order = 0;
  std::string centralizer_tag;
  std::uint64_t centralizer_meet = 0;  // |C cap [G,G]|
  std::uint64_t max_cosets = 0;
  double milliseconds = 0;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

// Runs the finite-group toolchain.  The structural part (derived subgroup,
// centralizer) is skipped when `structure` is false or the order exceeds
// the permutation degree bound.
GroupReport analyze(const Presentation& pres, const std::optional<Word>& central = std::nullopt,
                    std::size_t limit = fpgroup::kDefaultCosetLimit, bool structure = true);

// How the group of a table row is certified.
struct RowCheck {
  std::string method;    // "size", "size2", "special", "isotrivial"
  Lmn lmn;
  Presentation pres;     // including the central power when `quotient`
  bool quotient = false;
  std::size_t expected_abelian = 0;  // 6 or 15 (order if the group is abelian)
  std::size_t order = 0;             // computed; 0 when not finite
  std::vector<std::int64_t> invariants;
  bool abelian = false;
};

RowCheck check_row(const classify::TableRow& row, std::size_t limit = fpgroup::kDefaultCosetLimit);

// Perturbations of E8.
enum class E8Kind { A4A3, A4A2A1, D5A2, A7, A6A1, D7, E6A1, E7 };
enum class Basis { B, C };

std::string to_string(E8Kind k);
E8Kind parse_e8_kind(const std::string& text);
const std::vector<E8Kind>& all_e8_kinds();
bool nonabelian(E8Kind k);

// <c1,c2,c3 | c1 rho^2 = rho^2 c2, c2 rho^2 = rho^2 c3, c3 rho = rho c1>
Presentation local_e8_group();
// b-basis: the relations read off the perturbation skeletons.  c-basis:
// listed relations for the three nonabelian kinds, and the b-relations
// rewritten through b1 = c1 c2 c1^-1, b2 = c1, b3 = c3 for the rest.
Presentation e8_perturbation_group(E8Kind k, Basis basis = Basis::C);
// Images of b1, b2, b3 as words in c1, c2, c3.
std::vector<Word> b_in_c();

// Perturbation D_m -> D_p + A_{s_1} + ... + A_{s_k}.
struct DmPerturbation {
  int m = 0, p = 0;
  std::vector<int> s_list;
  int d = 0;
  int s = 1;
  bool abelian = true;
  Presentation pres;

  // "D3+A2", with D2 and D3 kept literal.
  std::string label() const;
};

DmPerturbation dm_perturbation_group(int m, int p, const std::vector<int>& s_list);
// All perturbations of D_m into D_p plus A-points, p >= 2, s lists non-increasing.
std::vector<DmPerturbation> dm_perturbations(int m);

// Images of the generators in S_n, n <= max_degree, satisfying every
// relator and generating a nonabelian subgroup; empty if none exists.
std::vector<fpgroup::Perm> nonabelian_image(const Presentation& pres, int max_degree = 5);

// Perturbations of the two sextics with nonabelian groups.
enum class Base { G6, Ginf };

std::string to_string(Base b);
Base parse_base(const std::string& text);
// G6: (l,m,n) = (5,4,3).  Ginf: (4,3,-).
SexticGroupSpec base_spec(Base b);
// c1 -> at, c2 -> a1, c3 -> a3
std::vector<Word> c_images();

struct GlobalResult {
  Presentation pres;      // without the central power
  std::string central;    // "" for G6, "a2^3" for Ginf
  std::size_t order = 0;  // order of the group (G6) or of the quotient (Ginf)
  std::size_t base_order = 0;
  std::vector<std::int64_t> invariants;
  bool abelian = false;
  bool isomorphism = false;  // order preserved
  // Ginf only: quotient by a1^3 instead of a2^3; 0 if the enumeration overflowed.
  std::size_t alt_order = 0;
};

GlobalResult global_perturbation(Base base, E8Kind local, std::size_t limit = fpgroup::kDefaultCosetLimit);
GlobalResult global_perturbation(Base base, int l, int m, int n, std::size_t limit = fpgroup::kDefaultCosetLimit);

}  // namespace sextic::vankampen
