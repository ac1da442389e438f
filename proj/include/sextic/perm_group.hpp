#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/coset_enum.hpp"
#include "sextic/word.hpp"

namespace sextic::fpgroup {

inline constexpr std::size_t kMaxDegree = 10'000;

class DegreeTooLarge : public std::runtime_error {
 public:
  explicit DegreeTooLarge(std::size_t degree)
      : std::runtime_error("permutation degree " + std::to_string(degree) + " exceeds " +
                           std::to_string(kMaxDegree)) {}
};

// Permutations act on the right: (p * q)[i] = q[p[i]], i.e. p first.
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t n);
Perm perm_mul(const Perm& p, const Perm& q);
Perm perm_inv(const Perm& p);
bool perm_is_identity(const Perm& p);
std::uint64_t perm_order(const Perm& p);  // lcm of cycle lengths
// Builds a permutation from 1-based cycles, e.g. {{1,2},{3,4}}.
Perm perm_from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t>& base() const { return base_; }
  std::vector<std::size_t> orbit_lengths() const;

  bool contains(const Perm& p) const;
  bool is_abelian() const;

  // Image of a word in the generators (generator i of the word <-> gens[i]).
  Perm evaluate(const Word& w) const;

  // All elements, in breadth-first order from the identity.
  std::vector<Perm> elements() const;

 private:
  struct Level {
    std::uint32_t point;
    std::vector<std::int32_t> pos;  // index into orbit, -1 outside
    std::vector<std::uint32_t> orbit;
    std::vector<Perm> u, uinv;      // point^u[k] == orbit[k]
  };

  std::size_t degree_;
  std::vector<Perm> gens_;    // as supplied
  std::vector<Perm> strong_;  // strong generating set
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;

  void schreier_sims();
  void build_level(std::size_t i);
  std::vector<std::size_t> level_gens(std::size_t i) const;
  // Strips p through levels from `from`; returns the residue and the level
  // where stripping stopped (levels_.size() if it passed all of them).
  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from) const;
};

// Regular representation from a complete table on the trivial subgroup.
PermGroup regular_rep(const CosetTable& table);

PermGroup derived_subgroup(const PermGroup& G);
bool is_perfect(const PermGroup& G);
std::uint64_t element_order(const PermGroup& G, const Word& w);
// Elements of G commuting with every generator of H (element scan).
PermGroup centralizer(const PermGroup& G, const PermGroup& H);
std::uint64_t intersection_order(const PermGroup& A, const PermGroup& B);
std::uint64_t subgroup_index(const PermGroup& G, const std::vector<Word>& gens);
std::size_t count_involutions(const PermGroup& G);
bool is_cyclic(const PermGroup& G);

enum class StructureKind { Cyclic, SL25, Unknown };

struct StructureTag {
  StructureKind kind = StructureKind::Unknown;
  std::uint64_t n = 0;  // order, for Cyclic
  std::string str() const;
};

// Cyclic(n) for cyclic groups; SL25 for perfect groups of order 120 with a
// single involution (SL(2,5) is the only perfect group of order 120).
StructureTag identify(const PermGroup& G);

}  // namespace sextic::fpgroup
