#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sextic::ade {

enum class Kind { A, D, E };

// A simple singularity type A_k (k >= 1), D_k (k >= 4) or E_k (k = 6,7,8).
struct Label {
  Kind kind = Kind::A;
  int k = 1;

  int milnor() const { return k; }
  std::string str() const;
  friend bool operator==(const Label&, const Label&) = default;
};

class UnsupportedDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Multiset of simple singularities.  Text form: E-types, then D-types,
// then A-types, each by descending subscript, repeated types as "2A2":
// "E8+A4+A3+2A2".  D2 and D3 are normalized to 2A1 and A3; A0 is dropped.
class SingularitySet {
 public:
  SingularitySet() = default;

  SingularitySet& add(Kind kind, int k, int count = 1);
  SingularitySet& add(const Label& l) { return add(l.kind, l.k); }
  SingularitySet& add(const SingularitySet& other);

  const std::vector<Label>& labels() const { return labels_; }
  int milnor() const;
  bool empty() const { return labels_.empty(); }
  std::string str() const;
  static SingularitySet parse(std::string_view text);

  friend bool operator==(const SingularitySet& a, const SingularitySet& b) { return a.labels_ == b.labels_; }
  friend bool operator<(const SingularitySet& a, const SingularitySet& b) { return a.str() < b.str(); }

 private:
  std::vector<Label> labels_;  // kept sorted in canonical order
};

// Multisets of types realized by induced subgraphs of the Dynkin graph of
// `type` on exactly `budget` vertices (perturbations of the singularity),
// sorted by text form.
std::vector<SingularitySet> dynkin_induced(const Label& type, int budget);

// Type of a connected Dynkin-type tree given by its adjacency lists.
Label classify_tree(const std::vector<std::vector<int>>& adjacency);

}  // namespace sextic::ade
