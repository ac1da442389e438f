#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace sextic::cmap {

enum class Role : unsigned char { Black, White };

enum class MapErrorKind { NotInvolution, FixedPointInPairing, Disconnected, NonSphericalGenus, BadValency, Malformed };

class MapError : public std::runtime_error {
 public:
  MapError(MapErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  MapErrorKind kind() const { return kind_; }

 private:
  MapErrorKind kind_;
};

// Oriented map on the sphere.  sigma rotates darts counterclockwise about
// their vertex, theta pairs the two darts of an edge.  Vertices are the
// sigma-orbits, numbered by ascending smallest dart.
//
// The vertex-free circle (a single closed edge with two 0-gonal regions) has
// no rotation system; it is represented by a map with zero darts and the
// circle flag set.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  // Validates: sigma a permutation, theta a fixed-point-free involution,
  // connected, genus 0, black valency <= 3, white valency 1, and every white
  // vertex adjacent to a black one.
  static CombinatorialMap build(std::vector<int> sigma, std::vector<int> theta, std::vector<Role> roles);
  // Same, but with genus and valency checks skipped (used by tests that need
  // maps of higher genus).
  static CombinatorialMap build_unchecked(std::vector<int> sigma, std::vector<int> theta, std::vector<Role> roles);
  static CombinatorialMap circle();

  bool is_circle() const { return circle_; }
  int darts() const { return static_cast<int>(sigma_.size()); }
  int vertices() const { return static_cast<int>(roles_.size()); }
  int edges() const { return darts() / 2; }

  int sigma(int d) const { return sigma_[static_cast<std::size_t>(d)]; }
  int sigma_inv(int d) const { return sigma_inv_[static_cast<std::size_t>(d)]; }
  int theta(int d) const { return theta_[static_cast<std::size_t>(d)]; }
  int phi(int d) const { return sigma(theta(d)); }  // face permutation
  int vertex_of(int d) const { return vertex_[static_cast<std::size_t>(d)]; }
  Role role(int v) const { return roles_[static_cast<std::size_t>(v)]; }
  int valency(int v) const { return static_cast<int>(vertex_darts_[static_cast<std::size_t>(v)].size()); }
  // Darts at v in counterclockwise order, starting with the smallest.
  const std::vector<int>& vertex_darts(int v) const { return vertex_darts_[static_cast<std::size_t>(v)]; }

  const std::vector<int>& sigma_perm() const { return sigma_; }
  const std::vector<int>& theta_perm() const { return theta_; }
  const std::vector<Role>& roles() const { return roles_; }

  // Counts of monovalent, bivalent and trivalent black vertices and of
  // white vertices.
  struct VertexCounts {
    int mono = 0, bi = 0, tri = 0, white = 0;
  };
  VertexCounts vertex_counts() const;

  // Same map with the orientation reversed (sigma replaced by its inverse).
  CombinatorialMap mirror() const;

  nlohmann::json to_json() const;
  static CombinatorialMap from_json(const nlohmann::json& j);

  friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b) {
    return a.circle_ == b.circle_ && a.sigma_ == b.sigma_ && a.theta_ == b.theta_ && a.roles_ == b.roles_;
  }

 private:
  bool circle_ = false;
  std::vector<int> sigma_, sigma_inv_, theta_, vertex_;
  std::vector<Role> roles_;
  std::vector<std::vector<int>> vertex_darts_;

  static CombinatorialMap assemble(std::vector<int> sigma, std::vector<int> theta, std::vector<Role> roles);
};

struct Region {
  std::vector<int> boundary;  // dart orbit of phi, starting with its smallest dart
  int gonality = 0;           // corners at black vertices
};

// Regions in order of their smallest dart; the circle yields two 0-gonal
// regions with empty boundary.
std::vector<Region> faces(const CombinatorialMap& map);
// Index of the region containing each dart.
std::vector<int> face_of_dart(const CombinatorialMap& map);
int genus(const CombinatorialMap& map);

struct Skeleton {
  CombinatorialMap map;
  std::optional<int> distinguished;  // vertex id

  int vertex_flag(int v) const;  // role, plus 2 for the distinguished vertex
  Skeleton mirror() const { return {map.mirror(), distinguished}; }
};

enum class Orientation { Preserve, Either };

// Equal codes iff the skeletons are isomorphic (roles and the distinguished
// vertex respected); with Either, a skeleton and its mirror share the code.
std::string canonical_code(const Skeleton& sk, Orientation orientation = Orientation::Preserve);

// Relabels the darts by the breadth-first order realizing the preserving
// canonical code, so isomorphic skeletons give identical values.
Skeleton canonical_form(const Skeleton& sk);

// Dart k of the result is dart order[k] of sk.
Skeleton relabel(const Skeleton& sk, const std::vector<int>& order);

struct Symmetries {
  std::vector<std::vector<int>> preserving;  // dart permutations; identity first
  std::vector<std::vector<int>> reversing;
};

Symmetries symmetries(const Skeleton& sk);

// Reference isomorphism test by backtracking over dart bijections.  With
// `reversing`, looks for phi with phi*sigma = sigma^-1*phi instead.
bool brute_force_isomorphic(const Skeleton& a, const Skeleton& b, bool reversing = false);

}  // namespace sextic::cmap
