#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/ade.hpp"
#include "sextic/cmap.hpp"
#include "sextic/enumerate.hpp"

namespace sextic::classify {

using cmap::Skeleton;

class CountViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Skeletons of stable maximal trigonal curves in Sigma_2: every connected
// spherical skeleton with 3a+4b+c+3w = 4-2d, d >= 0, up to
// orientation-preserving isomorphism, followed by the vertex-free circle.
std::vector<Skeleton> sigma2_census(enumerate::Backend backend = enumerate::Backend::Parallel);

// Splitting markings: for each vertex, the dart carrying index 1 (e1) at a
// trivalent black vertex and -1 elsewhere.  Empty if some black vertex is
// mono- or bivalent.
using Marking = std::vector<int>;
std::vector<Marking> splitting_markings(const Skeleton& sk);

// Insertion on the edge {site, theta(site)}: the edge is subdivided by a new
// trivalent black vertex v with darts (vu, vs, vt) in counterclockwise order,
// vs paired with `site` and vt with theta(site), and vu leads to the new
// monovalent white vertex u.  The opposite dart of the same edge gives the
// mirror position.  For the circle, v carries a loop.
Skeleton attach(const Skeleton& skp, int site);
// Inverse of attach: removes u and v and fuses the two remaining edges at v.
Skeleton remove_insertion(const Skeleton& sk);

// Whether the curve with skeleton attach(skp, site) is reducible, i.e.
// whether that skeleton admits a splitting marking.
bool is_reducible(const Skeleton& skp, int site);

struct FiberData {
  int e6 = 0, e8 = 0, e7 = 0;  // mono/bivalent black, white vertices other than u
  int d = 0;                   // number of D-type fibers
  std::vector<int> gonalities;  // per region, in cmap::faces order
};

// `total` is 8 for skeletons carrying the insertion (u counted as a white
// vertex) and 4 for Sigma_2 skeletons.
FiberData fiber_data(const Skeleton& sk, int total = 8);

enum class Shape { General, MonovalentV, BivalentV, Circle, Isotrivial };

struct CurveClass {
  Skeleton sk;                 // with u distinguished
  std::vector<int> d_regions;  // regions (cmap::faces indices) carrying D-type fibers
  bool reducible = false;
  bool real = false;
  ade::SingularitySet set;
  std::string fragment;        // figure letter of the underlying Sigma_2 skeleton
  Shape shape = Shape::General;
};

// One class per orbit of d-subsets of regions under the orientation
// preserving symmetries of (Sk, u); for a chiral Sk the mirror classes are
// not listed separately.
std::vector<CurveClass> deformation_classes(const Skeleton& sk);

ade::SingularitySet singularity_set(const Skeleton& sk, const std::vector<int>& d_regions);

// The skeletons with insertion for the exceptional positions of v: v
// monovalent, v bivalent, and the insertion on the circle.
Skeleton monovalent_v_skeleton();
Skeleton bivalent_v_skeleton();
Skeleton circle_insertion_skeleton();

enum class Kind { Irreducible, Reducible };

struct TableRow {
  ade::SingularitySet set;
  std::string fragment;
  int n_r = 0, n_c = 0;
  bool reducible = false;
  Shape shape = Shape::General;
  // Representative classes of the row (one per real class or pair), used
  // for the (l,m,n) column.
  std::vector<CurveClass> classes;
};

struct Totals {
  int classes = 0, sets = 0, real = 0, pairs = 0;
};

std::vector<TableRow> classify(Kind kind, enumerate::Backend backend = enumerate::Backend::Parallel);
Totals totals(const std::vector<TableRow>& rows);

// Every skeleton with insertion, up to orientation-preserving isomorphism:
// attach() over the census plus the three exceptional shapes.
std::vector<Skeleton> all_insertions(enumerate::Backend backend = enumerate::Backend::Parallel);

// Same set obtained directly: every spherical skeleton with
// 3a+4b+c+3w = 8-2d (u counted) with one white vertex distinguished.  Used
// as an independent cross-check of all_insertions().
std::vector<Skeleton> direct_insertions(enumerate::Backend backend = enumerate::Backend::Parallel);

// Skeletons describing the perturbations of E8: a distinguished monovalent
// black vertex plus skeleton data with 3a+4b+c+3w = 3-2d.
std::vector<Skeleton> e8_perturbation_census(enumerate::Backend backend = enumerate::Backend::Parallel);
// Sets of singularities of the curves defined by those skeletons (all D
// placements).
std::vector<ade::SingularitySet> e8_perturbation_sets(const std::vector<Skeleton>& census);

// Face profile "6,3,2,1" (gonalities, descending).
std::string face_profile(const cmap::CombinatorialMap& m);

}  // namespace sextic::classify
