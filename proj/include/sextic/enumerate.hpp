#pragma once

#include <string>
#include <vector>

#include "sextic/cmap.hpp"

namespace sextic::enumerate {

// Numbers of mono-, bi- and trivalent black vertices and of white vertices.
struct VertexSpec {
  int mono = 0, bi = 0, tri = 0, white = 0;

  int darts() const { return mono + 2 * bi + 3 * tri + white; }
  // 3a + 4b + c + 3w
  int weighted() const { return 3 * mono + 4 * bi + tri + 3 * white; }
  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

enum class Distinguish { None, White, MonoBlack };
enum class Backend { Serial, Parallel };

struct EnumerationResult {
  std::vector<cmap::Skeleton> skeletons;  // canonical forms, sorted by code
  std::vector<std::string> codes;
  long long matchings = 0;  // pairings examined
  long long spherical = 0;  // connected genus-0 pairings
};

// All connected spherical skeletons with the given vertex counts, up to
// orientation-preserving isomorphism.  Rotations are fixed (vertex darts are
// consecutive) and every pairing of darts is tried; white darts only pair
// with black ones.  With a Distinguish mode, every vertex of that kind is
// marked in turn.
EnumerationResult enumerate_skeletons(const VertexSpec& spec, Distinguish mode = Distinguish::None,
                                      Backend backend = Backend::Parallel);

// All solutions (a,b,c,w) of 3a+4b+c+3w = total - 2d, d >= 0, with at least
// `min_white` white vertices.
std::vector<VertexSpec> specs_for_total(int total, int min_white = 0);

int max_threads();

}  // namespace sextic::enumerate
