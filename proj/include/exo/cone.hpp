#pragma once

// Rational polyhedral cones with exact dual computation. A cone stores its
// V-representation (primitive generators, redundancy allowed); the
// H-representation is computed lazily by the double description method and
// cached. Non-full-dimensional cones carry their span equations as opposite
// inequality pairs, so membership stays a plain pairing test.

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "exo/arith.hpp"

namespace exo {

enum class Side { N, M };

inline Side dual_side(Side s) { return s == Side::N ? Side::M : Side::N; }

// Extreme rays and lineality of {x : <a, x> >= 0 for all a in inequalities}.
struct GeneratorDescription {
  std::vector<IntVec> rays;       // primitive, pairwise distinct rays
  std::vector<IntVec> lineality;  // saturated basis of the lineality space
};

GeneratorDescription enumerate_generators(const std::vector<IntVec>& inequalities,
                                          std::size_t rank);

class Cone {
 public:
  Cone() = default;
  Cone(std::size_t rank, Side side, std::vector<IntVec> generators);

  std::size_t ambient_rank() const { return rank_; }
  Side side() const { return side_; }
  const std::vector<IntVec>& generators() const { return generators_; }

  // H-representation: primitive normals in the dual lattice, with the span
  // equations of a non-full-dimensional cone present as +/- pairs. Computed
  // once under an internal guard; the cone is immutable afterwards as before.
  const std::vector<IntVec>& facets() const;

 private:
  std::size_t rank_ = 0;
  Side side_ = Side::N;
  std::vector<IntVec> generators_;

  struct Lazy {
    std::once_flag once;
    std::vector<IntVec> facets;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

// Generators are primitivized and deduplicated as rays; zero vectors rejected.
Cone make_cone(std::size_t rank, Side side, const std::vector<IntVec>& generators);
Cone zero_cone(std::size_t rank, Side side);

Cone dual_cone(const Cone& c);

bool contains(const Cone& c, const RatVec& v);
bool contains(const Cone& c, const IntVec& v);
// A subset of B, via A's generators against B's facets.
bool cone_subset(const Cone& a, const Cone& b);
bool cones_equal(const Cone& a, const Cone& b);

bool is_strictly_convex(const Cone& c);
std::size_t lineality_rank(const Cone& c);
std::size_t dim(const Cone& c);

// Generators that are extreme rays (for a strictly convex cone these are the
// irredundant generators).
std::vector<IntVec> extreme_rays(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

// Whether f equals the smallest face of c containing it (f must be a subset).
bool is_face_of(const Cone& f, const Cone& c);

}  // namespace exo
