#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "orbitcone/lp.hpp"

namespace orbitcone {

/// Closed halfspace {v : normal.v >= offset}; strict marks the open variant.
/// Open sets are carried as strict H-reps and all conversions work on closures.
struct HalfSpace {
  QVec normal;
  Rational offset;
  bool strict = false;
};

struct VRep {
  std::vector<QVec> points;
  std::vector<QVec> rays;
};

/// Generators of a cone given by homogeneous constraints: span(lineality) + cone(rays).
struct ConeGenerators {
  std::vector<QVec> lineality;
  std::vector<QVec> rays;
};

/// Double description: extreme rays and lineality of {x : a.x >= 0, a in constraints}.
/// Exact; adjacency decided by rank. Intended for dimension <= 10 and
/// moderate generator counts.
ConeGenerators dual_description(std::size_t dim, const std::vector<QVec>& constraints);

/// Drops generators lying in the cone of the others (exact LP per generator).
std::vector<QVec> minimal_generators(std::vector<QVec> gens);

/// Convex polyhedron carrying an H-rep, a V-rep, or both. Conversion is lazy
/// and cached; values are immutable after construction.
///
/// Convention: a V-rep with rays only denotes the cone over the rays (the
/// apex 0 is implicit). An entirely empty V-rep is the empty set.
class PolyhedralSet {
 public:
  static PolyhedralSet from_hrep(std::size_t dim, std::vector<HalfSpace> hs);
  static PolyhedralSet from_vrep(std::size_t dim, std::vector<QVec> points,
                                 std::vector<QVec> rays);
  static PolyhedralSet cone_from_rays(std::size_t dim, std::vector<QVec> rays);

  std::size_t dim() const { return dim_; }
  bool has_hrep() const;
  bool has_vrep() const;
  const std::vector<HalfSpace>& hrep() const;  // converts and caches on first use
  const VRep& vrep() const;

  /// Homogeneous test: rays-only V-rep (or points all zero), or zero offsets.
  bool is_cone() const;
  bool is_empty() const;

  /// Membership in the closure.
  bool contains(const QVec& v) const;

 private:
  PolyhedralSet(std::size_t dim) : dim_(dim), cache_(std::make_shared<Cache>()) {}

  struct Cache {
    mutable std::mutex mu;
    mutable std::optional<std::vector<HalfSpace>> hrep;
    mutable std::optional<VRep> vrep;
  };

  std::size_t dim_;
  std::shared_ptr<Cache> cache_;
};

/// Exact set equality via mutual inclusion of generators (points and
/// recession rays), independent of representation.
bool sets_equal(const PolyhedralSet& a, const PolyhedralSet& b);
bool set_contains_set(const PolyhedralSet& outer, const PolyhedralSet& inner);

}  // namespace orbitcone
