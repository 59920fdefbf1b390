#pragma once

#include <stdexcept>

#include "orbitcone/polyhedral.hpp"

namespace orbitcone {

struct NotSemiEquicontinuous : std::runtime_error {
  NotSemiEquicontinuous() : std::runtime_error("finiteness cone has empty interior") {}
};
struct ZeroInClosure : std::runtime_error {
  ZeroInClosure() : std::runtime_error("0 lies in the closure of the base set") {}
};
struct PointOutside : std::runtime_error {
  PointOutside() : std::runtime_error("point is not in the open set") {}
};

/// s_C(v) = sup <C, v> over a V-rep carrier; nullopt encodes +infinity.
/// Finite exactly when v is nonpositive against every recession ray, and then
/// attained at a carrier point.
class SupportFunctional {
 public:
  explicit SupportFunctional(PolyhedralSet carrier);
  std::optional<Rational> operator()(const QVec& v) const;
  const PolyhedralSet& carrier() const { return carrier_; }

 private:
  PolyhedralSet carrier_;
};

/// C* = {a : <a,v> >= 0 for all v in C}, returned in the representation
/// opposite to the input's. Rejects non-cone input.
PolyhedralSet dual_cone(const PolyhedralSet& cone);

enum class Location { Inside, Boundary, Outside };

/// Exact classification against the closure; Boundary means a supporting
/// hyperplane of the H-rep is active.
Location membership(const PolyhedralSet& set, const QVec& v);

/// lim(C): directions of translation-invariance.
PolyhedralSet recession_cone(const PolyhedralSet& set);

/// Basis of H(C) = lim(C) ∩ -lim(C).
std::vector<QVec> lineality_space(const PolyhedralSet& set);

/// B(C) = {v : inf<C,v> > -infinity} as an H-rep cone; C given in V-rep.
PolyhedralSet finiteness_cone(const PolyhedralSet& C);

/// True iff s_C is bounded on a nonempty open set; equivalently, at finite
/// dimension, iff lim(C) is pointed. Both checks run and must agree.
bool is_semi_equicontinuous(const PolyhedralSet& C);

/// Reconstructs C from its support functional restricted to the interior of
/// the finiteness cone of -C and asserts the reconstruction equals C.
PolyhedralSet duality_roundtrip(const PolyhedralSet& C);

/// C - Omega* for an open convex cone Omega (strict homogeneous H-rep) with
/// Omega contained in B(-C); support values on Omega are unchanged.
PolyhedralSet enlarge_by_cone(const PolyhedralSet& C, const PolyhedralSet& omega);

/// Cone over a bounded polytope whose closure misses 0; always pointed.
PolyhedralSet pointed_cone_from_bounded(const PolyhedralSet& omega);

enum class Norm { L1, L2, Linf };

/// 1 / dist(x, boundary of U) for a proper open U (strict H-rep); the one
/// floating-point operation in this module (facet distances, abs tol 1e-12).
double inverse_boundary_distance(const PolyhedralSet& U, const QVec& x, Norm norm);

}  // namespace orbitcone
