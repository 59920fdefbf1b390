#include "orbitcone/convex_ops.hpp"

#include <cmath>

namespace orbitcone {

SupportFunctional::SupportFunctional(PolyhedralSet carrier) : carrier_(std::move(carrier)) {
  if (carrier_.is_empty()) throw std::invalid_argument("SupportFunctional: empty carrier");
}

std::optional<Rational> SupportFunctional::operator()(const QVec& v) const {
  const VRep& vr = carrier_.vrep();
  for (const auto& r : vr.rays)
    if (dot(r, v) > 0) return std::nullopt;
  if (vr.points.empty()) return Rational(0);  // cone with apex 0
  Rational best = dot(vr.points[0], v);
  for (std::size_t i = 1; i < vr.points.size(); ++i) {
    Rational s = dot(vr.points[i], v);
    if (s > best) best = s;
  }
  return best;
}

PolyhedralSet dual_cone(const PolyhedralSet& cone) {
  if (!cone.is_cone())
    throw std::invalid_argument("dual_cone: input has points or inhomogeneous offsets");
  std::size_t n = cone.dim();
  if (cone.has_vrep() && !cone.has_hrep()) {
    std::vector<HalfSpace> hs;
    for (const auto& r : minimal_generators(cone.vrep().rays))
      hs.push_back({r, Rational(0), false});
    return PolyhedralSet::from_hrep(n, std::move(hs));
  }
  std::vector<QVec> gens;
  for (const auto& h : cone.hrep()) gens.push_back(h.normal);
  return PolyhedralSet::cone_from_rays(n, minimal_generators(std::move(gens)));
}

Location membership(const PolyhedralSet& set, const QVec& v) {
  if (v.size() != set.dim()) throw std::invalid_argument("membership: dimension mismatch");
  bool boundary = false;
  for (const auto& h : set.hrep()) {
    int c = cmp(dot(h.normal, v), h.offset);
    if (c < 0) return Location::Outside;
    if (c == 0) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Inside;
}

PolyhedralSet recession_cone(const PolyhedralSet& set) {
  if (set.is_empty()) throw std::invalid_argument("recession_cone: empty set");
  if (set.has_vrep())
    return PolyhedralSet::cone_from_rays(set.dim(), set.vrep().rays);
  std::vector<HalfSpace> hs;
  for (const auto& h : set.hrep()) hs.push_back({h.normal, Rational(0), false});
  return PolyhedralSet::from_hrep(set.dim(), std::move(hs));
}

std::vector<QVec> lineality_space(const PolyhedralSet& set) {
  PolyhedralSet rec = recession_cone(set);
  if (rec.has_hrep()) {
    std::vector<QVec> rows;
    for (const auto& h : rec.hrep()) rows.push_back(h.normal);
    if (rows.empty()) {
      std::vector<QVec> full;
      for (std::size_t i = 0; i < set.dim(); ++i) full.push_back(unit_vec(set.dim(), i));
      return full;
    }
    return nullspace(QMat::from_rows(rows));
  }
  // V-rep cone: a generator lies in the lineality iff its negative is in the
  // cone, and those generators span H(C).
  const auto& rays = rec.vrep().rays;
  std::vector<QVec> members;
  for (const auto& r : rays)
    if (cone_contains(rays, negate(r))) members.push_back(r);
  if (members.empty()) return {};
  QMat m = QMat::from_rows(members);
  auto piv = row_echelon(m);
  std::vector<QVec> basis;
  for (std::size_t i = 0; i < piv.size(); ++i) basis.push_back(m.row(i));
  return basis;
}

PolyhedralSet finiteness_cone(const PolyhedralSet& C) {
  const VRep& v = C.vrep();
  if (v.points.empty() && v.rays.empty())
    throw std::invalid_argument("finiteness_cone: empty set");
  std::vector<HalfSpace> hs;
  for (const auto& r : v.rays) hs.push_back({r, Rational(0), false});
  return PolyhedralSet::from_hrep(C.dim(), std::move(hs));
}

namespace {

// Interior of {v : <r,v> <= 0 for r in rays} is nonempty iff some v has
// margin on every row; decided by maximizing the common slack.
bool neg_dual_has_interior(std::size_t dim, const std::vector<QVec>& rays) {
  if (rays.empty()) return true;
  LpProblem p(dim + 1);  // (v, eps)
  QVec obj = zero_vec(dim + 1);
  obj[dim] = 1;
  p.objective = obj;
  for (const auto& r : rays) {
    QVec row = negate(r);
    row.push_back(-1);
    p.add_ge(std::move(row), Rational(0));  // -<r,v> - eps >= 0
  }
  QVec cap = zero_vec(dim + 1);
  cap[dim] = -1;
  p.add_ge(std::move(cap), Rational(-1));  // eps <= 1
  LpOutcome out = lp_maximize(p);
  return out.status == LpStatus::Optimal && out.value > 0;
}

}  // namespace

bool is_semi_equicontinuous(const PolyhedralSet& C) {
  const VRep& v = C.vrep();
  if (v.points.empty() && v.rays.empty())
    throw std::invalid_argument("is_semi_equicontinuous: empty set");
  bool interior = neg_dual_has_interior(C.dim(), v.rays);
  bool pointed = true;
  for (const auto& r : v.rays)
    if (cone_contains(v.rays, negate(r))) { pointed = false; break; }
  if (interior != pointed)
    throw std::logic_error("is_semi_equicontinuous: interior and pointedness tests disagree");
  return interior;
}

PolyhedralSet duality_roundtrip(const PolyhedralSet& C) {
  const VRep& v = C.vrep();
  if (v.points.empty() && v.rays.empty())
    throw std::invalid_argument("duality_roundtrip: empty set");
  if (!neg_dual_has_interior(C.dim(), v.rays)) throw NotSemiEquicontinuous();

  SupportFunctional s(C);
  // The H-rep normals of C, negated, certify the reconstruction
  // C_f = {alpha : alpha(v_i) <= s_C(v_i)}. The support value can be
  // strictly smaller than the stored offset suggests when the row is tight
  // only on the recession face, so the constraints are rebuilt from the
  // evaluated values.
  std::vector<HalfSpace> hs;
  for (const auto& h : C.hrep()) {
    QVec dir = negate(h.normal);
    auto val = s(dir);
    if (!val) throw std::logic_error("duality_roundtrip: facet normal escapes B(-C)");
    if (*val > -h.offset)
      throw std::logic_error("duality_roundtrip: H-rep row violated by the carrier");
    hs.push_back({h.normal, -*val, false});
  }
  PolyhedralSet cf =
      hs.empty() ? C : PolyhedralSet::from_hrep(C.dim(), std::move(hs));
  if (!sets_equal(cf, C)) throw std::logic_error("duality_roundtrip: reconstruction differs");
  return cf;
}

PolyhedralSet enlarge_by_cone(const PolyhedralSet& C, const PolyhedralSet& omega) {
  if (!omega.is_cone()) throw std::invalid_argument("enlarge_by_cone: omega is not a cone");
  std::vector<QVec> omega_dual;  // Omega* = cone of the H-rep normals
  for (const auto& h : omega.hrep()) omega_dual.push_back(h.normal);

  SupportFunctional s(C);
  // precondition Omega <= B(-C): s_C must be finite on the closure of Omega,
  // certified on its extreme rays
  PolyhedralSet closure = omega;
  for (const auto& r : closure.vrep().rays)
    if (!s(r))
      throw std::invalid_argument("enlarge_by_cone: s_C = +infinity on an omega ray");

  const VRep& v = C.vrep();
  std::vector<QVec> rays = v.rays;
  for (const auto& g : omega_dual) rays.push_back(negate(g));
  PolyhedralSet out = PolyhedralSet::from_vrep(C.dim(), v.points, std::move(rays));

  SupportFunctional s2(out);
  for (const auto& r : closure.vrep().rays) {
    auto a = s(r), b = s2(r);
    if (!a || !b || *a != *b)
      throw std::logic_error("enlarge_by_cone: support values changed on omega");
  }
  return out;
}

PolyhedralSet pointed_cone_from_bounded(const PolyhedralSet& omega) {
  const VRep& v = omega.vrep();
  if (!v.rays.empty())
    throw std::invalid_argument("pointed_cone_from_bounded: set is unbounded");
  if (v.points.empty()) throw std::invalid_argument("pointed_cone_from_bounded: empty set");
  if (omega.contains(zero_vec(omega.dim()))) throw ZeroInClosure();
  PolyhedralSet cone = PolyhedralSet::cone_from_rays(omega.dim(), v.points);
  if (!lineality_space(cone).empty())
    throw std::logic_error("pointed_cone_from_bounded: cone is not pointed");
  return cone;
}

double inverse_boundary_distance(const PolyhedralSet& U, const QVec& x, Norm norm) {
  const auto& hs = U.hrep();
  if (hs.empty()) throw std::invalid_argument("inverse_boundary_distance: U must be proper");
  for (const auto& h : hs) {
    int c = cmp(dot(h.normal, x), h.offset);
    if (c < 0 || (h.strict && c == 0)) throw PointOutside();
  }
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& h : hs) {
    double margin = to_double(dot(h.normal, x) - h.offset);
    double dual_norm = 0;
    switch (norm) {  // distance to a hyperplane scales by the dual norm
      case Norm::L1:
        for (const auto& a : h.normal) dual_norm = std::max(dual_norm, std::abs(to_double(a)));
        break;
      case Norm::L2: {
        double s = 0;
        for (const auto& a : h.normal) s += to_double(a) * to_double(a);
        dual_norm = std::sqrt(s);
        break;
      }
      case Norm::Linf:
        for (const auto& a : h.normal) dual_norm += std::abs(to_double(a));
        break;
    }
    dist = std::min(dist, margin / dual_norm);
  }
  if (dist <= 1e-12) throw PointOutside();
  return 1.0 / dist;
}

}  // namespace orbitcone
