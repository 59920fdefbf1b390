#include "orbitcone/polyhedral.hpp"

#include <algorithm>

namespace orbitcone {
namespace {

void sort_dedup(std::vector<QVec>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<QVec> canonical_rays(const std::vector<QVec>& rays) {
  std::vector<QVec> out;
  for (const auto& r : rays) {
    QVec p = primitive(r);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  sort_dedup(out);
  return out;
}

// Extreme rays of the pointed cone {x in Q^d : row.x >= 0 for all rows};
// rows must have rank d. Incremental double description starting from a
// simplicial subcone, adjacency decided exactly by rank.
std::vector<QVec> pointed_dd(std::size_t d, const std::vector<QVec>& rows) {
  // pick d linearly independent rows for the initial simplicial cone
  std::vector<std::size_t> base;
  {
    std::vector<QVec> acc;
    for (std::size_t i = 0; i < rows.size() && base.size() < d; ++i) {
      acc.push_back(rows[i]);
      if (rank_of_rows(acc) == acc.size())
        base.push_back(i);
      else
        acc.pop_back();
    }
  }
  if (base.size() != d) throw std::logic_error("pointed_dd: rank deficit");

  QMat B(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) B(i, j) = rows[base[i]][j];
  QMat Binv = *inverse(B);
  std::vector<QVec> rays;
  for (std::size_t j = 0; j < d; ++j) {
    QVec r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = Binv(i, j);
    rays.push_back(primitive(r));
  }

  std::vector<QVec> processed;
  for (auto i : base) processed.push_back(rows[i]);
  std::vector<bool> in_base(rows.size(), false);
  for (auto i : base) in_base[i] = true;

  for (std::size_t ci = 0; ci < rows.size(); ++ci) {
    if (in_base[ci]) continue;
    const QVec& a = rows[ci];
    std::vector<std::size_t> pos, zero, neg;
    std::vector<Rational> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i]);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
      else zero.push_back(i);
    }
    if (neg.empty()) { processed.push_back(a); continue; }

    std::vector<QVec> next;
    for (auto i : pos) next.push_back(rays[i]);
    for (auto i : zero) next.push_back(rays[i]);
    for (auto ip : pos) {
      for (auto in : neg) {
        std::vector<QVec> active;
        for (const auto& c : processed)
          if (dot(c, rays[ip]) == 0 && dot(c, rays[in]) == 0) active.push_back(c);
        if (d >= 2 && rank_of_rows(active) + 2 != d) continue;
        next.push_back(sub(scale(val[ip], rays[in]), scale(val[in], rays[ip])));
      }
    }
    rays = canonical_rays(next);
    processed.push_back(a);
  }
  return rays;
}

}  // namespace

ConeGenerators dual_description(std::size_t dim, const std::vector<QVec>& constraints) {
  std::vector<QVec> rows;
  for (const auto& a : constraints) {
    if (a.size() != dim) throw std::invalid_argument("dual_description: dimension mismatch");
    if (!is_zero(a)) rows.push_back(a);
  }
  if (rows.empty()) {
    ConeGenerators g;
    for (std::size_t i = 0; i < dim; ++i) g.lineality.push_back(unit_vec(dim, i));
    return g;
  }

  // lineality = common kernel of the constraints; the pointed part lives in
  // the complement spanned by the pivot coordinates
  QMat m = QMat::from_rows(rows);
  ConeGenerators g;
  g.lineality = nullspace(m);
  std::vector<std::size_t> piv = row_echelon(m);
  std::size_t d = piv.size();

  std::vector<QVec> restricted;
  for (const auto& r : rows) {
    QVec q(d);
    for (std::size_t j = 0; j < d; ++j) q[j] = r[piv[j]];
    restricted.push_back(std::move(q));
  }
  std::vector<QVec> quot_rays = pointed_dd(d, restricted);
  for (const auto& q : quot_rays) {
    QVec r = zero_vec(dim);
    for (std::size_t j = 0; j < d; ++j) r[piv[j]] = q[j];
    g.rays.push_back(primitive(r));
  }
  sort_dedup(g.rays);
  return g;
}

std::vector<QVec> minimal_generators(std::vector<QVec> gens) {
  gens = canonical_rays(gens);
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<QVec> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (cone_contains(others, gens[i]))
      gens.erase(gens.begin() + i);
    else
      ++i;
  }
  return gens;
}

PolyhedralSet PolyhedralSet::from_hrep(std::size_t dim, std::vector<HalfSpace> hs) {
  for (const auto& h : hs) {
    if (h.normal.size() != dim) throw std::invalid_argument("from_hrep: dimension mismatch");
    if (is_zero(h.normal)) throw std::invalid_argument("from_hrep: zero normal");
  }
  PolyhedralSet s(dim);
  s.cache_->hrep = std::move(hs);
  return s;
}

PolyhedralSet PolyhedralSet::from_vrep(std::size_t dim, std::vector<QVec> points,
                                       std::vector<QVec> rays) {
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("from_vrep: dimension mismatch");
  PolyhedralSet s(dim);
  s.cache_->vrep = VRep{std::move(points), canonical_rays(rays)};
  return s;
}

PolyhedralSet PolyhedralSet::cone_from_rays(std::size_t dim, std::vector<QVec> rays) {
  auto canon = canonical_rays(rays);
  if (canon.empty()) return from_vrep(dim, {zero_vec(dim)}, {});  // cone over nothing is {0}
  return from_vrep(dim, {}, std::move(canon));
}

bool PolyhedralSet::has_hrep() const {
  std::lock_guard lk(cache_->mu);
  return cache_->hrep.has_value();
}

bool PolyhedralSet::has_vrep() const {
  std::lock_guard lk(cache_->mu);
  return cache_->vrep.has_value();
}

const std::vector<HalfSpace>& PolyhedralSet::hrep() const {
  std::lock_guard lk(cache_->mu);
  if (cache_->hrep) return *cache_->hrep;
  const VRep& v = *cache_->vrep;

  // H-rep of conv(P)+cone(R): generators of the dual of the lifted cone
  // cone{(p,1)} + cone{(r,0)} give the facets back at height t = 1.
  std::vector<QVec> duals;
  for (const auto& p : v.points) {
    QVec c(p);
    c.push_back(1);
    duals.push_back(std::move(c));
  }
  for (const auto& r : v.rays) {
    QVec c(r);
    c.push_back(0);
    duals.push_back(std::move(c));
  }
  if (v.points.empty() && !v.rays.empty()) duals.push_back(unit_vec(dim_ + 1, dim_));  // apex

  std::vector<HalfSpace> hs;
  if (duals.empty()) {
    // empty set: contradictory constraints
    QVec e = unit_vec(dim_, 0);
    hs.push_back({e, Rational(1), false});
    hs.push_back({negate(e), Rational(1), false});
  } else {
    ConeGenerators g = dual_description(dim_ + 1, duals);
    auto emit = [&](const QVec& ac, bool both) {
      QVec a(ac.begin(), ac.begin() + dim_);
      Rational c = ac[dim_];
      if (!is_zero(a)) {
        hs.push_back({a, -c, false});
        if (both) hs.push_back({negate(a), c, false});
      }
      // a == 0 only occurs as the trivial constraint 0 >= -c with c >= 0
    };
    for (const auto& r : g.rays) emit(r, false);
    for (const auto& l : g.lineality) emit(l, true);
    // empty hs here means the set is the whole space
  }
  cache_->hrep = std::move(hs);
  return *cache_->hrep;
}

const VRep& PolyhedralSet::vrep() const {
  std::lock_guard lk(cache_->mu);
  if (cache_->vrep) return *cache_->vrep;
  const auto& hs = *cache_->hrep;

  // Homogenize: {x : a.x >= b} lifts to {(x,t) : a.x - b t >= 0, t >= 0}.
  std::vector<QVec> constraints;
  for (const auto& h : hs) {
    QVec c(h.normal);
    c.push_back(-h.offset);
    constraints.push_back(std::move(c));
  }
  constraints.push_back(unit_vec(dim_ + 1, dim_));
  ConeGenerators g = dual_description(dim_ + 1, constraints);

  VRep v;
  for (const auto& l : g.lineality) {
    QVec d(l.begin(), l.begin() + dim_);  // lineality has t = 0 (t >= 0 is a row)
    if (!is_zero(d)) {
      v.rays.push_back(d);
      v.rays.push_back(negate(d));
    }
  }
  for (const auto& r : g.rays) {
    if (r[dim_] == 0) {
      QVec d(r.begin(), r.begin() + dim_);
      if (!is_zero(d)) v.rays.push_back(std::move(d));
    } else {
      QVec p(dim_);
      for (std::size_t i = 0; i < dim_; ++i) p[i] = r[i] / r[dim_];
      v.points.push_back(std::move(p));
    }
  }
  v.rays = canonical_rays(v.rays);
  if (v.points.empty()) v.rays.clear();  // no generator at t > 0: the set is empty
  sort_dedup(v.points);
  cache_->vrep = std::move(v);
  return *cache_->vrep;
}

bool PolyhedralSet::is_cone() const {
  if (has_vrep() && !has_hrep()) {
    const VRep& v = vrep();
    if (v.points.empty()) return !v.rays.empty();
    return std::all_of(v.points.begin(), v.points.end(),
                       [](const QVec& p) { return is_zero(p); });
  }
  const auto& hs = hrep();
  return std::all_of(hs.begin(), hs.end(), [](const HalfSpace& h) { return h.offset == 0; });
}

bool PolyhedralSet::is_empty() const {
  const VRep& v = vrep();
  return v.points.empty() && v.rays.empty();
}

bool PolyhedralSet::contains(const QVec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("contains: dimension mismatch");
  if (has_hrep()) {
    for (const auto& h : hrep())
      if (dot(h.normal, v) < h.offset) return false;
    return true;
  }
  const VRep& vr = vrep();
  if (vr.points.empty()) return cone_contains(vr.rays, v);
  return vrep_contains(vr.points, vr.rays, v);
}

bool set_contains_set(const PolyhedralSet& outer, const PolyhedralSet& inner) {
  const VRep& v = inner.vrep();
  if (v.points.empty() && v.rays.empty()) return true;
  for (const auto& p : v.points)
    if (!outer.contains(p)) return false;
  if (v.points.empty() && !outer.contains(zero_vec(inner.dim()))) return false;
  if (!v.rays.empty()) {
    // rays of inner must lie in the recession cone of outer
    for (const auto& h : outer.hrep())
      for (const auto& r : v.rays)
        if (dot(h.normal, r) < 0) return false;
  }
  return true;
}

bool sets_equal(const PolyhedralSet& a, const PolyhedralSet& b) {
  return set_contains_set(a, b) && set_contains_set(b, a);
}

}  // namespace orbitcone
