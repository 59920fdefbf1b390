#include "orbitcone/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace orbitcone::coxeter {
namespace {

// interior point of {v : alpha_s(v) >= 0 for all s}, scaled to margin 1
std::optional<QVec> chamber_interior(const ReflectionData& d) {
  LpProblem p(d.dim + 1);  // (v, eps)
  QVec obj = zero_vec(d.dim + 1);
  obj[d.dim] = 1;
  p.objective = obj;
  for (const auto& a : d.alphas) {
    QVec row = a;
    row.push_back(-1);
    p.add_ge(std::move(row), Rational(0));
  }
  QVec cap = zero_vec(d.dim + 1);
  cap[d.dim] = -1;
  p.add_ge(std::move(cap), Rational(-1));
  LpOutcome out = lp_maximize(p);
  if (out.status != LpStatus::Optimal || out.value <= 0) return std::nullopt;
  QVec v(out.x.begin(), out.x.begin() + d.dim);
  return scale(1 / out.value, v);
}

struct MatLess {
  bool operator()(const QMat& a, const QMat& b) const {
    return std::lexicographical_compare(a.a.begin(), a.a.end(), b.a.begin(), b.a.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
  }
};

}  // namespace

LinearCoxeterSystem::LinearCoxeterSystem(ReflectionData data, Lcs3Status status,
                                         std::size_t check_length)
    : data_(std::move(data)), status_(status) {
  if (data_.alphas.size() != data_.coroots.size())
    throw std::invalid_argument("reflection data: |alphas| != |coroots|");
  if (data_.labels.empty())
    for (std::size_t s = 0; s < data_.alphas.size(); ++s)
      data_.labels.push_back("s" + std::to_string(s));
  for (std::size_t s = 0; s < data_.alphas.size(); ++s) {
    if (data_.alphas[s].size() != data_.dim || data_.coroots[s].size() != data_.dim)
      throw std::invalid_argument("reflection data: dimension mismatch");
    if (dot(data_.alphas[s], data_.coroots[s]) != 2)
      throw std::invalid_argument("reflection data: alpha_s(coroot_s) != 2");
  }

  auto interior = chamber_interior(data_);
  if (!interior) throw std::invalid_argument("LCS1 fails: chamber has no interior point");
  chamber_point_ = *interior;

  for (std::size_t s = 0; s < data_.alphas.size(); ++s) {
    std::vector<QVec> others;
    for (std::size_t t = 0; t < data_.alphas.size(); ++t)
      if (t != s) others.push_back(data_.alphas[t]);
    if (cone_contains(others, data_.alphas[s]))
      throw std::invalid_argument("LCS2 fails: alpha_" + std::to_string(s) +
                                  " lies in the cone of the others");
  }

  if (status_ == Lcs3Status::EmpiricallyChecked) {
    // enumerate group elements to the requested word length and verify that
    // none of them maps the open chamber back onto itself
    std::set<QMat, MatLess> seen;
    std::deque<std::pair<QMat, std::size_t>> queue;
    QMat id = QMat::identity(data_.dim);
    seen.insert(id);
    queue.push_back({id, 0});
    while (!queue.empty()) {
      auto [w, len] = queue.front();
      queue.pop_front();
      if (len >= check_length) continue;
      for (std::size_t s = 0; s < data_.alphas.size(); ++s) {
        QMat next = mat_mul(reflection_matrix(s), w);
        if (!seen.insert(next).second) continue;
        LpProblem p(data_.dim);  // alpha_t(v) >= 1 and alpha_t(next v) >= 1
        for (const auto& a : data_.alphas) p.add_ge(a, Rational(1));
        for (const auto& a : data_.alphas) {
          QVec row(data_.dim, Rational(0));
          for (std::size_t i = 0; i < data_.dim; ++i)
            for (std::size_t j = 0; j < data_.dim; ++j) row[j] += a[i] * next(i, j);
          p.add_ge(std::move(row), Rational(1));
        }
        if (lp_maximize(p).status != LpStatus::Infeasible)
          throw std::invalid_argument("LCS3 fails empirically at word length " +
                                      std::to_string(len + 1));
        queue.push_back({next, len + 1});
      }
    }
  }
}

QVec LinearCoxeterSystem::reflect(std::size_t s, const QVec& v) const {
  if (s >= data_.alphas.size()) throw std::invalid_argument("reflect: bad generator index");
  return sub(v, scale(dot(data_.alphas[s], v), data_.coroots[s]));
}

QVec LinearCoxeterSystem::apply_word(const WeylWord& w, QVec v) const {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = reflect(*it, v);
  return v;
}

QMat LinearCoxeterSystem::reflection_matrix(std::size_t s) const {
  QMat m = QMat::identity(data_.dim);
  for (std::size_t i = 0; i < data_.dim; ++i)
    for (std::size_t j = 0; j < data_.dim; ++j)
      m(i, j) -= data_.coroots[s][i] * data_.alphas[s][j];
  return m;
}

PolyhedralSet LinearCoxeterSystem::chamber() const {
  std::vector<HalfSpace> hs;
  for (const auto& a : data_.alphas) hs.push_back({a, Rational(0), false});
  return PolyhedralSet::from_hrep(data_.dim, std::move(hs));
}

PolyhedralSet LinearCoxeterSystem::simple_coroot_cone() const {
  return PolyhedralSet::cone_from_rays(data_.dim, data_.coroots);
}

const std::vector<Root>& LinearCoxeterSystem::enumerate_roots(std::size_t bound) const {
  std::lock_guard lk(root_mu_);
  auto it = root_cache_.find(bound);
  if (it != root_cache_.end()) return it->second;

  std::set<QVec, decltype(&lex_less)> seen(&lex_less);
  std::vector<Root> roots;
  std::deque<std::pair<std::size_t, std::size_t>> queue;  // (root index, depth)
  auto add = [&](const QVec& alpha, const QVec& coroot, std::size_t depth) {
    if (!seen.insert(alpha).second) return;
    Rational at_k = dot(alpha, chamber_point_);
    if (at_k == 0) throw std::logic_error("root vanishes on a chamber interior point");
    roots.push_back({alpha, coroot, at_k > 0});
    queue.push_back({roots.size() - 1, depth});
  };
  for (std::size_t s = 0; s < data_.alphas.size(); ++s)
    add(data_.alphas[s], data_.coroots[s], 0);
  while (!queue.empty()) {
    auto [idx, depth] = queue.front();
    queue.pop_front();
    if (depth >= bound) continue;
    QVec alpha = roots[idx].alpha;
    QVec coroot = roots[idx].coroot;
    for (std::size_t s = 0; s < data_.alphas.size(); ++s) {
      QVec na = sub(alpha, scale(dot(alpha, data_.coroots[s]), data_.alphas[s]));  // alpha o r_s
      QVec nc = reflect(s, coroot);
      add(na, nc, depth + 1);
    }
  }
  for (const auto& r : roots)
    if (dot(r.alpha, r.coroot) != 2)
      throw std::logic_error("enumerated root pair lost the pairing normalization");
  return root_cache_.emplace(bound, std::move(roots)).first->second;
}

std::optional<DominantForm> try_to_dominant(const LinearCoxeterSystem& sys, const QVec& v,
                                            std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("to_dominant: cap must be >= 1");
  const auto& d = sys.data();
  QVec cur = v;
  std::vector<std::size_t> steps;
  for (std::size_t it = 0;; ++it) {
    std::size_t neg = d.alphas.size();
    for (std::size_t s = 0; s < d.alphas.size(); ++s)
      if (dot(d.alphas[s], cur) < 0) { neg = s; break; }  // lowest-index tie-break
    if (neg == d.alphas.size()) break;
    if (it >= cap) return std::nullopt;
    cur = sys.reflect(neg, cur);
    steps.push_back(neg);
  }
  DominantForm f;
  f.rep = cur;
  // descent applied r_{s_k} ... r_{s_1}; as a product that reads right-to-left
  f.word.word.assign(steps.rbegin(), steps.rend());
  for (std::size_t s = 0; s < d.alphas.size(); ++s)
    if (dot(d.alphas[s], cur) == 0) f.stabilizer_generators.push_back(s);
  return f;
}

DominantForm to_dominant(const LinearCoxeterSystem& sys, const QVec& v, std::size_t cap) {
  auto f = try_to_dominant(sys, v, cap);
  if (!f) throw CapExceeded();
  return *f;
}

unsigned pair_order(const LinearCoxeterSystem& sys, std::size_t s, std::size_t t) {
  if (s == t) return 1;
  const auto& d = sys.data();
  Rational c = dot(d.alphas[s], d.coroots[t]) * dot(d.alphas[t], d.coroots[s]);
  // r_s r_t rotates the coroot plane by theta with 2 cos(theta) = c - 2;
  // rational c admits finite order only for c in {0,1,2,3}
  if (c == 0) return 2;
  if (c == 1) return 3;
  if (c == 2) return 4;
  if (c == 3) return 6;
  return 0;  // infinite
}

std::optional<bool> parabolic_is_finite(const LinearCoxeterSystem& sys,
                                        const std::vector<std::size_t>& gens) {
  std::size_t n = gens.size();
  if (n == 0) return true;
  std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      unsigned ord = pair_order(sys, gens[i], gens[j]);
      if (ord == 0) return false;  // an infinite bond settles it
      m[i][j] = m[j][i] = ord;
    }
  // connected components of the Coxeter graph (edges where order >= 3)
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<std::size_t> q{i};
    comp[i] = nc;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] < 0 && m[u][v] >= 3) { comp[v] = nc; q.push_back(v); }
    }
    ++nc;
  }
  for (int c = 0; c < nc; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    if (nodes.size() <= 2) continue;               // vertices and dihedral edges are finite
    if (nodes.size() > 3) return std::nullopt;     // beyond the classification table
    std::vector<unsigned> edges;                   // rank 3: path (3,3) or (3,4) only
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        if (m[nodes[a]][nodes[b]] >= 3) edges.push_back(m[nodes[a]][nodes[b]]);
    if (edges.size() != 2) return false;           // triangles start at the affine (3,3,3)
    std::sort(edges.begin(), edges.end());
    if (!(edges[0] == 3 && (edges[1] == 3 || edges[1] == 4))) return false;
  }
  return true;
}

TitsClass tits_cone_classify(const LinearCoxeterSystem& sys, const QVec& v, std::size_t cap,
                             DominantForm* out_form) {
  auto f = try_to_dominant(sys, v, cap);
  if (!f) return TitsClass::BoundaryOrOutside;
  if (out_form) *out_form = *f;
  auto fin = parabolic_is_finite(sys, f->stabilizer_generators);
  if (!fin) return TitsClass::Unknown;
  return *fin ? TitsClass::Interior : TitsClass::BoundaryOrOutside;
}

TitsClass tits_cone_classify(const LinearCoxeterSystem& sys, const QVec& v) {
  return tits_cone_classify(sys, v, sys.default_cap(), nullptr);
}

bool orbit_hull_membership(const LinearCoxeterSystem& sys, const QVec& v, const QVec& u) {
  DominantForm fv, fu;
  TitsClass cv = tits_cone_classify(sys, v, sys.default_cap(), &fv);
  if (cv == TitsClass::Unknown)
    throw IndeterminateMembership("stabilizer of v not covered by the finite-type table");
  if (cv == TitsClass::BoundaryOrOutside)
    throw IndeterminateMembership("v is not certified interior to the Tits cone");
  TitsClass cu = tits_cone_classify(sys, u, sys.default_cap(), &fu);
  if (cu == TitsClass::Unknown)
    throw IndeterminateMembership("stabilizer of u not covered by the finite-type table");
  if (cu == TitsClass::BoundaryOrOutside) return false;  // the hull stays in the open cone
  return cone_contains(sys.data().coroots, sub(fv.rep, fu.rep));
}

Rational lemma22_step(const LinearCoxeterSystem& sys, const QVec& v,
                      const std::vector<std::pair<Root, Rational>>& expansion) {
  if (expansion.empty()) throw InvalidExpansion();
  Rational denom(0);
  QVec w = zero_vec(sys.dim());
  for (const auto& [root, c] : expansion) {
    Rational av = dot(root.alpha, v);
    if (c <= 0 || av <= 0) throw InvalidExpansion();
    denom += c / av;
    w = add(w, scale(c, root.coroot));
  }
  Rational eps = 1 / denom;
  if (!orbit_hull_membership(sys, v, sub(v, scale(eps, w))))
    throw std::logic_error("lemma22_step: v - eps w escaped the orbit hull");
  return eps;
}

PolyhedralSet cone_Cv(const LinearCoxeterSystem& sys, const QVec& v, std::size_t length_bound) {
  std::vector<QVec> rays;
  for (const auto& r : sys.enumerate_roots(length_bound))
    if (dot(r.alpha, v) > 0) rays.push_back(r.coroot);
  PolyhedralSet cv = PolyhedralSet::cone_from_rays(sys.dim(), rays);
  bool chamber_interior = true;
  for (const auto& a : sys.data().alphas)
    if (dot(a, v) <= 0) { chamber_interior = false; break; }
  if (chamber_interior && !sets_equal(cv, sys.simple_coroot_cone()))
    throw std::logic_error("cone_Cv: C_v != C_S for a chamber interior point");
  return cv;
}

LinearCoxeterSystem builtin(const std::string& name) {
  auto typeA = [](std::size_t n) {  // S_{n+1} on Q^{n+1}, alpha_j(x) = x_{j+1} - x_j
    ReflectionData d;
    d.dim = n + 1;
    for (std::size_t j = 0; j < n; ++j) {
      QVec a = zero_vec(n + 1);
      a[j] = -1;
      a[j + 1] = 1;
      d.alphas.push_back(a);
      d.coroots.push_back(a);
      d.labels.push_back("s" + std::to_string(j + 1));
    }
    return d;
  };
  if (name == "A1") return {typeA(1), Lcs3Status::Builtin};
  if (name == "A2") return {typeA(2), Lcs3Status::Builtin};
  if (name == "A3") return {typeA(3), Lcs3Status::Builtin};
  if (name == "B2") {
    ReflectionData d;
    d.dim = 2;
    d.alphas = {qvec({1, -1}), qvec({0, 1})};
    d.coroots = {qvec({1, -1}), qvec({0, 2})};
    d.labels = {"s1", "s2"};
    return {std::move(d), Lcs3Status::Builtin};
  }
  if (name == "G2") {
    // Cartan-matrix realization on the coroot basis
    ReflectionData d;
    d.dim = 2;
    d.alphas = {qvec({2, -1}), qvec({-3, 2})};
    d.coroots = {qvec({1, 0}), qvec({0, 1})};
    d.labels = {"s1", "s2"};
    return {std::move(d), Lcs3Status::Builtin};
  }
  if (name == "affine_A1") {
    // coordinates (a, level); reflections at a = 0 and a = level
    ReflectionData d;
    d.dim = 2;
    d.alphas = {qvec({2, 0}), qvec({-2, 2})};
    d.coroots = {qvec({1, 0}), qvec({-1, 0})};
    d.labels = {"s1", "s0"};
    LinearCoxeterSystem sys(std::move(d), Lcs3Status::Builtin);
    sys.set_level(qvec({0, 1}));
    return sys;
  }
  if (name == "affine_A2") {
    // coordinates (c1, c2, level) over the coroot basis of A2
    ReflectionData d;
    d.dim = 3;
    d.alphas = {qvec({2, -1, 0}), qvec({-1, 2, 0}), qvec({-1, -1, 1})};
    d.coroots = {qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({-1, -1, 0})};
    d.labels = {"s1", "s2", "s0"};
    LinearCoxeterSystem sys(std::move(d), Lcs3Status::Builtin);
    sys.set_level(qvec({0, 0, 1}));
    return sys;
  }
  throw UnknownName(name);
}

std::vector<QVec> enumerate_orbit(const LinearCoxeterSystem& sys, const QVec& v,
                                  std::size_t max_size) {
  std::set<QVec, decltype(&lex_less)> seen(&lex_less);
  std::deque<QVec> queue;
  seen.insert(v);
  queue.push_back(v);
  while (!queue.empty()) {
    QVec cur = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      QVec next = sys.reflect(s, cur);
      if (seen.insert(next).second) {
        if (seen.size() > max_size)
          throw std::runtime_error("enumerate_orbit: orbit exceeds the size bound");
        queue.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace orbitcone::coxeter
