#pragma once

#include <map>
#include <optional>
#include <string>

#include "orbitcone/convex_ops.hpp"

namespace orbitcone::coxeter {

struct CapExceeded : std::runtime_error {
  CapExceeded() : std::runtime_error("chamber descent exceeded the iteration cap") {}
};
struct IndeterminateMembership : std::runtime_error {
  explicit IndeterminateMembership(const std::string& why) : std::runtime_error(why) {}
};
struct InvalidExpansion : std::runtime_error {
  InvalidExpansion() : std::runtime_error("expansion needs c_j > 0 and alpha_j(v) > 0") {}
};
struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& n) : std::runtime_error("unknown system: " + n) {}
};

/// Functionals alpha_s and coroots alpha_s^vee with alpha_s(alpha_s^vee) = 2.
struct ReflectionData {
  std::size_t dim = 0;
  std::vector<QVec> alphas;
  std::vector<QVec> coroots;
  std::vector<std::string> labels;
};

/// The chamber-disjointness axiom cannot be certified by finite search;
/// built-ins are trusted, user data is checked to a word length and labeled.
enum class Lcs3Status { Builtin, EmpiricallyChecked, Declared };

struct WeylWord {
  std::vector<std::size_t> word;  // product r_{w[0]} r_{w[1]} ... applied to vectors
};

struct DominantForm {
  QVec rep;                                      // representative in the chamber K
  WeylWord word;                                 // word . v == rep
  std::vector<std::size_t> stabilizer_generators;  // S_v = {s : alpha_s(rep) = 0}
};

enum class TitsClass { Interior, BoundaryOrOutside, Unknown };

struct Root {
  QVec alpha;
  QVec coroot;
  bool positive = false;
};

class LinearCoxeterSystem {
 public:
  /// Validates the pairing, LCS1 (chamber interior via strict LP) and LCS2
  /// (no alpha_s in the cone of the others, exact LP per s). For
  /// EmpiricallyChecked status, group elements up to check_length are
  /// enumerated and wK^0 cap K^0 = empty is verified for each.
  LinearCoxeterSystem(ReflectionData data, Lcs3Status status,
                      std::size_t check_length = 8);

  const ReflectionData& data() const { return data_; }
  std::size_t dim() const { return data_.dim; }
  std::size_t rank() const { return data_.alphas.size(); }
  Lcs3Status lcs3_status() const { return status_; }

  /// r_s(v) = v - alpha_s(v) alpha_s^vee
  QVec reflect(std::size_t s, const QVec& v) const;
  QVec apply_word(const WeylWord& w, QVec v) const;
  QMat reflection_matrix(std::size_t s) const;

  /// Interior point of the fundamental chamber found during validation.
  const QVec& chamber_interior_point() const { return chamber_point_; }
  PolyhedralSet chamber() const;
  PolyhedralSet simple_coroot_cone() const;  // C_S

  std::size_t default_cap() const { return 64 * data_.dim; }

  /// Level functional fixed by the group (affine built-ins expose it).
  const std::optional<QVec>& level() const { return level_; }
  void set_level(QVec lvl) { level_ = std::move(lvl); }

  /// Breadth-first enumeration of W{alpha_s}, words of length <= bound,
  /// exact dedup; positivity decided by sign on the chamber interior point.
  const std::vector<Root>& enumerate_roots(std::size_t length_bound) const;

 private:
  ReflectionData data_;
  Lcs3Status status_;
  QVec chamber_point_;
  std::optional<QVec> level_;
  mutable std::mutex root_mu_;
  mutable std::map<std::size_t, std::vector<Root>> root_cache_;
};

/// Chamber descent: reflect at the lowest-index negative wall until dominant.
DominantForm to_dominant(const LinearCoxeterSystem& sys, const QVec& v, std::size_t cap);
std::optional<DominantForm> try_to_dominant(const LinearCoxeterSystem& sys, const QVec& v,
                                            std::size_t cap);

/// Interior iff descent succeeds and the stabilizer parabolic is of finite
/// type per the rank <= 3 classification table; Unknown when the table does
/// not cover the parabolic.
TitsClass tits_cone_classify(const LinearCoxeterSystem& sys, const QVec& v);
TitsClass tits_cone_classify(const LinearCoxeterSystem& sys, const QVec& v, std::size_t cap,
                             DominantForm* out_form);

/// Dominance test for u in the closed convex hull of the orbit of v.
/// Requires v Interior; propagates undecidable classifications.
bool orbit_hull_membership(const LinearCoxeterSystem& sys, const QVec& v, const QVec& u);

/// Smallest guaranteed step: for w = sum c_j coroot_j with alpha_j(v) > 0,
/// v - eps w stays in the orbit hull for eps = 1 / sum(c_j / alpha_j(v)).
Rational lemma22_step(const LinearCoxeterSystem& sys, const QVec& v,
                      const std::vector<std::pair<Root, Rational>>& expansion);

/// cone{coroot : alpha(v) > 0} over roots enumerated to the bound.
PolyhedralSet cone_Cv(const LinearCoxeterSystem& sys, const QVec& v, std::size_t length_bound);

/// Order of r_s r_t decided from the pairing product
/// c = alpha_s(coroot_t) alpha_t(coroot_s); rational data admits only
/// m in {2,3,4,6} or infinity (0 here).
unsigned pair_order(const LinearCoxeterSystem& sys, std::size_t s, std::size_t t);

/// Finite-type test for the parabolic generated by `gens`; nullopt when the
/// classification table (components of rank <= 3) does not cover it.
std::optional<bool> parabolic_is_finite(const LinearCoxeterSystem& sys,
                                        const std::vector<std::size_t>& gens);

/// A1, A2, A3 (paper convention on Q^{n+1}), B2, G2 (Cartan-matrix
/// realization), affine_A1, affine_A2 (level coordinate appended).
LinearCoxeterSystem builtin(const std::string& name);

/// Full orbit via BFS with exact dedup; throws if it exceeds max_size
/// (guards against accidentally enumerating an infinite orbit).
std::vector<QVec> enumerate_orbit(const LinearCoxeterSystem& sys, const QVec& v,
                                  std::size_t max_size = 100000);

}  // namespace orbitcone::coxeter
