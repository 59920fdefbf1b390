#include "orbitcone/json_io.hpp"

namespace orbitcone {

json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected rational as \"p/q\" string or integer");
}

json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

QVec qvec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of rationals");
  QVec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json polyhedral_to_json(const PolyhedralSet& s) {
  json j;
  j["dim"] = s.dim();
  if (s.has_hrep()) {
    json hs = json::array();
    for (const auto& h : s.hrep()) {
      json e;
      e["normal"] = qvec_to_json(h.normal);
      e["offset"] = rational_to_json(h.offset);
      e["strict"] = h.strict;
      hs.push_back(std::move(e));
    }
    j["hrep"] = std::move(hs);
  }
  if (s.has_vrep()) {
    const VRep& v = s.vrep();
    json pts = json::array(), rays = json::array();
    for (const auto& p : v.points) pts.push_back(qvec_to_json(p));
    for (const auto& r : v.rays) rays.push_back(qvec_to_json(r));
    j["vrep"] = {{"points", std::move(pts)}, {"rays", std::move(rays)}};
  }
  return j;
}

PolyhedralSet polyhedral_from_json(const json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  if (j.contains("hrep")) {
    std::vector<HalfSpace> hs;
    for (const auto& e : j.at("hrep")) {
      HalfSpace h;
      h.normal = qvec_from_json(e.at("normal"));
      h.offset = rational_from_json(e.at("offset"));
      h.strict = e.value("strict", false);
      hs.push_back(std::move(h));
    }
    return PolyhedralSet::from_hrep(dim, std::move(hs));
  }
  if (j.contains("vrep")) {
    const auto& v = j.at("vrep");
    std::vector<QVec> points, rays;
    for (const auto& p : v.value("points", json::array())) points.push_back(qvec_from_json(p));
    for (const auto& r : v.value("rays", json::array())) rays.push_back(qvec_from_json(r));
    return PolyhedralSet::from_vrep(dim, std::move(points), std::move(rays));
  }
  throw std::invalid_argument("polyhedral set needs an hrep or a vrep");
}

}  // namespace orbitcone
