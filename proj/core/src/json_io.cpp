#include "gkz/json_io.hpp"

#include <nlohmann/json.hpp>

namespace gkz {

std::string rat_str(const Rat& r) { return r.get_str(); }

namespace {

json ivec_to_json(const IVec& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw Error("integer too large for JSON serialization");
    a.push_back(x.get_si());
  }
  return a;
}

IVec ivec_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw Error("schema error at " + path + ": expected an array of integers");
  IVec v;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw Error("schema error at " + path + "[" + std::to_string(i) + "]: expected an integer");
    v.push_back(Int(j[i].get<long>()));
  }
  return v;
}

}  // namespace

json polytope_to_json(const LatticePolytope& p) {
  json j;
  j["dim"] = p.dim();
  j["vertices"] = json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(ivec_to_json(v));
  return j;
}

LatticePolytope polytope_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw Error("schema error at " + path + ": expected {\"dim\", \"vertices\"}");
  size_t dim = j["dim"].get<size_t>();
  std::vector<IVec> verts;
  const json& vs = j["vertices"];
  if (!vs.is_array()) throw Error("schema error at " + path + ".vertices: expected an array");
  for (size_t i = 0; i < vs.size(); ++i) {
    IVec v = ivec_from_json(vs[i], path + ".vertices[" + std::to_string(i) + "]");
    if (v.size() != dim)
      throw Error("schema error at " + path + ".vertices[" + std::to_string(i) +
                  "]: expected dimension " + std::to_string(dim));
    verts.push_back(std::move(v));
  }
  return LatticePolytope::from_points(dim, std::move(verts));
}

json fan_to_json(const Fan& f) {
  json j;
  j["dim"] = f.dim;
  j["rays"] = json::array();
  for (const auto& r : f.rays) j["rays"].push_back(ivec_to_json(r));
  j["max_cones"] = json::array();
  for (const auto& c : f.max_cones) j["max_cones"].push_back(c);
  return j;
}

Fan fan_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
    throw Error("schema error at " + path + ": expected {\"dim\", \"rays\", \"max_cones\"}");
  Fan f;
  f.dim = j["dim"].get<size_t>();
  const json& rays = j["rays"];
  for (size_t i = 0; i < rays.size(); ++i) {
    IVec r = ivec_from_json(rays[i], path + ".rays[" + std::to_string(i) + "]");
    if (r.size() != f.dim)
      throw Error("schema error at " + path + ".rays[" + std::to_string(i) + "]: expected dimension " +
                  std::to_string(f.dim));
    f.rays.push_back(std::move(r));
  }
  const json& cones = j["max_cones"];
  if (!cones.is_array()) throw Error("schema error at " + path + ".max_cones: expected an array");
  for (size_t i = 0; i < cones.size(); ++i) {
    std::vector<size_t> cone;
    for (const auto& x : cones[i]) {
      size_t idx = x.get<size_t>();
      if (idx >= f.rays.size())
        throw Error("schema error at " + path + ".max_cones[" + std::to_string(i) +
                    "]: ray index out of range");
      cone.push_back(idx);
    }
    std::sort(cone.begin(), cone.end());
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

json nef_partition_to_json(const NefPartitionData& npd) {
  json j;
  j["fan"] = fan_to_json(npd.fan);
  j["parts"] = json::array();
  for (const auto& p : npd.parts) j["parts"].push_back(p);
  return j;
}

InstanceSpec instance_from_json(const json& j) {
  if (!j.is_object()) throw Error("schema error at $: instance must be an object");
  InstanceSpec spec;
  spec.name = j.value("name", std::string("unnamed"));
  if (j.contains("fan")) {
    spec.fan = fan_from_json(j["fan"], "$.fan");
    if (!j.contains("parts")) throw Error("schema error at $: a fan instance requires \"parts\"");
    for (const auto& part : j["parts"]) {
      std::vector<size_t> idxs;
      for (const auto& x : part) idxs.push_back(x.get<size_t>());
      spec.parts.push_back(std::move(idxs));
    }
  } else if (j.contains("polytope")) {
    spec.delta_dual = polytope_from_json(j["polytope"], "$.polytope");
    if (!j.contains("parts_points"))
      throw Error("schema error at $: a polytope instance requires \"parts_points\"");
    const json& pp = j["parts_points"];
    for (size_t i = 0; i < pp.size(); ++i) {
      std::vector<IVec> grp;
      for (size_t t = 0; t < pp[i].size(); ++t)
        grp.push_back(ivec_from_json(pp[i][t], "$.parts_points[" + std::to_string(i) + "][" +
                                                   std::to_string(t) + "]"));
      spec.parts_points.push_back(std::move(grp));
    }
  } else {
    throw Error("schema error at $: instance needs \"fan\" or \"polytope\"");
  }
  if (j.contains("options")) {
    const json& o = j["options"];
    if (o.contains("degmax")) spec.degmax = o["degmax"].get<long>();
    if (o.contains("seed")) spec.seed = o["seed"].get<unsigned long>();
  }
  return spec;
}

json gkz_report_json(const GkzSystem& g, const NonResonanceCertificate& cert, const Int& rank) {
  json j;
  j["A"] = json::array();
  for (size_t i = 0; i < g.rows(); ++i) j["A"].push_back(ivec_to_json(g.a.row(i)));
  j["beta"] = json::array();
  for (const auto& b : g.beta) j["beta"].push_back(rat_str(b));
  j["column_labels"] = json::array();
  for (const auto& [i, jj] : g.column_labels) j["column_labels"].push_back({i, jj});
  j["facets"] = json::array();
  for (const auto& p : cert.pairings) j["facets"].push_back(ivec_to_json(p.normal));
  j["pairings"] = json::array();
  for (const auto& p : cert.pairings) j["pairings"].push_back(rat_str(p.pairing));
  j["non_resonant"] = cert.non_resonant;
  j["rank"] = rank.get_si();
  return j;
}

json solutions_to_json(const SolutionBasis& sols) {
  json j;
  j["alpha"] = json::array();
  for (const auto& a : sols.alpha) j["alpha"].push_back(rat_str(a));
  j["solutions"] = json::array();
  for (const auto& sol : sols.solutions) {
    json s;
    s["basis_element"] = sol.basis_label;
    s["degree"] = sol.degree;
    s["terms"] = json::array();
    for (const auto& t : sol.terms) {
      json term;
      term["l"] = ivec_to_json(t.l);
      term["log_exponents"] = t.log_exp;
      term["coeff_rational"] = rat_str(t.coeff.rational_part());
      json consts = json::object();
      for (const auto& [name, c] : t.coeff.named_terms())
        if (name != "1") consts[name] = rat_str(c);
      term["coeff_constants"] = consts;
      s["terms"].push_back(term);
    }
    j["solutions"].push_back(s);
  }
  return j;
}

}  // namespace gkz
