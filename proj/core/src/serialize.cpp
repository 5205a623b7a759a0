#include "ginter/serialize.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ginter/poly_io.hpp"

namespace ginter {

namespace {

using json = nlohmann::ordered_json;

json coeff_array(const RealPoly& p) {
  json arr = json::array();
  for (double c : p.coeffs()) arr.push_back(c);
  return arr;
}

json value_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

json root_json(const RootReport& rep) {
  json j;
  j["root"] = {{"re", rep.root.real()}, {"im", rep.root.imag()}};
  j["residual"] = rep.residual;
  j["method"] = method_name(rep.method);
  j["iterations"] = rep.polish_iterations;
  j["bracket"] = {rep.bracket.bad, rep.bracket.good};
  return j;
}

}  // namespace

std::string to_json(const CircleSection& sec, int indent) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = "circle";
  j["r"] = sec.r;
  j["n"] = sec.n;
  j["alphas"] = sec.alphas;
  j["betas"] = sec.betas;
  j["interleaving"] = sec.interleaving;
  j["min_gap"] = value_or_null(sec.min_gap);
  j["p"] = coeff_array(sec.p);
  j["q"] = coeff_array(sec.q);
  return j.dump(indent);
}

std::string to_json(const LineSection& sec, int indent) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = "line";
  j["y"] = sec.y;
  j["n"] = sec.n;
  j["alphas"] = sec.alphas;
  j["betas"] = sec.betas;
  j["interleaving"] = sec.interleaving;
  j["degenerate"] = sec.degenerate;
  j["min_gap"] = value_or_null(sec.min_gap);
  j["p"] = coeff_array(sec.R);
  j["q"] = coeff_array(sec.I);
  return j.dump(indent);
}

std::string to_json(const RootReport& rep, int indent) {
  json j = root_json(rep);
  j["schema_version"] = kSchemaVersion;
  return j.dump(indent);
}

std::string roots_to_json(std::span<const RootReport> reports, int indent) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["count"] = reports.size();
  json arr = json::array();
  for (const RootReport& rep : reports) arr.push_back(root_json(rep));
  j["roots"] = std::move(arr);
  return j.dump(indent);
}

std::string to_json(const CurveSet& cs, double r_star, bool has_boundary, double boundary,
                    int indent) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["bbox"] = cs.bbox;
  j["resolution"] = cs.resolution;
  j["meta"] = {{"r_star", r_star},
               {"boundary_r", has_boundary ? json(boundary) : json(nullptr)}};
  json curves = json::array();
  for (const Polyline& pl : cs.curves) {
    json c;
    c["kind"] = pl.kind == CurveKind::re ? "re" : "im";
    json pts = json::array();
    for (const auto& p : pl.points) pts.push_back({p[0], p[1]});
    c["points"] = std::move(pts);
    curves.push_back(std::move(c));
  }
  j["curves"] = std::move(curves);
  return j.dump(indent);
}

std::string to_json(const RootMatch& match, int indent) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["matched"] = match.matched;
  j["max_distance"] = match.max_distance;
  json arr = json::array();
  for (const auto& [ia, ib] : match.pairing) arr.push_back({ia, ib});
  j["pairing"] = std::move(arr);
  return j.dump(indent);
}

std::string roots_to_csv(std::span<const RootReport> reports) {
  std::ostringstream os;
  os << "re,im,residual,method,iterations\n";
  for (const RootReport& rep : reports) {
    os << format_double(rep.root.real()) << ',' << format_double(rep.root.imag()) << ','
       << format_double(rep.residual) << ',' << method_name(rep.method) << ','
       << rep.polish_iterations << '\n';
  }
  return os.str();
}

std::string curves_to_csv(const CurveSet& cs) {
  std::ostringstream os;
  os << "kind,polyline_id,x,y\n";
  int id = 0;
  for (const Polyline& pl : cs.curves) {
    const char* kind = pl.kind == CurveKind::re ? "re" : "im";
    for (const auto& p : pl.points) {
      os << kind << ',' << id << ',' << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
    }
    ++id;
  }
  return os.str();
}

}  // namespace ginter
