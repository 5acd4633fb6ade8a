#include "efforge/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace efforge {

namespace {

Rational rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational as string or integer");
}

Json rows_to_json(const std::vector<LinearRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json entry;
    entry["coeffs"] = rat_vec_to_json(row.coeffs);
    entry["rhs"] = rational_to_string(row.rhs);
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<LinearRow> rows_from_json(const Json& j) {
  std::vector<LinearRow> rows;
  for (const auto& entry : j) {
    LinearRow row;
    row.coeffs = rat_vec_from_json(entry.at("coeffs"));
    row.rhs = rat_from_json(entry.at("rhs"));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json rat_vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& value : v) out.push_back(rational_to_string(value));
  return out;
}

RatVec rat_vec_from_json(const Json& j) {
  RatVec v;
  v.reserve(j.size());
  for (const auto& entry : j) v.push_back(rat_from_json(entry));
  return v;
}

Json formulation_to_json(const ExtendedFormulation& ef) {
  Json j;
  j["dim"] = ef.dim;
  j["equations"] = rows_to_json(ef.equations);
  j["inequalities"] = rows_to_json(ef.inequalities);
  Json proj = Json::array();
  for (const auto& row : ef.projection_matrix) proj.push_back(rat_vec_to_json(row));
  j["projection_matrix"] = std::move(proj);
  j["projection_offset"] = rat_vec_to_json(ef.projection_offset);
  return j;
}

ExtendedFormulation formulation_from_json(const Json& j) {
  ExtendedFormulation ef;
  ef.dim = j.at("dim").get<int>();
  ef.equations = rows_from_json(j.at("equations"));
  ef.inequalities = rows_from_json(j.at("inequalities"));
  for (const auto& row : j.at("projection_matrix"))
    ef.projection_matrix.push_back(rat_vec_from_json(row));
  ef.projection_offset = rat_vec_from_json(j.at("projection_offset"));
  ef.validate();
  return ef;
}

Json hash_family_to_json(const HashFamily& family) {
  Json j;
  j["n"] = family.n;
  j["r"] = family.r;
  Json maps = Json::array();
  for (const auto& map : family.maps) {
    Json entry = Json::array();
    for (int color : map) entry.push_back(color + 1);  // 1-based on the wire
    maps.push_back(std::move(entry));
  }
  j["maps"] = std::move(maps);
  j["certified"] = family.certified;
  return j;
}

HashFamily hash_family_from_json(const Json& j) {
  HashFamily family;
  family.n = j.at("n").get<int>();
  family.r = j.at("r").get<int>();
  for (const auto& entry : j.at("maps")) {
    std::vector<int> map;
    for (const auto& color : entry) map.push_back(color.get<int>() - 1);
    family.maps.push_back(std::move(map));
  }
  family.certified = j.at("certified").get<bool>();
  return family;
}

Json certificate_to_json(const SymmetryCertificate& cert) {
  Json j;
  j["k"] = cert.k;
  j["n"] = cert.n;
  Json classes = Json::array();
  for (const auto& cls : cert.classes) {
    Json entry;
    entry["i"] = cls.i;
    entry["count"] = rational_to_string(cls.count);
    entry["lambda"] = rational_to_string(cls.lambda);
    classes.push_back(std::move(entry));
  }
  j["classes"] = std::move(classes);
  Json patterns = Json::array();
  for (const auto& check : cert.patterns) {
    Json entry;
    entry["a_star"] = check.pattern.lower;
    entry["a_crossstar"] = check.pattern.crossing;
    entry["a_upstar"] = check.pattern.upper;
    entry["value"] = rational_to_string(check.value);
    entry["pass"] = check.pass;
    patterns.push_back(std::move(entry));
  }
  j["patterns"] = std::move(patterns);
  j["slack_equation"] = rational_to_string(cert.slack_equation);
  j["verdict"] = cert.verdict;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump_json(j);
}

}  // namespace efforge
