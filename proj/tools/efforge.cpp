#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "efforge/builders.hpp"
#include "efforge/certificate.hpp"
#include "efforge/graph.hpp"
#include "efforge/hash_family.hpp"
#include "efforge/json_io.hpp"
#include "efforge/lp_export.hpp"
#include "efforge/polyhedra.hpp"
#include "efforge/rng.hpp"

namespace {

using namespace efforge;

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("EFFORGE_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  return std::strtoull(env, nullptr, 10);
}

std::vector<RatVec> oracle_vertices(const std::string& kind, int n, int ell) {
  CompleteGraphContext ctx(n);
  std::vector<EdgeSubset> family;
  if (kind == "spanning-tree")
    family = enumerate_spanning_trees(ctx);
  else if (kind == "matching")
    family = enumerate_matchings(ctx, ell);
  else if (kind == "cycle")
    family = enumerate_cycles(ctx, ell);
  else
    throw std::domain_error("unknown kind: " + kind);
  std::vector<RatVec> vertices;
  vertices.reserve(family.size());
  for (const auto& member : family) vertices.push_back(member.characteristic_vector());
  return vertices;
}

int run_build(const std::string& kind, int n, int ell, const std::string& out,
              std::uint64_t seed) {
  ExtendedFormulation ef;
  int blocks = 1;
  if (kind == "spanning-tree") {
    ef = build_spanning_tree_ef(n);
  } else if (kind == "matching") {
    HashFamily family = build_family(n, 2 * ell, seed);
    BlockUnionBuild build = build_matching_ef(n, ell, family);
    ef = std::move(build.ef);
    blocks = build.surviving_blocks;
  } else if (kind == "cycle") {
    HashFamily family = build_family(n, ell, seed);
    BlockUnionBuild build = build_cycle_ef(n, ell, family);
    ef = std::move(build.ef);
    blocks = build.surviving_blocks;
  } else {
    throw CLI::ValidationError("--kind must be spanning-tree, matching or cycle");
  }
  std::cout << "kind=" << kind << " n=" << n;
  if (kind != "spanning-tree") std::cout << " ell=" << ell;
  std::cout << " size=" << ef.size() << " vars=" << ef.dim
            << " equations=" << ef.equations.size() << " blocks=" << blocks << "\n";
  if (!out.empty()) {
    write_json_file(out, formulation_to_json(ef));
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int run_verify(const std::string& file, const std::string& kind, int n, int ell,
               int objectives, std::uint64_t seed) {
  ExtendedFormulation ef = formulation_from_json(parse_json_file(file));
  std::vector<RatVec> vertices = oracle_vertices(kind, n, ell);
  std::vector<RatVec> suite =
      objective_suite(static_cast<int>(vertices.front().size()), objectives, seed);
  VerificationReport report = verify_projection_equals(ef, vertices, suite);
  for (size_t v = 0; v < vertices.size(); ++v) {
    bool bad = std::find(report.vertex_failures.begin(), report.vertex_failures.end(), v) !=
               report.vertex_failures.end();
    if (bad) std::cout << "vertex " << v << ": FAIL (not in projection image)\n";
  }
  std::cout << "vertices: " << vertices.size() - report.vertex_failures.size() << "/"
            << vertices.size() << " in projection image\n";
  for (const auto& fail : report.objective_failures)
    std::cout << "objective " << fail.index << ": FAIL formulation="
              << rational_to_string(fail.ef_value)
              << " brute-force=" << rational_to_string(fail.brute_value) << "\n";
  std::cout << "objectives: " << suite.size() - report.objective_failures.size() << "/"
            << suite.size() << " matched brute force\n";
  std::cout << (report.ok() ? "PASS" : "FAIL") << "\n";
  return report.ok() ? 0 : 1;
}

int run_certificate(int k, int n, const std::string& out) {
  SymmetryCertificate cert = build_certificate(k, n);
  std::cout << "k=" << k << " n=" << n
            << " slack_equation=" << rational_to_string(cert.slack_equation)
            << " patterns=" << cert.patterns.size()
            << " verdict=" << (cert.verdict ? "true" : "false") << "\n";
  if (!out.empty()) {
    write_json_file(out, certificate_to_json(cert));
    std::cout << "wrote " << out << "\n";
  }
  return cert.verdict ? 0 : 1;
}

int run_export(const std::string& file, const std::string& objective_file,
               const std::string& out) {
  ExtendedFormulation ef = formulation_from_json(parse_json_file(file));
  RatVec objective;
  if (objective_file.empty())
    objective = zeros(ef.ambient_dim());
  else
    objective = rat_vec_from_json(parse_json_file(objective_file));
  if (static_cast<int>(objective.size()) != ef.ambient_dim())
    throw std::domain_error("objective length does not match ambient dimension");
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  os << export_lp_text(ef, objective);
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended formulations for spanning-tree, matching and cycle polytopes"};
  app.require_subcommand(1);

  std::string kind, out, formulation, objective_file;
  int n = 0, ell = 0, k = 0, objectives = 50;
  std::uint64_t seed = seed_from_env(kDefaultSeed);

  auto* build = app.add_subcommand("build", "construct a formulation and write JSON");
  build->add_option("--kind", kind, "spanning-tree | matching | cycle")->required();
  build->add_option("--n", n, "node count")->required();
  build->add_option("--ell", ell, "matching size / cycle length");
  build->add_option("--out", out, "output JSON path");
  build->add_option("--seed", seed, "hash family seed");

  auto* verify = app.add_subcommand("verify", "check a formulation against brute force");
  verify->add_option("--formulation", formulation, "formulation JSON")->required();
  verify->add_option("--kind", kind, "oracle family")->required();
  verify->add_option("--n", n, "node count")->required();
  verify->add_option("--ell", ell, "matching size / cycle length");
  verify->add_option("--objectives", objectives, "number of random objectives");
  verify->add_option("--seed", seed, "objective suite seed");

  auto* certificate = app.add_subcommand("certificate", "build the symmetry certificate");
  certificate->add_option("--k", k, "class parameter")->required();
  certificate->add_option("--n", n, "node count (>= 4k+2)")->required();
  certificate->add_option("--out", out, "output JSON path");

  auto* export_lp = app.add_subcommand("export-lp", "write a plain-text LP model");
  export_lp->add_option("--formulation", formulation, "formulation JSON")->required();
  export_lp->add_option("--objective", objective_file, "ambient objective JSON");
  export_lp->add_option("--out", out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return run_build(kind, n, ell, out, seed);
    if (verify->parsed()) return run_verify(formulation, kind, n, ell, objectives, seed);
    if (certificate->parsed()) return run_certificate(k, n, out);
    if (export_lp->parsed()) return run_export(formulation, objective_file, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
