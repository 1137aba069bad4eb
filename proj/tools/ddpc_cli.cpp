// Command-line front end: solvers, verification, extremal generators and
// theorem-checking campaigns. Exit code 0 on success/accept, 1 on
// reject/refuted/none, 2 on usage errors.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ddpc/campaign.hpp"
#include "ddpc/constructive.hpp"
#include "ddpc/errors.hpp"
#include "ddpc/exact.hpp"
#include "ddpc/extremal.hpp"
#include "ddpc/io.hpp"

namespace {

using namespace ddpc;

int cmd_solve(const std::string& graph_file, const std::string& kind_name,
              const std::string& method, std::vector<int> S, std::vector<int> T,
              int k) {
  Digraph d = parse_digraph(read_file(graph_file));
  CoverKind kind = cover_kind_from_string(kind_name);
  if (k <= 0) k = kind == CoverKind::OneToOne ? 2 : static_cast<int>(T.size());
  CoverSpec spec{kind, k, S, T};
  auto bad = validate_spec(d, spec);
  if (!bad.empty()) {
    std::cerr << "invalid spec: " << bad.front() << "\n";
    return 2;
  }

  std::optional<PathCover> cover;
  if (method == "exact") {
    cover = find_cover_exact(d, spec);
  } else if (method == "constructive") {
    switch (kind) {
      case CoverKind::UnpairedMTM:
        cover = d.order() == 2 * k ? unpaired_mtm_cover_tight(d, S, T)
                                   : unpaired_mtm_cover(d, S, T);
        break;
      case CoverKind::PairedMTM:
        if (k != 2) throw precondition_error("constructive paired solver needs k = 2");
        cover = paired_two_cover(d, S[0], S[1], T[0], T[1]);
        break;
      case CoverKind::OneToMany:
        cover = one_to_many_cover(d, S[0], T);
        break;
      case CoverKind::OneToOne:
        cover = one_to_one_cover(d, S[0], T[0], k);
        break;
    }
  } else {
    std::cerr << "unknown method: " << method << "\n";
    return 2;
  }
  if (!cover) {
    std::cout << "no cover exists\n";
    return 1;
  }
  std::cout << cover_to_json(spec, *cover).dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& spec_file,
               const std::string& cover_file) {
  Digraph d = parse_digraph(read_file(graph_file));
  CoverSpec spec = spec_from_json(nlohmann::json::parse(read_file(spec_file)));
  PathCover cover =
      cover_paths_from_json(nlohmann::json::parse(read_file(cover_file)));
  auto res = verify_cover(d, spec, cover);
  if (res.accepted) {
    std::cout << "accept\n";
    return 0;
  }
  std::cout << "reject (" << to_string(res.reason) << "): " << res.detail << "\n";
  return 1;
}

int cmd_gen_extremal(const std::string& family_name, int n, int k,
                     const std::string& out_prefix) {
  ExtremalFamily family = extremal_family_from_string(family_name);
  ExtremalWitness w = generate_extremal(family, n, k);
  nlohmann::ordered_json j;
  j["family"] = to_string(w.family);
  j["graph"] = digraph_to_json(w.graph);
  j["spec"] = spec_to_json(w.spec);
  j["claimed_min_semi_degree"] = w.claimed_min_semi_degree;
  if (w.claimed_ore_min) j["claimed_ore_min"] = *w.claimed_ore_min;
  if (!w.note.empty()) j["note"] = w.note;
  if (out_prefix.empty()) {
    std::cout << j.dump(2) << "\n";
    std::cout << to_dot(w.graph);
  } else {
    write_file(out_prefix + ".graph.json", digraph_to_json(w.graph).dump(2) + "\n");
    write_file(out_prefix + ".spec.json", spec_to_json(w.spec).dump(2) + "\n");
    write_file(out_prefix + ".dot", to_dot(w.graph));
    std::cout << j["family"].get<std::string>() << " written to " << out_prefix
              << ".{graph.json,spec.json,dot}\n";
  }
  return 0;
}

void print_summary(const VerificationReport& report) {
  auto j = report.to_json();
  std::cout << "instances: " << report.instances
            << "  failures: " << report.failures
            << (report.truncated ? "  (truncated)" : "") << "\n";
  for (const auto& rec : j["records"])
    if (!rec["passed"].get<bool>())
      std::cout << "  FAIL " << rec["key"].get<std::string>() << ": "
                << rec["detail"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disjoint directed path cover laboratory"};
  app.require_subcommand(1);

  // solve
  std::string graph_file, kind_name, method = "exact";
  std::vector<int> S, T;
  int k = 0;
  auto* solve = app.add_subcommand("solve", "find a cover");
  solve->add_option("--graph", graph_file, "digraph JSON file")->required();
  solve->add_option("--kind", kind_name,
                    "paired-mtm|unpaired-mtm|one-to-many|one-to-one")
      ->required();
  solve->add_option("--method", method, "exact|constructive");
  solve->add_option("--S", S, "source vertices")->required();
  solve->add_option("--T", T, "sink vertices")->required();
  solve->add_option("--k", k, "path count (one-to-one; default 2)");

  // verify
  std::string spec_file, cover_file;
  auto* verify = app.add_subcommand("verify", "check a claimed cover");
  verify->add_option("--graph", graph_file, "digraph JSON file")->required();
  verify->add_option("--spec", spec_file, "spec JSON file")->required();
  verify->add_option("--cover", cover_file, "cover JSON file")->required();

  // gen-extremal
  std::string family_name, out_prefix;
  int gen_n = 0, gen_k = 0;
  auto* gen = app.add_subcommand("gen-extremal", "emit a sharpness witness");
  gen->add_option("--family", family_name, "extremal family name")->required();
  gen->add_option("--n", gen_n, "order (ignored for tight families)");
  gen->add_option("--k", gen_k, "path count (m for paired2-figure1)")->required();
  gen->add_option("--out", out_prefix, "output file prefix");

  // check-theorem
  CampaignConfig cfg;
  std::string mode = "random", out_file;
  auto* check = app.add_subcommand("check-theorem", "run a verification campaign");
  check->add_option("--id", cfg.theorem, "main1|main2i|main2ii|2t2|main3|main4")
      ->required();
  check->add_option("--mode", mode, "exhaustive|random");
  check->add_option("--n-min", cfg.n_min, "smallest order");
  check->add_option("--n-max", cfg.n_max, "largest order");
  check->add_option("--k-min", cfg.k_min, "smallest k");
  check->add_option("--k-max", cfg.k_max, "largest k");
  check->add_option("--samples", cfg.samples, "instances per (n,k) cell");
  check->add_option("--seed", cfg.seed, "random seed");
  check->add_option("--threshold-offset", cfg.threshold_offset,
                    "shift the degree hypothesis");
  check->add_option("--out", out_file, "report JSON path");
  check->add_flag("--timings", cfg.include_timings,
                  "record elapsed times (breaks byte-for-byte determinism)");

  // check-sharpness
  std::string sh_family, sh_out;
  int sh_n = 0, sh_k = 0;
  auto* sharp = app.add_subcommand("check-sharpness", "verify one sharpness family");
  sharp->add_option("--family", sh_family, "extremal family name")->required();
  sharp->add_option("--n", sh_n, "order (ignored for tight families)");
  sharp->add_option("--k", sh_k, "path count (m for paired2-figure1)")->required();
  sharp->add_option("--out", sh_out, "report JSON path");

  // degrees
  auto* degrees = app.add_subcommand("degrees", "degree summary of a digraph");
  degrees->add_option("--graph", graph_file, "digraph JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(graph_file, kind_name, method, S, T, k);
    if (verify->parsed()) return cmd_verify(graph_file, spec_file, cover_file);
    if (gen->parsed()) return cmd_gen_extremal(family_name, gen_n, gen_k, out_prefix);
    if (check->parsed()) {
      cfg.mode = mode == "exhaustive" ? CampaignMode::Exhaustive : CampaignMode::Random;
      auto report = run_theorem_check(cfg);
      if (!out_file.empty()) write_file(out_file, report.to_string());
      print_summary(report);
      return report.failures == 0 ? 0 : 1;
    }
    if (sharp->parsed()) {
      auto report = run_sharpness_check(extremal_family_from_string(sh_family),
                                        sh_n, sh_k);
      if (!sh_out.empty()) write_file(sh_out, report.to_string());
      print_summary(report);
      return report.failures == 0 ? 0 : 1;
    }
    if (degrees->parsed()) {
      Digraph d = parse_digraph(read_file(graph_file));
      auto deg = degree_summary(d);
      nlohmann::ordered_json j;
      j["n"] = d.order();
      j["out_degree"] = deg.out_degree;
      j["in_degree"] = deg.in_degree;
      j["min_semi_degree"] = deg.min_semi_degree;
      if (deg.ore_min)
        j["ore_min"] = *deg.ore_min;
      else
        j["ore_min"] = "infinity";
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
