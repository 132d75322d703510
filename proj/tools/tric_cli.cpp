// Command-line front end over the C API: closed-form constants, result
// tables, certified sweeps, the identity suite, proof-chain status and the
// refinement debug dump.
//
// Exit codes: 0 success, 1 falsification / not certified, 2 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tric.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitUsage = 2;

// "0..25" or "0,125,250" or "7"
std::vector<int> parse_slice(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  auto range = text.find("..");
  if (range != std::string::npos) {
    int lo = std::stoi(text.substr(0, range));
    int hi = std::stoi(text.substr(range + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  out << text;
}

int report_exit(tric_status status, tric_report* report, const std::string& format,
                const std::string& out_path) {
  if (status == TRIC_ERR_INVALID_ARGUMENT || status == TRIC_ERR_DEGENERATE) {
    std::cerr << "error: " << tric_last_error() << "\n";
    tric_report_free(report);
    return kExitUsage;
  }
  if (!report) {
    std::cerr << "error: " << tric_last_error() << "\n";
    return kExitNotCertified;
  }
  write_output(format == "csv" ? tric_report_csv(report) : tric_report_json(report),
               out_path);
  int ok = tric_report_ok(report);
  tric_report_free(report);
  return ok ? kExitOk : kExitNotCertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interpolation error constants on triangles"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out may follow the subcommand
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // constants
  auto* cmd_constants = app.add_subcommand(
      "constants", "closed-form upper-bound constants and circumradius");
  std::vector<std::string> shape_args;
  std::vector<std::string> vertex_args;
  cmd_constants->add_option("--shape", shape_args,
                            "shape parameters a b (rationals or decimals)")
      ->expected(2);
  cmd_constants->add_option("--vertices", vertex_args, "three vertices as x,y pairs")
      ->expected(3);

  // table
  auto* cmd_table = app.add_subcommand("table", "reproduce one result table");
  int table_j = 1;
  std::string table_ns = "10,20";
  int table_degree = 10;
  cmd_table->add_option("j", table_j, "constant index 1..4")->required();
  cmd_table->add_option("--n", table_ns, "refinement list, e.g. 10,20");
  cmd_table->add_option("--degree", table_degree,
                        "polynomial subspace degree (0 disables the column)");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a certified sweep slice");
  std::string verify_mode = "thm61", verify_k, verify_l, verify_j = "all";
  int verify_n = 20, verify_threads = 0;  // 0: fall back to TRIC_THREADS
  std::string checkpoint;
  cmd_verify->add_option("--mode", verify_mode, "thm61 or thm62")
      ->check(CLI::IsMember({"thm61", "thm62"}));
  cmd_verify->add_option("--k", verify_k, "level slice, e.g. 1 or 1..3");
  cmd_verify->add_option("--l", verify_l, "offset slice, e.g. 0..25 or 0,125,250");
  cmd_verify->add_option("--j", verify_j, "constant indices, e.g. all or 1,2,3");
  cmd_verify->add_option("--n", verify_n, "refinement (20 = published setup)");
  cmd_verify->add_option("--parallelism", verify_threads, "worker threads");
  cmd_verify->add_option("--checkpoint", checkpoint, "resume file (grid keys)");

  // identities
  auto* cmd_identities =
      app.add_subcommand("identities", "run the algebraic identity suite");
  std::string lemma_sel = "all";
  unsigned long long lemma_seed = 20240911ULL;
  cmd_identities->add_option("--lemma", lemma_sel,
                             "all or a comma-separated lemma list, e.g. 14.9,14.11");
  cmd_identities->add_option("--seed", lemma_seed,
                             "seed for the randomized spot checks");

  // status
  auto* cmd_status =
      app.add_subcommand("status", "proof-chain status from saved sweep reports");
  std::vector<std::string> status_reports;
  bool status_identities = false;
  cmd_status->add_option("--reports", status_reports, "sweep report JSON files");
  cmd_status->add_flag("--identities-passed", status_identities,
                       "count the identity suite as locally re-verified");

  // mesh dump
  auto* cmd_dump = app.add_subcommand("dump-mesh", "refinement indexing debug dump");
  int dump_n = 2, dump_j = 0;
  std::string dump_space = "V11", dump_a = "0", dump_b = "1";
  cmd_dump->add_option("--n", dump_n, "refinement");
  cmd_dump->add_option("--space", dump_space, "V11, V12 or V2")
      ->check(CLI::IsMember({"V11", "V12", "V2"}));
  cmd_dump->add_option("--j", dump_j, "include assembled pencil for this j (0 = skip)");
  cmd_dump->add_option("--a", dump_a, "shape parameter a");
  cmd_dump->add_option("--b", dump_b, "shape parameter b");

  int parallelism_env = 1;
  if (const char* env = std::getenv("TRIC_THREADS")) parallelism_env = std::atoi(env);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_constants->parsed()) {
    tric_constants out;
    tric_status status;
    if (!shape_args.empty()) {
      status = tric_constants_from_shape(shape_args[0].c_str(), shape_args[1].c_str(),
                                         &out);
    } else if (!vertex_args.empty()) {
      double xy[6];
      for (int i = 0; i < 3; ++i) {
        auto comma = vertex_args[static_cast<size_t>(i)].find(',');
        if (comma == std::string::npos) {
          std::cerr << "error: vertices must be x,y pairs\n";
          return kExitUsage;
        }
        try {
          xy[2 * i] = std::stod(vertex_args[static_cast<size_t>(i)].substr(0, comma));
          xy[2 * i + 1] =
              std::stod(vertex_args[static_cast<size_t>(i)].substr(comma + 1));
        } catch (const std::exception&) {
          std::cerr << "error: malformed vertex\n";
          return kExitUsage;
        }
      }
      status = tric_constants_from_vertices(xy, &out);
    } else {
      std::cerr << "error: provide --shape or --vertices\n";
      return kExitUsage;
    }
    if (status != TRIC_OK) {
      std::cerr << "error: " << tric_last_error() << "\n";
      return kExitUsage;
    }
    std::ostringstream os;
    if (format == "json") {
      os.precision(9);
      os << "{\n  \"K1\": " << out.k1 << ",\n  \"K2\": " << out.k2
         << ",\n  \"K3\": " << out.k3 << ",\n  \"K4\": " << out.k4
         << ",\n  \"circumradius\": " << out.circumradius
         << ",\n  \"normalized\": {\"a\": " << out.normalized_a
         << ", \"b\": " << out.normalized_b << ", \"scale\": " << out.scale << "}\n}";
    } else if (format == "csv") {
      os.precision(9);
      os << "K1,K2,K3,K4,circumradius,a,b,scale\n"
         << out.k1 << "," << out.k2 << "," << out.k3 << "," << out.k4 << ","
         << out.circumradius << "," << out.normalized_a << "," << out.normalized_b
         << "," << out.scale;
    } else {
      char line[512];
      std::snprintf(line, sizeof line,
                    "K1 = %.7f\nK2 = %.7f\nK3 = %.7f\nK4 = %.7f\nR  = %.7f\n"
                    "normalized shape: a = %.9g, b = %.9g, scale = %.9g",
                    out.k1, out.k2, out.k3, out.k4, out.circumradius, out.normalized_a,
                    out.normalized_b, out.scale);
      os << line;
    }
    write_output(os.str(), out_path);
    return kExitOk;
  }

  if (cmd_table->parsed()) {
    if (table_j < 1 || table_j > 4) {
      std::cerr << "error: table index must be 1..4\n";
      return kExitUsage;
    }
    std::vector<int> ns = parse_slice(table_ns);
    if (ns.empty()) {
      std::cerr << "error: empty refinement list\n";
      return kExitUsage;
    }
    tric_report* report = nullptr;
    tric_status status =
        tric_table_compute(table_j, ns.data(), static_cast<int>(ns.size()),
                           table_degree, &report);
    return report_exit(status, report, format == "text" ? "csv" : format, out_path);
  }

  if (cmd_verify->parsed()) {
    std::vector<int> ks = parse_slice(verify_k);
    std::vector<int> ls = parse_slice(verify_l);
    std::vector<int> js;
    if (verify_j != "all") js = parse_slice(verify_j);
    for (int k : ks)
      if (k < 1 || k > 119) {
        std::cerr << "error: k must be within 1..119\n";
        return kExitUsage;
      }
    tric_verify_config config{};
    config.mode = verify_mode.c_str();
    config.js = js.empty() ? nullptr : js.data();
    config.js_count = static_cast<int>(js.size());
    config.n = verify_n;
    config.ks = ks.empty() ? nullptr : ks.data();
    config.ks_count = static_cast<int>(ks.size());
    config.ls = ls.empty() ? nullptr : ls.data();
    config.ls_count = static_cast<int>(ls.size());
    config.parallelism = verify_threads > 0 ? verify_threads : parallelism_env;
    config.checkpoint_path = checkpoint.empty() ? nullptr : checkpoint.c_str();
    tric_report* report = nullptr;
    tric_status status = tric_verify_run(&config, &report);
    return report_exit(status, report, format, out_path);
  }

  if (cmd_identities->parsed()) {
    tric_report* report = nullptr;
    tric_status status =
        tric_identities_run_seeded(lemma_sel.c_str(), lemma_seed, &report);
    return report_exit(status, report, format, out_path);
  }

  if (cmd_status->parsed()) {
    std::vector<std::string> bodies;
    std::vector<const char*> ptrs;
    for (const auto& path : status_reports) {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitUsage;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      bodies.push_back(ss.str());
    }
    for (const auto& b : bodies) ptrs.push_back(b.c_str());
    tric_report* report = nullptr;
    tric_status status = tric_proof_status(
        ptrs.empty() ? nullptr : ptrs.data(), static_cast<int>(ptrs.size()),
        status_identities ? 1 : 0, &report);
    return report_exit(status, report, format, out_path);
  }

  if (cmd_dump->parsed()) {
    tric_report* report = nullptr;
    tric_status status =
        tric_mesh_dump(dump_n, dump_space.c_str(), dump_j, dump_a.c_str(),
                       dump_b.c_str(), dump_j > 0 ? 1 : 0, &report);
    return report_exit(status, report, format, out_path);
  }

  return kExitUsage;
}
