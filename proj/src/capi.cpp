#include "tric.h"

#include <algorithm>
#include <cstring>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "report.hpp"

namespace {

thread_local std::string g_last_error;

tric_status fail(tric_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

tric_status guard(const std::exception& e) {
  // map the library's error idioms onto the C status codes
  g_last_error = e.what();
  if (dynamic_cast<const std::invalid_argument*>(&e)) {
    if (g_last_error.find("degenerate") != std::string::npos)
      return TRIC_ERR_DEGENERATE;
    return TRIC_ERR_INVALID_ARGUMENT;
  }
  if (dynamic_cast<const std::domain_error*>(&e)) return TRIC_ERR_INVALID_ARGUMENT;
  return TRIC_ERR_INTERNAL;
}

}  // namespace

struct tric_report {
  bool ok = false;
  std::string json;
  std::string csv;
};

extern "C" {

const char* tric_version(void) { return "1.0.0"; }

const char* tric_last_error(void) { return g_last_error.c_str(); }

tric_status tric_constants_from_shape(const char* a, const char* b,
                                      tric_constants* out) {
  if (!a || !b || !out) return fail(TRIC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    tric::Triangle tri = tric::Triangle::shape(tric::rat_parse(a), tric::rat_parse(b));
    tric::ConstantsOutput co = tric::constants_for_triangle(tri);
    out->k1 = co.k[0];
    out->k2 = co.k[1];
    out->k3 = co.k[2];
    out->k4 = co.k[3];
    out->circumradius = co.circumradius;
    out->normalized_a = tric::rat_to_double(co.normalized.a);
    out->normalized_b = tric::rat_to_double(co.normalized.b);
    out->scale = co.scale;
    return TRIC_OK;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

tric_status tric_constants_from_vertices(const double xy[6], tric_constants* out) {
  if (!xy || !out) return fail(TRIC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    tric::Triangle tri =
        tric::Triangle::from_doubles(xy[0], xy[1], xy[2], xy[3], xy[4], xy[5]);
    tric::ConstantsOutput co = tric::constants_for_triangle(tri);
    out->k1 = co.k[0];
    out->k2 = co.k[1];
    out->k3 = co.k[2];
    out->k4 = co.k[3];
    out->circumradius = co.circumradius;
    out->normalized_a = tric::rat_to_double(co.normalized.a);
    out->normalized_b = tric::rat_to_double(co.normalized.b);
    out->scale = co.scale;
    return TRIC_OK;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

tric_status tric_l_constant(int j, const char* a, const char* b, char* buf,
                            size_t buf_len) {
  if (!a || !b || !buf || buf_len == 0)
    return fail(TRIC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    tric::Rat value = tric::l_constant(
        j, tric::TriangleShape{tric::rat_parse(a), tric::rat_parse(b)});
    std::string text = tric::rat_str(value);
    if (text.size() + 1 > buf_len)
      return fail(TRIC_ERR_INVALID_ARGUMENT, "buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return TRIC_OK;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

void tric_report_free(tric_report* report) { delete report; }

int tric_report_ok(const tric_report* report) { return report && report->ok ? 1 : 0; }

const char* tric_report_json(const tric_report* report) {
  return report ? report->json.c_str() : "";
}

const char* tric_report_csv(const tric_report* report) {
  return report ? report->csv.c_str() : "";
}

tric_status tric_table_compute(int j, const int* ns, int ns_count, int degree,
                               tric_report** out) {
  if (!out || !ns || ns_count <= 0)
    return fail(TRIC_ERR_INVALID_ARGUMENT, "null argument");
  if (j < 1 || j > 4) return fail(TRIC_ERR_INVALID_ARGUMENT, "j must be in 1..4");
  try {
    tric::TableResult table =
        tric::compute_table(j, std::vector<int>(ns, ns + ns_count), degree);
    auto* r = new tric_report;
    r->ok = true;
    r->json = tric::table_to_json(table);
    r->csv = tric::table_to_csv(table);
    *out = r;
    return TRIC_OK;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

tric_status tric_verify_run(const tric_verify_config* config, tric_report** out) {
  if (!config || !out || !config->mode)
    return fail(TRIC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    tric::SweepConfig sc;
    std::string mode = config->mode;
    if (mode == "thm61") {
      sc.mode = tric::SweepMode::thm61;
    } else if (mode == "thm62") {
      sc.mode = tric::SweepMode::thm62;
    } else {
      return fail(TRIC_ERR_INVALID_ARGUMENT, "mode must be thm61 or thm62");
    }
    if (config->js && config->js_count > 0)
      sc.js.assign(config->js, config->js + config->js_count);
    else if (sc.mode == tric::SweepMode::thm62)
      sc.js = {1, 2, 3};
    sc.n = config->n > 0 ? config->n : 20;
    if (config->ks && config->ks_count > 0)
      sc.ks.assign(config->ks, config->ks + config->ks_count);
    if (config->ls && config->ls_count > 0)
      sc.ls.assign(config->ls, config->ls + config->ls_count);
    sc.parallelism = config->parallelism;
    if (config->checkpoint_path) sc.checkpoint_path = config->checkpoint_path;
    tric::VerificationReport report = tric::run_sweep(sc);
    auto* r = new tric_report;
    r->ok = report.all_verified();
    r->json = tric::report_to_json(report);
    r->csv = tric::report_summary_csv(report);
    *out = r;
    return r->ok ? TRIC_OK : TRIC_ERR_NOT_CERTIFIED;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

tric_status tric_identities_run(const char* selector, tric_report** out) {
  return tric_identities_run_seeded(selector, 20240911ULL, out);
}

tric_status tric_identities_run_seeded(const char* selector, unsigned long long seed,
                                       tric_report** out) {
  if (!selector || !out) return fail(TRIC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    std::vector<tric::IdentityCase> cases;
    std::string sel = selector;
    if (sel == "all" || sel.empty()) {
      cases = tric::check_all_lemmas(seed);
    } else {
      std::stringstream ss(sel);
      std::string id;
      while (std::getline(ss, id, ',')) {
        if (id.empty()) continue;
        const auto& known = tric::supported_lemmas();
        if (std::find(known.begin(), known.end(), id) == known.end())
          return fail(TRIC_ERR_INVALID_ARGUMENT, "unsupported lemma id: " + id);
        cases.push_back(tric::check_lemma(id, seed));
      }
      if (cases.empty())
        return fail(TRIC_ERR_INVALID_ARGUMENT, "empty lemma selector");
    }
    bool ok = true;
    for (const auto& c : cases) ok = ok && c.status == "passed";
    auto* r = new tric_report;
    r->ok = ok;
    r->json = tric::identities_to_json(cases);
    *out = r;
    return ok ? TRIC_OK : TRIC_ERR_NOT_CERTIFIED;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

tric_status tric_proof_status(const char* const* report_jsons, int count,
                              int identities_passed, tric_report** out) {
  if (!out || (count > 0 && !report_jsons))
    return fail(TRIC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    // parse back the verified points out of the serialized reports
    std::vector<tric::VerificationReport> reports;
    for (int i = 0; i < count; ++i) {
      auto j = nlohmann::json::parse(report_jsons[i]);
      tric::VerificationReport rep;
      std::string mode = j.at("config").at("mode").get<std::string>();
      rep.config.mode =
          mode == "thm61" ? tric::SweepMode::thm61 : tric::SweepMode::thm62;
      for (const auto& p : j.at("points")) {
        tric::PointResult pr;
        pr.k = p.at("k").get<int>();
        pr.l = p.at("l").get<int>();
        pr.j = p.at("j").get<int>();
        pr.n = p.at("n").get<int>();
        pr.a = tric::rat_parse(p.at("a").get<std::string>());
        pr.b = tric::rat_parse(p.at("b").get<std::string>());
        pr.verdict = p.at("verdict").get<std::string>() == "verified"
                         ? tric::Verdict::verified
                         : tric::Verdict::not_certified;
        rep.points.push_back(std::move(pr));
      }
      reports.push_back(std::move(rep));
    }
    std::vector<tric::IdentityCase> ids;
    if (identities_passed)
      ids.push_back(tric::IdentityCase{"suite", "aggregate", "passed", "", 0});
    tric::ProofChainStatus st = tric::proof_chain_status(reports, ids);
    auto* r = new tric_report;
    r->ok = true;
    r->json = tric::proof_status_to_json(st);
    *out = r;
    return TRIC_OK;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

tric_status tric_mesh_dump(int n, const char* space, int j, const char* a,
                           const char* b, int include_matrices, tric_report** out) {
  if (!out || !space) return fail(TRIC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    tric::TriangleShape shape{tric::rat(0), tric::rat(1)};
    if (a && b) shape = tric::TriangleShape{tric::rat_parse(a), tric::rat_parse(b)};
    auto* r = new tric_report;
    r->ok = true;
    r->json = tric::mesh_dump_json(n, space, j, shape, include_matrices != 0);
    *out = r;
    return TRIC_OK;
  } catch (const std::exception& e) {
    return guard(e);
  }
}

}  // extern "C"
