#include "report.hpp"

#include <json.hpp>
#include <sstream>

#include "mesh.hpp"

namespace tric {

using nlohmann::json;

namespace {

const char* verdict_str(Verdict v) {
  return v == Verdict::verified ? "verified" : "not_certified";
}

const char* mode_str(SweepMode m) { return m == SweepMode::thm61 ? "thm61" : "thm62"; }

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  json j;
  j["schema_version"] = report.schema_version;
  j["library_version"] = "1.0.0";
  j["config"] = {{"mode", mode_str(report.config.mode)},
                 {"j", report.config.js},
                 {"n", report.config.n},
                 {"k_slice", report.config.ks},
                 {"l_slice", report.config.ls},
                 {"parallelism", report.config.parallelism}};
  json pts = json::array();
  for (const auto& p : report.points) {
    pts.push_back({{"k", p.k},
                   {"l", p.l},
                   {"a", rat_str(p.a)},
                   {"b", rat_str(p.b)},
                   {"j", p.j},
                   {"n", p.n},
                   {"lambda", rat_str(p.lambda)},
                   {"verdict", verdict_str(p.verdict)},
                   {"seconds", p.seconds},
                   {"implication", p.implication}});
  }
  j["points"] = std::move(pts);
  j["summary"] = {{"verified", report.verified_count},
                  {"not_certified", report.not_certified_count},
                  {"total_seconds", report.total_seconds},
                  {"all_verified", report.all_verified()}};
  return j.dump(2);
}

std::string report_summary_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "mode,n,j,k,l,a,b,lambda,verdict,seconds\n";
  for (const auto& p : report.points)
    os << mode_str(report.config.mode) << "," << p.n << "," << p.j << "," << p.k << ","
       << p.l << "," << rat_str(p.a) << "," << rat_str(p.b) << "," << rat_str(p.lambda)
       << "," << verdict_str(p.verdict) << "," << p.seconds << "\n";
  return os.str();
}

std::string identities_to_json(const std::vector<IdentityCase>& cases) {
  json arr = json::array();
  bool all = true;
  for (const auto& c : cases) {
    arr.push_back({{"lemma", c.lemma_id},
                   {"method", c.method},
                   {"status", c.status},
                   {"detail", c.detail},
                   {"seconds", c.seconds}});
    all = all && c.status == "passed";
  }
  json j;
  j["cases"] = std::move(arr);
  j["all_passed"] = all;
  return j.dump(2);
}

std::string table_to_json(const TableResult& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    json row;
    row["shape"] = r.shape.label;
    row["a"] = rat_str(r.shape.shape.a);
    row["b"] = rat_str(r.shape.shape.b);
    row["b_is_approximate"] = r.shape.b_is_approximate;
    row["k"] = r.k_value;
    json ubs = json::object();
    for (size_t i = 0; i < table.ns.size(); ++i)
      ubs["n" + std::to_string(table.ns[i])] = r.upper_bounds[i];
    row["upper_bounds"] = std::move(ubs);
    if (table.degree > 0) row["subspace_estimate"] = r.subspace_estimate;
    rows.push_back(std::move(row));
  }
  json j;
  j["j"] = table.j;
  j["n"] = table.ns;
  j["degree"] = table.degree;
  j["rows"] = std::move(rows);
  return j.dump(2);
}

std::string table_to_csv(const TableResult& table) {
  std::ostringstream os;
  os.precision(9);
  os << "shape,K" << table.j;
  for (int n : table.ns) os << ",upper_n" << n;
  if (table.degree > 0) os << ",subspace_deg" << table.degree;
  os << "\n";
  for (const auto& r : table.rows) {
    os << r.shape.label << "," << r.k_value;
    for (double v : r.upper_bounds) os << "," << v;
    if (table.degree > 0) os << "," << r.subspace_estimate;
    os << "\n";
  }
  return os.str();
}

ConstantsOutput constants_for_triangle(const Triangle& tri) {
  ConstantsOutput out;
  for (int j = 1; j <= 4; ++j) out.k[j - 1] = k_constant(j, tri);
  out.circumradius = circumradius(tri);
  ShapeNormalization norm = normalize_shape(tri);
  out.normalized = norm.shape;
  out.scale = norm.scale;
  out.coords_were_floating = norm.from_floating;
  return out;
}

std::string constants_to_json(const ConstantsOutput& out) {
  json j;
  j["K1"] = out.k[0];
  j["K2"] = out.k[1];
  j["K3"] = out.k[2];
  j["K4"] = out.k[3];
  j["circumradius"] = out.circumradius;
  j["normalized_shape"] = {{"a", rat_str(out.normalized.a)},
                           {"b", rat_str(out.normalized.b)},
                           {"scale", out.scale}};
  j["coords_were_floating"] = out.coords_were_floating;
  return j.dump(2);
}

std::string constants_to_csv(const ConstantsOutput& out) {
  std::ostringstream os;
  os.precision(9);
  os << "K1,K2,K3,K4,circumradius,a,b,scale\n";
  os << out.k[0] << "," << out.k[1] << "," << out.k[2] << "," << out.k[3] << ","
     << out.circumradius << "," << rat_str(out.normalized.a) << ","
     << rat_str(out.normalized.b) << "," << out.scale << "\n";
  return os.str();
}

std::string constants_to_text(const ConstantsOutput& out) {
  std::ostringstream os;
  os.precision(7);
  os << std::fixed;
  os << "K1 = " << out.k[0] << "\nK2 = " << out.k[1] << "\nK3 = " << out.k[2]
     << "\nK4 = " << out.k[3] << "\nR  = " << out.circumradius << "\n";
  os << "normalized shape: a = " << rat_str(out.normalized.a)
     << ", b = " << rat_str(out.normalized.b) << ", scale = " << out.scale << "\n";
  if (out.coords_were_floating)
    os << "note: floating coordinates were converted to exact dyadic rationals\n";
  return os.str();
}

std::string proof_status_to_json(const ProofChainStatus& st) {
  json j;
  j["grid_invariants_ok"] = st.grid_invariants_ok;
  j["thm61_points"] = {{"done", st.thm61_points_done}, {"total", st.thm61_points_total}};
  j["thm62_points"] = {{"done", st.thm62_points_done}, {"total", st.thm62_points_total}};
  j["identity_suite_passed"] = st.identity_suite_passed;
  j["summary"] = st.summary;
  return j.dump(2);
}

std::string mesh_dump_json(int n, const std::string& space_name, int j,
                           const TriangleShape& shape, bool include_matrices) {
  MeshIndexing idx = build_indexing(n);
  json out;
  out["n"] = n;
  out["counts"] = {{"vertices", idx.vertex_count},
                   {"edges", idx.edge_count},
                   {"faces", idx.face_count}};
  auto table = [](const std::vector<std::vector<int>>& t) {
    json arr = json::array();
    for (size_t p = 0; p < t.size(); ++p)
      for (size_t q = 0; q < t[p].size(); ++q)
        if (t[p][q] > 0)
          arr.push_back({{"key", {p + 1, q + 1}}, {"id", t[p][q]}});
    return arr;
  };
  out["vertex_ids"] = table(idx.vertex_list);
  out["edge_ids"] = table(idx.edge_list);
  out["face_ids"] = table(idx.face_list);
  json alpha = json::array();
  for (const auto& el : idx.alpha_elements)
    alpha.push_back({{"edges", {el[0], el[1], el[2]}}, {"face", el[3]}});
  out["alpha_elements"] = std::move(alpha);
  json beta = json::array();
  for (size_t i = 0; i < idx.beta_elements.size(); ++i) {
    const auto& el = idx.beta_elements[i];
    beta.push_back({{"vertices", {el[0], el[1], el[2]}},
                    {"edges", {el[3], el[4], el[5]}},
                    {"orientation", idx.beta_orientation[i] == 1 ? "up" : "down"}});
  }
  out["beta_elements"] = std::move(beta);

  if (include_matrices) {
    Space space = space_name == "V11"  ? Space::V11
                  : space_name == "V12" ? Space::V12
                                        : Space::V2;
    AssembledPencil pencil = assemble(space, j, n, shape);
    out["pencil"] = {{"space", space_name},
                     {"j", j},
                     {"dim", pencil.dim},
                     {"a", rat_str(shape.a)},
                     {"b", rat_str(shape.b)}};
    auto matrix = [](const SymRatMatrix& m) {
      json rows = json::array();
      for (int r = 0; r < m.order(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.order(); ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    out["A"] = matrix(pencil.A);
    out["B"] = matrix(pencil.B);
  }
  return out.dump(2);
}

}  // namespace tric
