#pragma once

#include <string>

#include "sweep.hpp"
#include "tables.hpp"

namespace tric {

// Machine-readable renderings of the library outputs. The sweep report
// schema: {schema_version, config, points: [{k, l, a, b, j, n, lambda,
// verdict, seconds}], summary}; rationals as "p/q" strings.
std::string report_to_json(const VerificationReport& report);
std::string report_summary_csv(const VerificationReport& report);

std::string identities_to_json(const std::vector<IdentityCase>& cases);

std::string table_to_json(const TableResult& table);
std::string table_to_csv(const TableResult& table);

struct ConstantsOutput {
  double k[4] = {0, 0, 0, 0};
  double circumradius = 0;
  TriangleShape normalized;
  double scale = 0;
  bool coords_were_floating = false;
};
ConstantsOutput constants_for_triangle(const Triangle& tri);
std::string constants_to_json(const ConstantsOutput& out);
std::string constants_to_csv(const ConstantsOutput& out);
std::string constants_to_text(const ConstantsOutput& out);

std::string proof_status_to_json(const ProofChainStatus& st);

// Debug dump of the refinement indexing and the assembled pencil (ids,
// oblique keys, exact entries as "p/q").
std::string mesh_dump_json(int n, const std::string& space, int j,
                           const TriangleShape& shape, bool include_matrices);

}  // namespace tric
