#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "findex/closed_forms.hpp"
#include "findex/graph.hpp"

namespace findex {

/// Every closed-form identity the suite exercises.
enum class formula_id {
  thm1,
  prop1_s,
  prop1_r,
  prop1_q,
  prop1_t,
  thm2_s,
  thm3_r,
  thm4_q,
  thm5_t,
  cor1,
  cor2_printed,
  cor2_corrected,
  ex3_s,
  ex3_r,
  ex3_q,
  ex3_t,
};

const char* formula_name(formula_id id);

struct thm1_instance {
  Graph g;
  std::vector<int> u;
  Graph h;
};
struct prop1_instance {
  Graph g;
  subdivision_op op;
};
struct fsum_instance {
  Graph g;
  Graph h;
  subdivision_op op;
};
struct cor1_instance {
  int n;
  Graph h;
};
struct cor2_instance {
  int n;
  Graph h;
  cor2_variant variant;
};
struct ex3_instance {
  int n;
  int m;
  subdivision_op op;
};

struct verification_case {
  formula_id formula;
  std::string instance; // compact deterministic description
  std::uint64_t seed = 0; // nonzero for randomized instances
  bool expect_mismatch = false; // documented erratum rows
  std::variant<thm1_instance, prop1_instance, fsum_instance, cor1_instance,
               cor2_instance, ex3_instance>
      payload;
};

struct verification_report {
  formula_id formula;
  std::string instance;
  std::uint64_t seed = 0;
  bool expect_mismatch = false;
  index_t closed_form_value = 0;
  index_t oracle_value = 0;
  /// Count mismatches, degree-law violations, reduction-identity failures,
  /// propagated construction errors. Empty on a clean case.
  std::vector<std::string> aux_failures;
  /// closed_form_value == oracle_value and aux_failures empty.
  bool passed = false;
};

struct suite_config {
  int max_order = 9;          // largest |V| for random factors
  int cases_per_formula = 50; // random instances per formula
  std::uint64_t seed = 1729;
  bool enforce_connected = true;
};

/// F-index of G +_op H computed straight from the F-sum adjacency predicate
/// on (V(op(G)) x V(H)) pairs, never through hierarchical_product. The
/// agreement of this value with f_index(f_sum(g,h,op)) is the reduction
/// identity the suite tests.
index_t oracle_f_of_fsum(const Graph& g, const Graph& h, subdivision_op op,
                         bool allow_disconnected = false);

/// Compare a constructed hierarchical product against the predicted vertex
/// and edge counts and the per-vertex degree law.
verification_report check_structural_lemmas(const Graph& g, std::span<const int> u,
                                            const Graph& h);

/// Compare a constructed S/R/Q/T graph against the predicted counts and both
/// degree laws (originals and edge vertices).
verification_report check_subdivision_lemmas(const Graph& g, subdivision_op op);

verification_report verify_case(const verification_case& c);

/// Deterministic in config: fixed grids for every formula id, then seeded
/// random instances. Failures are data, not errors.
std::vector<verification_report> run_suite(const suite_config& config);

/// True when every regular row passed and every expected-mismatch row failed
/// exactly as documented.
bool suite_ok(const std::vector<verification_report>& reports);

void write_text_report(const std::vector<verification_report>& reports, std::ostream& out);
void write_jsonl_report(const std::vector<verification_report>& reports, std::ostream& out);

} // namespace findex
