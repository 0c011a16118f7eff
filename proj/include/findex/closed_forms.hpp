#pragma once

#include "findex/indices.hpp"
#include "findex/transforms.hpp"

namespace findex {

/// F(G(U)PiH) = |V(H)|F(G) + 6|E(H)| sum_U d(u)^2 + 3 M1(H) sum_U d(u)
///            + |U| F(H), evaluated from bundles alone.
index_t thm1_f_hierarchical(const invariant_bundle_t& bg, const invariant_bundle_t& bh);

/// F of S/R/Q/T of a graph from its bundle:
///   S: F + 8m    R: 8F + 8m    Q: F + xi4 + 3 ReZM    T: 8F + xi4 + 3 ReZM
index_t prop1_f_transformed(const invariant_bundle_t& b, subdivision_op op);

/// F(G +_op H) from the two whole-graph bundles. Requires |V(G)| >= 2.
index_t thm_fsum_f(const invariant_bundle_t& bg, const invariant_bundle_t& bh,
                   subdivision_op op);

/// F(C_n +_S H) = nF(H) + 6nM1(H) + 24n|E(H)| + 16n|V(H)|, n >= 3.
index_t cor1_cycle_s(int n, const invariant_bundle_t& bh);

/// The published closed form for F(P_n +_S H) is inconsistent with the
/// general F-sum formula it specializes; both variants are kept so the
/// discrepancy can be demonstrated. `printed` is the expression as
/// published; `corrected` is the specialization of the general formula and
/// is the one that matches direct construction.
enum class cor2_variant { printed, corrected };

index_t cor2_path_s(int n, const invariant_bundle_t& bh, cor2_variant variant); // n >= 2

/// Published polynomials for F(P_n +_op P_m), n,m >= 2:
///   S: 72nm-74n-82m+72        R: 224nm-182n-312m+216
///   Q: 128nm-74n-212m+72      T: 280nm-182n-442m+216
/// Known erratum: for Q and T these undercount by 18m at n=2 (they assume
/// the n>=3 closed form of ReZM(P_n)).
index_t example3_path_path(int n, int m, subdivision_op op);

enum class closed_family { path, cycle };

/// Closed-form invariants of P_n (n >= 2) and C_n (n >= 3).
struct family_invariants_t {
  closed_family family;
  int n = 0;
  index_t f = 0;
  index_t m1 = 0;
  index_t xi4 = 0;
  index_t rezm = 0;
  index_t n_edges = 0;
};

family_invariants_t family_invariants(closed_family family, int n);

} // namespace findex
