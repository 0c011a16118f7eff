#include "findex/closed_forms.hpp"

namespace findex {

namespace {

using checked::add;
using checked::mul;

index_t sum(std::initializer_list<index_t> terms) {
  index_t total = 0;
  for (index_t t : terms)
    total = add(total, t);
  return total;
}

} // namespace

index_t thm1_f_hierarchical(const invariant_bundle_t& bg, const invariant_bundle_t& bh) {
  if (bg.u_size < 1)
    raise(errc::empty_subset, "thm1_f_hierarchical: U must be non-empty");
  return sum({mul(bh.n_vertices, bg.f),
              mul(mul(6, bh.n_edges), bg.sum_deg2_u),
              mul(mul(3, bh.m1), bg.sum_deg_u),
              mul(bg.u_size, bh.f)});
}

index_t prop1_f_transformed(const invariant_bundle_t& b, subdivision_op op) {
  switch (op) {
  case subdivision_op::S:
    return add(b.f, mul(8, b.n_edges));
  case subdivision_op::R:
    return add(mul(8, b.f), mul(8, b.n_edges));
  case subdivision_op::Q:
    return sum({b.f, b.xi4, mul(3, b.rezm)});
  case subdivision_op::T:
    return sum({mul(8, b.f), b.xi4, mul(3, b.rezm)});
  }
  raise(errc::bad_param, "unknown subdivision op");
}

index_t thm_fsum_f(const invariant_bundle_t& bg, const invariant_bundle_t& bh,
                   subdivision_op op) {
  if (bg.n_vertices < 2)
    raise(errc::too_small, "thm_fsum_f: |V(G)| must be >= 2");
  const index_t vh = bh.n_vertices, vg = bg.n_vertices;
  const index_t eh = bh.n_edges, eg = bg.n_edges;
  switch (op) {
  case subdivision_op::S:
    return sum({mul(vh, bg.f), mul(vg, bh.f), mul(mul(6, eh), bg.m1),
                mul(mul(6, eg), bh.m1), mul(mul(8, vh), eg)});
  case subdivision_op::R:
    return sum({mul(mul(8, vh), bg.f), mul(vg, bh.f), mul(mul(24, eh), bg.m1),
                mul(mul(12, eg), bh.m1), mul(mul(8, vh), eg)});
  case subdivision_op::Q:
    return sum({mul(vh, bg.f), mul(vg, bh.f), mul(mul(6, eh), bg.m1),
                mul(mul(6, eg), bh.m1), mul(vh, bg.xi4), mul(mul(3, vh), bg.rezm)});
  case subdivision_op::T:
    return sum({mul(mul(8, vh), bg.f), mul(vg, bh.f), mul(mul(24, eh), bg.m1),
                mul(mul(12, eg), bh.m1), mul(vh, bg.xi4), mul(mul(3, vh), bg.rezm)});
  }
  raise(errc::bad_param, "unknown subdivision op");
}

index_t cor1_cycle_s(int n, const invariant_bundle_t& bh) {
  if (n < 3)
    raise(errc::bad_param, "cor1_cycle_s: cycle order must be >= 3");
  const index_t k = n;
  return sum({mul(k, bh.f), mul(mul(6, k), bh.m1), mul(mul(24, k), bh.n_edges),
              mul(mul(16, k), bh.n_vertices)});
}

index_t cor2_path_s(int n, const invariant_bundle_t& bh, cor2_variant variant) {
  if (n < 2)
    raise(errc::bad_param, "cor2_path_s: path order must be >= 2");
  const index_t k = n;
  if (variant == cor2_variant::printed) {
    // as published: nF(H) + 6nM1(H) + 12n(2n-3)|E(H)| + 2n(8n-11)|V(H)|
    return sum({mul(k, bh.f), mul(mul(6, k), bh.m1),
                mul(mul(mul(12, k), 2 * k - 3), bh.n_edges),
                mul(mul(mul(2, k), 8 * k - 11), bh.n_vertices)});
  }
  // specialization of the general S-sum formula at G = P_n:
  // nF(H) + 6(n-1)M1(H) + (24n-36)|E(H)| + (16n-22)|V(H)|
  return sum({mul(k, bh.f), mul(mul(6, k - 1), bh.m1),
              mul(24 * k - 36, bh.n_edges), mul(16 * k - 22, bh.n_vertices)});
}

index_t example3_path_path(int n, int m, subdivision_op op) {
  if (n < 2 || m < 2)
    raise(errc::bad_param, "example3_path_path: both orders must be >= 2");
  const index_t a = n, b = m;
  switch (op) {
  case subdivision_op::S:
    return sum({mul(mul(72, a), b), mul(-74, a), mul(-82, b), 72});
  case subdivision_op::R:
    return sum({mul(mul(224, a), b), mul(-182, a), mul(-312, b), 216});
  case subdivision_op::Q:
    return sum({mul(mul(128, a), b), mul(-74, a), mul(-212, b), 72});
  case subdivision_op::T:
    return sum({mul(mul(280, a), b), mul(-182, a), mul(-442, b), 216});
  }
  raise(errc::bad_param, "unknown subdivision op");
}

family_invariants_t family_invariants(closed_family family, int n) {
  family_invariants_t out;
  out.family = family;
  out.n = n;
  const index_t k = n;
  switch (family) {
  case closed_family::path:
    if (n < 2)
      raise(errc::bad_param, "family_invariants: path order must be >= 2");
    out.f = 8 * k - 14;
    out.m1 = 4 * k - 6;
    out.xi4 = n == 2 ? 2 : 16 * k - 30;
    out.rezm = n == 2 ? 2 : 16 * k - 36;
    out.n_edges = k - 1;
    return out;
  case closed_family::cycle:
    if (n < 3)
      raise(errc::bad_param, "family_invariants: cycle order must be >= 3");
    out.f = 8 * k;
    out.m1 = 4 * k;
    out.xi4 = 16 * k;
    out.rezm = 16 * k;
    out.n_edges = k;
    return out;
  }
  raise(errc::bad_param, "unknown family");
}

} // namespace findex
