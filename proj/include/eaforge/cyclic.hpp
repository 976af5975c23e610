#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"

namespace eaforge {

// Least-root embedding of sub into big, with the partial inverse used to pull
// generator-polynomial coefficients back down.
struct Embedding {
  const Field* sub = nullptr;
  const Field* big = nullptr;
  std::vector<int> fwd;
  std::vector<int> inv;

  int up(int a) const { return fwd[a]; }
  int down(int a) const { return inv[a]; }
  bool in_image(int a) const { return inv[a] >= 0; }
};

inline Embedding subfield_embedding(const Field& sub, const Field& big) {
  if (sub.p() != big.p() || big.m() % sub.m() != 0)
    fail(errc::dimension_mismatch, "not a subfield");
  Embedding e;
  e.sub = &sub;
  e.big = &big;
  e.fwd.resize(sub.q());
  e.inv.assign(big.q(), -1);
  if (&sub == &big) {
    for (int a = 0; a < sub.q(); ++a) {
      e.fwd[a] = a;
      e.inv[a] = a;
    }
    return e;
  }
  Poly submod = poly_make(big, std::vector<int>(sub.modulus().begin(), sub.modulus().end()));
  int rho = -1;
  for (int z = 0; z < big.q() && rho < 0; ++z)
    if (poly_eval(submod, z) == 0) rho = z;
  if (rho < 0) throw std::logic_error("subfield embedding: modulus has no root");
  for (int a = 0; a < sub.q(); ++a) {
    auto dg = sub.digits(a);
    int img = 0;
    for (int i = sub.m() - 1; i >= 0; --i) img = big.add(big.mul(img, rho), dg[i]);
    e.fwd[a] = img;
    e.inv[img] = a;
  }
  return e;
}

struct CyclicSpec {
  const Field* f = nullptr;
  int n = 0;
  std::vector<int> defining_set;
  Poly g;
  int ext_degree = 1;
};

// Splitting-field context: alpha is the canonical primitive n-th root
// omega^((q^t - 1)/n) in GF(q^t), t = ord_n(q).
struct NthRootContext {
  const Field* ext = nullptr;
  int alpha = 0;
  int t = 1;
  Embedding emb;
};

inline NthRootContext nth_root_context(const Field& f, int n) {
  if (n < 1 || std::gcd(n, f.q()) != 1)
    fail(errc::non_coprime_length, "gcd(n, q) must be 1, n = " + std::to_string(n));
  int t = 1;
  long long pw = f.q() % n;
  while (pw != 1 % n) {
    pw = pw * f.q() % n;
    ++t;
  }
  NthRootContext ctx;
  const Field& ext = Field::get(f.p(), f.m() * t);
  ctx.ext = &ext;
  ctx.t = t;
  long long units = (long long)ext.q() - 1;
  ctx.alpha = ext.pow(ext.primitive(), units / n);
  ctx.emb = subfield_embedding(f, ext);
  return ctx;
}

namespace detail {

inline LinearCode cyclic_code_from_g(const Field& f, int n, const Poly& g) {
  int deg = poly_deg(g);
  int k = n - deg;
  if (k == 0) return code_from_parity(f, identity(f, n));
  Mat rows(f, k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= deg; ++j) rows.set(i, i + j, g.c[j]);
  return code_from_generator(f, rows);
}

}  // namespace detail

inline std::pair<CyclicSpec, LinearCode> cyclic_code(const Field& f, int n,
                                                     const std::vector<int>& defining_set) {
  NthRootContext ctx = nth_root_context(f, n);
  std::set<int> tset;
  for (int i : defining_set) {
    if (i < 0 || i >= n) fail(errc::not_coset_closed, "exponent out of range: " + std::to_string(i));
    tset.insert(i);
  }
  for (int i : tset)
    if (!tset.count((int)((long long)i * f.q() % n)))
      fail(errc::not_coset_closed, "defining set not closed under multiplication by q");

  const Field& ext = *ctx.ext;
  std::vector<int> roots;
  for (int i : tset) roots.push_back(ext.pow(ctx.alpha, i));
  Poly g_ext = poly_from_roots(ext, roots);
  std::vector<int> coeffs;
  for (int c : g_ext.c) {
    if (!ctx.emb.in_image(c)) throw std::logic_error("cyclic generator coefficient outside base field");
    coeffs.push_back(ctx.emb.down(c));
  }
  CyclicSpec spec;
  spec.f = &f;
  spec.n = n;
  spec.defining_set.assign(tset.begin(), tset.end());
  spec.g = poly_make(f, coeffs);
  spec.ext_degree = ctx.t;
  return {spec, detail::cyclic_code_from_g(f, n, spec.g)};
}

inline std::pair<CyclicSpec, LinearCode> cyclic_code_from_poly(const Field& f, int n, Poly g) {
  NthRootContext ctx = nth_root_context(f, n);
  if (poly_is_zero(g)) fail(errc::not_divisor, "zero polynomial");
  int lead = g.c.back();
  if (lead != 1) {
    int s = f.inv(lead);
    for (int& c : g.c) c = f.mul(c, s);
  }
  if (!poly_divides(g, xn_minus_1(f, n)))
    fail(errc::not_divisor, "g does not divide x^n - 1");
  const Field& ext = *ctx.ext;
  std::vector<int> lifted;
  for (int c : g.c) lifted.push_back(ctx.emb.up(c));
  Poly g_ext = poly_make(ext, lifted);
  std::vector<int> tset;
  for (int i = 0; i < n; ++i)
    if (poly_eval(g_ext, ext.pow(ctx.alpha, i)) == 0) tset.push_back(i);
  CyclicSpec spec;
  spec.f = &f;
  spec.n = n;
  spec.defining_set = std::move(tset);
  spec.g = std::move(g);
  spec.ext_degree = ctx.t;
  return {spec, detail::cyclic_code_from_g(f, n, spec.g)};
}

// All 2^(number of cosets) coset-closed defining sets mod n, in bitmask order
// over the coset list.
inline std::vector<std::vector<int>> all_defining_sets(const Field& f, int n) {
  auto cosets = cyclotomic_cosets(n, f.q());
  std::vector<std::vector<int>> out;
  for (size_t mask = 0; mask < (size_t(1) << cosets.size()); ++mask) {
    std::set<int> t;
    for (size_t i = 0; i < cosets.size(); ++i)
      if (mask >> i & 1) t.insert(cosets[i].begin(), cosets[i].end());
    out.emplace_back(t.begin(), t.end());
  }
  return out;
}

// Reed-Solomon code of length q-1 with g = (x - w)...(x - w^(r-1)); r = 1
// gives the full space.
inline std::pair<CyclicSpec, LinearCode> rs_code(const Field& f, int r) {
  if (r < 1 || r > f.q() - 1)
    fail(errc::redundancy_out_of_range, "r must lie in [1, q-1], got " + std::to_string(r));
  std::vector<int> t;
  for (int i = 1; i < r; ++i) t.push_back(i);
  return cyclic_code(f, f.q() - 1, t);
}

}  // namespace eaforge
