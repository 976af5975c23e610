#pragma once

#include <string>
#include <vector>

#include "codes.hpp"

namespace eaforge {

struct GrsSpec {
  const Field* f = nullptr;
  int k = 0;
  std::vector<int> gamma, w;

  int n() const { return (int)w.size(); }
};

inline void validate_grs(const GrsSpec& s) {
  if (s.gamma.size() != s.w.size())
    fail(errc::length_mismatch, "gamma and w lengths differ");
  int n = s.n();
  if (n < 1 || n > s.f->q()) fail(errc::repeated_evaluation_point, "need n distinct points, n <= q");
  if (s.k < 0 || s.k > n) fail(errc::dimension_mismatch, "k out of range");
  std::vector<bool> seen(s.f->q(), false);
  for (int x : s.w) {
    if (!s.f->contains(x)) fail(errc::repeated_evaluation_point, "point out of field range");
    if (seen[x]) fail(errc::repeated_evaluation_point, "evaluation point repeats");
    seen[x] = true;
  }
  for (int g : s.gamma)
    if (!s.f->contains(g) || g == 0) fail(errc::zero_multiplier, "gamma entries must be nonzero");
}

// Moment-form generator: row j is (gamma_i w_i^j), with 0^0 = 1.
inline Mat grs_generator(const GrsSpec& s) {
  validate_grs(s);
  const Field& f = *s.f;
  Mat g(f, s.k, s.n());
  for (int j = 0; j < s.k; ++j)
    for (int i = 0; i < s.n(); ++i) g.set(j, i, f.mul(s.gamma[i], f.pow(s.w[i], j)));
  return g;
}

inline LinearCode grs_code(const GrsSpec& s) {
  validate_grs(s);
  if (s.k == 0) return code_from_parity(*s.f, identity(*s.f, s.n()));
  return code_from_generator(*s.f, grs_generator(s));
}

// The Hermitian dual of a GRS code is again GRS in moment form:
// points v = w^q, multipliers beta_i = (gamma_i^q prod_{j != i}(v_i - v_j))^{-1}.
inline GrsSpec grs_hermitian_dual(const GrsSpec& s) {
  validate_grs(s);
  const Field& f = *s.f;
  if (!f.quadratic()) fail(errc::not_quadratic_extension, "Hermitian dual needs GF(q^2)");
  int n = s.n();
  GrsSpec d;
  d.f = &f;
  d.k = n - s.k;
  d.w.resize(n);
  d.gamma.resize(n);
  for (int i = 0; i < n; ++i) d.w[i] = f.conj(s.w[i]);
  for (int i = 0; i < n; ++i) {
    int prod = f.conj(s.gamma[i]);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      prod = f.mul(prod, f.sub(d.w[i], d.w[j]));
    }
    d.gamma[i] = f.inv(prod);
  }
  return d;
}

// GRS codes are MDS; any n-k columns of the dual's moment matrix form a
// scaled Vandermonde block, so the distance is structurally n-k+1.
inline int grs_distance(const GrsSpec& s) {
  if (s.k == 0) return distance_undefined;
  return s.n() - s.k + 1;
}

}  // namespace eaforge
