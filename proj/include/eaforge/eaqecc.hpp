#pragma once

#include <numeric>
#include <string>
#include <utility>

#include "codes.hpp"

namespace eaforge {

struct Rational {
  long long num = 0;
  long long den = 1;

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

inline Rational make_rational(long long num, long long den) {
  long long g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
  if (g == 0) g = 1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational{num / g, den / g};
}

enum class Singleton { ok, mds, violated };

inline const char* singleton_name(Singleton s) {
  switch (s) {
    case Singleton::ok: return "ok";
    case Singleton::mds: return "mds";
    case Singleton::violated: return "violated";
  }
  return "ok";
}

// [[n,k,d;c]]_q parameter set; k <= 0 is representable and flagged
// degenerate, never an error.
struct EaqeccParams {
  int q = 0, n = 0, k = 0, d = 0, c = 0;
  Rational rate, net_rate;
  Singleton singleton = Singleton::ok;
  bool maximal = false;
  bool degenerate = false;
  bool positive_net_rate = false;
  bool rate_above_half = false;
};

// n + c - k >= 2(d-1) with 0 <= c <= n-1; equality (with the range intact)
// is the MDS case. An undefined distance skips the bound.
inline Singleton check_singleton(const EaqeccParams& p) {
  if (p.c < 0 || p.c > p.n - 1) return Singleton::violated;
  if (p.d == distance_undefined) return Singleton::ok;
  long long lhs = (long long)p.n + p.c - p.k;
  long long rhs = 2LL * (p.d - 1);
  if (lhs < rhs) return Singleton::violated;
  return lhs == rhs ? Singleton::mds : Singleton::ok;
}

inline void classify(EaqeccParams& p) {
  p.rate = make_rational(p.k, p.n);
  p.net_rate = make_rational(p.k - p.c, p.n);
  p.singleton = check_singleton(p);
  p.maximal = p.c == p.n - p.k;
  p.degenerate = p.k <= 0;
  p.positive_net_rate = p.k > p.c;
  p.rate_above_half = 2LL * p.k > p.n;
}

inline EaqeccParams make_eaqecc(int q, int n, int k, int d, int c) {
  EaqeccParams p;
  p.q = q;
  p.n = n;
  p.k = k;
  p.d = d;
  p.c = c;
  classify(p);
  return p;
}

// Two-code derivation: [[n, k1+k2-n+c, min(d1,d2); c]]_q with
// c = rank(par1 * par2^t).
inline EaqeccParams eaqecc_from_two_codes(const LinearCode& c1, const LinearCode& c2,
                                          long long budget = default_distance_budget) {
  require_same_field(*c1.f, *c2.f, "eaqecc_from_two_codes");
  if (c1.n != c2.n) fail(errc::length_mismatch, "codes must share a length");
  int c = rank(mat_mul(c1.par, transpose(c2.par)));
  int d1 = min_distance(c1, budget);
  int d2 = min_distance(c2, budget);
  int d;
  if (d1 == distance_undefined) d = d2;
  else if (d2 == distance_undefined) d = d1;
  else d = std::min(d1, d2);
  return make_eaqecc(c1.f->q(), c1.n, c1.k + c2.k - c1.n + c, d, c);
}

// Hermitian single-code derivation: [[n, 2k-n+c, d; c]]_q, c = rank(H H^dagger).
inline EaqeccParams eaqecc_hermitian(const LinearCode& code,
                                     long long budget = default_distance_budget) {
  if (!code.f->quadratic()) fail(errc::not_quadratic_extension, "eaqecc_hermitian");
  int c = gram_rank(code.par, Form::hermitian);
  int d = min_distance(code, budget);
  return make_eaqecc(code.f->base_order(), code.n, 2 * code.k - code.n + c, d, c);
}

// Hull corollaries: primary [[n, k-h, d; n-k-h]] and dual-derived
// [[n, n-k-h, d_perp; k-h]], h = hull dimension in the given form.
inline std::pair<EaqeccParams, EaqeccParams> eaqecc_from_hull(
    const LinearCode& code, Form form, long long budget = default_distance_budget) {
  int h = hull_dim(code, form);
  int q_out = form == Form::hermitian ? code.f->base_order() : code.f->q();
  LinearCode d_code = form == Form::hermitian ? hermitian_dual(code) : dual(code);
  int d = min_distance(code, budget);
  int d_perp = min_distance(d_code, budget);
  EaqeccParams primary = make_eaqecc(q_out, code.n, code.k - h, d, code.n - code.k - h);
  EaqeccParams derived = make_eaqecc(q_out, code.n, code.n - code.k - h, d_perp, code.k - h);
  return {primary, derived};
}

}  // namespace eaforge
