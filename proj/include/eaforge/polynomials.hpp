#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace eaforge {

// Little-endian coefficient vector; the zero polynomial has no coefficients.
struct Poly {
  const Field* f = nullptr;
  std::vector<int> c;
};

inline Poly poly_make(const Field& f, std::vector<int> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return Poly{&f, std::move(coeffs)};
}

inline int poly_deg(const Poly& a) { return (int)a.c.size() - 1; }

inline bool poly_is_zero(const Poly& a) { return a.c.empty(); }

inline Poly poly_one(const Field& f) { return Poly{&f, {1}}; }

inline Poly poly_x(const Field& f) { return Poly{&f, {0, 1}}; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  require_same_field(*a.f, *b.f, "poly_add");
  std::vector<int> out(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    int x = i < a.c.size() ? a.c[i] : 0;
    int y = i < b.c.size() ? b.c[i] : 0;
    out[i] = a.f->add(x, y);
  }
  return poly_make(*a.f, std::move(out));
}

inline Poly poly_neg(const Poly& a) {
  std::vector<int> out(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) out[i] = a.f->neg(a.c[i]);
  return Poly{a.f, std::move(out)};
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_field(*a.f, *b.f, "poly_mul");
  if (poly_is_zero(a) || poly_is_zero(b)) return Poly{a.f, {}};
  std::vector<int> out(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      out[i + j] = a.f->add(out[i + j], a.f->mul(a.c[i], b.c[j]));
  }
  return poly_make(*a.f, std::move(out));
}

inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(*a.f, *b.f, "poly_divmod");
  if (poly_is_zero(b)) fail(errc::division_by_zero, "polynomial division by zero");
  const Field& f = *a.f;
  std::vector<int> rem = a.c;
  int db = poly_deg(b);
  int lead_inv = f.inv(b.c[db]);
  std::vector<int> quot(rem.size() > (size_t)db ? rem.size() - db : 0, 0);
  for (int i = (int)rem.size() - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    int factor = f.mul(rem[i], lead_inv);
    quot[i - db] = factor;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, b.c[j]));
  }
  return {poly_make(f, std::move(quot)), poly_make(f, std::move(rem))};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

inline bool poly_divides(const Poly& g, const Poly& a) {
  return poly_is_zero(poly_mod(a, g));
}

inline int poly_eval(const Poly& a, int x) {
  int acc = 0;
  for (int i = (int)a.c.size() - 1; i >= 0; --i)
    acc = a.f->add(a.f->mul(acc, x), a.c[i]);
  return acc;
}

inline Poly poly_from_roots(const Field& f, const std::vector<int>& roots) {
  Poly g = poly_one(f);
  for (int r : roots) g = poly_mul(g, poly_make(f, {f.neg(r), 1}));
  return g;
}

inline Poly xn_minus_1(const Field& f, int n) {
  std::vector<int> c(n + 1, 0);
  c[0] = f.neg(1);
  c[n] = 1;
  return poly_make(f, std::move(c));
}

// g*(x) = g(0)^{-1} x^{deg g} g(1/x); g is self-reciprocal when g* = g.
inline Poly poly_reciprocal(const Poly& g) {
  if (poly_is_zero(g) || g.c[0] == 0)
    fail(errc::zero_constant_term, "reciprocal needs g(0) != 0");
  const Field& f = *g.f;
  int scale = f.inv(g.c[0]);
  std::vector<int> out(g.c.rbegin(), g.c.rend());
  for (int& v : out) v = f.mul(v, scale);
  return poly_make(f, std::move(out));
}

inline bool poly_self_reciprocal(const Poly& g) {
  Poly r = poly_reciprocal(g);
  return r.c == g.c;
}

}  // namespace eaforge
