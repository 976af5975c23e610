#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrices.hpp"
#include "polynomials.hpp"

namespace eaforge {

// Distance of the zero code; reported as a sentinel, never 0.
constexpr int distance_undefined = -1;

constexpr long long default_distance_budget = 1LL << 22;

// gen and par are the unique RREF bases of the code and its Euclidean dual,
// so equal codes compare equal as structs. par always satisfies
// gen * par^t = 0; Hermitian operations work with conj(par), which spans
// the Hermitian dual itself.
struct LinearCode {
  const Field* f = nullptr;
  int n = 0, k = 0;
  Mat gen, par;
  mutable std::optional<int> dist_cache;
  mutable std::optional<int> hull_e_cache, hull_h_cache;
};

inline bool same_code(const LinearCode& a, const LinearCode& b) {
  return a.f == b.f && a.n == b.n && a.k == b.k && a.gen == b.gen && a.par == b.par;
}

inline LinearCode code_from_generator(const Field& f, const Mat& g) {
  require_same_field(f, g.field(), "code_from_generator");
  if (g.rows() == 0 || is_zero_mat(g)) fail(errc::zero_matrix, "generator has no nonzero row");
  LinearCode c;
  c.f = &f;
  c.n = g.cols();
  c.gen = row_basis(g);
  c.k = c.gen.rows();
  c.par = null_space(c.gen);
  return c;
}

inline LinearCode code_from_parity(const Field& f, const Mat& h) {
  require_same_field(f, h.field(), "code_from_parity");
  LinearCode c;
  c.f = &f;
  c.n = h.cols();
  c.par = row_basis(h);
  c.gen = null_space(c.par);
  c.k = c.gen.rows();
  return c;
}

inline LinearCode full_space(const Field& f, int n) {
  return code_from_parity(f, Mat(f, 0, n));
}

inline LinearCode dual(const LinearCode& c) {
  LinearCode d;
  d.f = c.f;
  d.n = c.n;
  d.k = c.n - c.k;
  d.gen = c.par;
  d.par = c.gen;
  return d;
}

// Canonical generator of the Hermitian dual C^{perp h} = conj(C^perp).
inline Mat hermitian_par(const LinearCode& c) { return conj_mat(c.par); }

inline LinearCode hermitian_dual(const LinearCode& c) {
  LinearCode d;
  d.f = c.f;
  d.n = c.n;
  d.k = c.n - c.k;
  d.gen = conj_mat(c.par);
  d.par = conj_mat(c.gen);
  return d;
}

// Hull dimension, computed by subspace intersection and independently by the
// Gram-rank identity; the two must agree or the whole run is unsound.
inline int hull_dim(const LinearCode& c, Form form) {
  auto& cache = form == Form::euclidean ? c.hull_e_cache : c.hull_h_cache;
  if (cache) return *cache;
  Mat dual_gen = form == Form::euclidean ? c.par : hermitian_par(c);
  int by_intersection = intersect_rowspaces(c.gen, dual_gen).rows();
  int by_rank = (c.n - c.k) - gram_rank(c.par, form);
  if (by_intersection != by_rank)
    throw std::logic_error("hull oracle disagreement: intersection " +
                           std::to_string(by_intersection) + " vs rank identity " +
                           std::to_string(by_rank));
  cache = by_intersection;
  return by_intersection;
}

inline bool is_lcd(const LinearCode& c, Form form) {
  bool by_hull = hull_dim(c, form) == 0;
  Mat gram = form == Form::euclidean ? mat_mul(c.par, transpose(c.par))
                                     : mat_mul(c.par, dagger(c.par));
  bool by_gram = is_nonsingular(gram);
  if (by_hull != by_gram) throw std::logic_error("LCD criteria disagree");
  return by_hull;
}

inline bool is_dual_containing(const LinearCode& c, Form form) {
  return hull_dim(c, form) == c.n - c.k;
}

namespace detail {

inline int distance_by_messages(const LinearCode& c) {
  const Field& f = *c.f;
  int best = c.n;
  std::vector<int> m(c.k), cw(c.n);
  for (int lead = 0; lead < c.k && best > 1; ++lead) {
    std::fill(m.begin(), m.end(), 0);
    m[lead] = 1;
    cw = c.gen.row(lead);
    for (;;) {
      int w = 0;
      for (int v : cw)
        if (v != 0) ++w;
      if (w < best) best = w;
      if (best == 1) break;
      int t = c.k - 1;
      while (t > lead) {
        int a = m[t];
        int next = a + 1 < f.q() ? a + 1 : 0;
        m[t] = next;
        int delta = f.sub(next, a);
        for (int j = 0; j < c.n; ++j) cw[j] = f.add(cw[j], f.mul(delta, c.gen.get(t, j)));
        if (next != 0) break;
        --t;
      }
      if (t == lead) break;
    }
  }
  return best;
}

inline int distance_by_columns(const LinearCode& c, long long budget) {
  const Mat& h = c.par;
  int r = h.rows();
  long long used = 0;
  for (int t = 1; t <= r; ++t) {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
      if (++used > budget)
        throw budget_exceeded("column-dependency search stopped while scanning weight " +
                                  std::to_string(t),
                              t, r + 1);
      Mat sub(*c.f, r, t);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < t; ++j) sub.set(i, j, h.get(i, idx[j]));
      if (rank(sub) < t) return t;
      int i = t - 1;
      while (i >= 0 && idx[i] == c.n - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return r + 1;
}

}  // namespace detail

// Exact minimum weight. Message enumeration (projectively, the first nonzero
// coordinate pinned to 1) when q^k fits the budget, else incremental
// column-dependency search on par.
inline int min_distance(const LinearCode& c, long long budget = default_distance_budget) {
  if (c.k == 0) return distance_undefined;
  if (c.dist_cache) return *c.dist_cache;
  long long qk = 1;
  bool small = true;
  for (int i = 0; i < c.k; ++i) {
    qk *= c.f->q();
    if (qk > budget) {
      small = false;
      break;
    }
  }
  int d = small ? detail::distance_by_messages(c) : detail::distance_by_columns(c, budget);
  c.dist_cache = d;
  return d;
}

// q_sub-ary expansion with respect to a basis of F over the canonical
// subfield with [F : sub] = basis.size().
inline LinearCode expand_code(const LinearCode& c, const std::vector<int>& basis) {
  const Field& f = *c.f;
  int m_rel = (int)basis.size();
  if (m_rel < 1 || f.m() % m_rel != 0)
    fail(errc::dependent_basis, "basis size must divide the extension degree");
  const Field& sub = Field::get(f.p(), f.m() / m_rel);
  const Field& fp = Field::get(f.p(), 1);
  if (c.k == 0) return code_from_parity(sub, identity(sub, c.n * m_rel));

  // Least root of sub's modulus inside f; scalars of sub act through it.
  int rho = -1;
  Poly submod = poly_make(f, std::vector<int>(sub.modulus().begin(), sub.modulus().end()));
  for (int z = 0; z < f.q() && rho < 0; ++z)
    if (poly_eval(submod, z) == 0) rho = z;
  if (rho < 0) throw std::logic_error("subfield root search failed");

  // Columns express s = sum_{i,t} l_{i,t} rho^t basis_i over GF(p);
  // invertibility of the map is exactly independence of the basis over sub.
  int dim = f.m();
  Mat map(fp, dim, dim);
  for (int i = 0; i < m_rel; ++i) {
    if (!f.contains(basis[i])) fail(errc::dependent_basis, "basis element out of range");
    for (int t = 0; t < sub.m(); ++t) {
      int col = i * sub.m() + t;
      int val = f.mul(f.pow(rho, t), basis[i]);
      auto dg = f.digits(val);
      for (int r = 0; r < dim; ++r) map.set(r, col, dg[r]);
    }
  }
  RrefResult rr = rref(hstack(map, identity(fp, dim)));
  if (rr.rank != dim) fail(errc::dependent_basis, "basis is dependent over the subfield");
  Mat inv_map(fp, dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) inv_map.set(i, j, rr.mat.get(i, dim + j));

  Mat rows(sub, c.k * m_rel, c.n * m_rel);
  for (int r = 0; r < c.k; ++r) {
    for (int b = 0; b < m_rel; ++b) {
      int out_row = r * m_rel + b;
      for (int j = 0; j < c.n; ++j) {
        int sym = f.mul(basis[b], c.gen.get(r, j));
        auto dg = f.digits(sym);
        for (int i = 0; i < m_rel; ++i) {
          std::vector<int> lam(sub.m(), 0);
          for (int t = 0; t < sub.m(); ++t) {
            int acc = 0;
            for (int col = 0; col < dim; ++col)
              acc = fp.add(acc, fp.mul(inv_map.get(i * sub.m() + t, col), dg[col]));
            lam[t] = acc;
          }
          rows.set(out_row, j * m_rel + i, sub.from_digits(lam));
        }
      }
    }
  }
  return code_from_generator(sub, rows);
}

}  // namespace eaforge
