#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eaforge/cyclic.hpp"
#include "eaforge/serialization.hpp"

// Code extension and expansion constructions. Every operation returns a
// ConstructionReport holding the stored matrices, the selected witnesses and
// a claimed-vs-computed table; computed values are always derived from the
// matrices actually built, never copied from the quoted formulas.

namespace eaforge {

struct Claim {
  std::string name;
  json claimed;
  json computed;
  bool match = false;
};

inline Claim make_claim(std::string name, json claimed, json computed) {
  Claim c;
  c.name = std::move(name);
  c.claimed = std::move(claimed);
  c.computed = std::move(computed);
  c.match = c.claimed == c.computed;
  return c;
}

inline Claim window_claim(std::string name, long long lo, long long hi, long long computed) {
  Claim c;
  c.name = std::move(name);
  c.claimed = json::array({lo, hi});
  c.computed = computed;
  c.match = lo <= computed && computed <= hi;
  return c;
}

// Known discrepancies the strict mode tolerates. The only entry is the
// dual-derived ebit count of the GRS MDS extension, where the quoted formula
// and the hull arithmetic disagree; the computed rank is authoritative.
inline bool claim_whitelisted(const std::string& construction, const std::string& claim) {
  return construction == "grs-mds" && claim == "dual_derived.c";
}

struct ConstructionReport {
  std::string construction;
  json input;
  json params;
  json witnesses;
  json output_code;
  json family;
  std::optional<EaqeccParams> primary;
  std::optional<EaqeccParams> dual_derived;
  std::vector<Claim> claims;
  std::optional<LinearCode> code;

  bool strict_ok() const {
    for (const auto& c : claims)
      if (!c.match && !claim_whitelisted(construction, c.name)) return false;
    return true;
  }
};

inline json claims_to_json(const std::vector<Claim>& claims) {
  json arr = json::array();
  for (const auto& c : claims)
    arr.push_back(json{
        {"name", c.name}, {"claimed", c.claimed}, {"computed", c.computed}, {"match", c.match}});
  return arr;
}

inline json report_to_json(const ConstructionReport& r) {
  json j{{"construction", r.construction},
         {"input", r.input},
         {"params", r.params},
         {"witnesses", r.witnesses},
         {"claims", claims_to_json(r.claims)}};
  if (!r.output_code.is_null()) j["output_code"] = r.output_code;
  if (r.primary) j["eaqecc"] = eaqecc_to_json(*r.primary);
  if (r.dual_derived) j["dual_derived"] = eaqecc_to_json(*r.dual_derived);
  if (!r.family.is_null()) j["family"] = r.family;
  return j;
}

namespace detail {

inline std::optional<std::pair<int, int>> prime_power_split(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, e);
}

inline int bilin(const Field& f, const std::vector<int>& u, const std::vector<int>& v,
                 Form form) {
  int acc = 0;
  for (size_t i = 0; i < u.size(); ++i)
    acc = f.add(acc, f.mul(u[i], form == Form::euclidean ? v[i] : f.conj(v[i])));
  return acc;
}

// Rows of gen that extend the row space of base to a direct complement.
inline std::vector<std::vector<int>> complement_basis(const Mat& base, const Mat& gen) {
  Mat cur = base;
  int r = rank(cur);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < gen.rows(); ++i) {
    Mat trial = vstack(cur, Mat::from_rows(gen.field(), {gen.row(i)}));
    if (rank(trial) > r) {
      cur = trial;
      ++r;
      out.push_back(gen.row(i));
    }
  }
  return out;
}

// Greedy orthogonalization: take the first anisotropic vector, falling back
// to the first pairwise sum that is anisotropic, then project it out of the
// remainder. Fails once no combination has nonzero self-pairing.
inline std::vector<std::vector<int>> pick_orthogonal(const Field& f,
                                                     std::vector<std::vector<int>> rem, int count,
                                                     Form form) {
  std::vector<std::vector<int>> chosen;
  while ((int)chosen.size() < count) {
    if (rem.empty())
      fail(errc::witness_search_failed, "ran out of complement basis vectors");
    int idx = -1;
    for (size_t i = 0; i < rem.size(); ++i)
      if (bilin(f, rem[i], rem[i], form) != 0) {
        idx = (int)i;
        break;
      }
    if (idx < 0) {
      for (size_t i = 0; idx < 0 && i < rem.size(); ++i)
        for (size_t j = i + 1; j < rem.size(); ++j) {
          std::vector<int> sum(rem[i].size());
          for (size_t t = 0; t < sum.size(); ++t) sum[t] = f.add(rem[i][t], rem[j][t]);
          if (bilin(f, sum, sum, form) != 0) {
            rem[i] = sum;
            idx = (int)i;
            break;
          }
        }
      if (idx < 0)
        fail(errc::witness_search_failed, "no anisotropic combination in the complement");
    }
    std::vector<int> x = rem[idx];
    rem.erase(rem.begin() + idx);
    chosen.push_back(x);
    int bxx = bilin(f, x, x, form);
    for (auto& v : rem) {
      int lam = f.div(bilin(f, v, x, form), bxx);
      for (size_t t = 0; t < v.size(); ++t) v[t] = f.sub(v[t], f.mul(lam, x[t]));
    }
  }
  return chosen;
}

inline int border_multiplier(const Field& f, Form form, int q0, int nrm, const char* where) {
  for (int a = 1; a < f.q(); ++a) {
    int pw = form == Form::euclidean ? f.mul(a, a) : f.pow(a, q0 + 1);
    if (f.add(pw, nrm) != 0) return a;
  }
  fail(errc::witness_search_failed, std::string(where) + ": every multiplier norm hits -x x^t");
}

inline void require_extension_field(const LinearCode& c, Form form) {
  if (form == Form::hermitian) {
    if (!c.f->quadratic()) fail(errc::not_quadratic_extension, "hermitian extension");
    if (c.f->base_order() <= 2)
      fail(errc::condition_violated, "hermitian extensions need base order q > 2");
  } else {
    if (c.f->q() <= 3) fail(errc::condition_violated, "euclidean multi extension needs q > 3");
  }
}

inline ConstructionReport extend_multi_impl(const LinearCode& c, int count, Form form,
                                            long long budget) {
  const Field& f = *c.f;
  require_extension_field(c, form);
  if (!is_dual_containing(c, form))
    fail(errc::not_dual_containing, "extension input must contain its dual");
  int ell = 2 * c.k - c.n;
  if (count < 0 || count > ell)
    fail(errc::too_many_ebits_requested,
         "c must lie in [0, " + std::to_string(ell) + "], got " + std::to_string(count));

  Mat base = form == Form::euclidean ? c.par : conj_mat(c.par);
  auto complement = complement_basis(base, c.gen);
  auto xs = pick_orthogonal(f, complement, count, form);
  int q0 = form == Form::hermitian ? f.base_order() : 0;
  std::vector<int> alphas;
  for (const auto& x : xs)
    alphas.push_back(border_multiplier(f, form, q0, bilin(f, x, x, form), "extend multi"));

  std::vector<std::vector<int>> rows;
  for (int i = 0; i < base.rows(); ++i) {
    std::vector<int> row(count, 0);
    std::vector<int> tail = base.row(i);
    row.insert(row.end(), tail.begin(), tail.end());
    rows.push_back(std::move(row));
  }
  for (int i = 0; i < count; ++i) {
    std::vector<int> row(count, 0);
    row.insert(row.end(), xs[i].begin(), xs[i].end());
    row[i] = alphas[i];
    rows.push_back(std::move(row));
  }
  Mat hp = Mat::from_rows(f, rows);
  LinearCode extended = code_from_parity(f, hp);
  int c_comp = gram_rank(hp, form);
  int d0 = min_distance(c, budget);
  int dp = min_distance(extended, budget);
  int q_out = form == Form::hermitian ? f.base_order() : f.q();
  EaqeccParams primary =
      make_eaqecc(q_out, extended.n, 2 * extended.k - extended.n + c_comp, dp, c_comp);

  ConstructionReport r;
  r.construction = form == Form::euclidean ? "extend-e-multi" : "extend-h-multi";
  r.input = code_to_json(c);
  r.params = json{{"budget", budget}, {"c", count}, {"form", form_name(form)}};
  r.witnesses = json{{"alpha", alphas}, {"x", xs}};
  r.output_code = code_file_json(f, "parity", hp);
  r.primary = primary;
  r.claims.push_back(make_claim("c", count, c_comp));
  r.claims.push_back(make_claim("k", 2 * c.k - c.n, primary.k));
  r.claims.push_back(window_claim("d_prime", d0, d0 + count, dp));
  r.code = extended;
  return r;
}

inline ConstructionReport extend_single_impl(const LinearCode& c, int count, Form form,
                                             long long budget) {
  const Field& f = *c.f;
  int q = f.q();
  if (form == Form::hermitian) {
    if (!f.quadratic()) fail(errc::not_quadratic_extension, "hermitian extension");
    if (f.base_order() <= 2)
      fail(errc::condition_violated, "hermitian single extension needs base order q > 2");
  } else {
    bool ok = (q == 2 && count % 2 == 1) || (q == 3 && count % 3 != 0) || q >= 4;
    if (!ok)
      fail(errc::condition_violated,
           "no admissible condition: need q=2 with odd c, q=3 with 3 not dividing c, or q >= 4");
  }
  if (!is_dual_containing(c, form))
    fail(errc::not_dual_containing, "extension input must contain its dual");
  int nk = c.n - c.k;
  if (count < 1 || count > nk + 1)
    fail(errc::too_many_ebits_requested,
         "c must lie in [1, " + std::to_string(nk + 1) + "], got " + std::to_string(count));

  Mat base = form == Form::euclidean ? c.par : conj_mat(c.par);
  RrefResult rr = rref(base);
  std::vector<int> perm = rr.pivots;
  for (int j = 0; j < c.n; ++j)
    if (std::find(rr.pivots.begin(), rr.pivots.end(), j) == rr.pivots.end()) perm.push_back(j);
  Mat hs(f, nk, c.n);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < c.n; ++j) hs.set(i, j, rr.mat.get(i, perm[j]));

  std::vector<int> x(nk, 0);
  for (int i = 0; i < count - 1; ++i) x[i] = 1;
  int q0 = form == Form::hermitian ? f.base_order() : 0;
  int xxt = bilin(f, x, x, form);
  int a = std::gcd(q, count) == 1 ? 1 : f.primitive();
  int norm_a = form == Form::euclidean ? f.mul(a, a) : f.pow(a, q0 + 1);
  if (f.add(norm_a, xxt) == 0) a = border_multiplier(f, form, q0, xxt, "extend single");

  std::vector<std::vector<int>> rows;
  std::vector<int> border{a};
  border.insert(border.end(), x.begin(), x.end());
  border.resize(c.n + 1, 0);
  rows.push_back(std::move(border));
  for (int i = 0; i < nk; ++i) {
    std::vector<int> row{0};
    std::vector<int> tail = hs.row(i);
    row.insert(row.end(), tail.begin(), tail.end());
    rows.push_back(std::move(row));
  }
  Mat hp = Mat::from_rows(f, rows);
  LinearCode extended = code_from_parity(f, hp);
  int c_comp = gram_rank(hp, form);
  int d0 = min_distance(c, budget);
  int dp = min_distance(extended, budget);
  int q_out = form == Form::hermitian ? f.base_order() : f.q();
  EaqeccParams primary =
      make_eaqecc(q_out, extended.n, 2 * extended.k - extended.n + c_comp, dp, c_comp);

  ConstructionReport r;
  r.construction = form == Form::euclidean ? "extend-e-single" : "extend-h-single";
  r.input = code_to_json(c);
  r.params = json{{"budget", budget}, {"c", count}, {"form", form_name(form)}};
  r.witnesses = json{{"alpha", a}, {"permutation", perm}, {"x", x}};
  r.output_code = code_file_json(f, "parity", hp);
  r.primary = primary;
  r.claims.push_back(make_claim("c", count, c_comp));
  r.claims.push_back(make_claim("k", 2 * c.k - c.n - 1 + count, primary.k));
  r.claims.push_back(window_claim("d_prime", d0, d0 + 1, dp));
  r.code = extended;
  return r;
}

}  // namespace detail

inline ConstructionReport extend_euclidean_multi(const LinearCode& c, int count,
                                                 long long budget = default_distance_budget) {
  return detail::extend_multi_impl(c, count, Form::euclidean, budget);
}

inline ConstructionReport extend_hermitian_multi(const LinearCode& c, int count,
                                                 long long budget = default_distance_budget) {
  return detail::extend_multi_impl(c, count, Form::hermitian, budget);
}

inline ConstructionReport extend_euclidean_single(const LinearCode& c, int count,
                                                  long long budget = default_distance_budget) {
  return detail::extend_single_impl(c, count, Form::euclidean, budget);
}

inline ConstructionReport extend_hermitian_single(const LinearCode& c, int count,
                                                  long long budget = default_distance_budget) {
  return detail::extend_single_impl(c, count, Form::hermitian, budget);
}

// Appends the next moment row of the Hermitian dual to a dual-containing GRS
// code, bordered by a column with multiplier norm off -x x^dagger. Supplied
// specs in the self-orthogonal range are first replaced by their Hermitian
// dual, which lies in the dual-containing range.
inline ConstructionReport grs_mds_extend(const GrsSpec& spec,
                                         long long budget = default_distance_budget) {
  validate_grs(spec);
  const Field& f = *spec.f;
  if (!f.quadratic()) fail(errc::not_quadratic_extension, "grs_mds_extend");
  GrsSpec s = spec;
  bool normalized = false;
  if (2 * s.k < s.n()) {
    s = grs_hermitian_dual(s);
    normalized = true;
  }
  LinearCode base = grs_code(s);
  if (!is_dual_containing(base, Form::hermitian))
    fail(errc::not_dual_containing, "GRS code does not contain its Hermitian dual");
  int n = s.n(), k = s.k, q0 = f.base_order();

  GrsSpec dual_spec = grs_hermitian_dual(s);
  Mat h = grs_generator(dual_spec);
  if (rref(h).mat != rref(conj_mat(base.par)).mat)
    fail(errc::not_moment_form, "dual moment rows do not span the Hermitian dual");

  std::vector<int> x(n);
  for (int i = 0; i < n; ++i) x[i] = f.mul(dual_spec.gamma[i], f.pow(dual_spec.w[i], n - k));
  int xxd = detail::bilin(f, x, x, Form::hermitian);
  int a = detail::border_multiplier(f, Form::hermitian, q0, xxd, "grs_mds_extend");

  std::vector<std::vector<int>> rows;
  std::vector<int> border{a};
  border.insert(border.end(), x.begin(), x.end());
  rows.push_back(std::move(border));
  for (int i = 0; i < h.rows(); ++i) {
    std::vector<int> row{0};
    std::vector<int> tail = h.row(i);
    row.insert(row.end(), tail.begin(), tail.end());
    rows.push_back(std::move(row));
  }
  Mat hp = Mat::from_rows(f, rows);
  LinearCode extended = code_from_parity(f, hp);
  int dp = min_distance(extended, budget);
  int rkh = gram_rank(hp, Form::hermitian);
  auto [primary, derived] = eaqecc_from_hull(extended, Form::hermitian, budget);

  ConstructionReport r;
  r.construction = "grs-mds";
  r.input = grs_to_json(spec);
  r.params = json{{"budget", budget}, {"normalized", normalized}};
  r.witnesses =
      json{{"alpha", a}, {"beta", dual_spec.gamma}, {"v", dual_spec.w}, {"x", x}};
  r.output_code = code_file_json(f, "parity", hp);
  r.primary = primary;
  r.dual_derived = derived;
  r.claims.push_back(make_claim("extended.d", n - k + 2, dp));
  r.claims.push_back(make_claim("primary.k", 2 * k - n, primary.k));
  r.claims.push_back(make_claim("primary.d", n - k + 2, primary.d));
  r.claims.push_back(make_claim("primary.c", 1, rkh));
  r.claims.push_back(make_claim("dual_derived.k", 1, derived.k));
  r.claims.push_back(make_claim("dual_derived.d", k + 1, derived.d));
  r.claims.push_back(make_claim("dual_derived.c", 2 * k - n - 1, derived.c));
  r.code = extended;
  return r;
}

struct FamilyRow {
  int k = 0;
  int hull = 0;
  int case_id = 0;
  int predicted_delta = 0;
  int actual_delta = 0;
  bool prediction_match = true;
  std::optional<EaqeccParams> primary;
  std::optional<EaqeccParams> dual_derived;
};

struct GrsHullFamily {
  int q = 0, r = 0;
  bool extra = false;
  const Field* f2 = nullptr;
  std::vector<int> gamma, w;
  std::vector<FamilyRow> rows;
};

// Coset-representative evaluation points over GF(q^2) with unit multipliers;
// the per-k Hermitian hull is computed directly, and the recursion's
// predicted case and delta are recorded as advisory only.
inline GrsHullFamily grs_hull_family(int q, int r, bool extra) {
  auto split = detail::prime_power_split(q);
  if (!split || q <= 2) fail(errc::invalid_r, "q must be a prime power greater than 2");
  if (r < 1 || r > q + 1 || std::gcd(r, q) != 1)
    fail(errc::invalid_r, "r must lie in [1, q+1] with gcd(r, q) = 1");
  auto [p, e] = *split;
  const Field& f2 = Field::get(p, 2 * e);

  int w2 = f2.primitive();
  int om = f2.pow(w2, q + 1);
  std::vector<int> w;
  for (int t = 0; t < r; ++t) {
    int bt = f2.pow(w2, t);
    for (int j = 0; j < q - 1; ++j) w.push_back(f2.mul(bt, f2.pow(om, j)));
  }
  std::vector<int> gamma(w.size(), 1);
  if (extra) {
    int s = (int)(((long long)(q - 1) * r) % p);
    int a = 0;
    for (int cand = 1; cand < f2.q(); ++cand)
      if (f2.add(f2.pow(cand, q + 1), s) != 0) {
        a = cand;
        break;
      }
    w.insert(w.begin(), 0);
    gamma.insert(gamma.begin(), a);
  }
  int n = (int)w.size();

  GrsHullFamily fam;
  fam.q = q;
  fam.r = r;
  fam.extra = extra;
  fam.f2 = &f2;
  fam.gamma = gamma;
  fam.w = w;

  std::vector<int> hulls(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    GrsSpec gs{&f2, k, gamma, w};
    hulls[k] = hull_dim(grs_code(gs), Form::hermitian);
  }
  for (int k = 0; k <= n; ++k) {
    FamilyRow row;
    row.k = k;
    row.hull = hulls[k];
    if (k >= 1) {
      int i = (k + q - 2) / (q - 1);
      if (k == (i - 1) * (q - 1) + 1) {
        row.case_id = 1;
        row.predicted_delta = 0;
      } else if (k <= q * (i - 1) + i + 1) {
        row.case_id = 2;
        row.predicted_delta = -1;
      } else {
        row.case_id = 3;
        row.predicted_delta = 1;
      }
      row.actual_delta = hulls[k] - hulls[k - 1];
      row.prediction_match = row.predicted_delta == row.actual_delta;
    }
    if (k >= 1) row.primary = make_eaqecc(q, n, k - hulls[k], n - k + 1, n - k - hulls[k]);
    if (k <= n - 1) row.dual_derived = make_eaqecc(q, n, n - k - hulls[k], k + 1, k - hulls[k]);
    fam.rows.push_back(std::move(row));
  }
  return fam;
}

inline ConstructionReport grs_hull_report(int q, int r, bool extra) {
  GrsHullFamily fam = grs_hull_family(q, r, extra);
  ConstructionReport rep;
  rep.construction = "grs-hull";
  rep.input = json{{"extra", extra}, {"q", q}, {"r", r}};
  rep.params = json::object();
  rep.witnesses = json{{"field", field_to_json(*fam.f2)}, {"gamma", fam.gamma}, {"w", fam.w}};
  json rows = json::array();
  bool deltas_ok = true, singleton_ok = true;
  for (const auto& row : fam.rows) {
    json jr{{"k", row.k},
            {"hull", row.hull},
            {"case", row.case_id},
            {"predicted_delta", row.predicted_delta},
            {"actual_delta", row.actual_delta},
            {"prediction_match", row.prediction_match}};
    jr["primary"] = row.primary ? eaqecc_to_json(*row.primary) : json(nullptr);
    jr["dual_derived"] = row.dual_derived ? eaqecc_to_json(*row.dual_derived) : json(nullptr);
    rows.push_back(std::move(jr));
    if (row.k >= 1 && (row.actual_delta < -1 || row.actual_delta > 1)) deltas_ok = false;
    if (row.primary && row.primary->singleton == Singleton::violated) singleton_ok = false;
    if (row.dual_derived && row.dual_derived->singleton == Singleton::violated)
      singleton_ok = false;
  }
  rep.family = std::move(rows);
  rep.claims.push_back(make_claim("hull_at_k0", 0, fam.rows[0].hull));
  rep.claims.push_back(make_claim("deltas_in_unit_range", true, deltas_ok));
  rep.claims.push_back(make_claim("eaqecc_singleton_ok", true, singleton_ok));
  return rep;
}

inline std::pair<EaqeccParams, EaqeccParams> lcd_maximal(
    const LinearCode& c, long long budget = default_distance_budget) {
  if (!is_lcd(c, Form::euclidean)) fail(errc::not_lcd, "input code has a nontrivial hull");
  return eaqecc_from_hull(c, Form::euclidean, budget);
}

inline ConstructionReport lcd_maximal_report(const LinearCode& c,
                                             long long budget = default_distance_budget) {
  auto [primary, derived] = lcd_maximal(c, budget);
  ConstructionReport r;
  r.construction = "lcd-maximal";
  r.input = code_to_json(c);
  r.params = json{{"budget", budget}, {"form", "euclidean"}};
  r.witnesses = json::object();
  r.output_code = code_to_json(c);
  r.primary = primary;
  r.dual_derived = derived;
  r.claims.push_back(make_claim("primary.c", c.n - c.k, primary.c));
  r.claims.push_back(make_claim("dual_derived.c", c.k, derived.c));
  r.claims.push_back(make_claim("maximal", true, primary.maximal && derived.maximal));
  r.code = c;
  return r;
}

// Length q+1 MDS cyclic codes with trivial hull over GF(q), built from the
// self-reciprocal defining sets around 0 (variant 1, q+1-k odd) or around
// q/2 (variant 2, q even with k odd). k = q+1 degenerates to the full space.
inline ConstructionReport cyclic_mds_lcd(int q, int k,
                                         long long budget = default_distance_budget) {
  auto split = detail::prime_power_split(q);
  if (!split) fail(errc::parse_error, "q must be a prime power");
  if (k < 1 || k > q + 1)
    fail(errc::degenerate_k, "k must lie in [1, q+1], got " + std::to_string(k));
  auto [p, e] = *split;
  const Field& f = Field::get(p, e);
  int n = q + 1;

  int variant = 0, mu = 0;
  std::set<int> tset;
  if (k < n) {
    if (q % 2 == 0 && k % 2 == 1) {
      variant = 2;
      mu = (q - 1 - k) / 2;
      for (int i = q / 2 - mu; i <= q / 2; ++i) {
        tset.insert(i % n);
        tset.insert((n - i % n) % n);
      }
    } else if ((q - k) % 2 == 0) {
      variant = 1;
      mu = (q - k) / 2;
      for (int i = 0; i <= mu; ++i) {
        tset.insert(i);
        tset.insert((n - i) % n);
      }
    } else {
      fail(errc::parity_not_supported, "q odd with k even is outside both generator recipes");
    }
  }
  std::vector<int> defining(tset.begin(), tset.end());
  auto [spec, code] = cyclic_code(f, n, defining);
  int d = min_distance(code, budget);
  bool lcd = is_lcd(code, Form::euclidean);
  bool self_rec = poly_self_reciprocal(spec.g);
  auto [primary, derived] = eaqecc_from_hull(code, Form::euclidean, budget);
  (void)derived;

  ConstructionReport r;
  r.construction = "cyclic-mds-lcd";
  r.input = json{{"k", k}, {"q", q}};
  r.params = json{{"budget", budget}};
  r.witnesses = json{{"defining_set", defining}, {"g", spec.g.c.empty() ? std::vector<int>{1} : spec.g.c},
                     {"mu", variant == 0 ? -1 : mu}, {"variant", variant}};
  r.output_code = code_to_json(code);
  r.primary = primary;
  r.claims.push_back(make_claim("n", q + 1, code.n));
  r.claims.push_back(make_claim("k", k, code.k));
  r.claims.push_back(make_claim("d", q - k + 2, d));
  r.claims.push_back(make_claim("c", q + 1 - k, primary.c));
  r.claims.push_back(make_claim("lcd", true, lcd));
  r.claims.push_back(make_claim("self_reciprocal", true, self_rec));
  r.claims.push_back(make_claim("singleton", "mds", singleton_name(primary.singleton)));
  r.code = code;
  return r;
}

enum class WitnessKind { neg_one_square, two_square, four_square };

inline const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::neg_one_square: return "neg_one_square";
    case WitnessKind::two_square: return "two_square";
    default: return "four_square";
  }
}

// Least tuples, by element encoding, satisfying a^2 = -1, a^2+b^2+1 = 0, or
// 1+a^2+b^2+c^2+d^2 = 0; exhaustive search, so unsatisfiable kinds report
// NoWitness instead of looping forever.
inline std::vector<int> find_square_witnesses(const Field& f, WitnessKind kind) {
  int q = f.q();
  if (kind == WitnessKind::neg_one_square) {
    int m1 = f.neg(1);
    for (int a = 0; a < q; ++a)
      if (f.mul(a, a) == m1) return {a};
    fail(errc::no_witness, "-1 is not a square in this field");
  }
  if (kind == WitnessKind::two_square) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        if (f.add(f.add(f.mul(a, a), f.mul(b, b)), 1) == 0) return {a, b};
    fail(errc::no_witness, "no pair with a^2 + b^2 + 1 = 0");
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          int s = f.add(f.add(f.mul(a, a), f.mul(b, b)), f.add(f.mul(c, c), f.mul(d, d)));
          if (f.add(1, s) == 0) return {a, b, c, d};
        }
  fail(errc::no_witness, "no quadruple with 1 + sum of squares = 0");
}

// Replicates the redundancy part of a systematic generator s times, scaled by
// coefficients whose squares sum to zero, so the expanded Gram matrix stays
// nonsingular (and equals I for s in {2, 3}).
inline ConstructionReport lcd_s_expand(const LinearCode& c, int s,
                                       long long budget = default_distance_budget) {
  const Field& f = *c.f;
  int q = f.q();
  if (s == 2) {
    if (q % 2 != 0) fail(errc::congruence_mismatch, "s = 2 needs even q");
  } else if (s == 3) {
    if (q % 4 != 1) fail(errc::congruence_mismatch, "s = 3 needs q = 1 mod 4");
  } else if (s == 4) {
    if (q % 4 != 3) fail(errc::congruence_mismatch, "s = 4 needs q = 3 mod 4");
  } else if (s != 5) {
    fail(errc::congruence_mismatch, "s must lie in {2, 3, 4, 5}");
  }

  RrefResult rr = rref(c.gen);
  std::vector<int> perm = rr.pivots;
  for (int j = 0; j < c.n; ++j)
    if (std::find(rr.pivots.begin(), rr.pivots.end(), j) == rr.pivots.end()) perm.push_back(j);
  int k = c.k, nk = c.n - c.k;
  Mat a_block(f, k, nk);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < nk; ++j) a_block.set(i, j, rr.mat.get(i, perm[k + j]));

  std::vector<int> witness;
  std::vector<int> coeffs;
  try {
    if (s == 2) {
      coeffs = {1, 1};
    } else if (s == 3) {
      witness = find_square_witnesses(f, WitnessKind::neg_one_square);
      coeffs = {1, witness[0], 0};
    } else if (s == 4) {
      witness = find_square_witnesses(f, WitnessKind::two_square);
      coeffs = {1, witness[0], witness[1], 0};
    } else {
      witness = find_square_witnesses(f, WitnessKind::four_square);
      coeffs = {1, witness[0], witness[1], witness[3], witness[2]};
    }
  } catch (const forge_error& err) {
    if (err.code() == errc::no_witness)
      fail(errc::witness_search_failed, "square witness search failed");
    throw;
  }

  int big_n = k + s * nk;
  Mat gp(f, k, big_n);
  for (int i = 0; i < k; ++i) {
    gp.set(i, i, 1);
    for (int b = 0; b < s; ++b)
      for (int j = 0; j < nk; ++j)
        gp.set(i, k + b * nk + j, f.mul(coeffs[b], a_block.get(i, j)));
  }
  LinearCode expanded = code_from_generator(f, gp);
  Mat gram = mat_mul(gp, transpose(gp));
  bool gram_id = gram == identity(f, k);
  bool nonsingular = is_nonsingular(gram);
  int c_comp = gram_rank(expanded.par, Form::euclidean);
  int d0 = min_distance(c, budget);
  int dp = min_distance(expanded, budget);
  EaqeccParams primary = make_eaqecc(q, expanded.n, expanded.k, dp, c_comp);

  ConstructionReport r;
  r.construction = "lcd-expand";
  r.input = code_to_json(c);
  r.params = json{{"budget", budget}, {"s", s}};
  r.witnesses =
      json{{"coefficients", coeffs}, {"permutation", perm}, {"square_witnesses", witness}};
  r.output_code = code_file_json(f, "generator", gp);
  r.primary = primary;
  r.claims.push_back(make_claim("N", (long long)s * c.n - (long long)(s - 1) * c.k, expanded.n));
  r.claims.push_back(make_claim("c", s * nk, c_comp));
  r.claims.push_back(make_claim("gram_nonsingular", true, nonsingular));
  if (s <= 3) r.claims.push_back(make_claim("gram_identity", true, gram_id));
  r.claims.push_back(window_claim("d_prime", d0, (long long)s * d0 - 1, dp));
  r.code = expanded;
  return r;
}

}  // namespace eaforge
