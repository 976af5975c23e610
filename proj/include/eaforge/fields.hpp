#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace eaforge {

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; (long long)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Arithmetic on little-endian coefficient vectors over GF(p), used to
// bootstrap a field before its tables exist.
inline std::vector<int> pf_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                  const std::vector<int>& modulus, int p) {
  int m = (int)modulus.size() - 1;
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int i = (int)prod.size() - 1; i >= m; --i) {
    int lead = prod[i];
    if (lead == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < m; ++j)
      prod[i - m + j] = ((prod[i - m + j] - lead * modulus[j]) % p + p) % p;
  }
  prod.resize(m > 0 ? m : 1);
  return prod;
}

inline bool pf_is_zero(const std::vector<int>& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

// Remainder of a by b over GF(p); b need not be monic.
inline std::vector<int> pf_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = (int)b.size() - 1;
  while (db > 0 && b[db] == 0) --db;
  int lead_inv = 1;
  for (int t = 1; t < p; ++t)
    if (b[db] * t % p == 1) lead_inv = t;
  for (int i = (int)a.size() - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    int f = a[i] * lead_inv % p;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
  }
  a.resize(db > 0 ? db : 1);
  return a;
}

// Trial division by all monic polynomials of degree 1..deg/2.
inline bool pf_irreducible(const std::vector<int>& f, int p) {
  int deg = (int)f.size() - 1;
  if (deg < 1 || f[deg] == 0) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
      std::vector<int> g(d + 1, 0);
      long long v = t;
      for (int i = 0; i < d; ++i) {
        g[i] = (int)(v % p);
        v /= p;
      }
      g[d] = 1;
      if (pf_is_zero(pf_rem(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace detail

// Lexicographically-least (by coefficient code) monic irreducible of degree m
// over GF(p), shipped as a table for p^m <= 1024 and searched beyond that.
inline std::vector<int> canonical_modulus(int p, int m) {
  if (!detail::is_prime(p)) fail(errc::non_prime_characteristic, "p = " + std::to_string(p));
  if (m < 1) fail(errc::reducible_modulus, "extension degree must be >= 1");
  if (m == 1) return {0, 1};
  struct Entry { int p, m; std::vector<int> mod; };
  static const std::vector<Entry> shipped = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 0, 0, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {3, 2, {1, 0, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 1, 0, 0, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 1, 0, 0, 0, 0, 1}},
      {5, 2, {2, 0, 1}},
      {5, 3, {1, 1, 0, 1}},
      {5, 4, {2, 0, 0, 0, 1}},
      {7, 2, {1, 0, 1}},
      {7, 3, {2, 0, 0, 1}},
      {11, 2, {1, 0, 1}},
      {13, 2, {2, 0, 1}},
      {17, 2, {3, 0, 1}},
      {19, 2, {1, 0, 1}},
      {23, 2, {1, 0, 1}},
      {29, 2, {2, 0, 1}},
      {31, 2, {1, 0, 1}},
  };
  for (const auto& e : shipped)
    if (e.p == p && e.m == m) return e.mod;
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long t = 0; t < count; ++t) {
    std::vector<int> f(m + 1, 0);
    long long v = t;
    for (int i = 0; i < m; ++i) {
      f[i] = (int)(v % p);
      v /= p;
    }
    f[m] = 1;
    if (detail::pf_irreducible(f, p)) return f;
  }
  fail(errc::reducible_modulus, "no irreducible polynomial found");  // unreachable
}

// GF(p^m) with elements encoded as integers sum c_i p^i (little-endian
// coefficients of the polynomial basis). Instances are interned: equal
// (p, m, modulus) means equal address.
class Field {
 public:
  static const Field& get(int p, int m) { return get(p, m, canonical_modulus(p, m)); }

  static const Field& get(int p, int m, const std::vector<int>& modulus) {
    static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Field>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, m, modulus);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, m, modulus))).first;
    return *it->second;
  }

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const {
    int out = 0, pw = 1;
    while (a || b) {
      out += (a % p_ + b % p_) % p_ * pw;
      a /= p_;
      b /= p_;
      pw *= p_;
    }
    return out;
  }

  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }

  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  int inv(int a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  int div(int a, int b) const { return mul(a, inv(b)); }

  // 0^0 = 1 by convention (GRS moment rows rely on it).
  int pow(int a, long long e) const {
    if (a == 0) {
      if (e == 0) return 1;
      if (e < 0) fail(errc::division_by_zero, "negative power of zero");
      return 0;
    }
    long long r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[(int)((long long)log_[a] * r % (q_ - 1))];
  }

  bool quadratic() const { return m_ % 2 == 0; }

  // Order of the index-2 subfield, for the Hermitian form over GF(q^2).
  int base_order() const {
    if (!quadratic()) fail(errc::not_quadratic_extension, "field order is not a square");
    int b = 1;
    for (int i = 0; i < m_ / 2; ++i) b *= p_;
    return b;
  }

  int conj(int a) const {
    if (!quadratic()) fail(errc::not_quadratic_extension, "conjugation needs GF(q^2)");
    return conj_[a];
  }

  // Least generator of the multiplicative group.
  int primitive() const { return primitive_; }

  std::vector<int> digits(int a) const {
    std::vector<int> out(m_, 0);
    for (int i = 0; i < m_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }

  int from_digits(const std::vector<int>& d) const {
    int out = 0, pw = 1;
    for (int i = 0; i < m_; ++i) {
      out += (i < (int)d.size() ? d[i] % p_ : 0) * pw;
      pw *= p_;
    }
    return out;
  }

  bool contains(int a) const { return a >= 0 && a < q_; }

 private:
  Field(int p, int m, const std::vector<int>& modulus)
      : p_(p), m_(m), modulus_(modulus) {
    if (!detail::is_prime(p)) fail(errc::non_prime_characteristic, "p = " + std::to_string(p));
    if (m < 1) fail(errc::reducible_modulus, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
      q *= p;
      if (q > (1 << 20)) fail(errc::field_too_large, "p^m beyond 2^20");
    }
    q_ = (int)q;
    if ((int)modulus.size() != m + 1 || modulus[m] != 1)
      fail(errc::reducible_modulus, "modulus must be monic of degree m");
    for (int c : modulus)
      if (c < 0 || c >= p) fail(errc::reducible_modulus, "modulus coefficient out of range");
    if (m > 1 && !detail::pf_irreducible(modulus, p))
      fail(errc::reducible_modulus, "modulus is reducible");

    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
      int out = 0, pw = 1, v = a;
      while (v) {
        out += (p_ - v % p_) % p_ * pw;
        v /= p_;
        pw *= p_;
      }
      neg_[a] = out;
    }

    primitive_ = find_primitive();
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    int cur = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      exp_[i] = cur;
      log_[cur] = i;
      cur = boot_mul(cur, primitive_);
    }

    if (quadratic()) {
      conj_.resize(q_);
      long long s = 1;
      for (int i = 0; i < m_ / 2; ++i) s *= p_;
      conj_[0] = 0;
      for (int a = 1; a < q_; ++a)
        conj_[a] = exp_[(int)((long long)log_[a] * (s % (q_ - 1)) % (q_ - 1))];
    }
  }

  int boot_mul(int a, int b) const {
    std::vector<int> va(m_), vb(m_);
    for (int i = 0; i < m_; ++i) {
      va[i] = a % p_;
      a /= p_;
      vb[i] = b % p_;
      b /= p_;
    }
    auto prod = detail::pf_mulmod(va, vb, modulus_, p_);
    int out = 0, pw = 1;
    for (int i = 0; i < (int)prod.size(); ++i) {
      out += prod[i] * pw;
      pw *= p_;
    }
    return out;
  }

  int boot_pow(int a, long long e) const {
    int r = 1;
    while (e) {
      if (e & 1) r = boot_mul(r, a);
      a = boot_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  int find_primitive() const {
    if (q_ == 2) return 1;
    auto factors = detail::prime_factors(q_ - 1);
    for (int g = 2; g < q_; ++g) {
      bool ok = true;
      for (long long f : factors) {
        if (boot_pow(g, (q_ - 1) / f) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    fail(errc::reducible_modulus, "no primitive element");  // unreachable for a field
  }

  int p_, m_, q_;
  std::vector<int> modulus_;
  std::vector<int> neg_, exp_, log_, conj_;
  int primitive_;
};

inline void require_same_field(const Field& a, const Field& b, const char* where) {
  if (&a != &b) fail(errc::mixed_fields, where);
}

// Sum of a^i over the nonzero elements; zero exactly when (q-1) does not
// divide i.
inline int power_sum(const Field& f, long long i) {
  int s = 0;
  for (int a = 1; a < f.q(); ++a) s = f.add(s, f.pow(a, i));
  return s;
}

// q-cyclotomic cosets mod n, each listed in cycle order from its least
// element, sorted by leader.
inline std::vector<std::vector<int>> cyclotomic_cosets(int n, int q) {
  if (n < 1 || std::gcd(n, q) != 1)
    fail(errc::non_coprime_length, "gcd(n, q) must be 1, n = " + std::to_string(n));
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int leader = 0; leader < n; ++leader) {
    if (seen[leader]) continue;
    std::vector<int> coset;
    int x = leader;
    do {
      seen[x] = true;
      coset.push_back(x);
      x = (int)((long long)x * q % n);
    } while (x != leader);
    out.push_back(coset);
  }
  return out;
}

}  // namespace eaforge
