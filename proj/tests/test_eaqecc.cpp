#include <catch2/catch_amalgamated.hpp>

#include "eaforge/eaqecc.hpp"

using namespace eaforge;

namespace {

LinearCode hamming() {
  const Field& f2 = Field::get(2, 1);
  return code_from_parity(
      f2, Mat::from_rows(
              f2, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}));
}

}  // namespace

TEST_CASE("rationals are reduced with positive denominators") {
  Rational r = make_rational(2, 4);
  REQUIRE(r.num == 1);
  REQUIRE(r.den == 2);
  Rational neg = make_rational(-2, 3);
  REQUIRE(neg.num == -2);
  REQUIRE(neg.den == 3);
  Rational zero = make_rational(0, 7);
  REQUIRE(zero.num == 0);
  REQUIRE(zero.den == 1);
}

TEST_CASE("singleton classification") {
  EaqeccParams steane = make_eaqecc(2, 7, 1, 3, 0);
  REQUIRE(steane.singleton == Singleton::ok);
  REQUIRE_FALSE(steane.maximal);
  REQUIRE_FALSE(steane.degenerate);
  REQUIRE(steane.rate.num == 1);
  REQUIRE(steane.rate.den == 7);
  REQUIRE(steane.net_rate.num == 1);
  REQUIRE(steane.net_rate.den == 7);

  EaqeccParams rep = make_eaqecc(2, 3, 1, 3, 2);
  REQUIRE(rep.singleton == Singleton::mds);  // 3 + 2 - 1 = 4 = 2(d-1)
  REQUIRE(rep.maximal);                      // c = n - k
  REQUIRE(rep.net_rate.num == -1);
  REQUIRE(rep.net_rate.den == 3);

  EaqeccParams bad = make_eaqecc(2, 4, 2, 4, 0);
  REQUIRE(bad.singleton == Singleton::violated);
}

TEST_CASE("hull derivation on the hamming code") {
  auto [primary, derived] = eaqecc_from_hull(hamming(), Form::euclidean);
  REQUIRE(primary.q == 2);
  REQUIRE(primary.n == 7);
  REQUIRE(primary.k == 1);
  REQUIRE(primary.d == 3);
  REQUIRE(primary.c == 0);
  REQUIRE(derived.n == 7);
  REQUIRE(derived.k == 0);
  REQUIRE(derived.d == 4);
  REQUIRE(derived.c == 1);
  REQUIRE(derived.degenerate);
}

TEST_CASE("hull derivation on the repetition code") {
  const Field& f2 = Field::get(2, 1);
  LinearCode rep = code_from_generator(f2, Mat::from_rows(f2, {{1, 1, 1}}));
  auto [primary, derived] = eaqecc_from_hull(rep, Form::euclidean);
  REQUIRE(primary.k == 1);
  REQUIRE(primary.d == 3);
  REQUIRE(primary.c == 2);
  REQUIRE(primary.singleton == Singleton::mds);
  REQUIRE(primary.maximal);
  REQUIRE(derived.k == 2);
  REQUIRE(derived.d == 2);
  REQUIRE(derived.c == 1);
  REQUIRE(derived.singleton == Singleton::mds);
}

TEST_CASE("two-code derivation degenerates to the hull pair") {
  LinearCode ham = hamming();
  EaqeccParams two = eaqecc_from_two_codes(ham, ham);
  auto [primary, derived] = eaqecc_from_hull(ham, Form::euclidean);
  REQUIRE(two.q == primary.q);
  REQUIRE(two.n == primary.n);
  REQUIRE(two.k == primary.k);
  REQUIRE(two.d == primary.d);
  REQUIRE(two.c == primary.c);
}

TEST_CASE("one-dimensional kernel code") {
  const Field& f2 = Field::get(2, 1);
  LinearCode c = code_from_parity(f2, Mat::from_rows(f2, {{1, 0}}));
  auto [primary, derived] = eaqecc_from_hull(c, Form::euclidean);
  REQUIRE(primary.n == 2);
  REQUIRE(primary.k == 1);
  REQUIRE(primary.d == 1);
  REQUIRE(primary.c == 1);
  REQUIRE(derived.k == 1);
  REQUIRE(derived.d == 1);
  REQUIRE(derived.c == 1);
}

TEST_CASE("hermitian derivation emits base-field parameters") {
  const Field& f9 = Field::get(3, 2);
  LinearCode c = code_from_parity(f9, Mat::from_rows(f9, {{1, 1, 1}}));
  EaqeccParams p = eaqecc_hermitian(c);
  REQUIRE(p.q == 3);
  REQUIRE(p.n == 3);
  REQUIRE(p.k == 1);
  REQUIRE(p.d == 2);
  REQUIRE(p.c == 0);

  const Field& f2 = Field::get(2, 1);
  LinearCode bin = code_from_generator(f2, Mat::from_rows(f2, {{1, 1}}));
  try {
    eaqecc_hermitian(bin);
    FAIL();
  } catch (const forge_error& e) {
    REQUIRE(e.code() == errc::not_quadratic_extension);
  }
}

TEST_CASE("undefined distances propagate through the min rule") {
  const Field& f2 = Field::get(2, 1);
  LinearCode full = full_space(f2, 3);
  auto [primary, derived] = eaqecc_from_hull(full, Form::euclidean);
  REQUIRE(primary.d == 1);
  REQUIRE(derived.k == 0);
  REQUIRE(derived.d == distance_undefined);
  // the undefined distance skips the bound check, but c = 3 still breaks
  // the ebit cap c <= n-1, so the classification is honest about that
  REQUIRE(derived.c == 3);
  REQUIRE(derived.singleton == Singleton::violated);

  LinearCode zero = dual(full);
  REQUIRE(zero.k == 0);
  EaqeccParams p = eaqecc_from_two_codes(full, zero);
  REQUIRE(p.d == 1);  // the defined side survives the min rule
  REQUIRE(p.k == 0);
}
