#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "eaforge/codes.hpp"

using namespace eaforge;

namespace {

LinearCode hamming() {
  const Field& f2 = Field::get(2, 1);
  return code_from_parity(
      f2, Mat::from_rows(
              f2, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}));
}

}  // namespace

TEST_CASE("generator and parity canonicalization") {
  const Field& f2 = Field::get(2, 1);
  LinearCode rep = code_from_generator(f2, Mat::from_rows(f2, {{1, 1, 1}}));
  REQUIRE(rep.n == 3);
  REQUIRE(rep.k == 1);
  REQUIRE(rep.gen == Mat::from_rows(f2, {{1, 1, 1}}));
  REQUIRE(rep.par == Mat::from_rows(f2, {{1, 0, 1}, {0, 1, 1}}));

  // dependent parity rows collapse
  LinearCode c = code_from_parity(f2, Mat::from_rows(f2, {{1, 0, 1}, {1, 0, 1}}));
  REQUIRE(c.k == 2);
  REQUIRE(c.par.rows() == 1);
}

TEST_CASE("dual is an involution") {
  LinearCode ham = hamming();
  LinearCode dd = dual(dual(ham));
  REQUIRE(same_code(ham, dd));
  REQUIRE(dual(ham).k == 3);
  REQUIRE(is_zero_mat(mat_mul(ham.gen, transpose(ham.par))));
}

TEST_CASE("hamming code parameters") {
  LinearCode ham = hamming();
  REQUIRE(ham.n == 7);
  REQUIRE(ham.k == 4);
  REQUIRE(min_distance(ham) == 3);
  REQUIRE(min_distance(dual(ham)) == 4);
  REQUIRE(hull_dim(ham, Form::euclidean) == 3);
  REQUIRE(is_dual_containing(ham, Form::euclidean));
  REQUIRE_FALSE(is_lcd(ham, Form::euclidean));
}

TEST_CASE("hermitian hull of a GF(4) line") {
  const Field& f4 = Field::get(2, 2);
  LinearCode line = code_from_generator(f4, Mat::from_rows(f4, {{1, 2}}));
  REQUIRE(hull_dim(line, Form::hermitian) == 1);
  REQUIRE(hull_dim(line, Form::euclidean) == 0);
  REQUIRE(is_lcd(line, Form::euclidean));
  REQUIRE_FALSE(is_lcd(line, Form::hermitian));
}

TEST_CASE("distance conventions at the extremes") {
  const Field& f2 = Field::get(2, 1);
  LinearCode zero = code_from_parity(f2, identity(f2, 4));
  REQUIRE(zero.k == 0);
  REQUIRE(min_distance(zero) == distance_undefined);
  LinearCode full = full_space(f2, 4);
  REQUIRE(full.k == 4);
  REQUIRE(min_distance(full) == 1);
}

TEST_CASE("message enumeration and column search agree") {
  const Field& f2 = Field::get(2, 1);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    Mat g(f2, 10, 12);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 12; ++j) g.set(i, j, bit(rng));
    LinearCode c = code_from_generator(f2, g);
    if (c.k < 10) continue;  // want q^k = 1024 above the forced budget
    LinearCode via_columns = c;
    via_columns.dist_cache.reset();
    int d_col = min_distance(via_columns, 1000);
    c.dist_cache.reset();
    int d_msg = min_distance(c, default_distance_budget);
    REQUIRE(d_col == d_msg);
  }
}

TEST_CASE("column search reports bounds when the budget runs out") {
  LinearCode ham = hamming();
  ham.dist_cache.reset();
  try {
    min_distance(ham, 10);
    FAIL("expected budget_exceeded");
  } catch (const budget_exceeded& e) {
    REQUIRE(e.code() == errc::budget_exceeded);
    REQUIRE(e.lower() >= 1);
    REQUIRE(e.upper() == 4);  // n - k + 1
    REQUIRE(e.lower() <= e.upper());
  }
}

TEST_CASE("hull identity on random codes both forms") {
  std::mt19937_64 rng(31);
  for (const Field* f : {&Field::get(3, 1), &Field::get(2, 2)}) {
    std::uniform_int_distribution<int> pick(0, f->q() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      Mat g(*f, 3, 7);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 7; ++j) g.set(i, j, pick(rng));
      LinearCode c = code_from_generator(*f, g);
      for (Form form : {Form::euclidean, Form::hermitian}) {
        if (form == Form::hermitian && !f->quadratic()) continue;
        int h = hull_dim(c, form);
        REQUIRE(gram_rank(c.par, form) == c.n - c.k - h);
        REQUIRE(gram_rank(c.gen, form) == c.k - h);
      }
    }
  }
}

TEST_CASE("binary expansion of a GF(4) line") {
  const Field& f4 = Field::get(2, 2);
  LinearCode line = code_from_generator(f4, Mat::from_rows(f4, {{1, 2}}));
  LinearCode expanded = expand_code(line, {1, 2});
  REQUIRE(expanded.f == &Field::get(2, 1));
  REQUIRE(expanded.n == 4);
  REQUIRE(expanded.k == 2);
  REQUIRE(expanded.gen ==
          Mat::from_rows(Field::get(2, 1), {{1, 0, 0, 1}, {0, 1, 1, 1}}));
  REQUIRE(min_distance(expanded) == 2);
}

TEST_CASE("hermitian dual via conjugated parity") {
  const Field& f9 = Field::get(3, 2);
  LinearCode c = code_from_parity(f9, Mat::from_rows(f9, {{1, 1, 1}}));
  REQUIRE(c.k == 2);
  REQUIRE(min_distance(c) == 2);
  REQUIRE(hull_dim(c, Form::hermitian) == 1);
  LinearCode hd = hermitian_dual(c);
  REQUIRE(hd.k == 1);
  // every generator row of the dual pairs to zero hermitian-wise with c
  Mat prod = mat_mul(c.gen, dagger(hd.gen));
  REQUIRE(is_zero_mat(prod));
}
