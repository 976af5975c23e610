#include <catch2/catch_amalgamated.hpp>

#include "eaforge/constructions.hpp"

using namespace eaforge;

namespace {

LinearCode hamming() {
  const Field& f2 = Field::get(2, 1);
  return code_from_parity(
      f2, Mat::from_rows(
              f2, {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}));
}

LinearCode rs4_3() {
  const Field& f5 = Field::get(5, 1);
  return code_from_generator(
      f5, Mat::from_rows(f5, {{3, 1, 0, 0}, {0, 3, 1, 0}, {0, 0, 3, 1}}));
}

LinearCode gf9_322() {
  const Field& f9 = Field::get(3, 2);
  return code_from_parity(f9, Mat::from_rows(f9, {{1, 1, 1}}));
}

LinearCode grs42() {
  const Field& f5 = Field::get(5, 1);
  return code_from_generator(f5, Mat::from_rows(f5, {{1, 1, 1, 1}, {0, 1, 2, 3}}));
}

LinearCode tetracode() {
  const Field& f3 = Field::get(3, 1);
  return code_from_generator(f3, Mat::from_rows(f3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
}

GrsSpec epsilon_instance() {
  const Field& f9 = Field::get(3, 2);
  return GrsSpec{&f9, 6, {1, 1, 1, 1, 4, 4, 4, 4}, {1, 2, 4, 8, 6, 3, 7, 5}};
}

const Claim& claim_named(const ConstructionReport& r, const std::string& name) {
  for (const auto& c : r.claims)
    if (c.name == name) return c;
  FAIL("no claim named " + name);
  throw std::logic_error("unreachable");
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const forge_error& e) {
    return e.code();
  }
  throw std::logic_error("expected a forge_error");
}

}  // namespace

TEST_CASE("claim bookkeeping") {
  Claim eq = make_claim("x", 3, 3);
  REQUIRE(eq.match);
  Claim ne = make_claim("x", 3, 4);
  REQUIRE_FALSE(ne.match);
  Claim win = window_claim("w", 2, 4, 4);
  REQUIRE(win.match);
  REQUIRE(win.claimed == json::array({2, 4}));
  REQUIRE_FALSE(window_claim("w", 2, 4, 5).match);
  REQUIRE(claim_whitelisted("grs-mds", "dual_derived.c"));
  REQUIRE_FALSE(claim_whitelisted("grs-mds", "primary.c"));
  REQUIRE_FALSE(claim_whitelisted("derive", "dual_derived.c"));
}

TEST_CASE("euclidean multi-column extension of a reed-solomon code") {
  ConstructionReport r = extend_euclidean_multi(rs4_3(), 1);
  REQUIRE(r.construction == "extend-e-multi");
  REQUIRE(r.strict_ok());
  REQUIRE(claim_named(r, "c").computed == json(1));
  REQUIRE(claim_named(r, "d_prime").computed == json(2));
  REQUIRE(r.witnesses.at("x") == json::array({json::array({0, 1, 0, 1})}));
  REQUIRE(r.witnesses.at("alpha") == json::array({1}));
  REQUIRE(r.primary->n == 5);
  REQUIRE(r.primary->k == 2);
  REQUIRE(r.primary->d == 2);
  REQUIRE(r.primary->c == 1);

  ConstructionReport r2 = extend_euclidean_multi(rs4_3(), 2);
  REQUIRE(r2.strict_ok());
  REQUIRE(claim_named(r2, "c").computed == json(2));
  REQUIRE(claim_named(r2, "d_prime").computed == json(3));
  REQUIRE(r2.primary->n == 6);
  REQUIRE(r2.primary->k == 2);
  REQUIRE(r2.primary->c == 2);
}

TEST_CASE("multi extension rejections") {
  REQUIRE(code_of([] { extend_euclidean_multi(hamming(), 1); }) == errc::condition_violated);
  REQUIRE(code_of([] { extend_euclidean_multi(rs4_3(), 3); }) ==
          errc::too_many_ebits_requested);
  const Field& f5 = Field::get(5, 1);
  LinearCode rep5 = code_from_generator(f5, Mat::from_rows(f5, {{1, 1, 1, 1}}));
  REQUIRE(code_of([&] { extend_euclidean_multi(rep5, 1); }) == errc::not_dual_containing);
  REQUIRE(code_of([] { extend_hermitian_multi(rs4_3(), 1); }) ==
          errc::not_quadratic_extension);
  const Field& f4 = Field::get(2, 2);
  LinearCode quad = code_from_parity(f4, Mat::from_rows(f4, {{1, 1, 1}}));
  REQUIRE(code_of([&] { extend_hermitian_multi(quad, 0); }) == errc::condition_violated);
}

TEST_CASE("single-column extension of the hamming code") {
  ConstructionReport r = extend_euclidean_single(hamming(), 1);
  REQUIRE(r.construction == "extend-e-single");
  REQUIRE(r.strict_ok());
  REQUIRE(claim_named(r, "c").computed == json(1));
  REQUIRE(claim_named(r, "k").computed == json(1));
  REQUIRE(claim_named(r, "d_prime").computed == json(3));
  REQUIRE(r.witnesses.at("alpha") == json(1));
  REQUIRE(r.primary->n == 8);
  REQUIRE(r.primary->k == 1);
  REQUIRE(r.primary->c == 1);
}

TEST_CASE("single-column extension caps at rank two") {
  // asking for three ebits from one bordered column: the gram rank sticks at 2
  ConstructionReport r = extend_euclidean_single(hamming(), 3);
  const Claim& c = claim_named(r, "c");
  REQUIRE(c.claimed == json(3));
  REQUIRE(c.computed == json(2));
  REQUIRE_FALSE(c.match);
  REQUIRE_FALSE(r.strict_ok());
  REQUIRE(claim_named(r, "d_prime").computed == json(3));
  REQUIRE(claim_named(r, "d_prime").match);
  REQUIRE(r.primary->n == 8);
  REQUIRE(r.primary->k == 2);
  REQUIRE(r.primary->c == 2);
}

TEST_CASE("single extension admissibility conditions") {
  REQUIRE(code_of([] { extend_euclidean_single(hamming(), 2); }) == errc::condition_violated);
  REQUIRE(code_of([] { extend_euclidean_single(hamming(), 5); }) ==
          errc::too_many_ebits_requested);
  // q = 3: c divisible by 3 is out
  const Field& f3 = Field::get(3, 1);
  LinearCode t = code_from_generator(
      f3, Mat::from_rows(f3, {{1, 0, 2, 2}, {0, 1, 2, 1}, {0, 0, 0, 0}}));
  REQUIRE(code_of([&] { extend_euclidean_single(t, 3); }) == errc::condition_violated);
}

TEST_CASE("hermitian extensions of the GF(9) three-line") {
  ConstructionReport multi = extend_hermitian_multi(gf9_322(), 1);
  REQUIRE(multi.construction == "extend-h-multi");
  REQUIRE(multi.strict_ok());
  REQUIRE(claim_named(multi, "c").computed == json(1));
  REQUIRE(claim_named(multi, "d_prime").computed == json(3));
  REQUIRE(multi.witnesses.at("x") == json::array({json::array({1, 0, 2})}));
  REQUIRE(multi.witnesses.at("alpha") == json::array({4}));
  REQUIRE(multi.primary->q == 3);
  REQUIRE(multi.primary->n == 4);
  REQUIRE(multi.primary->k == 1);
  REQUIRE(multi.primary->c == 1);

  for (int c = 1; c <= 2; ++c) {
    ConstructionReport single = extend_hermitian_single(gf9_322(), c);
    REQUIRE(single.strict_ok());
    REQUIRE(claim_named(single, "c").computed == json(c));
    REQUIRE(claim_named(single, "d_prime").computed == json(2));
    REQUIRE(single.primary->n == 4);
    REQUIRE(single.primary->c == c);
  }
}

TEST_CASE("hermitian extension with zero ebits is the plain derivation") {
  ConstructionReport r = extend_hermitian_multi(gf9_322(), 0);
  REQUIRE(r.strict_ok());
  REQUIRE(r.primary->q == 3);
  REQUIRE(r.primary->n == 3);
  REQUIRE(r.primary->k == 1);
  REQUIRE(r.primary->d == 2);
  REQUIRE(r.primary->c == 0);
}

TEST_CASE("grs mds extension of the epsilon instance") {
  ConstructionReport r = grs_mds_extend(epsilon_instance());
  REQUIRE(r.construction == "grs-mds");
  REQUIRE(r.params.at("normalized") == json(false));
  REQUIRE(r.witnesses.at("alpha") == json(1));
  REQUIRE(r.witnesses.at("beta") == json::array({2, 1, 5, 7, 5, 7, 6, 3}));
  REQUIRE(r.witnesses.at("v") == json::array({1, 2, 7, 5, 3, 6, 4, 8}));
  REQUIRE(r.witnesses.at("x") == json::array({2, 1, 8, 4, 7, 5, 2, 1}));

  REQUIRE(claim_named(r, "extended.d").claimed == json(4));
  REQUIRE(claim_named(r, "extended.d").match);
  REQUIRE(r.code->n == 9);
  REQUIRE(r.code->k == 6);

  // quoted parameters miss; computed values win and are recorded honestly
  REQUIRE(claim_named(r, "primary.k").claimed == json(4));
  REQUIRE(claim_named(r, "primary.k").computed == json(5));
  REQUIRE_FALSE(claim_named(r, "primary.k").match);
  REQUIRE(claim_named(r, "primary.c").claimed == json(1));
  REQUIRE(claim_named(r, "primary.c").computed == json(2));
  REQUIRE(claim_named(r, "primary.d").match);
  REQUIRE(claim_named(r, "dual_derived.d").claimed == json(7));
  REQUIRE(claim_named(r, "dual_derived.d").match);
  REQUIRE(claim_named(r, "dual_derived.c").claimed == json(3));
  REQUIRE(claim_named(r, "dual_derived.c").computed == json(5));
  REQUIRE_FALSE(r.strict_ok());

  REQUIRE(r.primary->q == 3);
  REQUIRE(r.primary->n == 9);
  REQUIRE(r.primary->k == 5);
  REQUIRE(r.primary->d == 4);
  REQUIRE(r.primary->c == 2);
  REQUIRE(r.primary->singleton == Singleton::mds);
  REQUIRE(r.dual_derived->k == 2);
  REQUIRE(r.dual_derived->d == 7);
  REQUIRE(r.dual_derived->c == 5);
  REQUIRE(r.dual_derived->singleton == Singleton::mds);
}

TEST_CASE("grs mds extension normalizes self-orthogonal inputs") {
  GrsSpec low = grs_hermitian_dual(epsilon_instance());
  REQUIRE(2 * low.k < low.n());
  ConstructionReport r = grs_mds_extend(low);
  REQUIRE(r.params.at("normalized") == json(true));
  ConstructionReport direct = grs_mds_extend(epsilon_instance());
  REQUIRE(eaqecc_to_json(*r.primary) == eaqecc_to_json(*direct.primary));
  REQUIRE(eaqecc_to_json(*r.dual_derived) == eaqecc_to_json(*direct.dual_derived));
}

TEST_CASE("grs mds extension rejections") {
  const Field& f5 = Field::get(5, 1);
  GrsSpec plain{&f5, 3, {1, 1, 1, 1}, {0, 1, 2, 3}};
  REQUIRE(code_of([&] { grs_mds_extend(plain); }) == errc::not_quadratic_extension);

  const Field& f9 = Field::get(3, 2);
  GrsSpec ones{&f9, 6, {1, 1, 1, 1, 1, 1, 1, 1}, {1, 2, 4, 8, 6, 3, 7, 5}};
  REQUIRE(code_of([&] { grs_mds_extend(ones); }) == errc::not_dual_containing);
}

TEST_CASE("grs hull family tables") {
  auto hulls = [](const GrsHullFamily& fam) {
    std::vector<int> h;
    for (const auto& row : fam.rows) h.push_back(row.hull);
    return h;
  };
  REQUIRE(hulls(grs_hull_family(3, 2, false)) == std::vector<int>{0, 0, 1, 1, 0});
  REQUIRE(hulls(grs_hull_family(3, 2, true)) == std::vector<int>{0, 0, 1, 2, 1, 0});
  REQUIRE(hulls(grs_hull_family(3, 4, false)) ==
          std::vector<int>{0, 0, 1, 1, 2, 2, 1, 1, 0});
  REQUIRE(hulls(grs_hull_family(3, 4, true)) ==
          std::vector<int>{0, 0, 1, 1, 2, 2, 1, 1, 0, 0});
  REQUIRE(hulls(grs_hull_family(4, 1, false)) == std::vector<int>{0, 0, 1, 0});
  REQUIRE(hulls(grs_hull_family(4, 3, false)) ==
          std::vector<int>{0, 0, 1, 0, 0, 1, 0, 0, 1, 0});
  REQUIRE(hulls(grs_hull_family(4, 3, true)) ==
          std::vector<int>{0, 0, 1, 0, 1, 2, 1, 1, 2, 1, 0});
  REQUIRE(hulls(grs_hull_family(4, 5, false)) ==
          std::vector<int>{0, 0, 1, 2, 2, 3, 4, 4, 3, 4, 4, 3, 2, 2, 1, 0});
  REQUIRE(hulls(grs_hull_family(4, 5, true)) ==
          std::vector<int>{0, 0, 1, 2, 2, 3, 4, 4, 3, 4, 4, 3, 2, 2, 1, 0, 0});
}

TEST_CASE("grs hull family predictions are advisory") {
  GrsHullFamily fam = grs_hull_family(3, 2, false);
  REQUIRE(fam.rows[1].case_id == 1);
  REQUIRE(fam.rows[1].prediction_match);
  REQUIRE(fam.rows[2].case_id == 2);
  REQUIRE(fam.rows[2].predicted_delta == -1);
  REQUIRE(fam.rows[2].actual_delta == 1);
  REQUIRE_FALSE(fam.rows[2].prediction_match);
  REQUIRE(fam.rows[3].prediction_match);
  REQUIRE(fam.rows[4].prediction_match);
}

TEST_CASE("grs hull family eaqecc rows are mds") {
  GrsHullFamily fam = grs_hull_family(3, 2, false);
  const FamilyRow& row = fam.rows[3];
  REQUIRE(row.primary->n == 4);
  REQUIRE(row.primary->k == 2);
  REQUIRE(row.primary->d == 2);
  REQUIRE(row.primary->c == 0);
  REQUIRE(row.primary->singleton == Singleton::mds);
  REQUIRE(row.dual_derived->k == 0);
  REQUIRE(row.dual_derived->d == 4);
  REQUIRE(row.dual_derived->c == 2);
  REQUIRE(row.dual_derived->singleton == Singleton::mds);
  REQUIRE_FALSE(fam.rows[0].primary.has_value());
  REQUIRE_FALSE(fam.rows[4].dual_derived.has_value());

  ConstructionReport rep = grs_hull_report(3, 2, false);
  REQUIRE(rep.strict_ok());
  REQUIRE(rep.family.size() == 5);
}

TEST_CASE("grs hull family rejects bad radii") {
  REQUIRE(code_of([] { grs_hull_family(3, 3, false); }) == errc::invalid_r);
  REQUIRE(code_of([] { grs_hull_family(3, 0, false); }) == errc::invalid_r);
  REQUIRE(code_of([] { grs_hull_family(3, 5, false); }) == errc::invalid_r);
  REQUIRE(code_of([] { grs_hull_family(2, 1, false); }) == errc::invalid_r);
  REQUIRE(code_of([] { grs_hull_family(6, 1, false); }) == errc::invalid_r);
}

TEST_CASE("maximal-entanglement derivation from lcd codes") {
  const Field& f2 = Field::get(2, 1);
  LinearCode rep = code_from_generator(f2, Mat::from_rows(f2, {{1, 1, 1}}));
  ConstructionReport r = lcd_maximal_report(rep);
  REQUIRE(r.strict_ok());
  REQUIRE(r.primary->c == 2);
  REQUIRE(r.primary->maximal);
  REQUIRE(r.dual_derived->c == 1);
  REQUIRE(r.dual_derived->maximal);
  REQUIRE(code_of([] { lcd_maximal(hamming()); }) == errc::not_lcd);
}

TEST_CASE("cyclic mds lcd construction") {
  ConstructionReport q4k2 = cyclic_mds_lcd(4, 2);
  REQUIRE(q4k2.strict_ok());
  REQUIRE(q4k2.witnesses.at("defining_set") == json::array({0, 1, 4}));
  REQUIRE(q4k2.witnesses.at("g") == json::array({1, 2, 2, 1}));
  REQUIRE(q4k2.primary->n == 5);
  REQUIRE(q4k2.primary->k == 2);
  REQUIRE(q4k2.primary->d == 4);
  REQUIRE(q4k2.primary->c == 3);
  REQUIRE(q4k2.primary->maximal);
  REQUIRE(q4k2.primary->singleton == Singleton::mds);

  ConstructionReport q5k3 = cyclic_mds_lcd(5, 3);
  REQUIRE(q5k3.strict_ok());
  REQUIRE(q5k3.witnesses.at("g") == json::array({4, 2, 3, 1}));

  ConstructionReport q8k2 = cyclic_mds_lcd(8, 2);
  REQUIRE(q8k2.strict_ok());
  REQUIRE(q8k2.witnesses.at("g") == json::array({1, 4, 7, 5, 5, 7, 4, 1}));
  REQUIRE(q8k2.primary->d == 8);

  ConstructionReport full = cyclic_mds_lcd(4, 5);
  REQUIRE(full.strict_ok());
  REQUIRE(full.primary->n == 5);
  REQUIRE(full.primary->k == 5);
  REQUIRE(full.primary->d == 1);
  REQUIRE(full.primary->c == 0);
}

TEST_CASE("cyclic mds lcd rejections") {
  REQUIRE(code_of([] { cyclic_mds_lcd(5, 2); }) == errc::parity_not_supported);
  REQUIRE(code_of([] { cyclic_mds_lcd(6, 2); }) == errc::parse_error);
  REQUIRE(code_of([] { cyclic_mds_lcd(5, 0); }) == errc::degenerate_k);
  REQUIRE(code_of([] { cyclic_mds_lcd(5, 7); }) == errc::degenerate_k);
}

TEST_CASE("square witness searches") {
  REQUIRE(find_square_witnesses(Field::get(5, 1), WitnessKind::neg_one_square) ==
          std::vector<int>{2});
  REQUIRE(find_square_witnesses(Field::get(13, 1), WitnessKind::neg_one_square) ==
          std::vector<int>{5});
  REQUIRE(find_square_witnesses(Field::get(3, 2), WitnessKind::neg_one_square) ==
          std::vector<int>{3});
  REQUIRE(find_square_witnesses(Field::get(3, 1), WitnessKind::two_square) ==
          std::vector<int>{1, 1});
  REQUIRE(find_square_witnesses(Field::get(7, 1), WitnessKind::two_square) ==
          std::vector<int>{2, 3});
  REQUIRE(find_square_witnesses(Field::get(11, 1), WitnessKind::two_square) ==
          std::vector<int>{1, 3});
  REQUIRE(find_square_witnesses(Field::get(3, 1), WitnessKind::four_square) ==
          std::vector<int>{0, 0, 1, 1});
  REQUIRE(find_square_witnesses(Field::get(5, 1), WitnessKind::four_square) ==
          std::vector<int>{0, 0, 0, 2});
  REQUIRE(find_square_witnesses(Field::get(7, 1), WitnessKind::four_square) ==
          std::vector<int>{0, 0, 2, 3});
  REQUIRE(find_square_witnesses(Field::get(2, 1), WitnessKind::four_square) ==
          std::vector<int>{0, 0, 0, 1});
  REQUIRE(find_square_witnesses(Field::get(2, 2), WitnessKind::four_square) ==
          std::vector<int>{0, 0, 0, 1});
  REQUIRE(code_of([] {
            find_square_witnesses(Field::get(3, 1), WitnessKind::neg_one_square);
          }) == errc::no_witness);
  REQUIRE(code_of([] {
            find_square_witnesses(Field::get(7, 1), WitnessKind::neg_one_square);
          }) == errc::no_witness);
}

TEST_CASE("two-fold expansion of the hamming code") {
  ConstructionReport r = lcd_s_expand(hamming(), 2);
  REQUIRE(r.construction == "lcd-expand");
  REQUIRE(r.strict_ok());
  REQUIRE(claim_named(r, "N").computed == json(10));
  REQUIRE(claim_named(r, "c").computed == json(6));
  REQUIRE(claim_named(r, "gram_identity").match);
  REQUIRE(claim_named(r, "d_prime").computed == json(3));
  REQUIRE(r.witnesses.at("coefficients") == json::array({1, 1}));
  REQUIRE(r.primary->n == 10);
  REQUIRE(r.primary->k == 4);
  REQUIRE(r.primary->c == 6);
  REQUIRE(r.primary->maximal);
}

TEST_CASE("three-fold expansion over GF(5)") {
  ConstructionReport r = lcd_s_expand(grs42(), 3);
  REQUIRE(r.strict_ok());
  REQUIRE(claim_named(r, "N").computed == json(8));
  REQUIRE(claim_named(r, "c").computed == json(6));
  REQUIRE(claim_named(r, "gram_identity").match);
  REQUIRE(claim_named(r, "d_prime").computed == json(4));
  REQUIRE(r.witnesses.at("coefficients") == json::array({1, 2, 0}));
}

TEST_CASE("four-fold expansion of the tetracode") {
  ConstructionReport r = lcd_s_expand(tetracode(), 4);
  REQUIRE(r.strict_ok());
  REQUIRE(claim_named(r, "N").computed == json(10));
  REQUIRE(claim_named(r, "c").computed == json(8));
  REQUIRE(claim_named(r, "gram_nonsingular").match);
  REQUIRE(claim_named(r, "d_prime").computed == json(5));
  REQUIRE(r.witnesses.at("coefficients") == json::array({1, 1, 1, 0}));
  // gram identity is not claimed above s = 3
  for (const auto& c : r.claims) REQUIRE(c.name != "gram_identity");
}

TEST_CASE("five-fold expansions use the four-square witness") {
  ConstructionReport r3 = lcd_s_expand(tetracode(), 5);
  REQUIRE(r3.strict_ok());
  REQUIRE(r3.witnesses.at("coefficients") == json::array({1, 0, 0, 1, 1}));
  REQUIRE(claim_named(r3, "N").computed == json(12));
  REQUIRE(claim_named(r3, "c").computed == json(10));
  REQUIRE(claim_named(r3, "d_prime").computed == json(5));

  ConstructionReport r5 = lcd_s_expand(grs42(), 5);
  REQUIRE(r5.strict_ok());
  REQUIRE(r5.witnesses.at("coefficients") == json::array({1, 0, 0, 2, 0}));
  REQUIRE(claim_named(r5, "N").computed == json(12));
  REQUIRE(claim_named(r5, "c").computed == json(10));
  REQUIRE(claim_named(r5, "d_prime").computed == json(4));
}

TEST_CASE("expansion congruence requirements") {
  REQUIRE(code_of([] { lcd_s_expand(tetracode(), 2); }) == errc::congruence_mismatch);
  REQUIRE(code_of([] { lcd_s_expand(hamming(), 3); }) == errc::congruence_mismatch);
  REQUIRE(code_of([] { lcd_s_expand(grs42(), 4); }) == errc::congruence_mismatch);
  REQUIRE(code_of([] { lcd_s_expand(hamming(), 6); }) == errc::congruence_mismatch);
}

TEST_CASE("report json shape") {
  ConstructionReport r = lcd_s_expand(hamming(), 2);
  json j = report_to_json(r);
  REQUIRE(j.at("construction") == "lcd-expand");
  REQUIRE(j.contains("input"));
  REQUIRE(j.contains("params"));
  REQUIRE(j.contains("witnesses"));
  REQUIRE(j.contains("output_code"));
  REQUIRE(j.contains("eaqecc"));
  REQUIRE_FALSE(j.contains("dual_derived"));
  REQUIRE_FALSE(j.contains("family"));
  REQUIRE(j.at("claims").is_array());
  for (const auto& c : j.at("claims")) {
    REQUIRE(c.contains("name"));
    REQUIRE(c.contains("claimed"));
    REQUIRE(c.contains("computed"));
    REQUIRE(c.contains("match"));
    REQUIRE(c.size() == 4);
  }
  const json& e = j.at("eaqecc");
  REQUIRE(e.at("rate") == json::array({2, 5}));
  REQUIRE(e.at("net_rate").is_array());
  REQUIRE(e.at("flags").contains("singleton"));
  REQUIRE(e.at("flags").contains("maximal"));
  REQUIRE(e.at("flags").contains("degenerate"));
}
