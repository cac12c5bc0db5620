#include <doctest.h>

#include <map>
#include <vector>

#include "sdw/bridge.hpp"
#include "sdw/catalog.hpp"
#include "sdw/gleason.hpp"
#include "sdw/shadow.hpp"

using namespace sdw;

namespace {

mpq_class mass(const std::vector<mpq_class>& v) {
  mpq_class s = 0;
  for (const mpq_class& x : v) s += x;
  return s;
}

void check_solution_internals(const GleasonSolution& gs) {
  // Recombine the solved coefficients through the independently computed
  // spanning polynomials; the result must reproduce both enumerators.
  const int n2 = gs.n / 2;
  std::vector<mpq_class> code(static_cast<std::size_t>(n2) + 1, 0);
  std::vector<mpq_class> shadow(static_cast<std::size_t>(n2) + 1, 0);
  for (std::size_t j = 0; j < gs.a.size(); ++j) {
    GleasonBasisTerm term = basis_term(gs.n, static_cast<int>(j), n2);
    for (int t = 0; t <= n2; ++t) {
      code[static_cast<std::size_t>(t)] +=
          gs.a[j] * term.code[static_cast<std::size_t>(t)];
      shadow[static_cast<std::size_t>(t)] +=
          gs.a[j] * term.shadow[static_cast<std::size_t>(t)];
    }
  }
  for (int i = 0; i <= gs.n; ++i) {
    mpq_class want_a = (i % 2 == 0) ? code[static_cast<std::size_t>(i / 2)] : 0;
    mpq_class want_b = (i % 2 == 0) ? shadow[static_cast<std::size_t>(i / 2)] : 0;
    CHECK(gs.code_we[static_cast<std::size_t>(i)] == want_a);
    CHECK(gs.shadow_we[static_cast<std::size_t>(i)] == want_b);
  }
  CHECK(mass(gs.code_we) == mpq_class(mpz_class(1) << n2));
  CHECK(mass(gs.shadow_we) == mpq_class(mpz_class(1) << n2));

  // Fixing the enumerator under the dual transform closes the loop.
  WeightEnum we = to_weight_enum(gs.code_we, gs.n);
  CHECK(macwilliams(we, n2) == we);
}

void check_published_series(const GleasonSolution& gs,
                        const std::map<int, mpz_class>& code,
                        const std::map<int, mpz_class>& shadow) {
  WeightEnum a = to_weight_enum(gs.code_we, gs.n);
  WeightEnum b = to_weight_enum(gs.shadow_we, gs.n);
  for (const auto& [i, v] : code) {
    CHECK(a.coeffs[static_cast<std::size_t>(i)] == v);
    CHECK(a.coeffs[static_cast<std::size_t>(gs.n - i)] == v);
  }
  for (const auto& [i, v] : shadow) {
    CHECK(b.coeffs[static_cast<std::size_t>(i)] == v);
    CHECK(b.coeffs[static_cast<std::size_t>(gs.n - i)] == v);
  }
}

}  // namespace

TEST_SUITE("gleason") {

TEST_CASE("family lengths") {
  CHECK(family_length(Family::n24k8, 1) == 32);
  CHECK(family_length(Family::n24k8, 3) == 80);
  CHECK(family_length(Family::n24k16, 1) == 40);
  CHECK(family_length(Family::n24k16, 3) == 88);
  CHECK_THROWS_AS(static_cast<void>(family_length(Family::n24k8, 0)), error);
}

TEST_CASE("spanning polynomials at length 8") {
  GleasonBasisTerm t0 = basis_term(8, 0, 4);
  CHECK(t0.code == std::vector<mpz_class>{1, 4, 6, 4, 1});
  CHECK(t0.shadow == std::vector<mpq_class>{0, 0, 16, 0, 0});

  GleasonBasisTerm t1 = basis_term(8, 1, 4);
  CHECK(t1.code == std::vector<mpz_class>{0, 1, -2, 1, 0});
  CHECK(t1.shadow ==
        std::vector<mpq_class>{{-1, 4}, 0, {1, 2}, 0, {-1, 4}});
}

TEST_CASE("k=1 solution matches a constructed code") {
  GleasonSolution gs = solve_s_extremal(Family::n24k8, 1);
  REQUIRE(gs.unique);
  CHECK(gs.n == 32);
  check_solution_internals(gs);

  LinearCode d = reed_muller(2, 5);
  SyndromeTable t = build_syndrome_table(d, {}, true);
  BitVec v = min_weight_coset_members(t, 6)[0].second;
  LinearCode c = from_doubly_even(d, v);

  CHECK(weight_enumerator(c) == to_weight_enum(gs.code_we, 32));
  CHECK(shadow_weight_enumerator(decompose(c)) == to_weight_enum(gs.shadow_we, 32));
  CHECK(neighbor_weight_enum(gs) == weight_enumerator(d));
  CHECK(coset_weight_enumerator(gs) == coset_weight_enumerator(d, v).we);
  CHECK(neighbor_weight_enum(gs).coeffs[8] == 620);
}

TEST_CASE("k=2 series") {
  GleasonSolution gs = solve_s_extremal(Family::n24k8, 2);
  REQUIRE(gs.unique);
  CHECK(gs.n == 56);
  check_solution_internals(gs);
  check_published_series(gs,
                     {{0, 1},
                      {10, 308},
                      {12, 3990},
                      {14, 42900},
                      {16, 311850},
                      {18, 1583120},
                      {20, 5847688},
                      {22, 15961680},
                      {24, 32458965},
                      {26, 49520856},
                      {28, 56972740}},
                     {{12, 8400},
                      {16, 620928},
                      {20, 11704000},
                      {24, 64901760},
                      {28, 113965280}});
  for (int i : {2, 4, 6, 8})
    CHECK(gs.code_we[static_cast<std::size_t>(i)] == 0);
}

TEST_CASE("k=3 series") {
  GleasonSolution gs = solve_s_extremal(Family::n24k8, 3);
  REQUIRE(gs.unique);
  CHECK(gs.n == 80);
  check_solution_internals(gs);
  check_published_series(gs,
                     {{0, 1},
                      {14, 3200},
                      {16, 47645},
                      {18, 640640},
                      {20, 6452992},
                      {22, 49304320},
                      {24, 294979360},
                      {26, 1398270720},
                      {28, mpz_class{"5294263040"}},
                      {30, mpz_class{"16137190784"}},
                      {32, mpz_class{"39853463650"}},
                      {34, mpz_class{"80135036800"}},
                      {36, mpz_class{"131652451840"}},
                      {38, mpz_class{"177157460480"}},
                      {40, mpz_class{"195552496832"}}},
                     {{16, 99840},
                      {20, 12859392},
                      {24, 590187520},
                      {28, mpz_class{"10587822080"}},
                      {32, mpz_class{"79708428800"}},
                      {36, mpz_class{"263302574080"}},
                      {40, mpz_class{"391107684352"}}});
}

TEST_CASE("deep hole coset enumerator at length 80") {
  GleasonSolution gs = solve_s_extremal(Family::n24k8, 3);
  WeightEnum cw = coset_weight_enumerator(gs);
  const std::map<int, mpz_class> expected = {
      {14, 3200},
      {16, 49920},
      {18, 640640},
      {20, 6429696},
      {22, 49304320},
      {24, 295093760},
      {26, mpz_class{"1398270720"}},
      {28, mpz_class{"5293911040"}},
      {30, mpz_class{"16137190784"}},
      {32, mpz_class{"39854214400"}},
      {34, mpz_class{"80135036800"}},
      {36, mpz_class{"131651287040"}},
      {38, mpz_class{"177157460480"}},
      {40, mpz_class{"195553842176"}}};
  mpz_class total = 0;
  for (const auto& [i, v] : expected) {
    CHECK(cw.coeffs[static_cast<std::size_t>(i)] == v);
    if (i < 40) CHECK(cw.coeffs[static_cast<std::size_t>(80 - i)] == v);
  }
  for (const mpz_class& c : cw.coeffs) total += c;
  CHECK(total == mpz_class(1) << 40);
  for (int i = 0; i < 14; ++i) CHECK(cw.coeffs[static_cast<std::size_t>(i)] == 0);

  CHECK(neighbor_weight_enum(gs).coeffs[16] == 97565);
}

TEST_CASE("second family solves and balances") {
  for (int k = 1; k <= 4; ++k) {
    GleasonSolution gs = solve_s_extremal(Family::n24k16, k);
    CHECK(gs.unique);
    CHECK(gs.n == 24 * k + 16);
    CHECK(mass(gs.code_we) == mpq_class(mpz_class(1) << (gs.n / 2)));
    CHECK(mass(gs.shadow_we) == mpq_class(mpz_class(1) << (gs.n / 2)));
    for (int i = 1; i < 4 * k + 4; ++i)
      CHECK(gs.code_we[static_cast<std::size_t>(i)] == 0);
  }
  GleasonSolution gs = solve_s_extremal(Family::n24k16, 1);
  CHECK_THROWS_AS(static_cast<void>(coset_weight_enumerator(gs)), error);
  try {
    static_cast<void>(coset_weight_enumerator(gs));
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
}

TEST_CASE("scan rows") {
  std::vector<ScanRow> rows = scan_family(Family::n24k8, 1, 6);
  REQUIRE(rows.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(rows[static_cast<std::size_t>(i)].k == i + 1);
    CHECK(rows[static_cast<std::size_t>(i)].n == 24 * (i + 1) + 8);
    CHECK(rows[static_cast<std::size_t>(i)].unique);
    CHECK(rows[static_cast<std::size_t>(i)].consistent);
    CHECK(rows[static_cast<std::size_t>(i)].code_min_sign == 0);
    CHECK(rows[static_cast<std::size_t>(i)].shadow_min_sign == 0);
    CHECK(rows[static_cast<std::size_t>(i)].first_negative_weight == -1);
  }

  std::vector<ScanRow> par = scan_family(Family::n24k8, 1, 6, 3);
  REQUIRE(par.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(par[i].k == rows[i].k);
    CHECK(par[i].unique == rows[i].unique);
    CHECK(par[i].code_min_sign == rows[i].code_min_sign);
    CHECK(par[i].shadow_min_sign == rows[i].shadow_min_sign);
    CHECK(par[i].first_negative_weight == rows[i].first_negative_weight);
  }
}

TEST_CASE("minimum coefficient signs") {
  MinCoefficients mc = min_coefficient(solve_s_extremal(Family::n24k8, 1));
  CHECK(mc.code_min == 0);
  CHECK(mc.shadow_min == 0);
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(static_cast<void>(solve_s_extremal(Family::n24k8, 0)), error);
  CHECK_THROWS_AS(static_cast<void>(solve_s_extremal(Family::n24k16, -2)), error);
}

}  // TEST_SUITE
