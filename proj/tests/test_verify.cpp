// Copyright 2026 The oddrank authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oddrank/verify.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace oddrank;

namespace {

LocalOperator<ComplexRational> rop(int a, int b, int c, int d) {
  return LocalOperator<ComplexRational>(ComplexRational(a), ComplexRational(b),
                                        ComplexRational(c), ComplexRational(d));
}

SloccMap<ComplexRational> rational_map_3() {
  // Integer-entry invertible operators, one with a Gaussian-integer entry.
  SloccMap<ComplexRational> map;
  map.push_back(rop(1, 1, 0, 1));
  map.push_back(rop(2, 0, 0, 1));
  map.push_back(LocalOperator<ComplexRational>(
      ComplexRational(1), ComplexRational(rational_t(0), rational_t(1)),
      ComplexRational(0), ComplexRational(1)));
  return map;
}

}  // namespace

TEST_CASE("random_local_operator honors its conditioning bounds") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 200; ++t) {
    const auto op = random_local_operator(rng);
    const double abs_det = std::abs(op.determinant());
    CHECK(abs_det >= 0.1);
    const auto sv = singular_values_2x2(op.matrix());
    CHECK(sv.major / sv.minor <= 20.0);
  }
}

TEST_CASE("seeded draws replay identically") {
  std::mt19937_64 a(7), b(7);
  const auto opa = random_local_operator(a);
  const auto opb = random_local_operator(b);
  CHECK((opa.matrix() - opb.matrix()).norm() == 0.0);
  const auto sa = random_state(5, a);
  const auto sb = random_state(5, b);
  CHECK(oddrank::testing::bit_identical(sa, sb));
}

TEST_CASE("covariance residual") {
  SUBCASE("identity map gives exactly zero") {
    std::mt19937_64 rng(1);
    const auto s = random_state(3, rng);
    for (int i = 1; i <= 3; ++i) {
      CHECK(covariance_residual(s, identity_map<complex_t>(3), i) == 0.0);
    }
  }
  SUBCASE("GHZ3 with a diagonal factor on qubit 2, exactly") {
    const auto ghz = ghz_state<ComplexRational>(3);
    SloccMap<ComplexRational> map = identity_map<ComplexRational>(3);
    map[1] = rop(2, 0, 0, 1);
    CHECK(covariance_residual(ghz, map, 1) == 0.0);
    // Both sides are T scaled by det = 2.
    const auto mapped = apply_slocc(ghz, map);
    CHECK(coefficient_matrix(mapped, 1).m(0, 1) == ComplexRational(2));
  }
  SUBCASE("random five-qubit trials stay under the gate") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
      const auto s = random_state(5, rng);
      const auto map = random_slocc_map(5, rng);
      for (int i = 1; i <= 5; ++i) {
        CHECK(covariance_residual(s, map, i) < 1e-8);
      }
    }
  }
  SUBCASE("rational map: exact zero") {
    const auto s = table5_representative<ComplexRational>(2, 1);
    SloccMap<ComplexRational> map;
    map.push_back(rop(1, 2, 0, 1));
    map.push_back(rop(1, 0, 3, 1));
    map.push_back(rop(0, 1, 1, 0));
    map.push_back(rop(2, 1, 1, 1));
    map.push_back(LocalOperator<ComplexRational>(
        ComplexRational(rational_t(1), rational_t(1)), ComplexRational(0),
        ComplexRational(1), ComplexRational(1)));
    for (int i = 1; i <= 5; ++i) {
      CHECK(covariance_residual(s, map, i) == 0.0);
      CHECK(det_relation_residual(s, map, i) == 0.0);
    }
  }
  SUBCASE("map length mismatch") {
    const auto s = ghz_state<complex_t>(3);
    CHECK_THROWS_AS(covariance_residual(s, identity_map<complex_t>(5), 1),
                    std::invalid_argument);
  }
}

TEST_CASE("determinant relation residual") {
  SUBCASE("identity map") {
    std::mt19937_64 rng(2);
    const auto s = random_state(3, rng);
    for (int i = 1; i <= 3; ++i) {
      CHECK(det_relation_residual(s, identity_map<complex_t>(3), i) == 0.0);
    }
  }
  SUBCASE("random trials on n = 3 and 5") {
    std::mt19937_64 rng(3);
    for (int n : {3, 5}) {
      for (int t = 0; t < 30; ++t) {
        const auto s = random_state(n, rng);
        const auto map = random_slocc_map(n, rng);
        for (int i = 1; i <= n; ++i) {
          CHECK(det_relation_residual(s, map, i) < 1e-8);
        }
      }
    }
  }
  SUBCASE("scaling one operator by c scales both sides by c^4") {
    std::mt19937_64 rng(4);
    const auto s = random_state(3, rng);
    auto map = random_slocc_map(3, rng);
    const complex_t c(0.75, 1.25);

    const complex_t det_before =
        coefficient_matrix(apply_slocc(s, map), 1).determinant();
    map[1] = LocalOperator<complex_t>((map[1].matrix() * c).eval());
    const complex_t det_after =
        coefficient_matrix(apply_slocc(s, map), 1).determinant();

    const complex_t c4 = c * c * c * c;
    CHECK(std::abs(det_after - c4 * det_before) <
          1e-10 * std::abs(det_after));
    CHECK(det_relation_residual(s, map, 1) < 1e-8);
  }
}

TEST_CASE("lemma 1: the qubit-1 closed forms") {
  SUBCASE("identity operator reduces to the original triple") {
    std::mt19937_64 rng(5);
    const auto s = random_state(5, rng);
    CHECK(lemma1_check(s, LocalOperator<complex_t>::identity()) == 0.0);
  }
  SUBCASE("GHZ3 with the shear (1 1; 0 1), hand values") {
    const auto ghz = ghz_state<ComplexRational>(3);
    const auto shear = rop(1, 1, 0, 1);
    CHECK(lemma1_check(ghz, shear) == 0.0);
    // T' = 1, P' = 2, Q' = 0 from the closed forms with T = 1, P = Q = 0.
    const auto after = compute_tpq(apply_local_operator(ghz, 1, shear));
    CHECK(after.t == ComplexRational(1));
    CHECK(after.p == ComplexRational(2));
    CHECK(after.q == ComplexRational(0));
  }
  SUBCASE("random states and operators, n in {3,5,7}") {
    std::mt19937_64 rng(6);
    for (int n : {3, 5, 7}) {
      for (int t = 0; t < 60; ++t) {
        const auto s = random_state(n, rng);
        CHECK(lemma1_check(s, random_local_operator(rng)) < 1e-10);
      }
    }
  }
}

TEST_CASE("lemma 2: operators beyond qubit 1 multiply the triple by det") {
  SUBCASE("identity operator") {
    std::mt19937_64 rng(8);
    const auto s = random_state(3, rng);
    CHECK(lemma2_check(s, 2, LocalOperator<complex_t>::identity()) == 0.0);
  }
  SUBCASE("GHZ3 with diag(2,1) on qubit 2, exactly") {
    const auto ghz = ghz_state<ComplexRational>(3);
    CHECK(lemma2_check(ghz, 2, rop(2, 0, 0, 1)) == 0.0);
    const auto after = compute_tpq(apply_local_operator(ghz, 2, rop(2, 0, 0, 1)));
    CHECK(after.t == ComplexRational(2));  // T' = T det = 2
  }
  SUBCASE("k = 1 is rejected") {
    const auto s = ghz_state<complex_t>(3);
    CHECK_THROWS_AS(lemma2_check(s, 1, LocalOperator<complex_t>::identity()),
                    std::out_of_range);
  }
  SUBCASE("random states, every k, n in {3,5,7}") {
    std::mt19937_64 rng(9);
    for (int n : {3, 5, 7}) {
      for (int t = 0; t < 40; ++t) {
        const auto s = random_state(n, rng);
        for (int k = 2; k <= n; ++k) {
          CHECK(lemma2_check(s, k, random_local_operator(rng)) < 1e-10);
        }
      }
    }
  }
  SUBCASE("exact spot checks with the rational map") {
    const auto states = {ghz_state<ComplexRational>(3),
                         w_state<ComplexRational>(3),
                         three_qubit_class_state<ComplexRational>(
                             ThreeQubitClass::kCAb)};
    const auto map = rational_map_3();
    for (const auto& s : states) {
      CHECK(lemma1_check(s, map[0]) == 0.0);
      for (int k = 2; k <= 3; ++k) {
        CHECK(lemma2_check(s, k, map[static_cast<std::size_t>(k - 1)]) == 0.0);
      }
    }
  }
}

TEST_CASE("covariance suite") {
  SUBCASE("zero trials gives an empty report") {
    SuiteConfig config;
    config.trials = 0;
    const auto rep = run_covariance_suite(config);
    CHECK(rep.trials == 0);
    CHECK(rep.max_matrix_residual == 0.0);
    CHECK(rep.max_det_residual == 0.0);
    CHECK(rep.rank_mismatches == 0);
  }
  SUBCASE("a small seeded run passes and replays identically") {
    SuiteConfig config;
    config.trials = 25;
    config.ns = {3, 5};
    config.seed = 42;
    const auto a = run_covariance_suite(config);
    const auto b = run_covariance_suite(config);
    CHECK(a.trials == b.trials);
    CHECK(a.max_matrix_residual == b.max_matrix_residual);
    CHECK(a.max_det_residual == b.max_det_residual);
    CHECK(a.rank_mismatches == 0);
    CHECK(a.max_matrix_residual < 1e-8);
    CHECK(a.max_det_residual < 1e-8);
  }
  SUBCASE("the corrupted-formula hook is detected") {
    SuiteConfig config;
    config.trials = 5;
    config.ns = {3};
    config.corrupt_covariance = true;
    const auto rep = run_covariance_suite(config);
    CHECK(rep.max_matrix_residual > 1e-8);
  }
  SUBCASE("even n is rejected") {
    SuiteConfig config;
    config.ns = {4};
    CHECK_THROWS_AS(run_covariance_suite(config), std::invalid_argument);
  }
}

TEST_CASE("lemma and oracle suites replay deterministically") {
  SuiteConfig config;
  config.trials = 20;
  config.ns = {3, 5};
  const auto l1 = run_lemma_suite(config);
  const auto l2 = run_lemma_suite(config);
  CHECK(l1.max_lemma1 == l2.max_lemma1);
  CHECK(l1.max_lemma2 == l2.max_lemma2);
  CHECK(l1.max_lemma1 < 1e-10);
  CHECK(l1.max_lemma2 < 1e-10);

  const auto o1 = run_alt_oracle_suite(config);
  const auto o2 = run_alt_oracle_suite(config);
  CHECK(o1.max_relative == o2.max_relative);
  CHECK(o1.max_relative < 1e-12);
  CHECK(o1.trials == 40);
}

TEST_CASE("rank invariance under random SLOCC maps") {
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 30; ++t) {
    const auto s = random_state(5, rng);
    const auto map = random_slocc_map(5, rng);
    const auto mapped = apply_slocc(s, map);
    for (int i = 1; i <= 5; ++i) {
      const Rank before = rank_wrt_qubit(s, i);
      const Rank after = rank_wrt_qubit(mapped, i);
      if (!before.boundary && !after.boundary) {
        CHECK(before.value == after.value);
      }
    }
  }
}
