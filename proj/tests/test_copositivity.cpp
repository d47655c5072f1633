#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "symcop/copositivity.hpp"
#include "symcop/generators.hpp"
#include "symcop/spectral.hpp"
#include "symcop/structure.hpp"

using namespace symcop;
using doctest::Approx;

namespace {

SymTensor sec6() { return zero_diagonal_copositive_example(); }

SymTensor lemma_example() {
  return SymTensorBuilder(3, 2)
      .set({0, 0, 0}, 2)
      .set({1, 1, 1}, 2)
      .set({0, 0, 1}, -1)
      .build();
}

// Random symmetric tensor with entries in [-1, 1] and diagonal lifted by
// `lift`, so that a mix of verdicts shows up.
SymTensor random_mixed(std::mt19937_64 &rng, int k, int n, double lift) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymTensorBuilder b(k, n);
  for_each_canonical_index(k, n, [&](const MultiIndex &m) {
    const bool diag = m.front() == m.back();
    if (diag)
      b.set(m, u(rng) + lift);
    else if (rng() % 2)
      b.set(m, u(rng) * 0.5);
  });
  return b.build();
}

bool is_certified_by_exact_test(const CopositivityCertificate &c) {
  return c.certified();
}

} // namespace

TEST_CASE("diagonal necessary condition") {
  CHECK_FALSE(check_diag_necessary(negate(identity_tensor(3, 3))));
  CHECK(argmin_diagonal(negate(identity_tensor(3, 3))) == 0);
  CHECK(check_diag_necessary(sec6()));
  CHECK(check_diag_necessary(all_ones_tensor(3, 3)));
}

TEST_CASE("diagonal dominance examples") {
  std::mt19937_64 rng(8);
  GeneratorParams p;
  for (int t = 0; t < 20; ++t) {
    p.order = 3 + t % 2;
    p.dim = 2 + t % 3;
    p.density = 0.5;
    CHECK(check_diag_dominance(generate(GeneratorKind::RandomNonneg, p, rng())) !=
          DiagDominance::Neither);
  }
  CHECK(check_diag_dominance(sec6()) == DiagDominance::Neither);
  for (double s : diag_dominance_margins(sec6()))
    CHECK(s == Approx(-2));
  CHECK(check_diag_dominance(identity_tensor(3, 3)) == DiagDominance::Positive);
  CHECK(to_string(DiagDominance::Nonnegative) == "nonnegative");
}

TEST_CASE("essentially nonpositive row-sum test") {
  auto v = check_ess_nonpos(lemma_example());
  REQUIRE(v);
  CHECK(*v == Verdict::CopositiveCertified);
  CHECK_FALSE(check_ess_nonpos(negate(all_ones_tensor(3, 2))));
  auto vi = check_ess_nonpos(identity_tensor(3, 3));
  REQUIRE(vi);
  CHECK(*vi == Verdict::StrictlyCopositiveCertified);
  CHECK_FALSE(check_ess_nonpos(sec6()));
}

TEST_CASE("nmin_search examples") {
  auto s = nmin_search(sec6());
  CHECK(std::abs(s.value) <= 1e-6);
  CHECK(knorm_pow(s.argmin, 3) == Approx(1));
  CHECK(nmin_search(negate(all_ones_tensor(3, 2))).value ==
        Approx(-4).epsilon(1e-6));
  CHECK(nmin_search(identity_tensor(3, 3)).value == Approx(1).epsilon(1e-12));
}

TEST_CASE("grid oracle examples") {
  for (int r : {1, 3, 10})
    CHECK(nmin_grid_oracle(identity_tensor(3, 3), r).value == Approx(1));
  CHECK(nmin_grid_oracle(negate(all_ones_tensor(3, 2)), 20).value ==
        Approx(-4).epsilon(1e-12));
  CHECK(nmin_grid_oracle(sec6(), 20).value == Approx(0).epsilon(1e-12));
  CHECK_THROWS(nmin_grid_oracle(identity_tensor(3, kMaxGridOracleDim + 1), 3));
}

TEST_CASE("grid enumeration matches the composition count") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 2; k <= 4; ++k)
      for (int res : {1, 2, 5, 9}) {
        std::vector<Vec> pts;
        for_each_grid_point(n, k, res, [&](const Vec &x) { pts.push_back(x); });
        const auto ref = oracle::grid_points(n, k, res);
        // C(res + n - 1, n - 1)
        double count = 1;
        for (int j = 1; j < n; ++j)
          count = count * (res + j) / j;
        REQUIRE(pts.size() == ref.size());
        CHECK(static_cast<double>(pts.size()) == count);
        for (std::size_t p = 0; p < pts.size(); ++p)
          for (int i = 0; i < n; ++i)
            CHECK(pts[p][i] == Approx(ref[p][i]).epsilon(1e-14));
      }
}

TEST_CASE("certify examples") {
  auto cj = certify(all_ones_tensor(3, 3));
  CHECK(cj.verdict == Verdict::StrictlyCopositiveCertified);
  CHECK(cj.reason == CertificateReason::DiagDominancePos);

  auto ci = certify(negate(identity_tensor(3, 3)));
  CHECK(ci.verdict == Verdict::NotCopositive);
  REQUIRE(ci.witness);
  CHECK(*ci.witness == unit_vector(3, 0));

  auto cs = certify(sec6());
  CHECK(cs.verdict == Verdict::NumericallyCopositive);
  REQUIRE(cs.nmin_estimate);
  CHECK(*cs.nmin_estimate >= -1e-9);
  CHECK(*cs.nmin_estimate <= 1e-6);

  auto cl = certify(lemma_example());
  CHECK(cl.verdict == Verdict::CopositiveCertified);
  CHECK(to_string(cs.verdict) == "numerically-copositive");
  CHECK(to_string(CertificateReason::DiagNecessary) == "diag_necessary");
}

TEST_CASE("certificate soundness on random instances") {
  std::mt19937_64 rng(4242);
  SearchConfig cfg;
  cfg.restarts = 10;
  int refuted = 0, certified = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    const double lift = static_cast<double>(rng() % 4) * 0.5;
    const auto a = random_mixed(rng, k, n, lift);
    const auto c = certify(a, cfg);
    if (c.verdict == Verdict::NotCopositive) {
      ++refuted;
      REQUIRE(c.witness);
      for (double w : *c.witness)
        CHECK(w >= 0);
      CHECK(knorm_pow(*c.witness, k) == Approx(1).epsilon(1e-12));
      CHECK(eval_form(a, *c.witness) < 0);
    }
    if (is_certified_by_exact_test(c)) {
      ++certified;
      const double g = nmin_grid_oracle(a, 15).value;
      CHECK(g >= -1e-9);
      if (c.verdict == Verdict::StrictlyCopositiveCertified)
        CHECK(g > 0);
    }

    // Positive scaling keeps certified and refuted verdicts.
    const double alpha = 0.25 + static_cast<double>(rng() % 8);
    const auto cs = certify(scale(a, alpha), cfg);
    if (c.certified() || c.verdict == Verdict::NotCopositive)
      CHECK(cs.verdict == c.verdict);
  }
  CHECK(refuted > 0);
  CHECK(certified > 0);
}

TEST_CASE("monotonicity and sum closure on the grid") {
  std::mt19937_64 rng(17);
  int pairs = 0;
  for (int trial = 0; trial < 200 && pairs < 40; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto a = random_mixed(rng, k, n, 1.5);
    if (!certify(a).certified())
      continue;
    ++pairs;
    // B = A plus a nonnegative tensor, so A <= B.
    GeneratorParams p;
    p.order = k;
    p.dim = n;
    p.density = 0.5;
    const auto b = add(a, generate(GeneratorKind::RandomNonneg, p, rng()));
    REQUIRE(compare_leq(a, b));
    const auto da = oracle::densify(a);
    const auto db = oracle::densify(b);
    for (const auto &x : oracle::grid_points(n, k, 8)) {
      CHECK(oracle::eval(db, x) >= oracle::eval(da, x) - 1e-12);
      CHECK(eval_form(add(a, b), x) >= -1e-12);
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("H+ eigenvalue sign check") {
  const Vec u = normalize_knorm(Vec{1, 1}, 3);
  CHECK(check_hplus_sign(all_ones_tensor(3, 2), 4.0, u));
  CHECK(check_hplus_sign(identity_tensor(3, 3), 1.0, unit_vector(3, 0)));
  const auto lm = lambda_min_ess_nonpos(lemma_example());
  CHECK(check_hplus_sign(lemma_example(), lm.lambda, lm.eigenvector));
  CHECK_THROWS(check_hplus_sign(all_ones_tensor(3, 2), 3.0, u));
  CHECK_THROWS(check_hplus_sign(all_ones_tensor(3, 2), 4.0, Vec{-1, 0}));
}

TEST_CASE("zero-set gradient check") {
  CHECK(check_zero_set_gradient(sec6(), unit_vector(3, 0)));
  const Vec g = symcop::apply(sec6(), unit_vector(3, 0));
  CHECK(g == Vec{0, 0, 2});
  CHECK_THROWS(check_zero_set_gradient(lemma_example(), unit_vector(2, 0)));
}

TEST_CASE("dual pairing") {
  CHECK(dual_pairing(all_ones_tensor(3, 2), {Vec{1, 0}, Vec{0, 1}}) ==
        Approx(2));
  CHECK(dual_pairing_check(all_ones_tensor(3, 2), {Vec{1, 0}, Vec{0, 1}}));
  CHECK(dual_pairing(sec6(), {Vec{1, 1, 1}}) == Approx(6));
  CHECK(dual_pairing_check(sec6(), {Vec{1, 1, 1}}));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> f;
    double expect = 0;
    for (int j = 0; j < 3; ++j) {
      Vec y = oracle::random_nonneg_vec(rng, 3);
      y[0] += 0.1;
      for (double v : y)
        expect += std::pow(v, 4);
      f.push_back(y);
    }
    CHECK(dual_pairing(identity_tensor(4, 3), f) == Approx(expect));
  }
}
