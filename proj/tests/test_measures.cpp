// Copyright 2026 The qnb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <numbers>

#include "qnb/indexing.hpp"
#include "qnb/measures.hpp"
#include "qnb/schmidt.hpp"
#include "qnb/states.hpp"

using namespace qnb;

namespace {

OptimizerConfig test_config(std::uint64_t seed, std::size_t certify = 20000) {
  OptimizerConfig cfg;
  cfg.seed = seed;
  cfg.certify_samples = certify;
  return cfg;
}

std::vector<double> amplitudes_of(const PureState& psi) {
  const RealVector& s = schmidt(psi, 1).coefficients;
  return {s.data(), s.data() + s.size()};
}

DensityMatrix rotate_locally(const DensityMatrix& rho, std::uint64_t seed) {
  auto rng = seeded_rng(seed);
  const int da = rho.dims()[0], db = rho.dims()[1];
  const ComplexMatrix ua = haar_unitary(da, rng), ub = haar_unitary(db, rng);
  ComplexMatrix u(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) u.block(i * db, j * db, db, db) = ua(i, j) * ub;
  return DensityMatrix(u * rho.matrix() * u.adjoint(), rho.dims());
}

}  // namespace

TEST_CASE("purity of named states") {
  for (int m : {2, 3}) {
    const DensityMatrix mm =
        make_density(ComplexMatrix::Identity(m * m, m * m) / (m * m), {m, m});
    CHECK(purity(mm) == doctest::Approx(1.0 / (m * m)).epsilon(1e-12));
  }
  CHECK(purity(random_pure({2, 2}, 3).to_density()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(isotropic(2, 0.25)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("fidelity_alt basics") {
  const DensityMatrix rho = random_density(4, 3, 5);
  CHECK(fidelity_alt(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  CHECK(fidelity_alt(make_density(p0, {2}), make_density(p1, {2})) ==
        doctest::Approx(0.0).epsilon(1e-15));

  const DensityMatrix half = make_density(ComplexMatrix::Identity(2, 2) / 2.0, {2});
  CHECK(fidelity_alt(half, make_density(p0, {2})) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(fidelity_alt(half, rho), DimensionError);
}

TEST_CASE("fast overlap equals the apply_measurement reference") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const DensityMatrix a =
        random_density(4, 1 + static_cast<int>(s % 4), mix_seed(51, s)).regrouped({2, 2});
    const DensityMatrix b =
        random_density(4, 1 + static_cast<int>((s + 1) % 4), mix_seed(52, s)).regrouped({2, 2});
    const DensityMatrix joint = kron(a, b);
    const int targets[] = {1, 2};

    auto rng = seeded_rng(mix_seed(53, s));
    ComplexMatrix basis = haar_unitary(4, rng);
    const ProjectiveMeasurement m(std::vector<int>{2, 2}, std::move(basis));

    const OverlapObjective fast(joint, targets);
    CHECK(fast.overlap(m) ==
          doctest::Approx(measurement_overlap(joint, m, targets)).epsilon(1e-11));
    CHECK(fast.state_purity() == doctest::Approx(purity(joint)).epsilon(1e-12));
  }
}

TEST_CASE("hs_min examples") {
  const DensityMatrix prod = kron(random_density(2, 2, 7), random_density(2, 2, 8));
  CHECK(hs_min(prod, 0, test_config(1)).value < 1e-10);

  const MeasureResult bell = hs_min(bell_state(2).to_density(), 0, test_config(2));
  CHECK(bell.value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(bell.report.block_dims == std::vector<int>{2});

  // ancilla scaling N(rho^{a:bc}) = N(rho^{ab}) Tr(rho_c^2)
  const DensityMatrix rho_ab = random_density(4, 2, 9).regrouped({2, 2});
  const DensityMatrix rho_c = random_density(2, 2, 10);
  const DensityMatrix ext = kron(rho_ab, rho_c).regrouped({2, 4});
  const double lhs = hs_min(ext, 0, test_config(3)).value;
  const double rhs = hs_min(rho_ab, 0, test_config(4)).value * purity(rho_c);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("geometric discord (restricted) examples") {
  const DensityMatrix prod = kron(random_density(2, 2, 11), random_density(2, 2, 12));
  CHECK(geometric_discord_restricted(prod, 0, test_config(5)).value < 1e-10);

  // nondegenerate marginal: no freedom, so min and max coincide
  const DensityMatrix rho = random_density(4, 3, 13).regrouped({2, 2});
  const double lo = geometric_discord_restricted(rho, 0, test_config(6)).value;
  const double hi = hs_min(rho, 0, test_config(7)).value;
  CHECK(lo == doctest::Approx(hi).epsilon(1e-12));

  CHECK(geometric_discord_restricted(bell_state(2).to_density(), 0, test_config(8)).value ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("f_min examples") {
  // classical-quantum state measured on its nondegenerate classical side
  const std::vector<DensityMatrix> parts = {random_density(2, 2, 14), random_density(2, 2, 15)};
  const double probs[] = {0.7, 0.3};
  const DensityMatrix cq = classical_quantum(probs, parts, ClassicalSide::left);
  CHECK(f_min(cq, 0, test_config(9)).value < 1e-10);

  const MeasureResult bell = f_min(bell_state(2).to_density(), 0, test_config(10));
  CHECK(bell.value == doctest::Approx(0.5).epsilon(1e-9));

  // the ancilla leaves f_min alone
  const DensityMatrix rho_ab = random_density(4, 2, 16).regrouped({2, 2});
  const DensityMatrix rho_c = random_density(2, 2, 17);
  const DensityMatrix ext = kron(rho_ab, rho_c).regrouped({2, 4});
  CHECK(f_min(ext, 0, test_config(11)).value ==
        doctest::Approx(f_min(rho_ab, 0, test_config(12)).value).epsilon(1e-8));
}

TEST_CASE("nonbilocal worked examples") {
  const DensityMatrix bell = bell_state(2).to_density();
  ComplexVector a00 = ComplexVector::Zero(4);
  a00(0) = 1.0;
  const DensityMatrix p00 = PureState(a00, {2, 2}).to_density();

  const MeasureResult ex1 = nonbilocal(p00, bell, test_config(20));
  CHECK(ex1.value == doctest::Approx(0.5).epsilon(1e-9));

  const MeasureResult ex2 = nonbilocal(bell, bell, test_config(21));
  CHECK(ex2.value == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(ex2.report.block_dims == std::vector<int>{4});

  // product times product with nondegenerate inner marginals
  const DensityMatrix prod_ab = kron(random_density(2, 2, 22), random_density(2, 2, 23));
  const DensityMatrix prod_cd = kron(random_density(2, 2, 24), random_density(2, 2, 25));
  CHECK(nonbilocal(prod_ab, prod_cd, test_config(26)).value < 1e-10);
}

TEST_CASE("closed forms") {
  const std::vector<double> point = {1.0, 0.0};
  const std::vector<double> bell2 = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  const std::vector<double> single = {1.0};

  CHECK(nonbilocal_pure_closed_form(point, bell2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(nonbilocal_pure_closed_form(bell2, bell2) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(nonbilocal_pure_closed_form(single, single) == doctest::Approx(0.0).epsilon(1e-15));

  CHECK(f_min_pure_closed_form(bell2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f_min_pure_closed_form(point) == doctest::Approx(0.0).epsilon(1e-15));
  for (int m : {2, 3, 4}) {
    std::vector<double> uniform(m, 1.0 / std::sqrt(static_cast<double>(m)));
    CHECK(f_min_pure_closed_form(uniform) == doctest::Approx(1.0 - 1.0 / m).epsilon(1e-12));
  }

  const std::vector<double> unnormalized = {0.9, 0.9};
  const std::vector<double> tiny = {0.5, 0.5};
  CHECK_THROWS_AS(nonbilocal_pure_closed_form(unnormalized, bell2), RangeError);
  CHECK_THROWS_AS(f_min_pure_closed_form(tiny), RangeError);
}

TEST_CASE("f_min of uniform-amplitude states matches 1 - 1/m") {
  for (int m : {2, 3}) {
    const MeasureResult r = f_min(bell_state(m).to_density(), 0, test_config(30 + m));
    CHECK(r.value == doctest::Approx(1.0 - 1.0 / m).epsilon(1e-9));
  }
}

TEST_CASE("closed form matches the optimizer on random pure pairs") {
  for (std::uint64_t s = 0; s < 4; ++s) {
    const std::vector<int> dims = s % 2 == 0 ? std::vector<int>{2, 2} : std::vector<int>{2, 3};
    const PureState psi = random_pure(dims, mix_seed(61, s));
    const PureState phi = random_pure(dims, mix_seed(62, s));
    const double closed = nonbilocal_pure_closed_form(amplitudes_of(psi), amplitudes_of(phi));
    const double optimized =
        nonbilocal(psi.to_density(), phi.to_density(), test_config(mix_seed(63, s))).value;
    CHECK(optimized == doctest::Approx(closed).epsilon(1e-6));
  }
}

TEST_CASE("nonbilocal is locally unitary invariant") {
  const DensityMatrix rho_ab = random_density(4, 2, 70).regrouped({2, 2});
  const DensityMatrix rho_cd = random_density(4, 3, 71).regrouped({2, 2});
  const double baseline = nonbilocal(rho_ab, rho_cd, test_config(72)).value;
  for (std::uint64_t frame = 0; frame < 3; ++frame) {
    const double rotated = nonbilocal(rotate_locally(rho_ab, mix_seed(73, frame)),
                                      rotate_locally(rho_cd, mix_seed(74, frame)),
                                      test_config(mix_seed(75, frame)))
                               .value;
    CHECK(rotated == doctest::Approx(baseline).epsilon(1e-7));
  }

  // also with a degenerate feasible set (werner self-pair)
  const DensityMatrix w = werner(2, 0.3);
  const double wbase = nonbilocal(w, w, test_config(76)).value;
  const double wrot = nonbilocal(rotate_locally(w, 77), rotate_locally(w, 78),
                                 test_config(79))
                          .value;
  CHECK(wrot == doctest::Approx(wbase).epsilon(1e-7));
}

TEST_CASE("nonbilocal dominates f_min on pure states") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const PureState psi = random_pure({2, 2}, mix_seed(81, s));
    const DensityMatrix rho = psi.to_density();
    const double nb =
        nonbilocal(swap_bipartite(rho), rho, test_config(mix_seed(82, s))).value;
    const double fm = f_min(rho, 0, test_config(mix_seed(83, s))).value;
    CHECK(nb >= fm - 1e-8);
  }
}

TEST_CASE("nonbilocal is symmetric under exchanging the labeled inputs") {
  const DensityMatrix rho_ab = random_density(4, 2, 91).regrouped({2, 2});
  const DensityMatrix rho_cd = random_density(4, 4, 92).regrouped({2, 2});
  const double forward = nonbilocal(rho_ab, rho_cd, test_config(93)).value;
  const double exchanged =
      nonbilocal(swap_bipartite(rho_cd), swap_bipartite(rho_ab), test_config(94)).value;
  CHECK(forward == doctest::Approx(exchanged).epsilon(1e-7));
}

TEST_CASE("measure values stay inside [0, 1]") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const DensityMatrix rho = random_density(4, 1 + static_cast<int>(s % 4), mix_seed(95, s))
                                  .regrouped({2, 2});
    const OptimizerConfig cfg = test_config(mix_seed(96, s), 2000);
    for (double v : {f_min(rho, 0, cfg).value, hs_min(rho, 1, cfg).value,
                     geometric_discord_restricted(rho, 0, cfg).value}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("product feasible set never beats the general one") {
  const DensityMatrix w = werner(2, 0.2);
  const double general = nonbilocal(w, w, test_config(97)).value;
  const double product = nonbilocal(w, w, test_config(98), FeasibleSet::product).value;
  CHECK(general >= product - 1e-8);
  // and for werner self-pairs the gap is real
  CHECK(general > product + 1e-3);
}

TEST_CASE("mixed cross-family pair with a fully degenerate inner marginal") {
  // werner x isotropic: both inner marginals are I/2, so the feasible set is
  // the full 4-dimensional block and the optimization is genuinely at work
  const DensityMatrix w = werner(2, -0.5);
  const DensityMatrix iso = isotropic(2, 0.8);
  const MeasureResult general = nonbilocal(w, iso, test_config(171));
  const MeasureResult product = nonbilocal(w, iso, test_config(172), FeasibleSet::product);
  CHECK(general.report.block_dims == std::vector<int>{4});
  CHECK(general.value >= product.value - 1e-8);
  CHECK(general.certified_gap.value_or(1.0) <= 1e-7);

  // the product-set value factorizes into the single-sided objectives
  const double fw = f_min(w, 1, test_config(173)).value;
  const double fi = f_min(iso, 0, test_config(174)).value;
  CHECK(product.value == doctest::Approx(1.0 - (1.0 - fw) * (1.0 - fi)).epsilon(1e-8));
}

TEST_CASE("an under-resourced optimizer fails certification instead of lying") {
  const DensityMatrix w = werner(2, 0.2);
  OptimizerConfig cfg = test_config(99);
  cfg.starts = 1;     // stuck at the product basis
  cfg.max_iters = 1;  // no room to descend
  CHECK_THROWS_AS(nonbilocal(w, w, cfg), ConvergenceError);
}
