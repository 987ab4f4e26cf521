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

#include <Eigen/Eigenvalues>

#include "qnb/indexing.hpp"
#include "qnb/measures.hpp"
#include "qnb/operator_basis.hpp"
#include "qnb/schmidt.hpp"
#include "qnb/states.hpp"

using namespace qnb;

namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix random_hermitian(int d, std::uint64_t seed) {
  auto rng = seeded_rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("make_density accepts the maximally mixed two-qubit state") {
  const DensityMatrix rho = make_density(ComplexMatrix::Identity(4, 4) / 4.0, {2, 2});
  CHECK(rho.dim() == 4);
  CHECK(rho.dims() == std::vector<int>{2, 2});
}

TEST_CASE("make_density rejects each violated invariant by name") {
  ComplexMatrix neg = ComplexMatrix::Zero(4, 4);
  neg.diagonal() << 0.6, 0.5, -0.1, 0.0;
  CHECK_THROWS_WITH_AS(make_density(neg, {2, 2}), doctest::Contains("not-psd"), ValidationError);

  ComplexMatrix heavy = ComplexMatrix::Zero(4, 4);
  heavy.diagonal() << 0.6, 0.6, 0.0, 0.0;
  CHECK_THROWS_WITH_AS(make_density(heavy, {2, 2}), doctest::Contains("bad-trace"),
                       ValidationError);

  ComplexMatrix skew = ComplexMatrix::Identity(2, 2) / 2.0;
  skew(0, 1) = Complex(0.0, 1e-3);
  CHECK_THROWS_WITH_AS(make_density(skew, {2}), doctest::Contains("non-hermitian"),
                       ValidationError);

  CHECK_THROWS_WITH_AS(make_density(ComplexMatrix::Identity(4, 4) / 4.0, {2, 3}),
                       doctest::Contains("dim-mismatch"), ValidationError);

  try {
    make_density(neg, {2, 2});
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "not-psd");
    CHECK(e.magnitude() == doctest::Approx(0.1).epsilon(1e-9));
  }
}

TEST_CASE("kron composes states and dims") {
  const DensityMatrix half = make_density(ComplexMatrix::Identity(2, 2) / 2.0, {2});
  const DensityMatrix quarter = kron(half, half);
  CHECK(max_abs_diff(quarter.matrix(), ComplexMatrix::Identity(4, 4) / 4.0) == 0.0);
  CHECK(quarter.dims() == std::vector<int>{2, 2});

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const DensityMatrix prod = kron(make_density(p0, {2}), make_density(p1, {2}));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;  // |01><01|
  CHECK(max_abs_diff(prod.matrix(), expected) == 0.0);

  const DensityMatrix bell = bell_state(2).to_density();
  CHECK(purity(kron(bell, half)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("purity is multiplicative under kron") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix a = random_density(3, 1 + static_cast<int>(s % 3), mix_seed(11, s));
    const DensityMatrix b = random_density(2, 1 + static_cast<int>(s % 2), mix_seed(12, s));
    CHECK(purity(kron(a, b)) == doctest::Approx(purity(a) * purity(b)).epsilon(1e-12));
  }
}

TEST_CASE("partial_trace marginals") {
  const DensityMatrix bell = bell_state(2).to_density();
  const int keep0[] = {0};
  CHECK(max_abs_diff(partial_trace(bell, keep0).matrix(), ComplexMatrix::Identity(2, 2) / 2.0) <
        1e-14);

  const DensityMatrix a = random_density(2, 2, 5);
  const DensityMatrix b = random_density(3, 3, 6);
  CHECK(max_abs_diff(partial_trace(kron(a, b), keep0).matrix(), a.matrix()) < 1e-13);

  const int bad[] = {4};
  CHECK_THROWS_AS(partial_trace(bell, bad), IndexError);
}

TEST_CASE("marginal of a pure product pair is diagonal in the Schmidt bases") {
  const PureState psi_ab = random_pure({2, 2}, 21);
  const PureState psi_cd = random_pure({2, 2}, 22);
  const auto dec_ab = schmidt(psi_ab, 1);
  const auto dec_cd = schmidt(psi_cd, 1);

  const DensityMatrix joint = kron(psi_ab.to_density(), psi_cd.to_density());
  const int keep_bc[] = {1, 2};
  const DensityMatrix marginal = partial_trace(joint, keep_bc);

  // sum_ij s_i^2 r_j^2 |i_b j_c><i_b j_c| in the right/left Schmidt bases
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ComplexVector v(4);
      for (int r = 0; r < 2; ++r)
        v.segment(r * 2, 2) = dec_ab.right_basis[i](r) * dec_cd.left_basis[j];
      const double w = dec_ab.coefficients(i) * dec_ab.coefficients(i) *
                       dec_cd.coefficients(j) * dec_cd.coefficients(j);
      expected += w * (v * v.adjoint());
    }
  CHECK(max_abs_diff(marginal.matrix(), expected) < 1e-12);
}

TEST_CASE("partial_trace composes subsystem by subsystem") {
  const DensityMatrix rho = random_density(12, 6, 77).regrouped({2, 3, 2});
  const DensityMatrix stepwise =
      partial_trace(partial_trace(rho, std::vector<int>{0, 2}), std::vector<int>{0});
  const DensityMatrix direct = partial_trace(rho, std::vector<int>{0});
  CHECK(max_abs_diff(stepwise.matrix(), direct.matrix()) < 1e-12);
  CHECK(partial_trace(rho, std::vector<int>{0, 2}).dims() == std::vector<int>{2, 2});
}

TEST_CASE("schmidt coefficients of the named states") {
  ComplexVector a00 = ComplexVector::Zero(4);
  a00(0) = 1.0;
  const auto dec00 = schmidt(PureState(a00, {2, 2}), 1);
  CHECK(dec00.coefficients(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dec00.coefficients(1) == doctest::Approx(0.0).epsilon(1e-12));

  const auto dec_bell = schmidt(bell_state(2), 1);
  CHECK(dec_bell.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(dec_bell.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  const auto dec_qutrit = schmidt(random_pure({3, 3}, 17), 1);
  CHECK(dec_qutrit.coefficients.size() == 3);
  CHECK(dec_qutrit.coefficients.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("schmidt reconstruction and unitary invariance") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const PureState psi = random_pure({2, 3}, mix_seed(31, s));
    const auto dec = schmidt(psi, 1);
    CHECK(dec.coefficients.squaredNorm() == doctest::Approx(1.0).epsilon(1e-10));

    // reconstruction up to a global phase
    ComplexVector rec = dec.reconstruct();
    int pivot = 0;
    psi.amplitudes().cwiseAbs().maxCoeff(&pivot);
    const Complex phase = psi.amplitudes()(pivot) / rec(pivot);
    CHECK((rec * phase - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-9);
  }

  // local unitaries do not move the coefficients
  const PureState psi = random_pure({2, 2}, 99);
  auto rng = seeded_rng(100);
  const ComplexMatrix u = haar_unitary(2, rng), v = haar_unitary(2, rng);
  ComplexVector rotated(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex acc(0, 0);
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) acc += u(i, k) * v(j, l) * psi.amplitudes()(k * 2 + l);
      rotated(i * 2 + j) = acc;
    }
  const auto before = schmidt(psi, 1).coefficients;
  const auto after = schmidt(PureState(rotated, {2, 2}), 1).coefficients;
  CHECK((before - after).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("operator_basis is the normalized Pauli set at d = 2") {
  const OperatorBasis basis = operator_basis(2);
  REQUIRE(basis.size() == 4);
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  CHECK(max_abs_diff(basis.elements[0], ComplexMatrix::Identity(2, 2) * r) < 1e-15);
  CHECK(max_abs_diff(basis.elements[1], sx * r) < 1e-15);
  CHECK(max_abs_diff(basis.elements[2], sy * r) < 1e-15);
  CHECK(max_abs_diff(basis.elements[3], sz * r) < 1e-15);
}

TEST_CASE("operator_basis is trace-orthonormal and spans Hermitians") {
  for (int d : {2, 3, 4}) {
    const OperatorBasis basis = operator_basis(d);
    REQUIRE(static_cast<int>(basis.size()) == d * d);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      CHECK(max_abs_diff(basis.elements[k], basis.elements[k].adjoint()) < 1e-15);
      for (std::size_t l = 0; l < basis.size(); ++l) {
        const Complex ip = (basis.elements[k].adjoint() * basis.elements[l]).trace();
        CHECK(std::abs(ip - (k == l ? 1.0 : 0.0)) < 1e-12);
      }
    }
    const ComplexMatrix h = random_hermitian(d, 400 + d);
    ComplexMatrix rebuilt = ComplexMatrix::Zero(d, d);
    for (const auto& x : basis.elements)
      rebuilt += (x.conjugate().cwiseProduct(h)).sum() * x;
    CHECK(max_abs_diff(rebuilt, h) < 1e-10);
  }
}

TEST_CASE("bloch_matrix norms and round trip") {
  // maximally mixed: single nonzero coefficient at the identity pair
  const DensityMatrix mm = make_density(ComplexMatrix::Identity(6, 6) / 6.0, {2, 3});
  const CorrelationMatrix lam = bloch_matrix(mm);
  CHECK(lam.entries(0, 0) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-12));
  CHECK(lam.squared_norm() == doctest::Approx(purity(mm)).epsilon(1e-10));

  const DensityMatrix bell = bell_state(2).to_density();
  CHECK(bloch_matrix(bell).squared_norm() == doctest::Approx(1.0).epsilon(1e-10));

  const DensityMatrix w_half = werner(2, 0.5);  // equals I/4
  CHECK(bloch_matrix(w_half).squared_norm() == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(purity(w_half) == doctest::Approx(0.25).epsilon(1e-12));

  // rho = sum_ij lambda_ij X_i ox Y_j reconstructs the input
  const DensityMatrix rho = random_density(6, 4, 55).regrouped({2, 3});
  const CorrelationMatrix lr = bloch_matrix(rho);
  const OperatorBasis ba = operator_basis(2), bb = operator_basis(3);
  ComplexMatrix rebuilt = ComplexMatrix::Zero(6, 6);
  for (int i = 0; i < lr.rows(); ++i)
    for (int j = 0; j < lr.cols(); ++j) {
      ComplexMatrix kron_ij(6, 6);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          kron_ij.block(r * 3, c * 3, 3, 3) = ba.elements[i](r, c) * bb.elements[j];
      rebuilt += lr.entries(i, j) * kron_ij;
    }
  CHECK(max_abs_diff(rebuilt, rho.matrix()) < 1e-10);
}

TEST_CASE("bell_state properties") {
  const PureState bell2 = bell_state(2);
  CHECK(std::abs(bell2.amplitudes()(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(bell2.amplitudes()(3) - 1.0 / std::sqrt(2.0)) < 1e-15);

  const auto dec3 = schmidt(bell_state(3), 1);
  for (int i = 0; i < 3; ++i)
    CHECK(dec3.coefficients(i) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  for (int m : {2, 3, 4}) {
    const int keep[] = {0};
    const DensityMatrix marginal = partial_trace(bell_state(m).to_density(), keep);
    CHECK(max_abs_diff(marginal.matrix(), ComplexMatrix::Identity(m, m) / m) < 1e-14);
  }
}

TEST_CASE("isotropic family") {
  for (int m : {2, 3}) {
    const DensityMatrix mixed = isotropic(m, 1.0 / (m * m));
    CHECK(max_abs_diff(mixed.matrix(), ComplexMatrix::Identity(m * m, m * m) / (m * m)) < 1e-14);
  }
  const DensityMatrix pure = isotropic(2, 1.0);
  const ComplexVector psi = bell_state(2).amplitudes();
  CHECK(max_abs_diff(pure.matrix(), psi * psi.adjoint()) < 1e-14);
  CHECK(std::abs(isotropic(3, 0.37).matrix().trace() - Complex(1.0)) < 1e-13);
  CHECK_THROWS_AS(isotropic(2, -0.1), RangeError);
  CHECK_THROWS_AS(isotropic(2, 1.1), RangeError);
}

TEST_CASE("werner family") {
  for (int m : {2, 3}) {
    const DensityMatrix mixed = werner(m, 1.0 / m);
    CHECK(max_abs_diff(mixed.matrix(), ComplexMatrix::Identity(m * m, m * m) / (m * m)) < 1e-14);
    CHECK(std::abs(werner(m, -0.63).matrix().trace() - Complex(1.0)) < 1e-13);
  }
  CHECK_THROWS_AS(werner(2, -1.2), RangeError);

  // x = -1, m = 2 is the singlet projector: rank one on the antisymmetric state
  const DensityMatrix singlet = werner(2, -1.0);
  CHECK(purity(singlet) == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(singlet.matrix());
  CHECK(es.eigenvalues()(3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(es.eigenvalues()(2) < 1e-12);
  const ComplexVector top = es.eigenvectors().col(3);
  CHECK(std::abs(std::abs(top(1)) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(std::abs(top(2)) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(top(0)) < 1e-12);
  CHECK(std::abs(top(1) + top(2)) < 1e-12);  // antisymmetric combination
}

TEST_CASE("isotropic and werner meet at the maximally mixed point") {
  for (int m : {2, 3}) {
    const DensityMatrix a = isotropic(m, 1.0 / (m * m));
    const DensityMatrix b = werner(m, 1.0 / m);
    CHECK(max_abs_diff(a.matrix(), b.matrix()) < 1e-12);
  }
}

TEST_CASE("random state builders") {
  const PureState p1 = random_pure({2, 2}, 1234), p2 = random_pure({2, 2}, 1234);
  CHECK((p1.amplitudes() - p2.amplitudes()).cwiseAbs().maxCoeff() == 0.0);

  const DensityMatrix full = random_density(4, 4, 8);
  CHECK(std::abs(full.matrix().trace() - Complex(1.0)) < 1e-12);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(full.matrix());
  CHECK(es.eigenvalues().minCoeff() > 1e-4);  // full rank

  const DensityMatrix low = random_density(4, 2, 8);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es2(low.matrix());
  CHECK(es2.eigenvalues()(0) < 1e-12);
  CHECK(es2.eigenvalues()(1) < 1e-12);

  CHECK_THROWS_AS(random_density(4, 5, 1), RangeError);
}

TEST_CASE("classical_quantum builder") {
  const std::vector<DensityMatrix> states = {random_density(2, 2, 61), random_density(2, 1, 62)};
  const double probs[] = {1.0, 0.0};
  const DensityMatrix cq = classical_quantum(probs, states, ClassicalSide::right);
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const DensityMatrix expected = kron(states[0], make_density(p0, {2}));
  CHECK(max_abs_diff(cq.matrix(), expected.matrix()) < 1e-14);

  const double qs[] = {0.3, 0.7};
  const DensityMatrix left = classical_quantum(qs, states, ClassicalSide::left);
  const int keep[] = {0};
  const DensityMatrix flag = partial_trace(left, keep);
  CHECK(flag.matrix()(0, 0).real() == doctest::Approx(0.3).epsilon(1e-12));

  const double bad[] = {0.7, 0.7};
  CHECK_THROWS_AS(classical_quantum(bad, states, ClassicalSide::right), RangeError);
  const double negative[] = {-0.1, 1.1};
  CHECK_THROWS_AS(classical_quantum(negative, states, ClassicalSide::right), RangeError);
}

TEST_CASE("permute and regroup") {
  const DensityMatrix a = random_density(2, 2, 71);
  const DensityMatrix b = random_density(3, 2, 72);
  const DensityMatrix ab = kron(a, b);
  const DensityMatrix ba = swap_bipartite(ab);
  CHECK(ba.dims() == std::vector<int>{3, 2});
  const int keep0[] = {0};
  CHECK(max_abs_diff(partial_trace(ba, keep0).matrix(), b.matrix()) < 1e-13);

  const DensityMatrix grouped = kron(ab, a).regrouped({2, 6});
  CHECK(grouped.dims() == std::vector<int>{2, 6});
  CHECK_THROWS_AS(ab.regrouped({4, 2}), DimensionError);
}
