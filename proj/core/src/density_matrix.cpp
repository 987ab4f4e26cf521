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

#include "qnb/density_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "qnb/indexing.hpp"

namespace qnb {

namespace {

void check_dims(std::span<const int> dims, long side) {
  if (dims.empty()) {
    throw ValidationError("dim-mismatch", 0.0, "state needs at least one subsystem");
  }
  for (int d : dims) {
    if (d < 2) {
      std::ostringstream oss;
      oss << "dim-mismatch: subsystem dimension " << d << " < 2";
      throw ValidationError("dim-mismatch", static_cast<double>(d), oss.str());
    }
  }
  long prod = dims_product(dims);
  if (prod != side) {
    std::ostringstream oss;
    oss << "dim-mismatch: matrix side " << side << " != product of dims " << prod;
    throw ValidationError("dim-mismatch", static_cast<double>(side - prod), oss.str());
  }
}

void check_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) {
    throw ValidationError("dim-mismatch", 0.0, "entries must be finite (no NaN/Inf)");
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<int> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() != matrix_.cols()) {
    std::ostringstream oss;
    oss << "dim-mismatch: matrix is " << matrix_.rows() << "x" << matrix_.cols();
    throw ValidationError("dim-mismatch", 0.0, oss.str());
  }
  check_dims(dims_, matrix_.rows());
  check_finite(matrix_);

  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    std::ostringstream oss;
    oss << "non-hermitian: max |M - M^dag| entry = " << herm;
    throw ValidationError("non-hermitian", herm, oss.str());
  }
  const double trace_err = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (trace_err > kTraceTol) {
    std::ostringstream oss;
    oss << "bad-trace: |Tr M - 1| = " << trace_err;
    throw ValidationError("bad-trace", trace_err, oss.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    std::ostringstream oss;
    oss << "not-psd: min eigenvalue = " << min_eig;
    throw ValidationError("not-psd", -min_eig, oss.str());
  }
}

DensityMatrix DensityMatrix::regrouped(std::vector<int> new_dims) const {
  if (dims_product(new_dims) != dim()) {
    throw DimensionError("regrouped: new dims do not multiply to the total dimension");
  }
  DensityMatrix out(*this);
  out.dims_ = std::move(new_dims);
  return out;
}

PureState::PureState(ComplexVector amplitudes, std::vector<int> dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  check_dims(dims_, amplitudes_.size());
  if (!amplitudes_.allFinite()) {
    throw ValidationError("dim-mismatch", 0.0, "amplitudes must be finite");
  }
  const double norm_err = std::abs(amplitudes_.squaredNorm() - 1.0);
  if (norm_err > kNormTol) {
    std::ostringstream oss;
    oss << "bad-trace: | ||psi||^2 - 1 | = " << norm_err;
    throw ValidationError("bad-trace", norm_err, oss.str());
  }
}

DensityMatrix PureState::to_density() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint(), dims_);
}

DensityMatrix make_density(const ComplexMatrix& matrix, std::vector<int> dims) {
  return DensityMatrix(matrix, std::move(dims));
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  const int da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(std::move(out), std::move(dims));
}

PureState kron(const PureState& a, const PureState& b) {
  const int da = a.dim(), db = b.dim();
  ComplexVector out(da * db);
  for (int i = 0; i < da; ++i) out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState(std::move(out), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const auto& dims = rho.dims();
  const int n = rho.subsystems();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) throw IndexError("partial_trace: keep set must be nonempty");
  for (int k : kept) {
    if (k < 0 || k >= n) {
      std::ostringstream oss;
      oss << "partial_trace: subsystem " << k << " out of range [0," << n << ")";
      throw IndexError(oss.str());
    }
  }

  std::vector<int> traced;
  for (int k = 0; k < n; ++k)
    if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);

  std::vector<int> kept_dims, traced_dims;
  for (int k : kept) kept_dims.push_back(dims[k]);
  for (int k : traced) traced_dims.push_back(dims[k]);
  const int dk = dims_product(kept_dims);
  const int dt = dims_product(traced_dims);

  // flat(full) from (kept digits, traced digits)
  auto compose = [&](std::span<const int> kd, std::span<const int> td) {
    std::vector<int> full(n);
    for (std::size_t q = 0; q < kept.size(); ++q) full[kept[q]] = kd[q];
    for (std::size_t q = 0; q < traced.size(); ++q) full[traced[q]] = td[q];
    return ravel_index(full, dims);
  };

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (int r = 0; r < dk; ++r) {
    const auto rd = unravel_index(r, kept_dims);
    for (int c = 0; c < dk; ++c) {
      const auto cd = unravel_index(c, kept_dims);
      Complex acc(0.0, 0.0);
      for (int t = 0; t < dt; ++t) {
        const auto td = unravel_index(t, traced_dims);
        acc += rho.matrix()(compose(rd, td), compose(cd, td));
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(out), std::move(kept_dims));
}

DensityMatrix permute_subsystems(const DensityMatrix& rho, std::span<const int> perm) {
  const auto& dims = rho.dims();
  const int n = rho.subsystems();
  if (static_cast<int>(perm.size()) != n) {
    throw IndexError("permute_subsystems: permutation length mismatch");
  }
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]++) throw IndexError("permute_subsystems: not a permutation");
  }

  std::vector<int> new_dims(n);
  for (int k = 0; k < n; ++k) new_dims[k] = dims[perm[k]];
  const int d = rho.dim();

  // old flat index corresponding to a new flat index
  std::vector<int> map(d);
  for (int f = 0; f < d; ++f) {
    const auto nd = unravel_index(f, new_dims);
    std::vector<int> od(n);
    for (int k = 0; k < n; ++k) od[perm[k]] = nd[k];
    map[f] = ravel_index(od, dims);
  }

  ComplexMatrix out(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out(r, c) = rho.matrix()(map[r], map[c]);
  return DensityMatrix(std::move(out), std::move(new_dims));
}

DensityMatrix swap_bipartite(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) throw DimensionError("swap_bipartite: state must be bipartite");
  const int perm[] = {1, 0};
  return permute_subsystems(rho, perm);
}

ComplexMatrix embed_on_subsystems(const ComplexMatrix& op, std::span<const int> dims,
                                  std::span<const int> targets) {
  const int n = static_cast<int>(dims.size());
  std::vector<int> tgt(targets.begin(), targets.end());
  std::sort(tgt.begin(), tgt.end());
  if (std::adjacent_find(tgt.begin(), tgt.end()) != tgt.end()) {
    throw IndexError("embed_on_subsystems: duplicate target");
  }
  std::vector<int> rest, tgt_dims, rest_dims;
  for (int k = 0; k < n; ++k) {
    if (std::binary_search(tgt.begin(), tgt.end(), k)) {
      tgt_dims.push_back(dims[k]);
    } else {
      rest.push_back(k);
      rest_dims.push_back(dims[k]);
    }
  }
  const int dt = dims_product(tgt_dims);
  const int dr = dims_product(rest_dims);
  if (op.rows() != dt || op.cols() != dt) {
    throw DimensionError("embed_on_subsystems: operator size does not match targets");
  }

  auto compose = [&](std::span<const int> td, std::span<const int> rd) {
    std::vector<int> full(n);
    for (std::size_t q = 0; q < tgt.size(); ++q) full[tgt[q]] = td[q];
    for (std::size_t q = 0; q < rest.size(); ++q) full[rest[q]] = rd[q];
    return ravel_index(full, dims);
  };

  const int d = dims_product(dims);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int tr = 0; tr < dt; ++tr) {
    const auto trd = unravel_index(tr, tgt_dims);
    for (int tc = 0; tc < dt; ++tc) {
      const auto tcd = unravel_index(tc, tgt_dims);
      const Complex v = op(tr, tc);
      if (v == Complex(0.0, 0.0)) continue;
      for (int r = 0; r < dr; ++r) {
        const auto rd = unravel_index(r, rest_dims);
        out(compose(trd, rd), compose(tcd, rd)) = v;
      }
    }
  }
  return out;
}

}  // namespace qnb
