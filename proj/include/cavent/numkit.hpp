// Copyright 2026 The cavent Authors
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

// numkit.hpp: dense complex linear algebra used by the model and measures.
//
// All routines are pure functions of their arguments. Matrices are small
// (4x4 for the atoms, at most a few hundred rows for a Fock-truncated
// superoperator), so everything is dense.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cavent::numkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

struct HermEig {
    RVector eigenvalues; // ascending
    CMatrix eigenvectors; // columns, unitary
};

// Largest absolute entry; 0 for an empty matrix.
double max_abs(const CMatrix& m);

// (M + M^dagger) / 2.
CMatrix hermitian_part(const CMatrix& m);

// Eigen-decomposition of a Hermitian matrix. The input is symmetrized
// before diagonalization, so round-off asymmetry below ~1e-10 is harmless.
HermEig herm_eigs(const CMatrix& h);

// Principal square root of a PSD Hermitian matrix. Eigenvalues in
// [-1e-8, 0) are treated as round-off and clamped to zero; anything more
// negative throws ErrorKind::NotPsd.
CMatrix herm_sqrt(const CMatrix& h);

// exp(M s) by scaling and squaring with a Pade kernel.
CMatrix expm(const CMatrix& m, double s);

// Solves M x = 0 subject to constraint . x = target, where constraint is the
// row functional x -> sum_i constraint[i] * x[i]. Throws NoSteadyState when M
// has no numerical kernel and Ambiguity when the kernel is more than
// one-dimensional.
CVector null_vector(const CMatrix& m, const CVector& constraint, Complex target);

// Number of singular values of M at or below 1e-10 * max_abs(M).
int kernel_dimension(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Column-stacking vectorization: vec(A X B) = (B^T kron A) vec(X).
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, Eigen::Index dim);

} // namespace cavent::numkit
