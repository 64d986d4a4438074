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

#include "cavent/numkit.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "cavent/errors.hpp"

namespace cavent::numkit {

namespace {

constexpr double kClampFloor = -1e-8;
constexpr double kKernelRelTol = 1e-10;

void require_square(const CMatrix& m, const char* who)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << who << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
        throw Error(ErrorKind::Dimension, os.str());
    }
}

Eigen::JacobiSVD<CMatrix> svd_of(const CMatrix& m)
{
    return Eigen::JacobiSVD<CMatrix>(m, Eigen::ComputeFullV);
}

int count_kernel(const RVector& singular_values, double scale)
{
    const double tol = kKernelRelTol * scale;
    int n = 0;
    for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
        if (singular_values[i] <= tol) ++n;
    }
    return n;
}

} // namespace

double max_abs(const CMatrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

CMatrix hermitian_part(const CMatrix& m)
{
    return 0.5 * (m + m.adjoint());
}

HermEig herm_eigs(const CMatrix& h)
{
    require_square(h, "herm_eigs");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(h));
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::Range, "herm_eigs: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix herm_sqrt(const CMatrix& h)
{
    HermEig eig = herm_eigs(h);
    RVector roots(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
        const double lambda = eig.eigenvalues[i];
        if (lambda < kClampFloor) {
            std::ostringstream os;
            os << "herm_sqrt: eigenvalue " << lambda << " below " << kClampFloor;
            throw Error(ErrorKind::NotPsd, os.str());
        }
        roots[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }
    return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

CMatrix expm(const CMatrix& m, double s)
{
    require_square(m, "expm");
    if (!std::isfinite(s)) {
        throw Error(ErrorKind::Parameter, "expm: time argument is not finite");
    }
    if (!m.allFinite()) {
        throw Error(ErrorKind::Parameter, "expm: matrix has non-finite entries");
    }
    if (s == 0.0) {
        return CMatrix::Identity(m.rows(), m.cols());
    }
    CMatrix scaled = m * s;
    CMatrix result = scaled.exp();
    if (!result.allFinite()) {
        throw Error(ErrorKind::Range, "expm: result overflowed");
    }
    return result;
}

int kernel_dimension(const CMatrix& m)
{
    require_square(m, "kernel_dimension");
    const double scale = max_abs(m);
    if (scale == 0.0) return static_cast<int>(m.cols());
    return count_kernel(svd_of(m).singularValues(), scale);
}

CVector null_vector(const CMatrix& m, const CVector& constraint, Complex target)
{
    require_square(m, "null_vector");
    if (constraint.size() != m.cols()) {
        throw Error(ErrorKind::Dimension, "null_vector: constraint length does not match matrix");
    }
    const double scale = max_abs(m);
    const Eigen::Index n = m.cols();

    int kdim = static_cast<int>(n);
    if (scale > 0.0) {
        kdim = count_kernel(svd_of(m).singularValues(), scale);
    }
    if (kdim == 0) {
        throw Error(ErrorKind::NoSteadyState, "null_vector: matrix has a trivial kernel");
    }
    if (kdim > 1) {
        std::ostringstream os;
        os << "null_vector: kernel dimension " << kdim << " (expected 1)";
        throw Error(ErrorKind::Ambiguity, os.str());
    }

    // Bordered system [M; c^T] x = [0; target] in the least-squares sense.
    CMatrix bordered(n + 1, n);
    bordered.topRows(n) = m;
    bordered.row(n) = constraint.transpose();
    CVector rhs = CVector::Zero(n + 1);
    rhs[n] = target;
    CVector x = bordered.colPivHouseholderQr().solve(rhs);

    const Complex achieved = constraint.transpose() * x;
    if (!x.allFinite() || std::abs(achieved - target) > 1e-8 * std::max(1.0, std::abs(target))) {
        throw Error(ErrorKind::Ambiguity, "null_vector: constraint is degenerate on the kernel");
    }
    return x;
}

CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CVector vec(const CMatrix& m)
{
    // Eigen storage is column-major, so the raw buffer is already vec(m).
    return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix unvec(const CVector& v, Eigen::Index dim)
{
    if (v.size() != dim * dim) {
        throw Error(ErrorKind::Dimension, "unvec: vector length is not dim^2");
    }
    return Eigen::Map<const CMatrix>(v.data(), dim, dim);
}

} // namespace cavent::numkit
