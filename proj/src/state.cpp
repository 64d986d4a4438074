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

#include "cavent/state.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "cavent/errors.hpp"

namespace cavent {

using numkit::CMatrix;

namespace qubit {

CMatrix identity() { return CMatrix::Identity(2, 2); }

CMatrix excited()
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    return m;
}

CMatrix ground()
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(1, 1) = 1.0;
    return m;
}

CMatrix raising()
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

CMatrix lowering()
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

CMatrix pauli_x()
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

CMatrix pauli_y()
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = -numkit::kI;
    m(1, 0) = numkit::kI;
    return m;
}

CMatrix pauli_z()
{
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

} // namespace qubit

ProductState parse_product_state(std::string_view label)
{
    if (label == "00") return ProductState::s00;
    if (label == "10") return ProductState::s10;
    if (label == "01") return ProductState::s01;
    throw Error(ErrorKind::Parameter,
                "unknown initial state '" + std::string(label) + "' (expected 00, 10 or 01)");
}

std::string_view to_string(ProductState s) noexcept
{
    switch (s) {
    case ProductState::s00: return "00";
    case ProductState::s10: return "10";
    case ProductState::s01: return "01";
    }
    return "?";
}

DensityMatrix4::DensityMatrix4(const CMatrix& m)
{
    if (m.rows() != 4 || m.cols() != 4) {
        std::ostringstream os;
        os << "density matrix must be 4x4, got " << m.rows() << "x" << m.cols();
        throw Error(ErrorKind::State, os.str());
    }
    if (!m.allFinite()) {
        throw Error(ErrorKind::State, "density matrix has non-finite entries");
    }
    const double asym = numkit::max_abs(m - m.adjoint());
    if (asym > kHermTol) {
        std::ostringstream os;
        os << "density matrix is not Hermitian (max |rho - rho^dagger| = " << asym << ")";
        throw Error(ErrorKind::State, os.str());
    }
    m_ = numkit::hermitian_part(m);
    const double trace = m_.trace().real();
    if (std::abs(trace - 1.0) > kTraceTol) {
        std::ostringstream os;
        os << "density matrix trace " << trace << " differs from 1";
        throw Error(ErrorKind::State, os.str());
    }
    const double min_eig = numkit::herm_eigs(m_).eigenvalues[0];
    if (min_eig < kEigFloor) {
        std::ostringstream os;
        os << "density matrix has negative eigenvalue " << min_eig;
        throw Error(ErrorKind::State, os.str());
    }
}

DensityMatrix4 DensityMatrix4::basis_projector(int index)
{
    if (index < 0 || index > 3) {
        throw Error(ErrorKind::Dimension, "basis index out of range");
    }
    CMatrix m = CMatrix::Zero(4, 4);
    m(index, index) = 1.0;
    return DensityMatrix4(m);
}

DensityMatrix4 DensityMatrix4::product(ProductState s)
{
    switch (s) {
    case ProductState::s00: return basis_projector(basis::k00);
    case ProductState::s10: return basis_projector(basis::k10);
    case ProductState::s01: return basis_projector(basis::k01);
    }
    throw Error(ErrorKind::Parameter, "unknown product state");
}

double DensityMatrix4::off_x_mass() const
{
    double worst = 0.0;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (r == c) continue;
            const bool coherence = (r == basis::k10 && c == basis::k01) ||
                                   (r == basis::k01 && c == basis::k10);
            if (!coherence) worst = std::max(worst, std::abs(m_(r, c)));
        }
    }
    return worst;
}

} // namespace cavent
