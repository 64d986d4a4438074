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

#include "cavent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cavent/errors.hpp"
#include "cavent/numkit.hpp"

namespace cavent {

using numkit::CMatrix;
using numkit::Complex;

namespace {

constexpr double kXTol = 1e-10;
constexpr double kImagTol = 1e-10;

const CMatrix& sy_sy()
{
    static const CMatrix m = numkit::kron(qubit::pauli_y(), qubit::pauli_y());
    return m;
}

void require_x_state(const DensityMatrix4& rho)
{
    const double off = rho.off_x_mass();
    if (off > kXTol) {
        std::ostringstream os;
        os << "state has coherence outside the |10>,|01> pair (max |entry| = " << off << ")";
        throw Error(ErrorKind::NotXState, os.str());
    }
}

std::array<double, 3> tt_spectrum(const Eigen::Matrix3d& t)
{
    const CMatrix tt = (t * t.transpose()).cast<Complex>();
    const numkit::RVector ev = numkit::herm_eigs(tt).eigenvalues;
    // ascending -> descending, clamp round-off below zero
    return {std::max(ev[2], 0.0), std::max(ev[1], 0.0), std::max(ev[0], 0.0)};
}

} // namespace

std::array<double, 4> spin_flip_lambdas(const DensityMatrix4& rho)
{
    // sqrt(rho) rho~ sqrt(rho) = F F^dagger with F = sqrt(rho) Y conj(sqrt(rho)) Y, so the
    // lambdas are the singular values of F. Taking them directly avoids the
    // square root of eigenvalues near zero, which would amplify round-off.
    const CMatrix root = numkit::herm_sqrt(rho.matrix());
    const CMatrix factor = root * sy_sy() * root.conjugate();
    const numkit::RVector sv = Eigen::JacobiSVD<CMatrix>(factor).singularValues();

    std::array<double, 4> lambdas{};
    for (int i = 0; i < 4; ++i) lambdas[static_cast<std::size_t>(i)] = sv[i];
    return lambdas;
}

double concurrence(const DensityMatrix4& rho)
{
    const auto l = spin_flip_lambdas(rho);
    return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double concurrence_x(const DensityMatrix4& rho)
{
    require_x_state(rho);
    const double p11 = rho(basis::k11, basis::k11).real();
    const double p44 = rho(basis::k00, basis::k00).real();
    const double coherence = std::abs(rho(basis::k10, basis::k01));
    return 2.0 * std::max(0.0, coherence - std::sqrt(std::max(p11 * p44, 0.0)));
}

Eigen::Matrix3d correlation_matrix(const DensityMatrix4& rho)
{
    const std::array<CMatrix, 3> paulis{qubit::pauli_x(), qubit::pauli_y(), qubit::pauli_z()};
    Eigen::Matrix3d t;
    for (int n = 0; n < 3; ++n) {
        for (int m = 0; m < 3; ++m) {
            const Complex v = (rho.matrix() * numkit::kron(paulis[n], paulis[m])).trace();
            if (std::abs(v.imag()) > kImagTol) {
                throw Error(ErrorKind::State, "correlation matrix has an imaginary residue");
            }
            t(n, m) = v.real();
        }
    }
    return t;
}

double bell_max(const DensityMatrix4& rho)
{
    const auto u = tt_spectrum(correlation_matrix(rho));
    return 2.0 * std::sqrt(u[0] + u[1]);
}

double bell_max_xform(const DensityMatrix4& rho)
{
    require_x_state(rho);
    const double c2 = 4.0 * std::norm(rho(basis::k10, basis::k01));
    const double d = (rho(basis::k11, basis::k11) + rho(basis::k00, basis::k00) -
                      rho(basis::k10, basis::k10) - rho(basis::k01, basis::k01))
                         .real();
    return 2.0 * std::sqrt(c2 + std::max(c2, d * d));
}

std::optional<double> omega_threshold(double gamma, double eta, double n_t)
{
    const double radicand = eta * eta - gamma * eta - n_t * gamma * eta;
    if (radicand < 0.0) return std::nullopt;
    const double den = gamma + eta + n_t * gamma;
    if (den == 0.0) return std::nullopt;
    return (gamma + eta + 2.0 * n_t * gamma) * std::sqrt(radicand) / den;
}

double nt_threshold(double gamma, double eta)
{
    if (gamma == 0.0) {
        throw Error(ErrorKind::Parameter, "nt_threshold is undefined for gamma = 0");
    }
    return eta / gamma - 1.0;
}

BellBounds bell_bounds_for_concurrence(double c)
{
    if (!(c >= 0.0 && c <= 1.0)) {
        throw Error(ErrorKind::Parameter, "concurrence must lie in [0, 1]");
    }
    BellBounds b{2.0 * std::sqrt(1.0 + c * c), std::nullopt};
    if (c > std::sqrt(0.5)) b.lower = 2.0 * std::sqrt(2.0) * c;
    return b;
}

ThresholdReport thresholds(const EffectiveParams& p)
{
    p.validate();
    ThresholdReport r;
    const double gamma = p.gamma[0];
    const double n = p.n_t[0];
    r.omega_c = omega_threshold(gamma, p.eta, n);
    if (gamma != 0.0) r.n_tc = nt_threshold(gamma, p.eta);
    r.entangled_predicate = p.omega_eff > 0.0 && n > 0.0 && r.n_tc && n < *r.n_tc &&
                            r.omega_c && p.omega_eff < *r.omega_c;
    return r;
}

MeasureReport measure(const DensityMatrix4& rho)
{
    MeasureReport r;
    r.lambdas = spin_flip_lambdas(rho);
    r.concurrence = std::clamp(r.lambdas[0] - r.lambdas[1] - r.lambdas[2] - r.lambdas[3], 0.0, 1.0);
    r.t_matrix = correlation_matrix(rho);
    r.tt_eigs = tt_spectrum(r.t_matrix);
    r.bell_max = 2.0 * std::sqrt(r.tt_eigs[0] + r.tt_eigs[1]);
    return r;
}

} // namespace cavent
