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

#include "cavent/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cavent/errors.hpp"

namespace cavent {

using numkit::CMatrix;
using numkit::CVector;
using numkit::Complex;

namespace {

constexpr double kTraceDrift = 1e-10;
constexpr double kPositivityFloor = -1e-8;

CMatrix checked_state(const CVector& v, Eigen::Index dim, Complex trace0)
{
    CMatrix rho = numkit::hermitian_part(numkit::unvec(v, dim));
    const double drift = std::abs(rho.trace() - trace0);
    if (drift > kTraceDrift) {
        std::ostringstream os;
        os << "propagation changed the trace by " << drift;
        throw Error(ErrorKind::Integration, os.str());
    }
    const double min_eig = numkit::herm_eigs(rho).eigenvalues[0];
    if (min_eig < kPositivityFloor) {
        std::ostringstream os;
        os << "propagated state has eigenvalue " << min_eig;
        throw Error(ErrorKind::Integration, os.str());
    }
    return rho;
}

void require_compatible(const Liouvillian& l, const CMatrix& rho0)
{
    const auto d = static_cast<Eigen::Index>(l.dim);
    if (rho0.rows() != d || rho0.cols() != d || l.matrix.rows() != d * d) {
        throw Error(ErrorKind::Dimension, "state dimension does not match the Liouvillian");
    }
}

} // namespace

DensityMatrix4 analytic_state_symmetric(const EffectiveParams& p, double t)
{
    p.validate();
    if (!p.is_symmetric()) {
        throw Error(ErrorKind::Mode, "analytic_state_symmetric needs equal drive on both atoms and eta = 0");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw Error(ErrorKind::Parameter, "time must be finite and >= 0");
    }
    const double n = p.n_t[0];
    const double gt = p.gamma[0] * t;
    const double fast = std::exp(-(8.0 * n + 4.0) * gt);
    const double slow = std::exp(-(4.0 * n + 2.0) * gt);
    const double q = (2.0 * n + 1.0) * (2.0 * n + 1.0);
    const double phase = 2.0 * p.omega_eff * t;

    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = n / q * (n + slow - (n + 1.0) * fast);
    m(1, 1) = (n * n + n) / q * (1.0 + fast) + 0.5 * (1.0 / q + std::cos(phase)) * slow;
    m(2, 2) = (n * n + n) / q * (1.0 + fast) + 0.5 * (1.0 / q - std::cos(phase)) * slow;
    m(3, 3) = (n + 1.0) / q * (n + 1.0 - slow - n * fast);
    m(1, 2) = Complex(0.0, 0.5 * slow * std::sin(phase));
    m(2, 1) = std::conj(m(1, 2));
    return DensityMatrix4(m);
}

DensityMatrix4 analytic_steady_asymmetric(const EffectiveParams& p)
{
    p.validate();
    if (!p.is_single_driven()) {
        throw Error(ErrorKind::Mode, "analytic_steady_asymmetric needs gamma and n_t of atom 2 equal to 0");
    }
    const double om = p.omega_eff;
    const double g = p.gamma[0];
    const double n = p.n_t[0];
    const double eta = p.eta;

    const double a = g + eta + 2.0 * n * g;
    const double half = g + eta + n * g;
    const double b = om * om + g * eta + 2.0 * n * g * eta;
    if (a == 0.0 || b == 0.0) {
        throw Error(ErrorKind::DegenerateSteadyState,
                    "steady state is not unique: omega, gamma and eta leave no relaxation channel");
    }
    const double den = a * a * b;

    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = om * om * g * g * n * n / den;
    m(1, 1) = n * g * (eta * a * a + om * om * half) / den;
    m(2, 2) = om * om * n * g * half / den;
    m(3, 3) = (g * eta * (1.0 + n) * a * a + om * om * half * half) / den;
    m(1, 2) = Complex(0.0, n * om * g * eta / (a * b));
    m(2, 1) = std::conj(m(1, 2));
    return DensityMatrix4(m);
}

CMatrix propagate(const Liouvillian& l, const CMatrix& rho0, double t)
{
    require_compatible(l, rho0);
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw Error(ErrorKind::Parameter, "time must be finite and >= 0");
    }
    if (t == 0.0) return rho0;
    const CVector v = numkit::expm(l.matrix, t) * numkit::vec(rho0);
    return checked_state(v, rho0.rows(), rho0.trace());
}

DensityMatrix4 propagate(const Liouvillian& l, const DensityMatrix4& rho0, double t)
{
    return DensityMatrix4(propagate(l, rho0.matrix(), t));
}

std::vector<CMatrix> propagate_grid(const Liouvillian& l, const CMatrix& rho0,
                                    std::span<const double> times)
{
    require_compatible(l, rho0);
    if (times.empty()) {
        throw Error(ErrorKind::Parameter, "time grid is empty");
    }
    if (!(times.front() >= 0.0)) {
        throw Error(ErrorKind::Parameter, "time grid must start at t >= 0");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] >= times[i - 1])) {
            throw Error(ErrorKind::Parameter, "time grid must be ascending");
        }
    }

    std::vector<CMatrix> out;
    out.reserve(times.size());
    CMatrix current = propagate(l, rho0, times.front());
    out.push_back(current);

    // Uniform grids reuse one step propagator.
    double cached_step = -1.0;
    CMatrix step_prop;
    const Complex trace0 = rho0.trace();
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double dt = times[i] - times[i - 1];
        if (dt == 0.0) {
            out.push_back(current);
            continue;
        }
        if (dt != cached_step) {
            step_prop = numkit::expm(l.matrix, dt);
            cached_step = dt;
        }
        current = checked_state(step_prop * numkit::vec(current), current.rows(), trace0);
        out.push_back(current);
    }
    return out;
}

Trajectory trajectory(const Liouvillian& l, const DensityMatrix4& rho0, std::span<const double> times)
{
    Trajectory traj;
    traj.times.assign(times.begin(), times.end());
    for (const CMatrix& m : propagate_grid(l, rho0.matrix(), times)) {
        traj.states.emplace_back(m);
    }
    return traj;
}

CMatrix numeric_steady(const Liouvillian& l)
{
    const auto d = static_cast<Eigen::Index>(l.dim);
    const CVector trace_row = numkit::vec(CMatrix::Identity(d, d));
    const CVector x = numkit::null_vector(l.matrix, trace_row, 1.0);
    CMatrix rho = numkit::hermitian_part(numkit::unvec(x, d));
    const double min_eig = numkit::herm_eigs(rho).eigenvalues[0];
    if (min_eig < kPositivityFloor) {
        std::ostringstream os;
        os << "kernel state has eigenvalue " << min_eig;
        throw Error(ErrorKind::Integration, os.str());
    }
    return rho;
}

DensityMatrix4 numeric_steady4(const Liouvillian& l)
{
    if (l.dim != 4) {
        throw Error(ErrorKind::Dimension, "numeric_steady4 needs a two-atom Liouvillian");
    }
    return DensityMatrix4(numeric_steady(l));
}

std::vector<double> relaxation_rates(const Liouvillian& l)
{
    Eigen::ComplexEigenSolver<CMatrix> solver(l.matrix, false);
    std::vector<double> re;
    re.reserve(static_cast<std::size_t>(solver.eigenvalues().size()));
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        re.push_back(solver.eigenvalues()[i].real());
    }
    std::sort(re.begin(), re.end());
    return re;
}

double spectral_gap(const Liouvillian& l)
{
    const double tol = 1e-10 * std::max(1.0, numkit::max_abs(l.matrix));
    double gap = 0.0;
    for (double r : relaxation_rates(l)) {
        const double a = std::abs(r);
        if (a > tol && (gap == 0.0 || a < gap)) gap = a;
    }
    return gap;
}

} // namespace cavent
