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

#include "cavent/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cavent/errors.hpp"

namespace cavent {

using numkit::CMatrix;
using numkit::kron;

namespace {

void require_rate(double value, const char* name)
{
    if (!std::isfinite(value) || value < 0.0) {
        std::ostringstream os;
        os << name << " must be finite and >= 0, got " << value;
        throw Error(ErrorKind::Parameter, os.str());
    }
}

CMatrix on_atom1(const CMatrix& op) { return kron(op, qubit::identity()); }
CMatrix on_atom2(const CMatrix& op) { return kron(qubit::identity(), op); }

} // namespace

EffectiveParams EffectiveParams::symmetric(double omega_eff, double gamma, double n_t)
{
    EffectiveParams p;
    p.omega_eff = omega_eff;
    p.gamma = {gamma, gamma};
    p.n_t = {n_t, n_t};
    p.eta = 0.0;
    p.validate();
    return p;
}

EffectiveParams EffectiveParams::single_driven(double omega_eff, double gamma, double n_t, double eta)
{
    EffectiveParams p;
    p.omega_eff = omega_eff;
    p.gamma = {gamma, 0.0};
    p.n_t = {n_t, 0.0};
    p.eta = eta;
    p.validate();
    return p;
}

void EffectiveParams::validate() const
{
    require_rate(omega_eff, "omega_eff");
    require_rate(gamma[0], "gamma (atom 1)");
    require_rate(gamma[1], "gamma (atom 2)");
    require_rate(n_t[0], "n_t (atom 1)");
    require_rate(n_t[1], "n_t (atom 2)");
    require_rate(eta, "eta");
}

bool EffectiveParams::is_symmetric() const noexcept
{
    return gamma[0] == gamma[1] && n_t[0] == n_t[1] && eta == 0.0;
}

bool EffectiveParams::is_single_driven() const noexcept
{
    return gamma[1] == 0.0 && n_t[1] == 0.0;
}

double EffectiveParams::down_rate(int atom) const noexcept
{
    const double thermal = (n_t[atom] + 1.0) * gamma[atom];
    return atom == 1 ? thermal + eta : thermal;
}

double EffectiveParams::up_rate(int atom) const noexcept
{
    return n_t[atom] * gamma[atom];
}

double FullModelParams::detuning_ratio() const noexcept
{
    if (g == 0.0) return std::numeric_limits<double>::infinity();
    return detuning() / (std::abs(g) * std::sqrt(n_max + 1.0));
}

void FullModelParams::validate() const
{
    if (n_max < 1) {
        throw Error(ErrorKind::Parameter, "n_max must be >= 1");
    }
    if (!std::isfinite(omega_cavity) || !std::isfinite(omega_atom) || !std::isfinite(g)) {
        throw Error(ErrorKind::Parameter, "frequencies and coupling must be finite");
    }
    require_rate(kappa, "kappa");
    require_rate(gamma[0], "gamma (atom 1)");
    require_rate(gamma[1], "gamma (atom 2)");
    require_rate(n_t[0], "n_t (atom 1)");
    require_rate(n_t[1], "n_t (atom 2)");
}

EffectiveParams FullModelParams::effective() const
{
    const double delta = detuning();
    if (delta == 0.0) {
        throw Error(ErrorKind::Parameter, "effective model requires a nonzero detuning");
    }
    EffectiveParams p;
    p.omega_eff = g * g / delta;
    p.gamma = gamma;
    p.n_t = n_t;
    p.eta = 0.0;
    p.validate();
    return p;
}

Liouvillian Liouvillian::zero(std::size_t dim)
{
    const auto n = static_cast<Eigen::Index>(dim * dim);
    return {dim, CMatrix::Zero(n, n)};
}

Liouvillian& Liouvillian::operator+=(const Liouvillian& other)
{
    if (other.dim != dim) {
        throw Error(ErrorKind::Dimension, "cannot add Liouvillians of different dimension");
    }
    matrix += other.matrix;
    return *this;
}

double Liouvillian::trace_defect() const
{
    const auto d = static_cast<Eigen::Index>(dim);
    const numkit::CVector id = numkit::vec(CMatrix::Identity(d, d));
    return (id.adjoint() * matrix).cwiseAbs().maxCoeff();
}

CMatrix effective_hamiltonian(const EffectiveParams& p)
{
    p.validate();
    const CMatrix h = on_atom1(qubit::excited()) + on_atom2(qubit::excited()) +
                      kron(qubit::raising(), qubit::lowering()) +
                      kron(qubit::lowering(), qubit::raising());
    return p.omega_eff * h;
}

Liouvillian coherent_part(const CMatrix& h)
{
    if (h.rows() != h.cols()) {
        throw Error(ErrorKind::Dimension, "Hamiltonian must be square");
    }
    const CMatrix id = CMatrix::Identity(h.rows(), h.cols());
    return {static_cast<std::size_t>(h.rows()),
            -numkit::kI * (kron(id, h) - kron(h.transpose(), id))};
}

Liouvillian dissipator(const CMatrix& op, double rate)
{
    if (op.rows() != op.cols()) {
        throw Error(ErrorKind::Dimension, "jump operator must be square");
    }
    require_rate(rate, "dissipator rate");
    const auto dim = static_cast<std::size_t>(op.rows());
    if (rate == 0.0) return Liouvillian::zero(dim);

    const CMatrix id = CMatrix::Identity(op.rows(), op.cols());
    const CMatrix ada = op.adjoint() * op;
    // vec(A rho A^+) = (conj(A) kron A) vec(rho)
    CMatrix m = 2.0 * kron(op.conjugate(), op) - kron(id, ada) - kron(ada.transpose(), id);
    return {dim, rate * m};
}

Liouvillian build_effective_liouvillian(const EffectiveParams& p)
{
    p.validate();
    Liouvillian l = coherent_part(effective_hamiltonian(p));
    l += dissipator(on_atom1(qubit::lowering()), p.down_rate(0));
    l += dissipator(on_atom1(qubit::raising()), p.up_rate(0));
    l += dissipator(on_atom2(qubit::lowering()), p.down_rate(1));
    l += dissipator(on_atom2(qubit::raising()), p.up_rate(1));
    return l;
}

CMatrix annihilation(int n_max)
{
    CMatrix a = CMatrix::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

namespace {

CMatrix atom_op(const CMatrix& op, int atom, int n_max)
{
    const CMatrix single = atom == 0 ? on_atom1(op) : on_atom2(op);
    return kron(single, CMatrix::Identity(n_max + 1, n_max + 1));
}

CMatrix cavity_op(const CMatrix& op)
{
    return kron(CMatrix::Identity(4, 4), op);
}

} // namespace

CMatrix excitation_number(int n_max)
{
    const CMatrix a = annihilation(n_max);
    return cavity_op(a.adjoint() * a) + atom_op(qubit::excited(), 0, n_max) +
           atom_op(qubit::excited(), 1, n_max);
}

CMatrix full_hamiltonian(const FullModelParams& p)
{
    p.validate();
    const CMatrix a = cavity_op(annihilation(p.n_max));
    const CMatrix ad = a.adjoint();
    CMatrix h = p.omega_cavity * (ad * a);
    for (int j = 0; j < 2; ++j) {
        h += 0.5 * p.omega_atom * atom_op(qubit::pauli_z(), j, p.n_max);
        h += p.g * (ad * atom_op(qubit::lowering(), j, p.n_max) +
                    a * atom_op(qubit::raising(), j, p.n_max));
    }
    return h;
}

Liouvillian build_full_liouvillian(const FullModelParams& p)
{
    p.validate();
    Liouvillian l = coherent_part(full_hamiltonian(p));
    l += dissipator(cavity_op(annihilation(p.n_max)), p.kappa);
    for (int j = 0; j < 2; ++j) {
        l += dissipator(atom_op(qubit::lowering(), j, p.n_max), (p.n_t[j] + 1.0) * p.gamma[j]);
        l += dissipator(atom_op(qubit::raising(), j, p.n_max), p.n_t[j] * p.gamma[j]);
    }
    return l;
}

CMatrix with_cavity_vacuum(const DensityMatrix4& atoms, int n_max)
{
    if (n_max < 1) {
        throw Error(ErrorKind::Parameter, "n_max must be >= 1");
    }
    CMatrix vac = CMatrix::Zero(n_max + 1, n_max + 1);
    vac(0, 0) = 1.0;
    return kron(atoms.matrix(), vac);
}

DensityMatrix4 partial_trace_cavity(const CMatrix& rho_full, int n_max)
{
    const Eigen::Index levels = n_max + 1;
    if (n_max < 0 || rho_full.rows() != 4 * levels || rho_full.cols() != 4 * levels) {
        std::ostringstream os;
        os << "partial_trace_cavity: expected " << 4 * levels << "x" << 4 * levels
           << ", got " << rho_full.rows() << "x" << rho_full.cols();
        throw Error(ErrorKind::Dimension, os.str());
    }
    CMatrix reduced = CMatrix::Zero(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            numkit::Complex sum = 0.0;
            for (Eigen::Index n = 0; n < levels; ++n) {
                sum += rho_full(i * levels + n, j * levels + n);
            }
            reduced(i, j) = sum;
        }
    }
    return DensityMatrix4(reduced);
}

} // namespace cavent
