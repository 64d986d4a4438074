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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "cavent/errors.hpp"
#include "cavent/model.hpp"
#include "cavent/state.hpp"
#include "support/oracles.hpp"
#include "support/test_config.hpp"

using namespace cavent;
using numkit::CMatrix;
using numkit::CVector;
using numkit::max_abs;
namespace ct = cavent::testing;

namespace {

CMatrix act(const Liouvillian& l, const CMatrix& rho)
{
    return numkit::unvec(l.matrix * numkit::vec(rho), static_cast<Eigen::Index>(l.dim));
}

Eigen::VectorXcd spectrum(const CMatrix& m)
{
    return Eigen::ComplexEigenSolver<CMatrix>(m, false).eigenvalues();
}

template <class Fn>
ErrorKind kind_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected cavent::Error");
    return ErrorKind::Usage;
}

} // namespace

TEST_CASE("single-qubit operators use the (|1>, |0>) ordering")
{
    CHECK(qubit::pauli_z()(0, 0) == 1.0);
    CHECK(qubit::pauli_z()(1, 1) == -1.0);
    CHECK(qubit::pauli_y()(0, 1) == numkit::Complex(0, -1));
    CHECK(qubit::pauli_y()(1, 0) == numkit::Complex(0, 1));
    CHECK(qubit::raising()(0, 1) == 1.0);
    CHECK(qubit::lowering()(1, 0) == 1.0);
}

TEST_CASE("effective Hamiltonian examples")
{
    CHECK(max_abs(effective_hamiltonian(EffectiveParams::symmetric(0.0, 0.1, 1.0))) == 0.0);

    const CMatrix h = effective_hamiltonian(EffectiveParams::symmetric(0.2, 0.01, 0.0));
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 0) = 0.4;
    expected(1, 1) = 0.2;
    expected(2, 2) = 0.2;
    expected(1, 2) = 0.2;
    expected(2, 1) = 0.2;
    CHECK(max_abs(h - expected) < 1e-15);

    Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<CMatrix>(h).eigenvalues();
    CHECK(std::abs(ev(0)) < 1e-15);
    CHECK(std::abs(ev(1)) < 1e-15);
    CHECK(ev(2) == doctest::Approx(0.4));
    CHECK(ev(3) == doctest::Approx(0.4));
}

TEST_CASE("parameter validation")
{
    CHECK(kind_of([] { EffectiveParams::symmetric(0.2, -0.1, 0.0); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { EffectiveParams::single_driven(0.2, 0.1, 0.0, std::nan("")); }) ==
          ErrorKind::Parameter);
    CHECK(EffectiveParams::symmetric(0.2, 0.1, 1.0).is_symmetric());
    CHECK_FALSE(EffectiveParams::single_driven(0.2, 0.1, 1.0, 0.5).is_symmetric());
    CHECK(EffectiveParams::single_driven(0.2, 0.1, 1.0, 0.5).is_single_driven());
}

TEST_CASE("dissipator examples")
{
    const CMatrix a = qubit::lowering();
    CHECK(max_abs(dissipator(a, 0.0).matrix) == 0.0);
    CHECK(kind_of([&] { dissipator(a, -1.0); }) == ErrorKind::Parameter);

    const double gamma = 0.3;
    const CMatrix decay = act(dissipator(a, gamma), qubit::excited());
    CHECK(decay(0, 0).real() == doctest::Approx(-2.0 * gamma));
    CHECK(decay(1, 1).real() == doctest::Approx(2.0 * gamma));

    const double up = 2.0 * 0.3;
    const CMatrix pump = act(dissipator(qubit::raising(), up), qubit::ground());
    CHECK(pump(0, 0).real() == doctest::Approx(2.0 * up));
    CHECK(pump(1, 1).real() == doctest::Approx(-2.0 * up));
}

TEST_CASE("dissipator agrees with the operator-form master equation")
{
    std::mt19937_64 rng(ct::kSeedParams);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::mt19937_64 srng(ct::kSeedStates + 10);
    for (int trial = 0; trial < 20; ++trial) {
        EffectiveParams p;
        p.omega_eff = u(rng);
        p.gamma = {u(rng), u(rng)};
        p.n_t = {2 * u(rng), 2 * u(rng)};
        p.eta = u(rng);
        const CMatrix rho = ct::random_density(srng);
        const CMatrix lhs = act(build_effective_liouvillian(p), rho);
        const CMatrix rhs = ct::two_atom_rhs(p.omega_eff, {p.down_rate(0), p.down_rate(1)},
                                             {p.up_rate(0), p.up_rate(1)}, rho);
        CHECK(max_abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("effective Liouvillian structural invariants")
{
    CHECK(max_abs(build_effective_liouvillian(EffectiveParams{}).matrix) == 0.0);

    std::mt19937_64 rng(ct::kSeedParams + 1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        EffectiveParams p;
        p.omega_eff = u(rng);
        p.gamma = {u(rng), u(rng)};
        p.n_t = {3 * u(rng), 3 * u(rng)};
        p.eta = u(rng);
        const Liouvillian l = build_effective_liouvillian(p);
        CHECK(l.dim == 4);
        CHECK(l.trace_defect() <= 1e-12 * max_abs(l.matrix));

        const CMatrix h = ct::random_hermitian(rng, 4);
        const CMatrix out = act(l, h);
        CHECK(max_abs(out - out.adjoint()) < 1e-13);

        const Eigen::VectorXcd ev = spectrum(l.matrix);
        CHECK(ev.real().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("single-driven builder reduces to the symmetric one")
{
    EffectiveParams p = EffectiveParams::single_driven(0.3, 0.05, 1.5, 0.0);
    p.gamma[1] = p.gamma[0];
    p.n_t[1] = p.n_t[0];
    const Liouvillian a = build_effective_liouvillian(p);
    const Liouvillian b = build_effective_liouvillian(EffectiveParams::symmetric(0.3, 0.05, 1.5));
    CHECK(max_abs(a.matrix - b.matrix) == 0.0);
}

TEST_CASE("symmetric spectrum contains the closed-form decay exponents")
{
    for (double gamma : {0.01, 0.1}) {
        for (double nt : {0.0, 0.3, 1.0, 2.0}) {
            const Eigen::VectorXcd ev =
                spectrum(build_effective_liouvillian(EffectiveParams::symmetric(0.2, gamma, nt)).matrix);
            for (double target : {-(4 * nt + 2) * gamma, -(8 * nt + 4) * gamma}) {
                double best = 1e300;
                for (Eigen::Index i = 0; i < ev.size(); ++i) best = std::min(best, std::abs(ev(i).real() - target));
                CHECK(best <= 1e-9);
            }
        }
    }
}

TEST_CASE("full Hamiltonian with g = 0 is the free spectrum")
{
    FullModelParams f;
    f.g = 0.0;
    f.omega_cavity = 0.7;
    f.omega_atom = 2.0;
    f.n_max = 3;
    const CMatrix h = full_hamiltonian(f);
    CHECK(h.rows() == 16);
    CHECK(max_abs(h - CMatrix(h.diagonal().asDiagonal())) == 0.0);

    std::vector<double> expected;
    for (int n = 0; n <= f.n_max; ++n) {
        for (double s1 : {0.5, -0.5}) {
            for (double s2 : {0.5, -0.5}) expected.push_back(f.omega_cavity * n + f.omega_atom * (s1 + s2));
        }
    }
    std::vector<double> got;
    for (Eigen::Index i = 0; i < h.rows(); ++i) got.push_back(h(i, i).real());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("full Hamiltonian conserves excitations")
{
    for (int n_max : {1, 2, 4}) {
        FullModelParams f;
        f.n_max = n_max;
        f.g = 0.37;
        const CMatrix h = full_hamiltonian(f);
        const CMatrix n = excitation_number(n_max);
        CHECK(max_abs(h - h.adjoint()) == 0.0);
        CHECK(max_abs(h * n - n * h) <= 1e-12);
    }
    FullModelParams bad;
    bad.n_max = 0;
    CHECK(kind_of([&] { full_hamiltonian(bad); }) == ErrorKind::Parameter);
}

TEST_CASE("single-excitation block has the Tavis-Cummings splitting")
{
    FullModelParams f;
    f.n_max = 1;
    f.g = 0.3;
    f.omega_cavity = 1.0;
    f.omega_atom = 1.8;
    const double delta = f.detuning();
    const int k = f.n_max + 1;
    // |10,0>, |01,0>, |00,1> in atoms (x) cavity indexing
    const std::array<int, 3> idx{basis::k10 * k + 0, basis::k01 * k + 0, basis::k00 * k + 1};
    const CMatrix h = full_hamiltonian(f);
    CMatrix block(3, 3);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) block(r, c) = h(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    }
    // Atomic states sit at zero, |00,1> at -Delta, each coupled by g.
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<CMatrix>(block).eigenvalues();
    const double root = std::sqrt(delta * delta + 8 * f.g * f.g);
    std::vector<double> expected{0.0, 0.5 * (-delta + root), 0.5 * (-delta - root)};
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < 3; ++i) CHECK(std::abs(ev(i) - expected[static_cast<std::size_t>(i)]) < 1e-12);
}

TEST_CASE("full Liouvillian examples")
{
    FullModelParams f;
    f.g = 0.0;
    f.kappa = 0.0;
    f.gamma = {0.0, 0.0};
    const Liouvillian coherent = build_full_liouvillian(f);
    const Eigen::VectorXcd ev = spectrum(coherent.matrix);
    CHECK(ev.real().cwiseAbs().maxCoeff() < 1e-10);

    FullModelParams g = FullModelParams{};
    g.kappa = 0.05;
    g.n_t = {0.0, 0.0};
    const Liouvillian l = build_full_liouvillian(g);
    CHECK(l.trace_defect() <= 1e-12 * max_abs(l.matrix));
    const CMatrix vac = with_cavity_vacuum(DensityMatrix4::product(ProductState::s00), g.n_max);
    CHECK(max_abs(act(l, vac)) < 1e-14);

    FullModelParams hot = g;
    hot.n_t = {0.5, 1.0};
    const Liouvillian lh = build_full_liouvillian(hot);
    CHECK(lh.trace_defect() <= 1e-12 * max_abs(lh.matrix));
    CHECK(spectrum(lh.matrix).real().maxCoeff() <= 1e-10);
}

TEST_CASE("partial trace over the cavity")
{
    std::mt19937_64 rng(ct::kSeedStates + 20);
    const int n_max = 2;
    const int k = n_max + 1;

    const DensityMatrix4 atoms(ct::random_density(rng));
    const DensityMatrix4 back = partial_trace_cavity(with_cavity_vacuum(atoms, n_max), n_max);
    CHECK(max_abs(back.matrix() - atoms.matrix()) < 1e-15);

    const CMatrix mixed = CMatrix::Identity(4 * k, 4 * k) / (4.0 * k);
    CHECK(max_abs(partial_trace_cavity(mixed, n_max).matrix() - CMatrix::Identity(4, 4) / 4.0) < 1e-15);

    // Linearity on a convex combination of random joint states.
    auto joint = [&] {
        const CMatrix g = ct::gaussian_matrix(rng, 4 * k, 4 * k);
        CMatrix r = g * g.adjoint();
        r /= r.trace();
        return CMatrix(0.5 * (r + r.adjoint()));
    };
    const CMatrix r1 = joint();
    const CMatrix r2 = joint();
    const double w = 0.3;
    const CMatrix lhs = partial_trace_cavity(w * r1 + (1 - w) * r2, n_max).matrix();
    const CMatrix rhs = w * partial_trace_cavity(r1, n_max).matrix() + (1 - w) * partial_trace_cavity(r2, n_max).matrix();
    CHECK(max_abs(lhs - rhs) < 1e-14);
    CHECK(std::abs(lhs.trace() - 1.0) < 1e-12);

    CHECK(kind_of([&] { partial_trace_cavity(CMatrix::Identity(10, 10) / 10.0, n_max); }) == ErrorKind::Dimension);
}

TEST_CASE("detuning ratio")
{
    FullModelParams f;
    CHECK(f.detuning_ratio() == doctest::Approx(5.0 / (0.1 * std::sqrt(3.0))));
    CHECK(f.large_detuning());
    f.g = 1.0;
    CHECK_FALSE(f.large_detuning());
    f.g = 0.0;
    CHECK(std::isinf(f.detuning_ratio()));
    FullModelParams d;
    CHECK(d.effective().omega_eff == doctest::Approx(0.002));
}
