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

// measures.hpp: entanglement and nonlocality of two-qubit states.

#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "cavent/model.hpp"
#include "cavent/state.hpp"

namespace cavent {

/// Square roots of the spin-flip spectrum, descending. These are the
/// eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)) with
/// rho~ = (sy x sy) rho* (sy x sy).
std::array<double, 4> spin_flip_lambdas(const DensityMatrix4& rho);

/// Wootters concurrence, max(0, l1 - l2 - l3 - l4).
double concurrence(const DensityMatrix4& rho);

/// Closed form 2 max(0, |rho_23| - sqrt(rho_11 rho_44)) for states whose only
/// coherence is between |10> and |01>. Throws ErrorKind::NotXState when any
/// other off-diagonal entry exceeds 1e-10.
double concurrence_x(const DensityMatrix4& rho);

/// T_nm = Tr(rho sigma_n x sigma_m), n, m in {x, y, z}.
Eigen::Matrix3d correlation_matrix(const DensityMatrix4& rho);

/// Largest CHSH expectation over all measurement settings,
/// 2 sqrt(u1 + u2) with u1 >= u2 the top eigenvalues of T T^T.
double bell_max(const DensityMatrix4& rho);

/// bell_max for the same restricted family as concurrence_x.
double bell_max_xform(const DensityMatrix4& rho);

std::optional<double> omega_threshold(double gamma, double eta, double n_t);

/// eta / gamma - 1. Throws ErrorKind::Parameter for gamma == 0.
double nt_threshold(double gamma, double eta);

struct BellBounds {
    double upper;
    std::optional<double> lower; // only for c > 1/sqrt(2)
};

/// Range of bell_max attainable at concurrence c.
BellBounds bell_bounds_for_concurrence(double c);

struct ThresholdReport {
    std::optional<double> omega_c;
    std::optional<double> n_tc;
    bool entangled_predicate = false;
};

/// Threshold summary for the single-driven steady state; uses gamma[0],
/// n_t[0], eta and omega_eff.
ThresholdReport thresholds(const EffectiveParams& p);

struct MeasureReport {
    double concurrence = 0.0;
    double bell_max = 0.0;
    std::array<double, 4> lambdas{};
    Eigen::Matrix3d t_matrix = Eigen::Matrix3d::Zero();
    std::array<double, 3> tt_eigs{}; // descending
};

MeasureReport measure(const DensityMatrix4& rho);

} // namespace cavent
