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

// dynamics.hpp: time evolution and steady states.
//
// Two independent engines are available for the effective model:
//  * closed-form solutions (equal thermal drive on both atoms starting from
//    |10>, and the steady state when only atom 1 is driven);
//  * numeric propagation by the matrix exponential of any Liouvillian, and
//    the steady state as the normalized kernel of the Liouvillian.

#pragma once

#include <span>
#include <vector>

#include "cavent/model.hpp"
#include "cavent/numkit.hpp"
#include "cavent/state.hpp"

namespace cavent {

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix4> states;
};

// Exact state at time t for equal drive on both atoms, initial state |10>.
// Throws ErrorKind::Mode unless p.is_symmetric().
DensityMatrix4 analytic_state_symmetric(const EffectiveParams& p, double t);

// Exact steady state when only atom 1 is thermally driven and atom 2 decays
// at rate eta. Throws ErrorKind::Mode unless p.is_single_driven(), and
// ErrorKind::DegenerateSteadyState when the closed form is singular.
DensityMatrix4 analytic_steady_asymmetric(const EffectiveParams& p);

// unvec(exp(L t) vec(rho0)), Hermitian-symmetrized. Throws
// ErrorKind::Integration when the trace drifts by more than 1e-10 or an
// eigenvalue falls below -1e-8.
numkit::CMatrix propagate(const Liouvillian& l, const numkit::CMatrix& rho0, double t);
DensityMatrix4 propagate(const Liouvillian& l, const DensityMatrix4& rho0, double t);

// States on an ascending time grid by cumulative stepping.
std::vector<numkit::CMatrix> propagate_grid(const Liouvillian& l, const numkit::CMatrix& rho0,
                                            std::span<const double> times);
Trajectory trajectory(const Liouvillian& l, const DensityMatrix4& rho0,
                      std::span<const double> times);

// Unit-trace kernel of L, symmetrized. Throws ErrorKind::Ambiguity when the
// kernel is not one-dimensional.
numkit::CMatrix numeric_steady(const Liouvillian& l);
DensityMatrix4 numeric_steady4(const Liouvillian& l);

// Smallest nonzero |Re lambda| over the Liouvillian spectrum.
double spectral_gap(const Liouvillian& l);

// Real parts of the Liouvillian eigenvalues, ascending.
std::vector<double> relaxation_rates(const Liouvillian& l);

} // namespace cavent
