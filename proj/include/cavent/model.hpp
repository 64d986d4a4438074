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

// model.hpp: Hamiltonians and Lindblad generators.
//
// Two models are provided:
//  * the effective two-atom model obtained after eliminating a far-detuned
//    cavity mode: exchange coupling omega_eff = g^2 / Delta plus per-atom
//    thermal dissipators and an optional extra decay eta on atom 2;
//  * the full atoms + Fock-truncated cavity model, used to validate the
//    elimination.
//
// Dissipators follow the convention rate * (2 A rho A^+ - A^+A rho - rho A^+A).

#pragma once

#include <array>
#include <cstddef>

#include "cavent/numkit.hpp"
#include "cavent/state.hpp"

namespace cavent {

struct EffectiveParams {
    double omega_eff = 0.0;              // g^2 / Delta
    std::array<double, 2> gamma{0.0, 0.0}; // atom-field coupling per atom
    std::array<double, 2> n_t{0.0, 0.0};   // effective thermal photon number per atom
    double eta = 0.0;                      // extra zero-temperature decay on atom 2

    // Both atoms driven by independent fields of equal intensity.
    static EffectiveParams symmetric(double omega_eff, double gamma, double n_t);
    // Only atom 1 is driven; atom 2 decays spontaneously at rate eta.
    static EffectiveParams single_driven(double omega_eff, double gamma, double n_t, double eta);

    // Throws ErrorKind::Parameter on negative or non-finite values.
    void validate() const;

    bool is_symmetric() const noexcept;
    bool is_single_driven() const noexcept;

    // Per-atom jump rates.
    double down_rate(int atom) const noexcept;
    double up_rate(int atom) const noexcept;
};

struct FullModelParams {
    double omega_cavity = 0.0;
    double omega_atom = 5.0;
    double g = 0.1;
    double kappa = 0.0;
    int n_max = 2;
    std::array<double, 2> gamma{0.01, 0.01};
    std::array<double, 2> n_t{0.0, 0.0};

    double detuning() const noexcept { return omega_atom - omega_cavity; }
    // Delta / (g sqrt(n_max + 1)); infinite when g == 0.
    double detuning_ratio() const noexcept;
    bool large_detuning() const noexcept { return detuning_ratio() >= 10.0; }
    std::size_t dim() const noexcept { return 4 * static_cast<std::size_t>(n_max + 1); }

    void validate() const;

    // Matching effective model with omega_eff = g^2 / Delta.
    EffectiveParams effective() const;
};

struct Liouvillian {
    std::size_t dim = 0;    // Hilbert-space dimension D
    numkit::CMatrix matrix; // D^2 x D^2, acting on column-stacked vec(rho)

    static Liouvillian zero(std::size_t dim);
    Liouvillian& operator+=(const Liouvillian& other);

    // max |vec(I)^dagger L|
    double trace_defect() const;
};

numkit::CMatrix effective_hamiltonian(const EffectiveParams& p);

// -i [H, .]
Liouvillian coherent_part(const numkit::CMatrix& h);

Liouvillian dissipator(const numkit::CMatrix& op, double rate);

Liouvillian build_effective_liouvillian(const EffectiveParams& p);

// Operators on atoms (x) cavity, atom 1 leftmost, cavity rightmost.
numkit::CMatrix full_hamiltonian(const FullModelParams& p);
numkit::CMatrix annihilation(int n_max);
numkit::CMatrix excitation_number(int n_max);

Liouvillian build_full_liouvillian(const FullModelParams& p);

// atoms-only state times the cavity vacuum.
numkit::CMatrix with_cavity_vacuum(const DensityMatrix4& atoms, int n_max);

DensityMatrix4 partial_trace_cavity(const numkit::CMatrix& rho_full, int n_max);

} // namespace cavent
