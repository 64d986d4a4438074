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

// state.hpp: two-atom basis conventions and the checked 4x4 density matrix.
//
// Basis ordering (atom 1 is the left tensor factor):
//
//     index 0 -> |11>,  index 1 -> |10>,  index 2 -> |01>,  index 3 -> |00>
//
// Single-qubit operators use the matching ordering (|1>, |0>), so
// |1><1| = diag(1, 0) and sigma_z = diag(1, -1).

#pragma once

#include <string_view>

#include "cavent/numkit.hpp"

namespace cavent {

namespace basis {
inline constexpr int k11 = 0;
inline constexpr int k10 = 1;
inline constexpr int k01 = 2;
inline constexpr int k00 = 3;
} // namespace basis

namespace qubit {
numkit::CMatrix identity();
numkit::CMatrix excited();  // |1><1|
numkit::CMatrix ground();   // |0><0|
numkit::CMatrix raising();  // |1><0|
numkit::CMatrix lowering(); // |0><1|
numkit::CMatrix pauli_x();
numkit::CMatrix pauli_y(); // (|1>,|0>) ordering: (0,1) = -i, (1,0) = +i
numkit::CMatrix pauli_z();
} // namespace qubit

// The product states used as initial conditions.
enum class ProductState { s00, s10, s01 };

ProductState parse_product_state(std::string_view label);
std::string_view to_string(ProductState s) noexcept;

// Hermitian within 1e-10 per entry, unit trace within 1e-10 and smallest
// eigenvalue >= -1e-9. The stored matrix is the Hermitian part of the input.
class DensityMatrix4 {
public:
    static constexpr double kHermTol = 1e-10;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kEigFloor = -1e-9;

    // Throws ErrorKind::State when the invariants fail.
    explicit DensityMatrix4(const numkit::CMatrix& m);

    static DensityMatrix4 product(ProductState s);
    static DensityMatrix4 basis_projector(int index);

    const numkit::CMatrix& matrix() const noexcept { return m_; }
    numkit::Complex operator()(int row, int col) const { return m_(row, col); }

    // Entries outside the diagonal and the |10><01| coherence pair.
    double off_x_mass() const;

private:
    numkit::CMatrix m_;
};

} // namespace cavent
