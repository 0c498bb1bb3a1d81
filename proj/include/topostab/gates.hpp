// Copyright 2026 The topostab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOPOSTAB_GATES_HPP
#define TOPOSTAB_GATES_HPP

#include "topostab/dense.hpp"

namespace topostab {

enum class ModularKind { S, T, X, Z, P };

/// Single-torus gates:
///   S_{jj'} = omega^{jj'} / sqrt(k)     T_{jj} = omega^{j(j+k)/2}
///   X|j> = |j+1>    Z|j> = omega^j |j>   P = Z^((k-1)/2) T
GateMatrix modular_gate(Level level, ModularKind kind);

/// N^{j3}_{j1 j2} = [j3 = j1 + j2], two inputs and one output.
GateMatrix fusion_tensor(Level level);
/// Adjoint of the fusion tensor: |j1, j2> summed over j1 + j2 = j.
GateMatrix cofusion_tensor(Level level);
/// (S x S) cofusion S^dagger, which copies computational basis states:
/// sqrt(k) sum_j |j, j><j|.
GateMatrix copy_tensor(Level level);
/// Controlled addition |j, l> -> |j, l + j>, obtained by contracting a copy
/// tensor into a fusion tensor (up to a global scalar).
GateMatrix c_add(Level level);
/// |i, j> -> |i + j, i + 2j>, from two controlled-addition style blocks.
GateMatrix perfect_tensor(Level level);

/// Directly tabulated closed forms, used to check the contractions above.
GateMatrix c_add_closed_form(Level level);
GateMatrix perfect_tensor_closed_form(Level level);

/// True when every balanced bipartition of the 2 + 2 legs gives a matrix that
/// is unitary up to scalar, and every 1 | 3 split is an isometry up to scalar.
bool is_perfect_tensor(const GateMatrix& g);

/// Fusion tensor read as a tripartite state on (in1-, in2-, out+).
DenseState fusion_state(Level level);

}  // namespace topostab

#endif  // TOPOSTAB_GATES_HPP
