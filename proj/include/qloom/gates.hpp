// Copyright 2026 The qloom developers
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qloom/dense.hpp"
#include "qloom/qubo.hpp"

namespace qloom {

/**
 * Gate kinds with exponential-form angle semantics:
 *   RZ(theta)       = exp(i theta Z)
 *   RX(theta)       = exp(i theta X)
 *   ZZ(theta)       = exp(i theta Z (x) Z)
 *   CTRL0_RX(theta) = exp(i theta X) on the target, applied only on the
 *                     subspace where every control qubit is |0>.
 * H, CZ and CNOT are the usual constant gates.
 */
enum class GateKind : std::uint8_t { RZ, RX, H, CZ, CNOT, ZZ, CTRL0_RX };

struct GateOp {
    GateKind kind = GateKind::H;
    double theta = 0.0;          // RZ / RX / ZZ / CTRL0_RX
    int q0 = -1;                 // target (CNOT: control)
    int q1 = -1;                 // second qubit (CZ / CNOT / ZZ)
    std::vector<int> controls;   // CTRL0_RX only: qubits required to be |0>
};

using Circuit = std::vector<GateOp>;

/** QAOA angle schedule; gammas and betas must have equal size p >= 1. */
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    [[nodiscard]] int depth() const;
};

/**
 * Standard QAOA circuit for a QUBO: H on every qubit, then per layer k the
 * cost unitary (ZZ(-2 gamma_k J_uv) per quadratic term, RZ(-2 gamma_k h_v)
 * per linear term) followed by the mixer RX(-beta_k / 2) on every qubit.
 */
[[nodiscard]] Circuit build_qaoa_circuit(const QuboProblem& q, const QaoaParams& params);

/**
 * Constraint-preserving MIS ansatz: phase layer RZ(gamma_k) per vertex,
 * then per vertex v (in `order`, default ascending) the partial mixer
 * CTRL0_RX(beta_k) targeting v with controls N(v). The initial state is
 * |0...0> or, when `init_set` is nonempty, that independent set (prepared
 * with RX(pi/2), which is X up to global phase).
 */
[[nodiscard]] Circuit build_mis_qaoa(const Graph& g, const QaoaParams& params,
                                     const std::vector<int>& init_set = {},
                                     const std::vector<int>& order = {});

/** Circuit JSON (schema documented in the README). */
[[nodiscard]] std::string circuit_to_json(int num_qubits, const Circuit& c);

/**
 * Dense statevector simulator. Amplitude index convention: bit v of the
 * index is the value of qubit v (qubit 0 is the least significant bit).
 * Refuses more than 14 qubits.
 */
class Statevector {
  public:
    explicit Statevector(int num_qubits);  // starts in |0...0>

    [[nodiscard]] int num_qubits() const { return n_; }
    [[nodiscard]] const std::vector<cdouble>& amplitudes() const { return amp_; }
    [[nodiscard]] std::vector<cdouble>& amplitudes() { return amp_; }

    void apply(const GateOp& op);
    void apply_circuit(const Circuit& c);

    [[nodiscard]] std::vector<double> probabilities() const;
    [[nodiscard]] double norm() const;

  private:
    int n_;
    std::vector<cdouble> amp_;
};

/** <cost> of a QUBO under the measurement distribution of `state`. */
[[nodiscard]] double expectation_cost(const QuboProblem& q, const Statevector& state);

/** Builds, runs and returns the output distribution of the QAOA circuit. */
[[nodiscard]] std::vector<double> qaoa_distribution(const QuboProblem& q,
                                                    const QaoaParams& params);

/** <cost> of the QAOA circuit at the given angles. */
[[nodiscard]] double qaoa_expectation(const QuboProblem& q, const QaoaParams& params);

}  // namespace qloom
