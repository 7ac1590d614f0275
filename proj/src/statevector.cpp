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

#include <cmath>
#include <complex>
#include <numbers>

#include "qloom/gates.hpp"

namespace qloom {

namespace {

void check_qubit(int q, int n, const char* what) {
    if (q < 0 || q >= n)
        throw InputError(std::string(what) + ": qubit index out of range: " +
                         std::to_string(q));
}

}  // namespace

Statevector::Statevector(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1) throw InputError("statevector: need at least 1 qubit");
    if (num_qubits > 14)
        throw ResourceError("statevector: more than 14 qubits");
    amp_.assign(std::size_t{1} << n_, cdouble(0.0));
    amp_[0] = 1.0;
}

void Statevector::apply(const GateOp& op) {
    const std::size_t dim = amp_.size();
    switch (op.kind) {
        case GateKind::H: {
            check_qubit(op.q0, n_, "H");
            const std::size_t bit = std::size_t{1} << op.q0;
            const double s = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & bit) continue;
                const cdouble a = amp_[i], b = amp_[i | bit];
                amp_[i] = s * (a + b);
                amp_[i | bit] = s * (a - b);
            }
            break;
        }
        case GateKind::RZ: {
            check_qubit(op.q0, n_, "RZ");
            const std::size_t bit = std::size_t{1} << op.q0;
            const cdouble e_plus = std::polar(1.0, op.theta);
            const cdouble e_minus = std::polar(1.0, -op.theta);
            for (std::size_t i = 0; i < dim; ++i)
                amp_[i] *= (i & bit) ? e_minus : e_plus;
            break;
        }
        case GateKind::RX: {
            check_qubit(op.q0, n_, "RX");
            const std::size_t bit = std::size_t{1} << op.q0;
            const cdouble c = std::cos(op.theta);
            const cdouble is = cdouble(0.0, 1.0) * std::sin(op.theta);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & bit) continue;
                const cdouble a = amp_[i], b = amp_[i | bit];
                amp_[i] = c * a + is * b;
                amp_[i | bit] = is * a + c * b;
            }
            break;
        }
        case GateKind::CZ: {
            check_qubit(op.q0, n_, "CZ");
            check_qubit(op.q1, n_, "CZ");
            if (op.q0 == op.q1) throw InputError("CZ: identical qubits");
            const std::size_t m =
                (std::size_t{1} << op.q0) | (std::size_t{1} << op.q1);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & m) == m) amp_[i] = -amp_[i];
            break;
        }
        case GateKind::CNOT: {
            check_qubit(op.q0, n_, "CNOT");
            check_qubit(op.q1, n_, "CNOT");
            if (op.q0 == op.q1) throw InputError("CNOT: identical qubits");
            const std::size_t cbit = std::size_t{1} << op.q0;
            const std::size_t tbit = std::size_t{1} << op.q1;
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & cbit) && !(i & tbit)) std::swap(amp_[i], amp_[i | tbit]);
            break;
        }
        case GateKind::ZZ: {
            check_qubit(op.q0, n_, "ZZ");
            check_qubit(op.q1, n_, "ZZ");
            if (op.q0 == op.q1) throw InputError("ZZ: identical qubits");
            const std::size_t b0 = std::size_t{1} << op.q0;
            const std::size_t b1 = std::size_t{1} << op.q1;
            const cdouble e_plus = std::polar(1.0, op.theta);
            const cdouble e_minus = std::polar(1.0, -op.theta);
            for (std::size_t i = 0; i < dim; ++i) {
                const bool equal = static_cast<bool>(i & b0) == static_cast<bool>(i & b1);
                amp_[i] *= equal ? e_plus : e_minus;
            }
            break;
        }
        case GateKind::CTRL0_RX: {
            check_qubit(op.q0, n_, "CTRL0_RX");
            const std::size_t bit = std::size_t{1} << op.q0;
            std::size_t cmask = 0;
            for (const int c : op.controls) {
                check_qubit(c, n_, "CTRL0_RX control");
                if (c == op.q0)
                    throw InputError("CTRL0_RX: target cannot be a control");
                cmask |= std::size_t{1} << c;
            }
            const cdouble c = std::cos(op.theta);
            const cdouble is = cdouble(0.0, 1.0) * std::sin(op.theta);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & bit) continue;
                if (i & cmask) continue;  // some control is |1>: identity
                const cdouble a = amp_[i], b = amp_[i | bit];
                amp_[i] = c * a + is * b;
                amp_[i | bit] = is * a + c * b;
            }
            break;
        }
    }
}

void Statevector::apply_circuit(const Circuit& c) {
    for (const GateOp& op : c) apply(op);
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i) p[i] = std::norm(amp_[i]);
    return p;
}

double Statevector::norm() const {
    double s = 0.0;
    for (const cdouble& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

double expectation_cost(const QuboProblem& q, const Statevector& state) {
    if (q.num_vars != state.num_qubits())
        throw InputError("expectation_cost: qubit count mismatch");
    const std::vector<double> p = state.probabilities();
    double e = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p[x] > 0.0) e += p[x] * qubo_cost(q, x);
    return e;
}

std::vector<double> qaoa_distribution(const QuboProblem& q, const QaoaParams& params) {
    Statevector sv(q.num_vars);
    sv.apply_circuit(build_qaoa_circuit(q, params));
    return sv.probabilities();
}

double qaoa_expectation(const QuboProblem& q, const QaoaParams& params) {
    Statevector sv(q.num_vars);
    sv.apply_circuit(build_qaoa_circuit(q, params));
    return expectation_cost(q, sv);
}

}  // namespace qloom
