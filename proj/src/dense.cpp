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

#include "qloom/dense.hpp"

#include <algorithm>
#include <cmath>

namespace qloom {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw InternalError("matmul: shape mismatch");
    Matrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const cdouble aik = a.at(i, k);
            if (aik == cdouble(0.0)) continue;
            for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    }
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            const cdouble aij = a.at(i, j);
            if (aij == cdouble(0.0)) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    r.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
        }
    return r;
}

Matrix dagger(const Matrix& m) {
    Matrix r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = std::conj(m.at(i, j));
    return r;
}

std::vector<cdouble> matvec(const Matrix& m, const std::vector<cdouble>& v) {
    if (m.cols != v.size()) throw InternalError("matvec: shape mismatch");
    std::vector<cdouble> r(m.rows, cdouble(0.0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw InternalError("max_abs_diff: shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i)
        d = std::max(d, std::abs(a.a[i] - b.a[i]));
    return d;
}

bool allclose(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    return max_abs_diff(a, b) <= tol;
}

bool equal_up_to_scalar(const Matrix& a, const Matrix& b, double tol,
                        cdouble* lambda_out) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    std::size_t imax = 0;
    double vmax = 0.0;
    for (std::size_t i = 0; i < b.a.size(); ++i) {
        const double v = std::abs(b.a[i]);
        if (v > vmax) {
            vmax = v;
            imax = i;
        }
    }
    if (vmax <= tol) {
        // b is (numerically) zero: equal iff a is zero as well; lambda = 1.
        for (const cdouble& x : a.a)
            if (std::abs(x) > tol) return false;
        if (lambda_out) *lambda_out = cdouble(1.0);
        return true;
    }
    const cdouble lambda = a.a[imax] / b.a[imax];
    for (std::size_t i = 0; i < a.a.size(); ++i)
        if (std::abs(a.a[i] - lambda * b.a[i]) > tol) return false;
    if (lambda_out) *lambda_out = lambda;
    return true;
}

bool equal_up_to_phase(const std::vector<cdouble>& a, const std::vector<cdouble>& b,
                       double tol) {
    if (a.size() != b.size()) return false;
    std::size_t imax = 0;
    double vmax = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double v = std::abs(b[i]);
        if (v > vmax) {
            vmax = v;
            imax = i;
        }
    }
    if (vmax <= tol) {
        for (const cdouble& x : a)
            if (std::abs(x) > tol) return false;
        return true;
    }
    cdouble lambda = a[imax] / b[imax];
    const double mag = std::abs(lambda);
    if (mag <= tol) return false;
    lambda /= mag;  // project onto the unit circle: phases only
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - lambda * b[i]) > tol) return false;
    return true;
}

}  // namespace qloom
