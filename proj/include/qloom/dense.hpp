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

#include <complex>
#include <cstddef>
#include <vector>

#include "qloom/error.hpp"

namespace qloom {

using cdouble = std::complex<double>;

/**
 * Small dense complex matrix, row major. Used for diagram semantics,
 * oracle computations and equality checks; not a performance structure.
 */
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cdouble> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, cdouble(0.0)) {}

    [[nodiscard]] cdouble& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    [[nodiscard]] const cdouble& at(std::size_t r, std::size_t c) const {
        return a[r * cols + c];
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

/** Matrix product a * b. */
[[nodiscard]] Matrix matmul(const Matrix& a, const Matrix& b);

/** Kronecker product a (x) b (a's indices are the more significant ones). */
[[nodiscard]] Matrix kron(const Matrix& a, const Matrix& b);

/** Conjugate transpose. */
[[nodiscard]] Matrix dagger(const Matrix& m);

/** Matrix-vector product. */
[[nodiscard]] std::vector<cdouble> matvec(const Matrix& m, const std::vector<cdouble>& v);

/** Max-norm distance between same-shape matrices. */
[[nodiscard]] double max_abs_diff(const Matrix& a, const Matrix& b);

/** Entrywise equality within tol (same shape required). */
[[nodiscard]] bool allclose(const Matrix& a, const Matrix& b, double tol);

/**
 * True when a == lambda * b for some complex lambda, within tol in max
 * norm. lambda is derived from the largest-magnitude entry of b; if b is
 * numerically zero the check degenerates to "a is zero too". On success,
 * *lambda_out (if non-null) receives the scalar.
 */
[[nodiscard]] bool equal_up_to_scalar(const Matrix& a, const Matrix& b, double tol,
                                      cdouble* lambda_out = nullptr);

/** True when a == lambda * b for some |lambda| = 1 phase, within tol. */
[[nodiscard]] bool equal_up_to_phase(const std::vector<cdouble>& a,
                                     const std::vector<cdouble>& b, double tol);

}  // namespace qloom
