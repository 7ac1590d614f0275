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
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "qloom/error.hpp"

namespace qloom {

/**
 * Exact rational multiple of pi, reduced and normalized to [0, 2*pi).
 *
 * Spider phases are always of this form so that rewrite rules stay exact:
 * no floating-point drift can accumulate across a derivation. Arithmetic
 * throws InternalError on (absurdly unlikely) int64 overflow rather than
 * silently wrapping.
 */
class Phase {
  public:
    /** Zero phase. */
    constexpr Phase() : num_(0), den_(1) {}

    /** num/den * pi; den must be nonzero. Normalizes to [0, 2). */
    Phase(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw InputError("Phase: zero denominator");
        normalize();
    }

    /** Exact value num * pi. */
    static Phase pi_times(std::int64_t num) { return Phase(num, 1); }

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    /** Numeric value in radians, in [0, 2*pi). */
    [[nodiscard]] double radians() const {
        return std::numbers::pi * static_cast<double>(num_) /
               static_cast<double>(den_);
    }

    [[nodiscard]] bool is_zero() const { return num_ == 0; }

    /** True iff the phase is exactly pi. */
    [[nodiscard]] bool is_pi() const { return num_ == 1 && den_ == 1; }

    /** True iff the phase is 0 or pi (a classical-basis phase). */
    [[nodiscard]] bool is_pauli() const { return is_zero() || is_pi(); }

    Phase operator+(const Phase& o) const {
        return Phase(checked_add(checked_mul(num_, o.den_),
                                 checked_mul(o.num_, den_)),
                     checked_mul(den_, o.den_));
    }

    Phase operator-(const Phase& o) const {
        return Phase(checked_sub(checked_mul(num_, o.den_),
                                 checked_mul(o.num_, den_)),
                     checked_mul(den_, o.den_));
    }

    Phase operator-() const { return Phase(-num_, den_); }

    /** Scalar multiple k * phase (still exact). */
    Phase operator*(std::int64_t k) const {
        return Phase(checked_mul(num_, k), den_);
    }

    bool operator==(const Phase& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Phase& o) const { return !(*this == o); }

    /** Render as a human-readable pi multiple, e.g. "3/4*pi" or "0". */
    [[nodiscard]] std::string str() const {
        if (num_ == 0) return "0";
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s + "*pi";
    }

    /**
     * Recover an exact Phase from a radian value when it is within `tol`
     * of a rational pi multiple with denominator <= max_den. Returns
     * nullopt otherwise. Used when serializing runtime angles.
     */
    static std::optional<Phase> from_radians(double radians, std::int64_t max_den = 192,
                                             double tol = 1e-9);

  private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        // Reduce modulo 2*pi fully into [0, 2).
        const std::int64_t two_den = checked_mul(2, den_);
        num_ %= two_den;
        if (num_ < 0) num_ += two_den;
    }

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r = 0;
        if (__builtin_mul_overflow(a, b, &r))
            throw InternalError("Phase: multiply overflow");
        return r;
    }
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r = 0;
        if (__builtin_add_overflow(a, b, &r))
            throw InternalError("Phase: add overflow");
        return r;
    }
    static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
        std::int64_t r = 0;
        if (__builtin_sub_overflow(a, b, &r))
            throw InternalError("Phase: subtract overflow");
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;  // invariant: den_ > 0, gcd(|num_|, den_) = 1, 0 <= num_/den_ < 2
};

}  // namespace qloom
