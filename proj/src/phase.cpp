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

#include "qloom/phase.hpp"

#include <cmath>

namespace qloom {

std::optional<Phase> Phase::from_radians(double radians, std::int64_t max_den,
                                         double tol) {
    if (!std::isfinite(radians)) return std::nullopt;
    const double turns = radians / std::numbers::pi;
    // Small denominators first so the simplest representation wins.
    for (std::int64_t den = 1; den <= max_den; ++den) {
        const double scaled = turns * static_cast<double>(den);
        const double rounded = std::round(scaled);
        if (std::abs(rounded) > 1e15) return std::nullopt;
        const auto num = static_cast<std::int64_t>(rounded);
        const double back =
            std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
        if (std::abs(back - radians) <= tol) return Phase(num, den);
    }
    return std::nullopt;
}

}  // namespace qloom
