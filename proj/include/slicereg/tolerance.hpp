/*
   Copyright 2026 The slicereg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SLICEREG_TOLERANCE_HPP
#define SLICEREG_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace slicereg {

/// Global numeric tolerances. All comparisons in the library route through
/// these knobs; the CLI exposes `div` as `--tol`.
struct Tolerance {
    double abs = 1e-9;   ///< absolute floor for scalar equality
    double rel = 1e-9;   ///< relative factor for scalar equality
    double div = 1e-8;   ///< polynomial divisibility / verification threshold
    double rank = 1e-8;  ///< singular-value ratio for slice classification
    double root = 1e-6;  ///< residual gate for the root finder
    double unit = 1e-6;  ///< admissible drift of an imaginary unit axis
};

inline Tolerance& tolerance() {
    static Tolerance t;
    return t;
}

/// |a - b| <= abs + rel * max(|a|, |b|)
inline bool near(double a, double b) {
    const Tolerance& t = tolerance();
    return std::abs(a - b) <= t.abs + t.rel * std::max(std::abs(a), std::abs(b));
}

inline bool near_zero(double v, double scale = 1.0) {
    const Tolerance& t = tolerance();
    return std::abs(v) <= t.abs + t.rel * std::abs(scale);
}

} // namespace slicereg

#endif
