/*
   Copyright 2026 the fockdyn authors

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

#pragma once

#include <functional>
#include <span>

namespace fockdyn {

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of per-panel Kronrod error estimates
  int panels = 0;
  bool converged = false;
};

/// One Gauss-Kronrod 15(7) panel on [a, b]. Returns the K15 value and the
/// |K15 - G7| error estimate.
struct PanelEstimate {
  double value;
  double error;
};
PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a,
                               double b);

/// Adaptive bisection: seed panels from {a, split_hints, b}, then repeatedly
/// bisect the panel with the largest error estimate until the accumulated
/// error falls below rel_tol * |value| (or the panel budget runs out, in
/// which case converged is false). Deterministic: ties break on the panel's
/// left endpoint.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  int max_panels,
                                  std::span<const double> split_hints = {});

}  // namespace fockdyn
