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

#include "fockdyn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace fockdyn {

namespace {

// Kronrod 15 abscissae (positive half) and weights, with the embedded
// Gauss 7 weights on the shared nodes (odd Kronrod indices).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

struct WorsePanel {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error > y.error;
    return x.a < y.a;  // deterministic tie break
  }
};

}  // namespace

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a,
                               double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {resk * h, std::fabs((resk - resg) * h)};
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  int max_panels,
                                  std::span<const double> split_hints) {
  if (!(b >= a)) throw std::invalid_argument("integrate_adaptive: b < a");
  AdaptiveResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::vector<double> knots{a, b};
  for (double h : split_hints)
    if (h > a && h < b) knots.push_back(h);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::multiset<Panel, WorsePanel> panels;
  double total = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    auto est = gauss_kronrod_15(f, knots[i], knots[i + 1]);
    panels.insert({knots[i], knots[i + 1], est.value, est.error});
    total += est.value;
    err += est.error;
  }

  while (static_cast<int>(panels.size()) < max_panels) {
    if (err <= rel_tol * std::fabs(total) || err == 0.0) break;
    Panel worst = *panels.begin();
    panels.erase(panels.begin());
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted in double
      panels.insert(worst);
      break;
    }
    auto left = gauss_kronrod_15(f, worst.a, mid);
    auto right = gauss_kronrod_15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.insert({worst.a, mid, left.value, left.error});
    panels.insert({mid, worst.b, right.value, right.error});
  }

  out.value = total;
  out.error_estimate = err;
  out.panels = static_cast<int>(panels.size());
  out.converged = err <= rel_tol * std::fabs(total) || err == 0.0;
  return out;
}

}  // namespace fockdyn
