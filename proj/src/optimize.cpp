// Copyright 2026 The photonsim Authors
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

#include "photonsim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "photonsim/error.hpp"

namespace photonsim {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options) {
  const Eigen::Index k = x0.size();
  if (k < 1) throw InvalidArgument("nelder_mead needs at least one parameter");
  NelderMeadResult result;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return f(x);
  };
  const double f0 = eval(x0);
  if (!std::isfinite(f0)) throw NumericError("objective is not finite at the starting point");
  if (options.max_iter <= 0) {
    result.x = x0;
    result.value = f0;
    return result;
  }

  std::vector<Eigen::VectorXd> points{x0};
  std::vector<double> values{f0};
  for (Eigen::Index i = 0; i < k; ++i) {
    Eigen::VectorXd x = x0;
    x(i) += options.initial_step;
    points.push_back(x);
    values.push_back(eval(x));
  }
  std::vector<std::size_t> order(points.size());

  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Eigen::VectorXd> p;
    std::vector<double> v;
    for (std::size_t i : order) {
      p.push_back(std::move(points[i]));
      v.push_back(values[i]);
    }
    points = std::move(p);
    values = std::move(v);
  };

  const std::size_t worst = static_cast<std::size_t>(k);
  for (; result.iterations < options.max_iter; ++result.iterations) {
    sort_simplex();
    double diameter = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      diameter = std::max(diameter, (points[i] - points[0]).cwiseAbs().maxCoeff());
    }
    if (diameter < options.xtol || values[worst] - values[0] < options.ftol) {
      result.converged = true;
      break;
    }
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(k);
    for (std::size_t i = 0; i < worst; ++i) centroid += points[i];
    centroid /= static_cast<double>(k);

    const Eigen::VectorXd reflected = centroid + (centroid - points[worst]);
    const double fr = eval(reflected);
    if (fr < values[0]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (reflected - centroid);
      const double fe = eval(expanded);
      if (fe < fr) {
        points[worst] = expanded;
        values[worst] = fe;
      } else {
        points[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[worst - 1]) {
      points[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (points[worst] - centroid));
    const double fc = eval(contracted);
    if (outside ? fc <= fr : fc < values[worst]) {
      points[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
      points[i] = points[0] + 0.5 * (points[i] - points[0]);
      values[i] = eval(points[i]);
    }
  }
  sort_simplex();
  result.x = points[0];
  result.value = values[0];
  return result;
}

}  // namespace photonsim
