#pragma once

// Two-axis parameter grids evaluated point by point. The serial version is the
// reference; the OpenMP version must agree with it bit for bit.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "zenosim/models.hpp"

namespace zenosim {

struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  /// count >= 1; start < stop when count > 1; finite endpoints.
  void validate() const;
  double value(int i) const;
  std::vector<double> values() const;
};

/// Parses "name=start:stop:count". Throws ParameterError naming the problem.
Axis parse_axis(std::string_view text);

// Axis names understood by RunParameters::set: epsilon, lambda_tf, kappa (or
// kappa_over_lambda), gamma (or gamma_over_lambda).

struct GridArgmax {
  int outer = 0;
  int inner = 0;
  double value = 0.0;
};

struct SweepResult {
  Axis outer;
  Axis inner;
  std::vector<double> values;  // row-major, outer index slow

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * inner.count + j]; }
  /// First maximum in row-major order.
  GridArgmax argmax() const;
};

using PointFn = std::function<double(double outer_value, double inner_value)>;

SweepResult sweep_serial(const Axis& outer, const Axis& inner, const PointFn& f);
/// Same grid over OpenMP threads. If any points throw, the exception of the
/// lowest grid index is rethrown after the loop.
SweepResult sweep_parallel(const Axis& outer, const Axis& inner, const PointFn& f);

/// Physical parameters of a single closed or open run.
struct RunParameters {
  ModelKind model = ModelKind::TwoAtom;
  double epsilon = 0.2636;
  double lambda_tf = 10.0;
  double kappa = 0.0;
  double gamma = 0.0;
  int steps = 20000;

  void validate() const;
  ModelSpec to_model() const;
  /// Overrides one field by axis name; throws ParameterError for unknown names.
  void set(std::string_view axis, double value);
};

/// Final fidelity as a function of the two axis values, starting from `base`.
PointFn point_evaluator(const RunParameters& base, const std::string& outer_axis, const std::string& inner_axis);

}  // namespace zenosim
