#include "zenosim/sweep.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

#include "zenosim/dynamics.hpp"
#include "zenosim/errors.hpp"

namespace zenosim {

namespace {

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParameterError("--grid: cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

void Axis::validate() const {
  std::ostringstream msg;
  if (name.empty()) msg << "axis name is empty";
  else if (count < 1) msg << "axis '" << name << "': count must be >= 1, got " << count;
  else if (!std::isfinite(start) || !std::isfinite(stop)) msg << "axis '" << name << "': endpoints must be finite";
  else if (count > 1 && !(start < stop)) msg << "axis '" << name << "': need start < stop for a strictly increasing grid";
  else return;
  throw ParameterError(msg.str());
}

double Axis::value(int i) const {
  if (count == 1) return start;
  if (i == count - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::vector<double> Axis::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = value(i);
  return v;
}

Axis parse_axis(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParameterError("--grid: expected <axis>=<start>:<stop>:<count>");
  Axis a;
  a.name = std::string(text.substr(0, eq));
  const auto rest = text.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ParameterError("--grid: expected <axis>=<start>:<stop>:<count>");
  a.start = parse_double(rest.substr(0, c1), "start");
  a.stop = parse_double(rest.substr(c1 + 1, c2 - c1 - 1), "stop");
  const auto count_text = rest.substr(c2 + 1);
  auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), a.count);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size())
    throw ParameterError("--grid: cannot parse count '" + std::string(count_text) + "'");
  a.validate();
  return a;
}

GridArgmax SweepResult::argmax() const {
  GridArgmax best{0, 0, values.empty() ? 0.0 : values.front()};
  for (int i = 0; i < outer.count; ++i)
    for (int j = 0; j < inner.count; ++j)
      if (at(i, j) > best.value) best = {i, j, at(i, j)};
  return best;
}

SweepResult sweep_serial(const Axis& outer, const Axis& inner, const PointFn& f) {
  outer.validate();
  inner.validate();
  SweepResult r{outer, inner, std::vector<double>(static_cast<std::size_t>(outer.count) * inner.count)};
  for (int i = 0; i < outer.count; ++i)
    for (int j = 0; j < inner.count; ++j)
      r.values[static_cast<std::size_t>(i) * inner.count + j] = f(outer.value(i), inner.value(j));
  return r;
}

SweepResult sweep_parallel(const Axis& outer, const Axis& inner, const PointFn& f) {
  outer.validate();
  inner.validate();
  const long n = static_cast<long>(outer.count) * inner.count;
  SweepResult r{outer, inner, std::vector<double>(static_cast<std::size_t>(n))};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < n; ++k) {
    const int i = static_cast<int>(k / inner.count);
    const int j = static_cast<int>(k % inner.count);
    try {
      r.values[static_cast<std::size_t>(k)] = f(outer.value(i), inner.value(j));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return r;
}

void RunParameters::validate() const {
  std::ostringstream msg;
  if (steps < 100) msg << "steps must be >= 100, got " << steps;
  else if (!(lambda_tf > 0.0)) msg << "lambda_tf must be positive, got " << lambda_tf;
  else if (!(kappa >= 0.0)) msg << "kappa must be non-negative, got " << kappa;
  else if (!(gamma >= 0.0)) msg << "gamma must be non-negative, got " << gamma;
  else return;
  throw ParameterError(msg.str());
}

ModelSpec RunParameters::to_model() const {
  validate();
  switch (model) {
    case ModelKind::TwoAtom:
      return ModelSpec::two_atom(epsilon, lambda_tf, kappa, gamma);
    case ModelKind::ThreeAtom:
      return ModelSpec::three_atom(epsilon, lambda_tf, kappa, gamma);
    case ModelKind::ZenoBaseline:
      break;
  }
  // The baseline runs at Omega_Z = pi / t_f so that lambda_tf sets its window.
  return ModelSpec::zeno_baseline(std::numbers::pi / lambda_tf);
}

void RunParameters::set(std::string_view axis, double value) {
  if (axis == "epsilon") epsilon = value;
  else if (axis == "lambda_tf") lambda_tf = value;
  else if (axis == "kappa" || axis == "kappa_over_lambda") kappa = value;
  else if (axis == "gamma" || axis == "gamma_over_lambda") gamma = value;
  else throw ParameterError("unknown sweep axis '" + std::string(axis) + "' (expected epsilon, lambda_tf, kappa or gamma)");
}

PointFn point_evaluator(const RunParameters& base, const std::string& outer_axis, const std::string& inner_axis) {
  RunParameters probe = base;  // rejects unknown axis names up front
  probe.set(outer_axis, 0.0);
  probe.set(inner_axis, 0.0);
  return [base, outer_axis, inner_axis](double a, double b) {
    RunParameters p = base;
    p.set(outer_axis, a);
    p.set(inner_axis, b);
    return final_fidelity(p.to_model(), p.steps);
  };
}

}  // namespace zenosim
