#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "zenosim/linalg.hpp"

namespace zenosim {

/// H(t) = H_0 + sum_k f_k(t) H_k with constant matrices H_k and real envelopes f_k.
class TimeDependentHamiltonian {
public:
  using Envelope = std::function<double(double)>;

  struct Term {
    Op op;
    Envelope envelope;
  };

  TimeDependentHamiltonian() = default;
  explicit TimeDependentHamiltonian(Op constant) : constant_(std::move(constant)) {}

  void add_term(Op op, Envelope envelope) { terms_.push_back({std::move(op), std::move(envelope)}); }

  std::size_t dim() const noexcept { return constant_.dim(); }
  const Op& constant() const noexcept { return constant_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Writes H(t) into `out`, which must already have the right dimension.
  void evaluate_into(double t, Op& out) const {
    auto dst = out.data();
    const auto c = constant_.data();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = c[i];
    for (const auto& term : terms_) {
      const double f = term.envelope(t);
      if (f == 0.0) continue;
      const auto src = term.op.data();
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += f * src[i];
    }
  }

  Op operator()(double t) const {
    Op out(dim());
    evaluate_into(t, out);
    return out;
  }

private:
  Op constant_;
  std::vector<Term> terms_;
};

}  // namespace zenosim
