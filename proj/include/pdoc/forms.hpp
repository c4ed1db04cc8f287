#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "pdoc/lattice_operator.hpp"

namespace pdoc {

enum class FormKind { theta, curvature, wedge, bracket, differential, custom };

std::string_view to_string(FormKind kind);

/// Alternating multilinear map from p-tuples of operators to operators, kept as its
/// evaluation rule.
class OperatorForm {
 public:
  using Rule = std::function<LatticeOperator(std::span<const LatticeOperator>)>;

  OperatorForm(std::size_t arity, Rule rule, FormKind kind = FormKind::custom)
      : arity_(arity), rule_(std::move(rule)), kind_(kind) {}

  std::size_t arity() const { return arity_; }
  FormKind kind() const { return kind_; }

  /// Throws std::invalid_argument on an arity mismatch.
  LatticeOperator operator()(std::span<const LatticeOperator> args) const;

 private:
  std::size_t arity_;
  Rule rule_;
  FormKind kind_;
};

/// theta_a = a p_+
LatticeOperator theta(const LatticeOperator& a);

/// Omega(a, b) = theta_a theta_b - theta_b theta_a - theta_[a,b]. Always finite rank.
LatticeOperator curvature(const LatticeOperator& a, const LatticeOperator& b);

/// s(a, b) = a [p_+, b] p_+ - b [p_+, a] p_+, the finite-rank expression of the curvature.
LatticeOperator smoothing_part(const LatticeOperator& a, const LatticeOperator& b);

OperatorForm theta_form();
OperatorForm curvature_form();

/// (alpha ^ beta)(a_1..a_{p+q}) = 1/(p! q!) sum_s eps(s) alpha(a_s(1..p)) beta(a_s(p+1..p+q))
OperatorForm form_wedge(const OperatorForm& alpha, const OperatorForm& beta);

/// [alpha, beta] = alpha ^ beta - (-1)^{pq} beta ^ alpha
OperatorForm form_bracket(const OperatorForm& alpha, const OperatorForm& beta);

/// (d alpha)(a_0..a_p) = sum_{i<j} (-1)^{i+j} alpha([a_i, a_j], a_0..^i..^j..a_p)
OperatorForm form_differential(const OperatorForm& alpha);

OperatorForm form_add(const OperatorForm& alpha, const OperatorForm& beta);
OperatorForm form_subtract(const OperatorForm& alpha, const OperatorForm& beta);

/// Scalar-valued multilinear cochain on operators.
class ScalarCochain {
 public:
  using Rule = std::function<GaussianRational(std::span<const LatticeOperator>)>;

  ScalarCochain(std::size_t arity, Rule rule, bool skew) : arity_(arity), rule_(std::move(rule)), skew_(skew) {}

  std::size_t arity() const { return arity_; }
  bool skew() const { return skew_; }
  GaussianRational operator()(std::span<const LatticeOperator> args) const;

 private:
  std::size_t arity_;
  Rule rule_;
  bool skew_;
};

/// a -> tr(alpha(a)), alternating when alpha is.
ScalarCochain trace_of(const OperatorForm& alpha);

/// ([a_i, a_j], a_0..^i..^j..a_p): the argument list of one coboundary term.
std::vector<LatticeOperator> bracket_and_omit(std::span<const LatticeOperator> args, std::size_t i, std::size_t j);

}  // namespace pdoc
