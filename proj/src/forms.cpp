#include "pdoc/forms.hpp"

#include <stdexcept>
#include <string>

#include "pdoc/permutations.hpp"

namespace pdoc {

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::theta: return "theta";
    case FormKind::curvature: return "curvature";
    case FormKind::wedge: return "wedge";
    case FormKind::bracket: return "bracket";
    case FormKind::differential: return "differential";
    case FormKind::custom: break;
  }
  return "custom";
}

namespace {

void check_arity(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) + " arguments, got " +
                                std::to_string(got));
  }
}

}  // namespace

LatticeOperator OperatorForm::operator()(std::span<const LatticeOperator> args) const {
  check_arity(arity_, args.size(), "OperatorForm");
  return rule_(args);
}

GaussianRational ScalarCochain::operator()(std::span<const LatticeOperator> args) const {
  check_arity(arity_, args.size(), "ScalarCochain");
  return rule_(args);
}

LatticeOperator theta(const LatticeOperator& a) { return compose(a, op_projection_plus(a.dim())); }

LatticeOperator curvature(const LatticeOperator& a, const LatticeOperator& b) {
  const auto ta = theta(a);
  const auto tb = theta(b);
  return compose(ta, tb) - compose(tb, ta) - theta(commutator(a, b));
}

LatticeOperator smoothing_part(const LatticeOperator& a, const LatticeOperator& b) {
  const auto p = op_projection_plus(a.dim());
  return compose(compose(a, commutator(p, b)), p) - compose(compose(b, commutator(p, a)), p);
}

OperatorForm theta_form() {
  return OperatorForm(1, [](std::span<const LatticeOperator> a) { return theta(a[0]); }, FormKind::theta);
}

OperatorForm curvature_form() {
  return OperatorForm(2, [](std::span<const LatticeOperator> a) { return curvature(a[0], a[1]); },
                      FormKind::curvature);
}

OperatorForm form_wedge(const OperatorForm& alpha, const OperatorForm& beta) {
  const std::size_t p = alpha.arity();
  const std::size_t q = beta.arity();
  const GaussianRational norm(Rational(1, factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q))));
  auto rule = [alpha, beta, p, q, norm](std::span<const LatticeOperator> args) {
    LatticeOperator sum(args.front().dim());
    std::vector<LatticeOperator> left(p), right(q);
    for (const auto& s : signed_permutations(p + q)) {
      for (std::size_t i = 0; i < p; ++i) left[i] = args[s.image[i]];
      for (std::size_t i = 0; i < q; ++i) right[i] = args[s.image[p + i]];
      const auto term = compose(alpha(left), beta(right));
      sum = s.sign > 0 ? sum + term : sum - term;
    }
    return scale(norm, sum);
  };
  return OperatorForm(p + q, std::move(rule), FormKind::wedge);
}

OperatorForm form_bracket(const OperatorForm& alpha, const OperatorForm& beta) {
  const auto ab = form_wedge(alpha, beta);
  const auto ba = form_wedge(beta, alpha);
  const bool odd = (alpha.arity() * beta.arity()) % 2 == 1;
  auto rule = [ab, ba, odd](std::span<const LatticeOperator> args) {
    return odd ? ab(args) + ba(args) : ab(args) - ba(args);
  };
  return OperatorForm(alpha.arity() + beta.arity(), std::move(rule), FormKind::bracket);
}

std::vector<LatticeOperator> bracket_and_omit(std::span<const LatticeOperator> args, std::size_t i, std::size_t j) {
  std::vector<LatticeOperator> out;
  out.reserve(args.size() - 1);
  out.push_back(commutator(args[i], args[j]));
  for (std::size_t l = 0; l < args.size(); ++l) {
    if (l != i && l != j) out.push_back(args[l]);
  }
  return out;
}

OperatorForm form_differential(const OperatorForm& alpha) {
  auto rule = [alpha](std::span<const LatticeOperator> args) {
    LatticeOperator sum(args.front().dim());
    for (std::size_t i = 0; i < args.size(); ++i) {
      for (std::size_t j = i + 1; j < args.size(); ++j) {
        const auto term = alpha(bracket_and_omit(args, i, j));
        sum = (i + j) % 2 == 0 ? sum + term : sum - term;
      }
    }
    return sum;
  };
  return OperatorForm(alpha.arity() + 1, std::move(rule), FormKind::differential);
}

OperatorForm form_add(const OperatorForm& alpha, const OperatorForm& beta) {
  if (alpha.arity() != beta.arity()) throw std::invalid_argument("form_add: arity mismatch");
  return OperatorForm(alpha.arity(), [alpha, beta](std::span<const LatticeOperator> a) { return alpha(a) + beta(a); });
}

OperatorForm form_subtract(const OperatorForm& alpha, const OperatorForm& beta) {
  if (alpha.arity() != beta.arity()) throw std::invalid_argument("form_subtract: arity mismatch");
  return OperatorForm(alpha.arity(), [alpha, beta](std::span<const LatticeOperator> a) { return alpha(a) - beta(a); });
}

ScalarCochain trace_of(const OperatorForm& alpha) {
  return ScalarCochain(alpha.arity(), [alpha](std::span<const LatticeOperator> a) { return trace(alpha(a)); }, true);
}

}  // namespace pdoc
