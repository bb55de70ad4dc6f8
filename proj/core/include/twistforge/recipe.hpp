#ifndef TWISTFORGE_RECIPE_HPP
#define TWISTFORGE_RECIPE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistforge/series.hpp"

namespace twistforge {

/// Symbolic expression in U(g), evaluated to a truncated series after
/// specialization of its parameters.
struct UNode;
using UExpr = std::shared_ptr<const UNode>;

struct UNode {
  enum class Op { Lie, Const, Sum, Product, Scale, Func, Named };
  Op op;
  std::optional<LieElement> lie;
  Scalar coeff;
  SeriesKind kind = SeriesKind::Exp;
  std::string name;
  std::vector<UExpr> children;
};

UExpr u_lie(LieElement x);
UExpr u_const(Scalar c);
UExpr u_sum(std::vector<UExpr> terms);
UExpr u_product(std::vector<UExpr> factors);
UExpr u_scale(Scalar c, UExpr e);
UExpr u_func(SeriesKind kind, UExpr e);
/// Same value as e, printed as `name`.
UExpr u_named(std::string name, UExpr e);

std::string to_string(const UExpr& e);

/// Two-tensor expression.
struct TNode;
using TExpr = std::shared_ptr<const TNode>;

struct TNode {
  enum class Op { Otimes, Wedge, Sum, Product, Scale, Exp };
  Op op;
  UExpr left, right;
  Scalar coeff;
  std::vector<TExpr> children;
};

TExpr t_otimes(UExpr a, UExpr b);
/// a (x) b - b (x) a.
TExpr t_wedge(UExpr a, UExpr b);
TExpr t_sum(std::vector<TExpr> terms);
TExpr t_product(std::vector<TExpr> factors);
TExpr t_scale(Scalar c, TExpr e);
TExpr t_exp(TExpr e);

std::string to_string(const TExpr& e);

/// Memo for shared subexpressions (sigma, phi) within one evaluation.
class EvalContext {
 public:
  EvalContext(AlgebraPtr algebra, SpecializationMap map) : algebra_(std::move(algebra)), map_(std::move(map)) {}
  const AlgebraPtr& algebra() const { return algebra_; }
  const SpecializationMap& map() const { return map_; }

  Series eval(const UExpr& e, int order);
  Series eval(const TExpr& e, int order);

 private:
  AlgebraPtr algebra_;
  SpecializationMap map_;
  // Holds the node alive so its address cannot be reused by another node.
  std::map<std::pair<const void*, int>, std::pair<UExpr, Series>> memo_;
};

}  // namespace twistforge

#endif  // TWISTFORGE_RECIPE_HPP
