#include "twistforge/recipe.hpp"

namespace twistforge {

namespace {

UExpr make_u(UNode n) { return std::make_shared<const UNode>(std::move(n)); }
TExpr make_t(TNode n) { return std::make_shared<const TNode>(std::move(n)); }

bool is_compound(const Scalar& c) {
  std::string s = c.to_string();
  return s.find_first_of("+-/ ", 1) != std::string::npos;
}

std::string scalar_prefix(const Scalar& c) {
  std::string s = c.to_string();
  return is_compound(c) ? "(" + s + ")" : s;
}

std::string scaled(const Scalar& c, const std::string& s) {
  if (c == Scalar(-1)) return "-" + s;
  return scalar_prefix(c) + "*" + s;
}

// Appends a summand, folding a leading minus into the separator.
void append_term(std::string& out, const std::string& s) {
  if (out.empty()) {
    out = s;
  } else if (!s.empty() && s.front() == '-') {
    out += " - " + s.substr(1);
  } else {
    out += " + " + s;
  }
}

// sum_k L_k hbar^k * child, keeping degrees 0..order. Degrees below zero must cancel.
template <class Eval>
Series scale_series(const HbarLaurent& l, int order, int rank, const AlgebraPtr& alg, Eval eval, const std::string& what) {
  Series out(alg, rank, order);
  if (l.is_zero()) return out;
  const int kmin = l.valuation();
  const int child_order = order - kmin;
  if (child_order < 0) return out;
  Series child = eval(child_order);
  for (int j = 0; j <= child_order; ++j) {
    if (child[j].is_zero()) continue;
    for (const auto& [k, c] : l.terms()) {
      int d = j + k;
      if (d > order) continue;
      if (d < 0) throw ValuationError("negative hbar power in " + what);
      out.at(d) += child[j] * c;
    }
  }
  return out;
}

}  // namespace

UExpr u_lie(LieElement x) {
  UNode n{UNode::Op::Lie, std::move(x), {}, {}, {}, {}};
  return make_u(std::move(n));
}

UExpr u_const(Scalar c) { return make_u({UNode::Op::Const, std::nullopt, std::move(c), {}, {}, {}}); }

UExpr u_sum(std::vector<UExpr> terms) {
  return make_u({UNode::Op::Sum, std::nullopt, {}, {}, {}, std::move(terms)});
}

UExpr u_product(std::vector<UExpr> factors) {
  return make_u({UNode::Op::Product, std::nullopt, {}, {}, {}, std::move(factors)});
}

UExpr u_scale(Scalar c, UExpr e) {
  return make_u({UNode::Op::Scale, std::nullopt, std::move(c), {}, {}, {std::move(e)}});
}

UExpr u_func(SeriesKind kind, UExpr e) {
  return make_u({UNode::Op::Func, std::nullopt, {}, kind, {}, {std::move(e)}});
}

UExpr u_named(std::string name, UExpr e) {
  return make_u({UNode::Op::Named, std::nullopt, {}, {}, std::move(name), {std::move(e)}});
}

std::string to_string(const UExpr& e) {
  auto join = [&](bool sum) {
    std::string out;
    for (const auto& c : e->children) {
      std::string s = to_string(c);
      if (sum) {
        append_term(out, s);
        continue;
      }
      if (c->op == UNode::Op::Sum) s = "(" + s + ")";
      out += (out.empty() ? "" : " ") + s;
    }
    return out;
  };
  switch (e->op) {
    case UNode::Op::Lie: {
      std::string s = e->lie->to_string();
      return e->lie->coeffs().size() > 1 ? "(" + s + ")" : s;
    }
    case UNode::Op::Const: return e->coeff.to_string();
    case UNode::Op::Sum: return join(true);
    case UNode::Op::Product: return join(false);
    case UNode::Op::Scale: {
      std::string s = to_string(e->children[0]);
      if (e->children[0]->op == UNode::Op::Sum) s = "(" + s + ")";
      return scaled(e->coeff, s);
    }
    case UNode::Op::Func: return to_string(e->kind) + "(" + to_string(e->children[0]) + ")";
    case UNode::Op::Named: return e->name;
  }
  return "?";
}

TExpr t_otimes(UExpr a, UExpr b) { return make_t({TNode::Op::Otimes, std::move(a), std::move(b), {}, {}}); }
TExpr t_wedge(UExpr a, UExpr b) { return make_t({TNode::Op::Wedge, std::move(a), std::move(b), {}, {}}); }
TExpr t_sum(std::vector<TExpr> terms) { return make_t({TNode::Op::Sum, nullptr, nullptr, {}, std::move(terms)}); }
TExpr t_product(std::vector<TExpr> factors) {
  return make_t({TNode::Op::Product, nullptr, nullptr, {}, std::move(factors)});
}
TExpr t_scale(Scalar c, TExpr e) { return make_t({TNode::Op::Scale, nullptr, nullptr, std::move(c), {std::move(e)}}); }
TExpr t_exp(TExpr e) { return make_t({TNode::Op::Exp, nullptr, nullptr, {}, {std::move(e)}}); }

std::string to_string(const TExpr& e) {
  switch (e->op) {
    case TNode::Op::Otimes: return to_string(e->left) + " (x) " + to_string(e->right);
    case TNode::Op::Wedge: return to_string(e->left) + " ^ " + to_string(e->right);
    case TNode::Op::Sum:
    case TNode::Op::Product: {
      std::string out;
      for (const auto& c : e->children) {
        std::string s = to_string(c);
        if (e->op == TNode::Op::Sum) {
          append_term(out, s);
          continue;
        }
        if (c->op == TNode::Op::Sum) s = "(" + s + ")";
        out += (out.empty() ? "" : " ") + s;
      }
      return out;
    }
    case TNode::Op::Scale: {
      std::string s = to_string(e->children[0]);
      if (e->children[0]->op != TNode::Op::Exp) s = "(" + s + ")";
      return scaled(e->coeff, s);
    }
    case TNode::Op::Exp: return "exp(" + to_string(e->children[0]) + ")";
  }
  return "?";
}

Series EvalContext::eval(const UExpr& e, int order) {
  auto key = std::make_pair(static_cast<const void*>(e.get()), order);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.second;
  Series out(algebra_, 1, order);
  switch (e->op) {
    case UNode::Op::Lie:
      require_same_algebra(e->lie->algebra(), algebra_, "recipe");
      out = specialize(to_tensor(*e->lie), map_, order);
      break;
    case UNode::Op::Const:
      out = specialize(SymTensor::unit(algebra_, 1) * e->coeff, map_, order);
      break;
    case UNode::Op::Sum:
      for (const auto& c : e->children) out += eval(c, order);
      break;
    case UNode::Op::Product:
      out = Series::unit(algebra_, 1, order);
      for (const auto& c : e->children) out = out * eval(c, order);
      break;
    case UNode::Op::Scale:
      out = scale_series(specialize_laurent(e->coeff, map_), order, 1, algebra_,
                         [&](int n) { return eval(e->children[0], n); }, to_string(e));
      break;
    case UNode::Op::Func: {
      Series arg = eval(e->children[0], order);
      if (!arg[0].is_zero()) throw ValuationError("argument of " + to_string(e) + " has hbar-valuation 0");
      out = series_function(e->kind, arg);
      break;
    }
    case UNode::Op::Named:
      out = eval(e->children[0], order);
      break;
  }
  memo_.insert_or_assign(key, std::make_pair(e, out));
  return out;
}

Series EvalContext::eval(const TExpr& e, int order) {
  switch (e->op) {
    case TNode::Op::Otimes: return otimes(eval(e->left, order), eval(e->right, order));
    case TNode::Op::Wedge: {
      Series a = eval(e->left, order), b = eval(e->right, order);
      return otimes(a, b) - otimes(b, a);
    }
    case TNode::Op::Sum: {
      Series out(algebra_, 2, order);
      for (const auto& c : e->children) out += eval(c, order);
      return out;
    }
    case TNode::Op::Product: {
      Series out = Series::unit(algebra_, 2, order);
      for (const auto& c : e->children) out = out * eval(c, order);
      return out;
    }
    case TNode::Op::Scale:
      return scale_series(specialize_laurent(e->coeff, map_), order, 2, algebra_,
                          [&](int n) { return eval(e->children[0], n); }, to_string(e));
    case TNode::Op::Exp: {
      Series arg = eval(e->children[0], order);
      if (!arg[0].is_zero()) throw ValuationError("argument of " + to_string(e) + " has hbar-valuation 0");
      return series_function(SeriesKind::Exp, arg);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace twistforge
