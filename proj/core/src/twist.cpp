#include "twistforge/twist.hpp"

namespace twistforge {

namespace {

constexpr std::size_t kWitnessLimit = 800;

std::string clip(std::string s) {
  if (s.size() > kWitnessLimit) s = s.substr(0, kWitnessLimit) + " ...";
  return s;
}

Series unit_like(const Series& s, int rank) { return Series::unit(s.algebra(), rank, s.order()); }

}  // namespace

std::string to_string(const TwistPlan& plan) {
  std::string out;
  for (const auto& f : plan) {
    if (!out.empty()) out += " * ";
    out += "exp(" + to_string(f.argument) + ")";
  }
  return out.empty() ? "1" : out;
}

Twist build_twist(const TwistPlan& plan, const AlgebraPtr& algebra, const SpecializationMap& m, int order) {
  EvalContext ctx(algebra, m);
  Twist t{{}, {}, Series::unit(algebra, 2, order)};
  for (const auto& f : plan) {
    Series arg = [&] {
      try {
        return ctx.eval(f.argument, order);
      } catch (const ValuationError& e) {
        throw ValuationError("factor " + f.label + ": " + e.what());
      } catch (const NonPolynomialSpecialization& e) {
        throw NonPolynomialSpecialization("factor " + f.label + ": " + e.what());
      }
    }();
    if (!arg[0].is_zero())
      throw ValuationError("factor " + f.label + ": exponent " + to_string(f.argument) + " has hbar-valuation 0");
    Series value = series_function(SeriesKind::Exp, arg);
    t.labels.push_back(f.label);
    t.value = t.value * value;
    t.factors.push_back(std::move(value));
  }
  return t;
}

TwistPlan jordanian_twist_plan(const JordanianData& d) {
  const Scalar half = Scalar::fraction(1, 2);
  UExpr sigma = u_named("sigma", u_scale(half, u_func(SeriesKind::Log1p, u_scale(d.xi, u_lie(d.y0)))));
  TwistPlan plan;
  if (!d.pairs.empty()) {
    std::vector<TExpr> terms;
    for (const auto& p : d.pairs) {
      UExpr y = u_lie(p.y);
      if (!p.t.is_zero()) y = u_product({y, u_func(SeriesKind::Exp, u_scale(Scalar(-2) * p.t, sigma))});
      terms.push_back(t_otimes(u_lie(p.x), y));
    }
    plan.push_back({"pairs", t_scale(d.xi, t_sum(std::move(terms)))});
  }
  plan.push_back({"jordanian", t_otimes(u_scale(Scalar(2), u_lie(d.x0)), sigma)});
  return plan;
}

TwistPlan abelian_twist_plan(const std::vector<std::pair<LieElement, LieElement>>& xy) {
  std::vector<TExpr> terms;
  for (const auto& [x, y] : xy) terms.push_back(t_wedge(u_lie(x), u_lie(y)));
  return {{"abelian", t_scale(Scalar::fraction(1, 2), t_sum(std::move(terms)))}};
}

SeriesCheck compare_series(const Series& lhs, const Series& rhs) {
  SeriesCheck r;
  r.order = std::min(lhs.order(), rhs.order());
  for (int d = 0; d <= r.order; ++d) {
    if (lhs[d] == rhs[d]) continue;
    r.pass = false;
    r.failing_degree = d;
    r.witness = clip("hbar^" + std::to_string(d) + ": " + (lhs[d] - rhs[d]).to_string());
    break;
  }
  return r;
}

SeriesCheck cocycle_check(const Series& f) {
  Series lhs = embed(f, 0, 1) * coproduct(f, 0);
  Series rhs = embed(f, 1, 2) * coproduct(f, 1);
  return compare_series(lhs, rhs);
}

SeriesCheck counit_check(const Series& f) {
  Series one = unit_like(f, 1);
  SeriesCheck left = compare_series(counit(f, 0), one);
  if (!left.pass) {
    left.witness = "(eps (x) id)(F) - 1 at " + left.witness;
    return left;
  }
  SeriesCheck right = compare_series(counit(f, 1), one);
  if (!right.pass) right.witness = "(id (x) eps)(F) - 1 at " + right.witness;
  return right;
}

Series twisted_coproduct(const Series& f, const Series& x) { return f * coproduct(x, 0) * inverse(f); }

Series twisted_coproduct_on_slot(const Series& f, const Series& t, int slot) {
  if (t.rank() != 2) throw std::invalid_argument("twisted_coproduct_on_slot: rank-2 input expected");
  Series fe = slot == 0 ? embed(f, 0, 1) : embed(f, 1, 2);
  return fe * coproduct(t, slot) * inverse(fe);
}

SeriesCheck twisted_coassociativity_check(const Series& f, const Series& x) {
  Series d = twisted_coproduct(f, x);
  return compare_series(twisted_coproduct_on_slot(f, d, 0), twisted_coproduct_on_slot(f, d, 1));
}

SeriesCheck twisted_homomorphism_check(const Series& f, const Series& a, const Series& b) {
  return compare_series(twisted_coproduct(f, a * b), twisted_coproduct(f, a) * twisted_coproduct(f, b));
}

SeriesCheck twisted_bialgebra_check(const Series& f) {
  const AlgebraPtr& a = f.algebra();
  const int n = f.order();
  Series finv = inverse(f);
  Series f12 = embed(f, 0, 1), f23 = embed(f, 1, 2);
  Series f12inv = inverse(f12), f23inv = inverse(f23);
  std::vector<Series> gens, images;
  for (int g = 0; g < a->dim(); ++g) {
    gens.push_back(generator_series(a, g, n));
    images.push_back(f * coproduct(gens.back(), 0) * finv);
  }
  for (int j = 0; j < a->dim(); ++j) {
    const Series& d = images[static_cast<std::size_t>(j)];
    SeriesCheck c = compare_series(f12 * coproduct(d, 0) * f12inv, f23 * coproduct(d, 1) * f23inv);
    if (!c.pass) {
      c.witness = "coassociativity on " + a->generator_name(j) + ": " + c.witness;
      return c;
    }
    for (int k = 0; k < a->dim(); ++k) {
      Series prod = gens[static_cast<std::size_t>(j)] * gens[static_cast<std::size_t>(k)];
      c = compare_series(f * coproduct(prod, 0) * finv, d * images[static_cast<std::size_t>(k)]);
      if (!c.pass) {
        c.witness = "product " + a->generator_name(j) + "*" + a->generator_name(k) + ": " + c.witness;
        return c;
      }
    }
  }
  SeriesCheck ok;
  ok.order = n;
  return ok;
}

Series u_element(const Series& f) { return multiply_slots(antipode(f, 1), 0); }

Series twisted_antipode(const Series& f, const Series& x) {
  Series u = u_element(f);
  return u * antipode(x, 0) * inverse(u);
}

SeriesCheck twisted_antipode_check(const Series& f, const Series& x) {
  Series u = u_element(f);
  Series one = unit_like(f, 1);
  Series d = twisted_coproduct(f, x);
  Series sd = otimes(u, one) * antipode(d, 0) * otimes(inverse(u), one);
  return compare_series(multiply_slots(sd, 0), counit(x, 0));
}

Series omega_conjugate(const Series& f) {
  Series u = u_element(f);
  Series w = series_function(SeriesKind::Sqrt1p, u - unit_like(u, 1));
  Series winv = inverse(w);
  return otimes(winv, winv) * f * coproduct(w, 0);
}

SymmetryVerdict local_r_symmetry_check(const Series& f, const Bivector& r, const SpecializationMap& m) {
  SymmetryVerdict v;
  if (f.order() < 1) {
    v.detail = "order 0: no degree-1 part";
    return v;
  }
  UElement r1 = specialize(to_tensor(r), m, 1)[1];
  const UElement& f1 = f[1];
  if (r1.is_zero()) {
    v.detail = "r has no degree-1 part";
    return v;
  }
  const auto& [key, rc] = *r1.terms().begin();
  GaussianRational c = f1.coefficient(key) / rc;
  if (!c.is_zero() && f1 == r1 * c) {
    v.symmetric = true;
    v.c = c;
    v.detail = "F = 1 + (" + c.to_string() + ") r + O(hbar^2)";
  } else {
    v.detail = "degree-1 part " + clip(f1.to_string()) + " is not proportional to r";
  }
  return v;
}

Series binomial_jordanian(const AlgebraPtr& algebra, int x, int y, const GaussianRational& alpha, int order) {
  Series out = Series::unit(algebra, 2, order);
  UElement falling = UElement::unit(algebra, 1);
  UElement ypow = UElement::unit(algebra, 1);
  UElement gx = UElement::generator(algebra, x), gy = UElement::generator(algebra, y);
  GaussianRational coeff(1);
  for (int k = 1; k <= order; ++k) {
    falling = falling * (gx - UElement::unit(algebra, 1) * GaussianRational(k - 1));
    ypow = ypow * gy;
    coeff = coeff * alpha / GaussianRational(k);
    out.at(k) = otimes(falling, ypow) * coeff;
  }
  return out;
}

Series generator_series(const AlgebraPtr& algebra, int g, int order) {
  return Series::monomial(UElement::generator(algebra, g), 0, order);
}

}  // namespace twistforge
