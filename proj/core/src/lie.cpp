#include "twistforge/lie.hpp"

#include <algorithm>
#include <sstream>

namespace twistforge {

namespace {

void accumulate(ConstTerms& acc, int l, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(acc.begin(), acc.end(), l, [](const auto& p, int v) { return p.first < v; });
  if (it != acc.end() && it->first == l) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  } else {
    acc.insert(it, {l, c});
  }
}

ConstTerms normalized(ConstTerms t) {
  ConstTerms out;
  for (auto& [l, c] : t) accumulate(out, l, c);
  return out;
}

ConstTerms negated(const ConstTerms& t) {
  ConstTerms out = t;
  for (auto& [l, c] : out) c = -c;
  return out;
}

}  // namespace

std::optional<int> LieAlgebra::find(std::string_view generator) const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k] == generator) return static_cast<int>(k);
  return std::nullopt;
}

int LieAlgebra::index(std::string_view generator) const {
  auto k = find(generator);
  if (!k) throw std::out_of_range("algebra " + name_ + " has no generator '" + std::string(generator) + "'");
  return *k;
}

GaussianRational LieAlgebra::structure_constant(int j, int k, int l) const {
  for (const auto& [m, c] : bracket(j, k))
    if (m == l) return c;
  return {};
}

const ConstTerms& LieAlgebra::star(int j) const {
  if (star_.empty()) throw std::logic_error("algebra " + name_ + " has no star structure");
  return star_.at(static_cast<std::size_t>(j));
}

std::string LieAlgebra::structure_table() const {
  std::ostringstream os;
  for (int j = 0; j < dim(); ++j)
    for (int k = j + 1; k < dim(); ++k)
      for (const auto& [l, c] : bracket(j, k)) {
        os << "[" << basis_[static_cast<std::size_t>(j)] << ", " << basis_[static_cast<std::size_t>(k)] << "] = "
           << format_linear_combination({{Scalar(c), basis_[static_cast<std::size_t>(l)]}}) << "\n";
      }
  return os.str();
}

LieAlgebra::Builder::Builder(std::string name, std::vector<std::string> basis) {
  a_.name_ = std::move(name);
  a_.basis_ = std::move(basis);
  a_.table_.assign(a_.basis_.size() * a_.basis_.size(), {});
  a_.grading_.assign(a_.basis_.size(), 0);
}

LieAlgebra::Builder::Builder(const LieAlgebra& base) { a_ = base; }

int LieAlgebra::Builder::idx(std::string_view g) const { return a_.index(g); }

ConstTerms LieAlgebra::Builder::terms(const std::vector<std::pair<std::string, GaussianRational>>& t) const {
  ConstTerms out;
  for (const auto& [g, c] : t) out.emplace_back(idx(g), c);
  return out;
}

LieAlgebra::Builder& LieAlgebra::Builder::bracket(std::string_view a, std::string_view b,
                                                  const std::vector<std::pair<std::string, GaussianRational>>& t) {
  return bracket(idx(a), idx(b), terms(t));
}

LieAlgebra::Builder& LieAlgebra::Builder::bracket(int j, int k, ConstTerms t) {
  if (j == k) throw InvalidAlgebra("bracket of a generator with itself must vanish");
  t = normalized(std::move(t));
  a_.table_[a_.cell(k, j)] = negated(t);
  a_.table_[a_.cell(j, k)] = std::move(t);
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::star(std::string_view g,
                                               const std::vector<std::pair<std::string, GaussianRational>>& t) {
  return star(idx(g), terms(t));
}

LieAlgebra::Builder& LieAlgebra::Builder::star(int j, ConstTerms t) {
  if (a_.star_.empty()) a_.star_.assign(a_.basis_.size(), {});
  a_.star_[static_cast<std::size_t>(j)] = normalized(std::move(t));
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::grading(std::vector<int> degrees) {
  if (degrees.size() != a_.basis_.size()) throw InvalidAlgebra("grading size mismatch");
  a_.grading_ = std::move(degrees);
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::family(AlgebraFamily f) {
  a_.family_ = f;
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::momenta(const std::vector<std::string>& names) {
  a_.momentum_.assign(a_.basis_.size(), false);
  for (const auto& n : names) a_.momentum_[static_cast<std::size_t>(idx(n))] = true;
  return *this;
}

namespace {

// Applies the (antilinear) star map to a constant-coefficient vector.
ConstTerms star_terms(const LieAlgebra& a, const ConstTerms& x) {
  ConstTerms out;
  for (const auto& [j, c] : x)
    for (const auto& [l, d] : a.star(j)) accumulate(out, l, c.conj() * d);
  return out;
}

ConstTerms bracket_terms(const LieAlgebra& a, const ConstTerms& x, const ConstTerms& y) {
  ConstTerms out;
  for (const auto& [j, c] : x)
    for (const auto& [k, d] : y)
      for (const auto& [l, e] : a.bracket(j, k)) accumulate(out, l, c * d * e);
  return out;
}

std::string describe(const LieAlgebra& a, const ConstTerms& t) {
  std::vector<std::pair<Scalar, std::string>> v;
  for (const auto& [l, c] : t) v.emplace_back(Scalar(c), a.generator_name(l));
  return format_linear_combination(v);
}

}  // namespace

AlgebraPtr LieAlgebra::Builder::build(bool validate) const {
  auto out = std::shared_ptr<LieAlgebra>(new LieAlgebra(a_));
  if (!validate) return out;
  const LieAlgebra& a = *out;
  auto jac = check_jacobi(a);
  if (!jac.ok) {
    const auto& f = jac.failures.front();
    throw InvalidAlgebra(a.name() + ": Jacobi identity fails on (" + a.generator_name(f[0]) + ", " +
                         a.generator_name(f[1]) + ", " + a.generator_name(f[2]) + ")");
  }
  auto viol = check_grading(a, a.grading());
  if (!viol.empty())
    throw InvalidAlgebra(a.name() + ": grading bound fails for [" + a.generator_name(viol[0].j) + ", " +
                         a.generator_name(viol[0].k) + "]");
  if (a.has_star()) {
    for (int j = 0; j < a.dim(); ++j) {
      ConstTerms twice = star_terms(a, a.star(j));
      if (twice != ConstTerms{{j, GaussianRational(1)}})
        throw InvalidAlgebra(a.name() + ": star is not an involution on " + a.generator_name(j));
    }
    for (int j = 0; j < a.dim(); ++j)
      for (int k = j + 1; k < a.dim(); ++k) {
        ConstTerms lhs = star_terms(a, a.bracket(j, k));
        ConstTerms rhs = bracket_terms(a, a.star(k), a.star(j));
        if (lhs != rhs)
          throw InvalidAlgebra(a.name() + ": [x,y]* != [y*,x*] for (" + a.generator_name(j) + ", " +
                               a.generator_name(k) + "): " + describe(a, lhs) + " vs " + describe(a, rhs));
      }
  }
  return out;
}

JacobiReport check_jacobi(const LieAlgebra& a) {
  JacobiReport rep;
  const int n = a.dim();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        const ConstTerms gx{{x, 1}}, gy{{y, 1}}, gz{{z, 1}};
        ConstTerms sum;
        for (const auto& t : {bracket_terms(a, gx, a.bracket(y, z)), bracket_terms(a, gy, a.bracket(z, x)),
                              bracket_terms(a, gz, a.bracket(x, y))})
          for (const auto& [l, c] : t) accumulate(sum, l, c);
        if (sum.empty()) continue;
        if (rep.ok) {
          rep.ok = false;
          rep.first_witness = sum;
          rep.witness_text = describe(a, sum);
        }
        rep.failures.push_back({x, y, z});
      }
  return rep;
}

std::vector<GradingViolation> check_grading(const LieAlgebra& a, const std::vector<int>& degrees) {
  std::vector<GradingViolation> out;
  for (int j = 0; j < a.dim(); ++j)
    for (int k = j + 1; k < a.dim(); ++k)
      for (const auto& [l, c] : a.bracket(j, k))
        if (degrees[static_cast<std::size_t>(l)] < degrees[static_cast<std::size_t>(j)] + degrees[static_cast<std::size_t>(k)])
          out.push_back({j, k, l});
  return out;
}

LieElement LieElement::generator(const AlgebraPtr& algebra, std::string_view name) {
  return generator(algebra, algebra->index(name));
}

LieElement LieElement::generator(const AlgebraPtr& algebra, int j) {
  LieElement x(algebra);
  x.coeffs_.emplace(j, Scalar(1));
  return x;
}

Scalar LieElement::coeff(int j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void LieElement::add_term(int j, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, std::string_view what) {
  if (a != b)
    throw AlgebraMismatch(std::string(what) + ": operands belong to different algebras (" + a->name() + ", " +
                          b->name() + ")");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  require_same_algebra(algebra_, o.algebra_, "LieElement +");
  for (const auto& [j, c] : o.coeffs_) add_term(j, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  require_same_algebra(algebra_, o.algebra_, "LieElement -");
  for (const auto& [j, c] : o.coeffs_) add_term(j, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [j, v] : coeffs_) v *= c;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  for (auto& [j, v] : r.coeffs_) v = -v;
  return r;
}

ScalarVector LieElement::to_vector() const {
  ScalarVector v(static_cast<std::size_t>(algebra_->dim()));
  for (const auto& [j, c] : coeffs_) v[static_cast<std::size_t>(j)] = c;
  return v;
}

LieElement LieElement::from_vector(const AlgebraPtr& algebra, const ScalarVector& v) {
  LieElement x(algebra);
  for (std::size_t j = 0; j < v.size(); ++j) x.add_term(static_cast<int>(j), v[j]);
  return x;
}

std::string LieElement::to_string() const {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [j, c] : coeffs_) terms.emplace_back(c, algebra_->generator_name(j));
  return format_linear_combination(terms);
}

std::ostream& operator<<(std::ostream& os, const LieElement& x) { return os << x.to_string(); }

LieElement bracket(const LieElement& x, const LieElement& y) {
  require_same_algebra(x.algebra(), y.algebra(), "bracket");
  const LieAlgebra& a = *x.algebra();
  LieElement out(x.algebra());
  for (const auto& [j, c] : x.coeffs())
    for (const auto& [k, d] : y.coeffs()) {
      const auto& t = a.bracket(j, k);
      if (t.empty()) continue;
      Scalar cd = c * d;
      for (const auto& [l, e] : t) out.add_term(l, cd * Scalar(e));
    }
  return out;
}

LieElement star(const LieElement& x, const RealityMap& overrides) {
  const LieAlgebra& a = *x.algebra();
  LieElement out(x.algebra());
  for (const auto& [j, c] : x.coeffs()) {
    Scalar cc = c.conj(overrides);
    for (const auto& [l, d] : a.star(j)) out.add_term(l, cc * Scalar(d));
  }
  return out;
}

namespace {

std::vector<LieElement> rows_to_elements(const AlgebraPtr& alg, const Echelon& e) {
  std::vector<LieElement> out;
  for (const auto& row : e.rows()) out.push_back(LieElement::from_vector(alg, row));
  return out;
}

}  // namespace

std::vector<LieElement> linear_span(const std::vector<LieElement>& elements) {
  if (elements.empty()) return {};
  const AlgebraPtr& alg = elements.front().algebra();
  Echelon e(static_cast<std::size_t>(alg->dim()));
  for (const auto& x : elements) {
    require_same_algebra(alg, x.algebra(), "linear_span");
    e.insert(x.to_vector());
  }
  return rows_to_elements(alg, e);
}

std::vector<LieElement> subalgebra_closure(const std::vector<LieElement>& generators) {
  if (generators.empty()) return {};
  const AlgebraPtr& alg = generators.front().algebra();
  Echelon e(static_cast<std::size_t>(alg->dim()));
  std::vector<LieElement> found;  // every independent element ever added
  for (const auto& x : generators) {
    require_same_algebra(alg, x.algebra(), "subalgebra_closure");
    if (e.insert(x.to_vector())) found.push_back(x);
  }
  // Brackets of each new element with all earlier ones until nothing new appears.
  for (std::size_t n = 0; n < found.size(); ++n)
    for (std::size_t m = 0; m < n; ++m) {
      LieElement b = bracket(found[m], found[n]);
      if (!b.is_zero() && e.insert(b.to_vector())) found.push_back(b);
    }
  return rows_to_elements(alg, e);
}

BasisMap::BasisMap(std::string name, AlgebraPtr source, AlgebraPtr target, std::vector<LieElement> forward,
                   std::vector<LieElement> backward)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      forward_(std::move(forward)),
      backward_(std::move(backward)) {
  if (forward_.size() != static_cast<std::size_t>(source_->dim()) ||
      backward_.size() != static_cast<std::size_t>(target_->dim()))
    throw std::invalid_argument("BasisMap " + name_ + ": image count does not match dimension");
  for (const auto& f : forward_) require_same_algebra(f.algebra(), target_, "BasisMap forward image");
  for (const auto& b : backward_) require_same_algebra(b.algebra(), source_, "BasisMap backward image");
}

LieElement BasisMap::apply(const LieElement& x) const {
  require_same_algebra(x.algebra(), source_, "BasisMap::apply");
  LieElement out(target_);
  for (const auto& [j, c] : x.coeffs()) out += c * forward_[static_cast<std::size_t>(j)];
  return out;
}

LieElement BasisMap::apply_inverse(const LieElement& y) const {
  require_same_algebra(y.algebra(), target_, "BasisMap::apply_inverse");
  LieElement out(source_);
  for (const auto& [k, c] : y.coeffs()) out += c * backward_[static_cast<std::size_t>(k)];
  return out;
}

bool BasisMap::is_consistent() const {
  for (int j = 0; j < source_->dim(); ++j)
    if (apply_inverse(apply(LieElement::generator(source_, j))) != LieElement::generator(source_, j)) return false;
  for (int k = 0; k < target_->dim(); ++k)
    if (apply(apply_inverse(LieElement::generator(target_, k))) != LieElement::generator(target_, k)) return false;
  return true;
}

LieAlgebra::Builder transport(const AlgebraPtr& base, std::string name, std::vector<std::string> names,
                              const std::vector<LieElement>& images) {
  const std::size_t n = static_cast<std::size_t>(base->dim());
  if (names.size() != n || images.size() != n) throw InvalidAlgebra("transport: basis size mismatch");
  // Invert the change of basis: row-reduce [images | identity].
  Echelon e(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    ScalarVector row = images[a].to_vector();
    row.resize(2 * n);
    row[n + a] = Scalar(1);
    e.insert(std::move(row));
  }
  if (e.rank() != n || e.pivots().back() != n - 1) throw InvalidAlgebra("transport: images are not a basis");
  // Row j of the reduced matrix expresses old generator g_j in the new basis.
  auto in_new_basis = [&](const LieElement& x) {
    ConstTerms out;
    std::vector<Scalar> acc(n);
    for (const auto& [j, c] : x.coeffs())
      for (std::size_t a = 0; a < n; ++a) acc[a] += c * e.rows()[static_cast<std::size_t>(j)][n + a];
    for (std::size_t a = 0; a < n; ++a)
      if (!acc[a].is_zero()) out.emplace_back(static_cast<int>(a), acc[a].constant_value());
    return out;
  };
  LieAlgebra::Builder b(std::move(name), std::move(names));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) b.bracket(int(a), int(c), in_new_basis(bracket(images[a], images[c])));
  if (base->has_star())
    for (std::size_t a = 0; a < n; ++a) b.star(int(a), in_new_basis(star(images[a])));
  return b;
}

}  // namespace twistforge
