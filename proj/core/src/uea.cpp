#include "twistforge/uea.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistforge {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t lo = 0, hi = 0;
  for (std::size_t k = 0; k < 8; ++k) lo |= std::uint64_t(m[k]) << (8 * k);
  for (std::size_t k = 8; k < 16; ++k) hi |= std::uint64_t(m[k]) << (8 * (k - 8));
  return std::hash<std::uint64_t>{}(lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x632be59bd9b4e019ULL + (lo << 6)));
}

int degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool is_unit(const Monomial& m) { return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; }); }

std::string monomial_to_string(const LieAlgebra& a, const Monomial& m) {
  std::string out;
  for (int j = 0; j < a.dim(); ++j) {
    auto e = m[static_cast<std::size_t>(j)];
    if (e == 0) continue;
    if (!out.empty()) out += " ";
    out += a.generator_name(j);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

int last_letter(const Monomial& m) {
  for (int j = int(kMaxGenerators) - 1; j >= 0; --j)
    if (m[static_cast<std::size_t>(j)]) return j;
  return -1;
}

void accumulate(std::map<Monomial, GaussianRational>& acc, const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

MonoTerms flatten(const std::map<Monomial, GaussianRational>& acc) { return {acc.begin(), acc.end()}; }

}  // namespace

PbwKernel::PbwKernel(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (algebra_->dim() > int(kMaxGenerators)) throw std::invalid_argument("PbwKernel: algebra too large");
}

PbwKernel& PbwKernel::for_algebra(const AlgebraPtr& algebra) {
  thread_local std::map<const LieAlgebra*, std::pair<AlgebraPtr, std::unique_ptr<PbwKernel>>> replicas;
  auto& slot = replicas[algebra.get()];
  if (!slot.second || slot.first != algebra) slot = {algebra, std::make_unique<PbwKernel>(algebra)};
  return *slot.second;
}

std::size_t PbwKernel::PairHash::operator()(const std::pair<Monomial, Monomial>& p) const noexcept {
  MonomialHash h;
  return h(p.first) * 31u ^ h(p.second);
}

std::size_t PbwKernel::GenKeyHash::operator()(const std::pair<Monomial, int>& p) const noexcept {
  return MonomialHash{}(p.first) * 131u + std::size_t(p.second);
}

const MonoTerms& PbwKernel::times_generator(const Monomial& m, int g) {
  auto key = std::make_pair(m, g);
  if (auto it = gen_cache_.find(key); it != gen_cache_.end()) return it->second;

  MonoTerms result;
  int x = last_letter(m);
  if (x <= g) {
    Monomial r = m;
    if (r[static_cast<std::size_t>(g)] == 255) throw std::overflow_error("PBW exponent overflow");
    ++r[static_cast<std::size_t>(g)];
    result.emplace_back(r, GaussianRational(1));
  } else {
    // A g = A' x g = (A' g) x + A' [x, g]
    Monomial prefix = m;
    --prefix[static_cast<std::size_t>(x)];
    std::map<Monomial, GaussianRational> acc;
    MonoTerms ag = times_generator(prefix, g);
    for (const auto& [m1, c1] : ag)
      for (const auto& [m2, c2] : times_generator(m1, x)) accumulate(acc, m2, c1 * c2);
    for (const auto& [l, e] : algebra_->bracket(x, g))
      for (const auto& [m2, c2] : times_generator(prefix, l)) accumulate(acc, m2, e * c2);
    result = flatten(acc);
  }
  return gen_cache_.emplace(key, std::move(result)).first->second;
}

const MonoTerms& PbwKernel::times(const Monomial& a, const Monomial& b) {
  auto key = std::make_pair(a, b);
  if (auto it = mono_cache_.find(key); it != mono_cache_.end()) return it->second;
  MonoTerms cur{{a, GaussianRational(1)}};
  for (int j = 0; j < algebra_->dim(); ++j)
    for (int e = 0; e < b[static_cast<std::size_t>(j)]; ++e) {
      std::map<Monomial, GaussianRational> acc;
      for (const auto& [m, c] : cur)
        for (const auto& [m2, c2] : times_generator(m, j)) accumulate(acc, m2, c * c2);
      cur = flatten(acc);
    }
  return mono_cache_.emplace(key, std::move(cur)).first->second;
}

MonoTerms PbwKernel::normalize_word(const std::vector<int>& word) {
  MonoTerms cur{{Monomial{}, GaussianRational(1)}};
  for (int g : word) {
    std::map<Monomial, GaussianRational> acc;
    for (const auto& [m, c] : cur)
      for (const auto& [m2, c2] : times_generator(m, g)) accumulate(acc, m2, c * c2);
    cur = flatten(acc);
  }
  return cur;
}

const MonoTerms& PbwKernel::antipode(const Monomial& m) {
  if (auto it = antipode_cache_.find(m); it != antipode_cache_.end()) return it->second;
  std::vector<int> reversed;
  for (int j = algebra_->dim() - 1; j >= 0; --j)
    for (int e = 0; e < m[static_cast<std::size_t>(j)]; ++e) reversed.push_back(j);
  MonoTerms r = normalize_word(reversed);
  if (reversed.size() % 2)
    for (auto& [mm, c] : r) c = -c;
  return antipode_cache_.emplace(m, std::move(r)).first->second;
}

// ---- Tensor ----

template <class C>
Tensor<C>::Tensor(AlgebraPtr algebra, int rank) : algebra_(std::move(algebra)), rank_(rank) {
  if (rank < 1 || rank > 3) throw std::invalid_argument("Tensor rank must be 1, 2 or 3");
}

template <class C>
Tensor<C> Tensor<C>::unit(const AlgebraPtr& algebra, int rank) {
  Tensor t(algebra, rank);
  t.terms_.emplace(Key{}, C(1));
  return t;
}

template <class C>
Tensor<C> Tensor<C>::generator(const AlgebraPtr& algebra, int g) {
  Monomial m{};
  m[static_cast<std::size_t>(g)] = 1;
  return monomial(algebra, m, C(1));
}

template <class C>
Tensor<C> Tensor<C>::monomial(const AlgebraPtr& algebra, const Monomial& m, const C& c) {
  Tensor t(algebra, 1);
  t.add_term(Key{m, Monomial{}, Monomial{}}, c);
  return t;
}

template <class C>
Tensor<C> Tensor<C>::from_terms(const AlgebraPtr& algebra, const MonoTerms& terms) {
  Tensor t(algebra, 1);
  for (const auto& [m, c] : terms) t.add_term(Key{m, Monomial{}, Monomial{}}, C(c));
  return t;
}

template <class C>
C Tensor<C>::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? C() : it->second;
}

template <class C>
void Tensor<C>::add_term(const Key& k, const C& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class C>
void Tensor<C>::check_compatible(const Tensor& o, const char* what) const {
  require_same_algebra(algebra_, o.algebra_, what);
  if (rank_ != o.rank_) throw std::invalid_argument(std::string(what) + ": rank mismatch");
}

template <class C>
Tensor<C>& Tensor<C>::operator+=(const Tensor& o) {
  check_compatible(o, "Tensor +");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

template <class C>
Tensor<C>& Tensor<C>::operator-=(const Tensor& o) {
  check_compatible(o, "Tensor -");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

template <class C>
Tensor<C>& Tensor<C>::operator*=(const C& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

template <class C>
Tensor<C> Tensor<C>::operator-() const {
  Tensor r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

namespace {

// Product of two slot monomials; unit factors avoid the kernel.
const MonoTerms& slot_product(PbwKernel& kernel, const Monomial& a, const Monomial& b, MonoTerms& scratch) {
  if (is_unit(a) || is_unit(b)) {
    Monomial m = a;
    for (std::size_t k = 0; k < kMaxGenerators; ++k) m[k] = static_cast<std::uint8_t>(a[k] + b[k]);
    scratch.assign(1, {m, GaussianRational(1)});
    return scratch;
  }
  return kernel.times(a, b);
}

}  // namespace

template <class C>
Tensor<C> Tensor<C>::operator*(const Tensor& o) const {
  check_compatible(o, "Tensor *");
  PbwKernel& kernel = PbwKernel::for_algebra(algebra_);
  Tensor out(algebra_, rank_);
  MonoTerms s0, s1, s2;
  const MonoTerms unit_terms{{Monomial{}, GaussianRational(1)}};
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      const C cab = ca * cb;
      const MonoTerms& p0 = slot_product(kernel, ka[0], kb[0], s0);
      const MonoTerms& p1 = rank_ > 1 ? slot_product(kernel, ka[1], kb[1], s1) : unit_terms;
      const MonoTerms& p2 = rank_ > 2 ? slot_product(kernel, ka[2], kb[2], s2) : unit_terms;
      for (const auto& [m0, c0] : p0)
        for (const auto& [m1, c1] : p1) {
          GaussianRational c01 = c0 * c1;
          for (const auto& [m2, c2] : p2) out.add_term(Key{m0, m1, m2}, cab * C(c01 * c2));
        }
    }
  return out;
}

template <class C>
Tensor<C> Tensor<C>::truncated(int d) const {
  Tensor out(algebra_, rank_);
  for (const auto& [k, c] : terms_)
    if (degree(k[0]) + degree(k[1]) + degree(k[2]) <= d) out.terms_.emplace(k, c);
  return out;
}

template <class C>
std::string Tensor<C>::to_string() const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [k, c] : terms_) {
    std::string label;
    bool all_unit = true;
    for (int s = 0; s < rank_; ++s) {
      if (s) label += " (x) ";
      label += monomial_to_string(*algebra_, k[static_cast<std::size_t>(s)]);
      all_unit = all_unit && is_unit(k[static_cast<std::size_t>(s)]);
    }
    if (rank_ == 1 && all_unit) label.clear();
    else if (rank_ > 1) label = "[" + label + "]";
    parts.emplace_back(Scalar(c), label);
  }
  return format_linear_combination(parts);
}

template class Tensor<Scalar>;
template class Tensor<GaussianRational>;

// ---- Hopf structure ----

template <class C>
Tensor<C> otimes(const Tensor<C>& a, const Tensor<C>& b) {
  require_same_algebra(a.algebra(), b.algebra(), "otimes");
  int r = a.rank() + b.rank();
  if (r > 3) throw std::invalid_argument("otimes: rank above 3");
  Tensor<C> out(a.algebra(), r);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      typename Tensor<C>::Key k{};
      for (int s = 0; s < a.rank(); ++s) k[static_cast<std::size_t>(s)] = ka[static_cast<std::size_t>(s)];
      for (int s = 0; s < b.rank(); ++s) k[static_cast<std::size_t>(a.rank() + s)] = kb[static_cast<std::size_t>(s)];
      out.add_term(k, ca * cb);
    }
  return out;
}

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// All splittings m = left * right (as exponent vectors) with binomial weights.
std::vector<std::tuple<Monomial, Monomial, long>> coproduct_splits(const Monomial& m) {
  std::vector<std::tuple<Monomial, Monomial, long>> out{{Monomial{}, Monomial{}, 1}};
  for (std::size_t j = 0; j < kMaxGenerators; ++j) {
    int a = m[j];
    if (!a) continue;
    std::vector<std::tuple<Monomial, Monomial, long>> next;
    for (const auto& [l, r, w] : out)
      for (int k = 0; k <= a; ++k) {
        Monomial l2 = l, r2 = r;
        l2[j] = static_cast<std::uint8_t>(k);
        r2[j] = static_cast<std::uint8_t>(a - k);
        next.emplace_back(l2, r2, w * binomial(a, k));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

template <class C>
Tensor<C> coproduct(const Tensor<C>& t, int slot) {
  if (t.rank() >= 3) throw std::invalid_argument("coproduct: rank-3 input");
  if (slot < 0 || slot >= t.rank()) throw std::invalid_argument("coproduct: bad slot");
  Tensor<C> out(t.algebra(), t.rank() + 1);
  const auto s = static_cast<std::size_t>(slot);
  for (const auto& [k, c] : t.terms())
    for (const auto& [l, r, w] : coproduct_splits(k[s])) {
      typename Tensor<C>::Key nk{};
      std::size_t pos = 0;
      for (std::size_t q = 0; q < static_cast<std::size_t>(t.rank()); ++q) {
        if (q == s) {
          nk[pos++] = l;
          nk[pos++] = r;
        } else {
          nk[pos++] = k[q];
        }
      }
      out.add_term(nk, c * C(GaussianRational(w)));
    }
  return out;
}

template <class C>
Tensor<C> counit(const Tensor<C>& t, int slot) {
  if (slot < 0 || slot >= t.rank()) throw std::invalid_argument("counit: bad slot");
  Tensor<C> out(t.algebra(), std::max(1, t.rank() - 1));
  const auto s = static_cast<std::size_t>(slot);
  for (const auto& [k, c] : t.terms()) {
    if (!is_unit(k[s])) continue;
    typename Tensor<C>::Key nk{};
    std::size_t pos = 0;
    for (std::size_t q = 0; q < static_cast<std::size_t>(t.rank()); ++q)
      if (q != s) nk[pos++] = k[q];
    out.add_term(nk, c);
  }
  return out;
}

template <class C>
Tensor<C> antipode(const Tensor<C>& t, int slot) {
  PbwKernel& kernel = PbwKernel::for_algebra(t.algebra());
  Tensor<C> out(t.algebra(), t.rank());
  const auto s = static_cast<std::size_t>(slot);
  for (const auto& [k, c] : t.terms())
    for (const auto& [m, e] : kernel.antipode(k[s])) {
      auto nk = k;
      nk[s] = m;
      out.add_term(nk, c * C(e));
    }
  return out;
}

template <class C>
Tensor<C> multiply_slots(const Tensor<C>& t, int slot) {
  if (slot < 0 || slot + 1 >= t.rank()) throw std::invalid_argument("multiply_slots: bad slot");
  PbwKernel& kernel = PbwKernel::for_algebra(t.algebra());
  Tensor<C> out(t.algebra(), t.rank() - 1);
  const auto s = static_cast<std::size_t>(slot);
  MonoTerms scratch;
  for (const auto& [k, c] : t.terms())
    for (const auto& [m, e] : slot_product(kernel, k[s], k[s + 1], scratch)) {
      typename Tensor<C>::Key nk{};
      std::size_t pos = 0;
      for (std::size_t q = 0; q < static_cast<std::size_t>(t.rank()); ++q) {
        if (q == s) {
          nk[pos++] = m;
          ++q;
        } else {
          nk[pos++] = k[q];
        }
      }
      out.add_term(nk, c * C(e));
    }
  return out;
}

template <class C>
Tensor<C> embed(const Tensor<C>& t, int i, int j) {
  if (t.rank() != 2 || i < 0 || j > 2 || i >= j) throw std::invalid_argument("embed: expects rank 2 and i < j");
  Tensor<C> out(t.algebra(), 3);
  for (const auto& [k, c] : t.terms()) {
    typename Tensor<C>::Key nk{};
    nk[static_cast<std::size_t>(i)] = k[0];
    nk[static_cast<std::size_t>(j)] = k[1];
    out.add_term(nk, c);
  }
  return out;
}

template <class C>
Tensor<C> flip(const Tensor<C>& t) {
  if (t.rank() != 2) throw std::invalid_argument("flip: expects rank 2");
  Tensor<C> out(t.algebra(), 2);
  for (const auto& [k, c] : t.terms()) out.add_term({k[1], k[0], Monomial{}}, c);
  return out;
}

#define TWISTFORGE_INSTANTIATE(C)                                 \
  template Tensor<C> otimes(const Tensor<C>&, const Tensor<C>&); \
  template Tensor<C> coproduct(const Tensor<C>&, int);           \
  template Tensor<C> counit(const Tensor<C>&, int);              \
  template Tensor<C> antipode(const Tensor<C>&, int);            \
  template Tensor<C> multiply_slots(const Tensor<C>&, int);      \
  template Tensor<C> embed(const Tensor<C>&, int, int);          \
  template Tensor<C> flip(const Tensor<C>&);

TWISTFORGE_INSTANTIATE(Scalar)
TWISTFORGE_INSTANTIATE(GaussianRational)
#undef TWISTFORGE_INSTANTIATE

// ---- Lie-level embeddings ----

SymTensor to_tensor(const LieElement& x) {
  SymTensor out(x.algebra(), 1);
  for (const auto& [j, c] : x.coeffs()) out += SymTensor::generator(x.algebra(), j) * c;
  return out;
}

SymTensor to_tensor(const Bivector& r) {
  const AlgebraPtr& a = r.algebra();
  SymTensor out(a, 2);
  for (const auto& [k, c] : r.coeffs()) {
    auto gj = SymTensor::generator(a, k.first), gk = SymTensor::generator(a, k.second);
    out += otimes(gj, gk) * c;
    out -= otimes(gk, gj) * c;
  }
  return out;
}

SymTensor to_tensor(const Trivector& t) {
  const AlgebraPtr& a = t.algebra();
  SymTensor out(a, 3);
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (const auto& [k, c] : t.coeffs())
    for (int p = 0; p < 6; ++p) {
      Monomial m0{}, m1{}, m2{};
      m0[static_cast<std::size_t>(k[static_cast<std::size_t>(perms[p][0])])] = 1;
      m1[static_cast<std::size_t>(k[static_cast<std::size_t>(perms[p][1])])] = 1;
      m2[static_cast<std::size_t>(k[static_cast<std::size_t>(perms[p][2])])] = 1;
      out.add_term({m0, m1, m2}, p < 3 ? c : -c);
    }
  return out;
}

SymTensor cybe_lhs_tensor(const Bivector& r) {
  SymTensor t = to_tensor(r);
  SymTensor r12 = embed(t, 0, 1), r13 = embed(t, 0, 2), r23 = embed(t, 1, 2);
  auto comm = [](const SymTensor& a, const SymTensor& b) { return a * b - b * a; };
  return comm(r12, r13 + r23) + comm(r13, r23);
}

const GaussianRational kCybeSchoutenFactor = GaussianRational::fraction(1, 2);

}  // namespace twistforge
