#ifndef TWISTFORGE_UEA_HPP
#define TWISTFORGE_UEA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twistforge/lie.hpp"
#include "twistforge/rmatrix.hpp"

namespace twistforge {

inline constexpr std::size_t kMaxGenerators = 16;

/// Exponent vector of an ordered PBW monomial g_0^a_0 g_1^a_1 ... (basis order).
using Monomial = std::array<std::uint8_t, kMaxGenerators>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

int degree(const Monomial& m);
bool is_unit(const Monomial& m);
std::string monomial_to_string(const LieAlgebra& a, const Monomial& m);

using MonoTerms = std::vector<std::pair<Monomial, GaussianRational>>;

/// Memoized PBW rewriting for one algebra.
///
/// A product A*g with g below the last letter x of A is rewritten as
/// (A'*g)*x + A'*[x, g] where A = A'*x; every intermediate product is cached.
/// Not thread-safe: use for_algebra(), which hands out one replica per thread.
class PbwKernel {
 public:
  explicit PbwKernel(AlgebraPtr algebra);

  static PbwKernel& for_algebra(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const MonoTerms& times_generator(const Monomial& m, int g);
  const MonoTerms& times(const Monomial& a, const Monomial& b);
  /// S of an ordered monomial, renormalized.
  const MonoTerms& antipode(const Monomial& m);
  /// Normal form of an arbitrary word g_{w0} g_{w1} ...
  MonoTerms normalize_word(const std::vector<int>& word);

  std::size_t cache_size() const { return gen_cache_.size() + mono_cache_.size(); }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Monomial, Monomial>& p) const noexcept;
  };
  struct GenKeyHash {
    std::size_t operator()(const std::pair<Monomial, int>& p) const noexcept;
  };

  AlgebraPtr algebra_;
  std::unordered_map<std::pair<Monomial, int>, MonoTerms, GenKeyHash> gen_cache_;
  std::unordered_map<std::pair<Monomial, Monomial>, MonoTerms, PairHash> mono_cache_;
  std::unordered_map<Monomial, MonoTerms, MonomialHash> antipode_cache_;
};

/// Element of U(g)^{(x) rank}, rank 1..3: sparse map from slotwise PBW
/// monomials to coefficients. C is Scalar (symbolic) or GaussianRational.
template <class C>
class Tensor {
 public:
  using Key = std::array<Monomial, 3>;
  using Terms = std::map<Key, C>;

  Tensor(AlgebraPtr algebra, int rank);
  static Tensor unit(const AlgebraPtr& algebra, int rank);
  static Tensor generator(const AlgebraPtr& algebra, int g);
  static Tensor monomial(const AlgebraPtr& algebra, const Monomial& m, const C& c);
  static Tensor from_terms(const AlgebraPtr& algebra, const MonoTerms& t);

  const AlgebraPtr& algebra() const { return algebra_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  C coefficient(const Key& k) const;

  void add_term(const Key& k, const C& c);
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const C& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const C& c) { return a *= c; }
  Tensor operator-() const;
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.algebra_ == b.algebra_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Slotwise product in U(g)^{(x) rank}.
  Tensor operator*(const Tensor& o) const;

  /// Terms whose summed slot degree is at most d (used for truncation).
  Tensor truncated(int d) const;

  std::string to_string() const;

 private:
  void check_compatible(const Tensor& o, const char* what) const;
  AlgebraPtr algebra_;
  int rank_;
  Terms terms_;
};

using UElement = Tensor<GaussianRational>;
using SymTensor = Tensor<Scalar>;

/// a (x) b; ranks add up (at most 3).
template <class C>
Tensor<C> otimes(const Tensor<C>& a, const Tensor<C>& b);

/// Primitive coproduct applied to slot `slot` (0-based); rank grows by one.
template <class C>
Tensor<C> coproduct(const Tensor<C>& t, int slot = 0);
/// Counit applied to slot `slot`; rank drops by one (rank-1 input gives a rank-1 scalar multiple of 1).
template <class C>
Tensor<C> counit(const Tensor<C>& t, int slot);
/// Antipode on one slot.
template <class C>
Tensor<C> antipode(const Tensor<C>& t, int slot = 0);
/// Multiplication of two adjacent slots: m(a (x) b) = ab on slots (slot, slot+1).
template <class C>
Tensor<C> multiply_slots(const Tensor<C>& t, int slot = 0);
/// Places a rank-2 tensor in slots (i, j) of a rank-3 tensor, 1 elsewhere.
template <class C>
Tensor<C> embed(const Tensor<C>& t, int i, int j);
/// Swaps the two slots of a rank-2 tensor.
template <class C>
Tensor<C> flip(const Tensor<C>& t);

/// Rank-1 image of a Lie element.
SymTensor to_tensor(const LieElement& x);
/// r as sum c (g_j (x) g_k - g_k (x) g_j).
SymTensor to_tensor(const Bivector& r);
/// Full antisymmetrization sum over permutations with signs.
SymTensor to_tensor(const Trivector& t);

/// [r12, r13 + r23] + [r13, r23] evaluated in U(g)^{(x)3}.
SymTensor cybe_lhs_tensor(const Bivector& r);

/// cybe_lhs_tensor(r) = kCybeSchoutenFactor * [[r, r]] (as a tensor).
extern const GaussianRational kCybeSchoutenFactor;

}  // namespace twistforge

#endif  // TWISTFORGE_UEA_HPP
