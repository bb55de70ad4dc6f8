#ifndef TWISTFORGE_SYMBOLS_HPP
#define TWISTFORGE_SYMBOLS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twistforge {

/// Upper bound on the number of distinct formal parameters in one process.
inline constexpr std::size_t kMaxSymbols = 16;

enum class Reality { Real, Imaginary, Unrestricted };

std::string_view to_string(Reality r);

struct ParamSymbol {
  std::string name;
  Reality reality = Reality::Real;
};

/// Per-call override of the reality flags stored in the registry.
using RealityMap = std::map<int, Reality>;

/// Process-wide table of formal deformation parameters.
///
/// The deformation parameters used by the built-in catalog are registered on
/// first use: alpha, alphat (alpha with a tilde),
/// alpha1, alpha2, beta, beta1, beta2, gamma, gamma1, chi, lambda, xi.
/// Lookups and registration are thread-safe; indices never change once issued.
class SymbolTable {
 public:
  static int index(std::string_view name);
  static std::optional<int> find(std::string_view name);
  /// Registers a new symbol or returns the existing index (reality unchanged).
  static int declare(std::string_view name, Reality reality = Reality::Real);
  static ParamSymbol symbol(int idx);
  static std::string name(int idx);
  static Reality reality(int idx, const RealityMap& overrides = {});
  static std::size_t size();
};

}  // namespace twistforge

#endif  // TWISTFORGE_SYMBOLS_HPP
