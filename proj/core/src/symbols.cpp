#include "twistforge/symbols.hpp"

#include <mutex>
#include <stdexcept>

namespace twistforge {

std::string_view to_string(Reality r) {
  switch (r) {
    case Reality::Real:
      return "real";
    case Reality::Imaginary:
      return "imaginary";
    case Reality::Unrestricted:
      return "unrestricted";
  }
  return "?";
}

namespace {

struct Registry {
  std::mutex mutex;
  std::vector<ParamSymbol> symbols;

  Registry() {
    for (const char* n : {"alpha", "alphat", "alpha1", "alpha2", "beta", "beta1", "beta2", "gamma", "gamma1",
                          "chi", "lambda", "xi"})
      symbols.push_back({n, Reality::Real});
  }

  int lookup(std::string_view name) const {
    for (std::size_t k = 0; k < symbols.size(); ++k)
      if (symbols[k].name == name) return static_cast<int>(k);
    return -1;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

int SymbolTable::index(std::string_view name) {
  auto idx = find(name);
  if (!idx) throw std::out_of_range("unknown parameter symbol '" + std::string(name) + "'");
  return *idx;
}

std::optional<int> SymbolTable::find(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  int k = r.lookup(name);
  if (k < 0) return std::nullopt;
  return k;
}

int SymbolTable::declare(std::string_view name, Reality reality) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  int k = r.lookup(name);
  if (k >= 0) return k;
  if (r.symbols.size() >= kMaxSymbols) throw std::length_error("symbol table full");
  r.symbols.push_back({std::string(name), reality});
  return static_cast<int>(r.symbols.size() - 1);
}

ParamSymbol SymbolTable::symbol(int idx) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.symbols.at(static_cast<std::size_t>(idx));
}

std::string SymbolTable::name(int idx) { return symbol(idx).name; }

Reality SymbolTable::reality(int idx, const RealityMap& overrides) {
  if (auto it = overrides.find(idx); it != overrides.end()) return it->second;
  return symbol(idx).reality;
}

std::size_t SymbolTable::size() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.symbols.size();
}

}  // namespace twistforge
