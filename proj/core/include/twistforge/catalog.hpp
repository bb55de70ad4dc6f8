#ifndef TWISTFORGE_CATALOG_HPP
#define TWISTFORGE_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistforge/rmatrix.hpp"
#include "twistforge/twist.hpp"

namespace twistforge {

class UnknownEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Expectation { Homogeneous, Modified, NotCYBE, ReportOnly };
std::string to_string(Expectation e);

enum class PieceKind { Abelian, Jordanian, Other };
std::string to_string(PieceKind k);

struct Piece {
  std::string label;
  Bivector r;
  PieceKind kind;
  std::optional<JordanianData> jordanian;
  std::string note;
};

/// (sum of pieces `left`) > piece `right`.
struct SubordinationClaim {
  std::vector<int> left;
  int right;
};

struct CatalogEntry {
  std::string id;
  std::string family;  // "lorentz" or "poincare"
  std::string summary;
  AlgebraPtr algebra;
  Bivector r;
  Expectation expected_cybe;
  /// Poincare entries are decomposed as a + b + c; report_only marks entries
  /// whose verdict is printed without an expectation.
  bool zakrzewski_applicable;
  bool zakrzewski_expected_pass;
  std::vector<Piece> pieces;  // empty: no decomposition known
  std::vector<SubordinationClaim> claims;
  std::optional<TwistPlan> twist;
  std::string twist_note;
  /// The omega-conjugate of the twist is checked as well.
  bool omega_variant = false;
};

/// All entries in a fixed order: L1..L4, 1..21, tilde9, tilde12.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& id);
std::vector<std::string> catalog_ids();

/// Lorentz r-matrices j = 1..4 over `algebra` (Lorentz or Poincare); the sign
/// choice of the last term of r4 is the parameter lambda.
Bivector lorentz_r(int j, const AlgebraPtr& algebra);
/// r4 with the opposite sign of the h ^ h' term (not a modified solution for lambda != 0).
Bivector lorentz_r4_alternate(const AlgebraPtr& algebra);
/// The r3 and r4 pieces written in the complex basis E_k, H_k.
Bivector lorentz_r3_complex();
Bivector lorentz_r4_complex();

/// Momentum-Lorentz helpers of the Poincare normal forms.
Bivector b_pplus();
Bivector b_p2();

/// Catalog r-matrix by id.
Bivector poincare_r(const std::string& id);

/// sigma+ = log1p(beta1 P+)/2.
UExpr sigma_plus();

/// Number of Poincare entries 1..21 that carry their own twist plan.
int twist_equipped_poincare_count();

/// Stable text dump of one entry / of the whole catalog.
std::string dump_entry(const CatalogEntry& e);
std::string dump_catalog();

/// Parameters occurring in r, ascending.
std::vector<int> entry_parameters(const CatalogEntry& e);

}  // namespace twistforge

#endif  // TWISTFORGE_CATALOG_HPP
