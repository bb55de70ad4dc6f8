#ifndef TWISTFORGE_BUILTINS_HPP
#define TWISTFORGE_BUILTINS_HPP

#include <vector>

#include "twistforge/lie.hpp"

namespace twistforge {

/// Lorentz algebra in the canonical anti-Hermitian basis
/// (e+, e'+, h, h', e-, e'-), star x* = -x, h-weight grading.
AlgebraPtr lorentz();
/// Complexified Lorentz basis (E1+, E2+, H1, H2, E1-, E2-): two commuting sl(2) copies.
AlgebraPtr lorentz_complex();
/// Poincare algebra in the physical Hermitian basis (M1, M2, M3, N1, N2, N3, P0, P1, P2, P3).
AlgebraPtr poincare_physical();
/// Poincare algebra in the light-cone basis (P+, P-, P1, P2, e+, e'+, h, h', e-, e'-).
AlgebraPtr poincare();

/// H1 = (h + i h')/2, E1(+-) = (e(+-) + i e'(+-))/2, H2, E2(+-) with -i.
const BasisMap& lorentz_to_complex();
/// h = i N3, e(+-) = i(N1 +- M2), h' = i M3, e'(+-) = i(M1 -+ N2), P(+-) = P0 +- P3.
const BasisMap& physical_to_light_cone();

/// Light-cone and complex tables re-derived from their source bases; the
/// frozen built-ins must agree with these exactly.
AlgebraPtr derive_poincare_light_cone();
AlgebraPtr derive_lorentz_complex();

/// Filtration with deg e+ = deg e'+ = 1 and all other Lorentz generators 0.
std::vector<int> lorentz_positive_filtration();

}  // namespace twistforge

#endif  // TWISTFORGE_BUILTINS_HPP
