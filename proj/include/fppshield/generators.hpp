#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <fppshield/poset.hpp>

namespace fppshield {

/// Three-layer poset on 3m points: minimals 0..m-1, middles m..2m-1,
/// maximals 2m..3m-1. A point a covers into the next layer at b exactly when
/// (b - a) mod m lies in {0,1,2} for even a, or in {0,2,7} for odd a;
/// colliding residues for small m are merged. m must be even and >= 2.
Poset gen_pm(std::size_t m);

enum class FamilyKind { Chain, Antichain, Crown, Fence };

std::optional<FamilyKind> family_from_string(std::string_view name);
std::string_view to_string(FamilyKind kind);

/// Chain 0 < 1 < ... < n-1; antichain; crown on n = 2k >= 4 points (minimal
/// i below maximals k+i and k+(i+1 mod k), a cycle of length 2k in the Hasse
/// diagram); fence (zigzag) with minimals 0..ceil(n/2)-1 and minimal i below
/// maximals k+i-1 and k+i where they exist.
Poset gen_family(FamilyKind kind, std::size_t n);

} // namespace fppshield
