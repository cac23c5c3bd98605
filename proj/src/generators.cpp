#include <fppshield/generators.hpp>

#include <array>
#include <vector>

namespace fppshield {

Poset gen_pm(std::size_t m) {
  if (m < 2 || m % 2 != 0)
    throw Error(ErrorCode::InvalidParameter,
                "three-layer family needs an even m >= 2, got " +
                    std::to_string(m));
  constexpr std::array<std::size_t, 3> kEvenResidues{0, 1, 2};
  constexpr std::array<std::size_t, 3> kOddResidues{0, 2, 7};

  std::vector<EdgePair> edges;
  auto connect = [&](std::size_t lower_layer, std::size_t upper_layer) {
    for (std::size_t a = lower_layer; a < lower_layer + m; ++a)
      for (std::size_t b = upper_layer; b < upper_layer + m; ++b) {
        const std::size_t residue = (b - a) % m;
        const auto &allowed = a % 2 == 0 ? kEvenResidues : kOddResidues;
        for (auto r : allowed)
          if (r % m == residue) {
            edges.push_back({a, b});
            break;
          }
      }
  };
  connect(0, m);
  connect(m, 2 * m);
  return Poset::from_edges(3 * m, edges);
}

std::optional<FamilyKind> family_from_string(std::string_view name) {
  if (name == "chain")
    return FamilyKind::Chain;
  if (name == "antichain")
    return FamilyKind::Antichain;
  if (name == "crown")
    return FamilyKind::Crown;
  if (name == "fence")
    return FamilyKind::Fence;
  return std::nullopt;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::Chain:
    return "chain";
  case FamilyKind::Antichain:
    return "antichain";
  case FamilyKind::Crown:
    return "crown";
  case FamilyKind::Fence:
    return "fence";
  }
  return "?";
}

Poset gen_family(FamilyKind kind, std::size_t n) {
  if (n == 0)
    throw Error(ErrorCode::InvalidParameter, "family needs at least one point");
  std::vector<EdgePair> edges;
  switch (kind) {
  case FamilyKind::Chain:
    for (Index i = 0; i + 1 < n; ++i)
      edges.push_back({i, i + 1});
    break;
  case FamilyKind::Antichain:
    break;
  case FamilyKind::Crown: {
    if (n < 4 || n % 2 != 0)
      throw Error(ErrorCode::InvalidParameter,
                  "crown needs an even number of points >= 4");
    const auto k = n / 2;
    for (Index i = 0; i < k; ++i) {
      edges.push_back({i, k + i});
      edges.push_back({i, k + (i + 1) % k});
    }
    break;
  }
  case FamilyKind::Fence: {
    const auto k = (n + 1) / 2;
    for (Index i = 0; i < k; ++i) {
      if (i >= 1 && k + i - 1 < n)
        edges.push_back({i, k + i - 1});
      if (k + i < n)
        edges.push_back({i, k + i});
    }
    break;
  }
  }
  return Poset::from_edges(n, edges);
}

} // namespace fppshield
