#include "nonlocal/boundary.hpp"

#include <stdexcept>
#include <string>

namespace nonlocal {

BoundaryCondition parse_boundary(std::string_view name) {
  if (name == "periodic") return BoundaryCondition::periodic;
  if (name == "absorbing") return BoundaryCondition::absorbing;
  throw std::invalid_argument("unknown boundary condition '" + std::string(name) + "'");
}

std::string_view to_string(BoundaryCondition bc) noexcept {
  return bc == BoundaryCondition::periodic ? "periodic" : "absorbing";
}

void extend_with_ghosts_into(OffsetArray& out, std::span<const double> cells, BoundaryCondition bc,
                             std::ptrdiff_t halo) {
  const auto m = static_cast<std::ptrdiff_t>(cells.size());
  if (m == 0) throw std::invalid_argument("extend_with_ghosts: no interior cells");
  if (halo < 1) throw std::invalid_argument("extend_with_ghosts: halo must be at least 1");
  if (bc == BoundaryCondition::periodic && halo > m) {
    throw std::invalid_argument("extend_with_ghosts: periodic halo " + std::to_string(halo) + " exceeds " +
                                std::to_string(m) + " cells");
  }
  out.reset(-halo, m - 1 + halo);
  for (std::ptrdiff_t j = 0; j < m; ++j) out[j] = cells[static_cast<std::size_t>(j)];
  for (std::ptrdiff_t g = 1; g <= halo; ++g) {
    if (bc == BoundaryCondition::periodic) {
      out[-g] = cells[static_cast<std::size_t>(m - g)];
      out[m - 1 + g] = cells[static_cast<std::size_t>(g - 1)];
    } else {
      out[-g] = cells.front();
      out[m - 1 + g] = cells.back();
    }
  }
}

OffsetArray extend_with_ghosts(std::span<const double> cells, BoundaryCondition bc, std::ptrdiff_t halo) {
  OffsetArray out;
  extend_with_ghosts_into(out, cells, bc, halo);
  return out;
}

}  // namespace nonlocal
