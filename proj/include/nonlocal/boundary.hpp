#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "nonlocal/offset_array.hpp"

namespace nonlocal {

enum class BoundaryCondition { periodic, absorbing };

BoundaryCondition parse_boundary(std::string_view name);
std::string_view to_string(BoundaryCondition bc) noexcept;

/// Copies the M interior cells to positions 0..M-1 and fills halo ghost
/// cells on each side. Periodic ghosts wrap modulo M; absorbing ghosts repeat
/// the first and last interior values. A periodic halo wider than M is
/// rejected because the wrap would alias.
OffsetArray extend_with_ghosts(std::span<const double> cells, BoundaryCondition bc, std::ptrdiff_t halo);

/// In-place variant reusing out's storage.
void extend_with_ghosts_into(OffsetArray& out, std::span<const double> cells, BoundaryCondition bc,
                             std::ptrdiff_t halo);

}  // namespace nonlocal
