#pragma once

#include <optional>

namespace cqd {

enum class SlabPolarization { TE, TM };

/// Effective index of the fundamental guided mode of an asymmetric 1-D slab
/// (film n_film of thickness d_um between semi-infinite n_sub and n_cover).
/// Returns nullopt when the mode is cut off.
std::optional<double> slab_effective_index(double n_film, double n_sub,
                                           double n_cover, double d_um,
                                           double lambda_um,
                                           SlabPolarization pol);

}  // namespace cqd
