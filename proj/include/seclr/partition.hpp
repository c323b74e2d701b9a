#pragma once

#include <cstdint>
#include <vector>

#include "seclr/dataset.hpp"

namespace seclr {

// Random horizontal split of pooled rows into S near-equal parts (sizes
// differ by at most one). Lossless: the multiset of rows across parts
// equals the input. Deterministic under seed.
std::vector<LocalDataset> partition_horizontal(const LocalDataset& pooled,
                                               std::size_t s,
                                               std::uint64_t seed);

}  // namespace seclr
