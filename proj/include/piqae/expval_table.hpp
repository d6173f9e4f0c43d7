#pragma once

#include <cstdint>
#include <unordered_map>

#include "piqae/pauli.hpp"

namespace piqae {

/// Measured (or exact) Pauli expectation values keyed by phase-free string.
/// stderr == 0 marks an exact entry. shots_per_group == 0 means exact mode.
struct ExpvalTable {
    struct Entry {
        double mean = 0.0;
        double stderr = 0.0;
    };

    std::unordered_map<PauliString, Entry, PauliStringHash> entries;
    std::uint64_t shots_per_group = 0;
    std::uint64_t seed = 0;
};

}  // namespace piqae
