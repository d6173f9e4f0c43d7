#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "piqae/fgks.hpp"
#include "piqae/pauli.hpp"

namespace piqae {

/// One simultaneously measurable set of qubit-wise commuting strings, with the
/// per-site measurement basis implied by its members. Sites no member touches
/// stay free and default to Z when a basis string is rendered.
struct MeasurementGroup {
    std::vector<int> members;       // indices into CpSet::strings
    std::uint64_t basis_x = 0;      // letter masks over assigned sites
    std::uint64_t basis_z = 0;
    std::uint64_t assigned = 0;     // sites with a fixed letter

    /// Basis rendered as a site string; free sites appear as Z.
    std::string basis_string(int n_qubits) const;
};

/// Greedy coloring of the conflict graph (edges join pairs that do NOT
/// qubit-wise commute), visiting vertices in descending-degree order with
/// canonical string order breaking ties; each vertex joins the first
/// compatible group.
std::vector<MeasurementGroup> group_strings(const CpSet& cp);

/// Analytic grouping bound 8N+3 for the transverse-field model at moment 1.
int tfim_group_bound(int n_sites);

}  // namespace piqae
