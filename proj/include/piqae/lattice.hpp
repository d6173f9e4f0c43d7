#pragma once

#include <string>
#include <utility>
#include <vector>

#include "piqae/pauli.hpp"

namespace piqae {

/// Nearest-neighbor coupling graph with open boundaries. Edges are unordered
/// site pairs stored as (min, max) without duplicates or self-loops.
struct CouplingGraph {
    int n_sites = 0;
    std::vector<std::pair<int, int>> edges;
    std::string name;
};

enum class GraphKind { chain, square, quito, guadalupe };

GraphKind parse_graph_kind(const std::string& s);
std::string to_string(GraphKind kind);

/// chain(N): N-1 edges; square(r,c): r(c-1)+c(r-1) edges, row-major sites;
/// quito: the 5-qubit T layout; guadalupe: the 16-qubit heavy-hex layout.
/// dims are (N) for chain, (rows, cols) for square, ignored for the fixed
/// device graphs. Throws std::invalid_argument on bad dims.
CouplingGraph build_graph(GraphKind kind, int dim0 = 0, int dim1 = 0);

/// Ising model on a coupling graph: J ZZ per edge plus transverse (h_x X) and
/// longitudinal (h_z Z) fields per site. h_z == 0 is the TFIM.
struct ModelSpec {
    CouplingGraph graph;
    double j_coupling = -1.0;
    double h_x = 0.0;
    double h_z = 0.0;

    bool is_tfim() const { return h_z == 0.0; }
};

/// J Z_i Z_j per edge, h_x X_i and h_z Z_i per site; Z_i terms are omitted
/// when h_z = 0.
PauliOperator build_hamiltonian(const ModelSpec& spec);

/// Edge-list text block, one "i j" pair per line.
std::string edge_list_text(const CouplingGraph& graph);

}  // namespace piqae
