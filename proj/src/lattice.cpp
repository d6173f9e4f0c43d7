#include "piqae/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace piqae {

GraphKind parse_graph_kind(const std::string& s) {
    if (s == "chain") return GraphKind::chain;
    if (s == "square") return GraphKind::square;
    if (s == "quito") return GraphKind::quito;
    if (s == "guadalupe") return GraphKind::guadalupe;
    throw std::invalid_argument("unknown graph kind \"" + s + "\"");
}

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::chain: return "chain";
        case GraphKind::square: return "square";
        case GraphKind::quito: return "quito";
        case GraphKind::guadalupe: return "guadalupe";
    }
    return "?";
}

namespace {

CouplingGraph make_chain(int n) {
    if (n < 2) throw std::invalid_argument("chain requires N >= 2");
    CouplingGraph g;
    g.n_sites = n;
    g.name = "chain" + std::to_string(n);
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

CouplingGraph make_square(int rows, int cols) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("square requires rows, cols >= 2");
    CouplingGraph g;
    g.n_sites = rows * cols;
    g.name = "square" + std::to_string(rows) + "x" + std::to_string(cols);
    auto site = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.edges.emplace_back(site(r, c), site(r, c + 1));
            if (r + 1 < rows) g.edges.emplace_back(site(r, c), site(r + 1, c));
        }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

CouplingGraph make_quito() {
    CouplingGraph g;
    g.n_sites = 5;
    g.name = "quito";
    g.edges = {{0, 1}, {1, 2}, {1, 3}, {3, 4}};
    return g;
}

// 16-qubit heavy-hex coupling map (ibmq_guadalupe layout), 16 edges.
CouplingGraph make_guadalupe() {
    CouplingGraph g;
    g.n_sites = 16;
    g.name = "guadalupe";
    g.edges = {{0, 1}, {1, 2}, {1, 4},  {2, 3},   {3, 5},   {4, 7},   {5, 8},   {6, 7},
               {7, 10}, {8, 9}, {8, 11}, {10, 12}, {11, 14}, {12, 13}, {12, 15}, {13, 14}};
    return g;
}

}  // namespace

CouplingGraph build_graph(GraphKind kind, int dim0, int dim1) {
    switch (kind) {
        case GraphKind::chain: return make_chain(dim0);
        case GraphKind::square: return make_square(dim0, dim1);
        case GraphKind::quito: return make_quito();
        case GraphKind::guadalupe: return make_guadalupe();
    }
    throw std::invalid_argument("unknown graph kind");
}

PauliOperator build_hamiltonian(const ModelSpec& spec) {
    const int n = spec.graph.n_sites;
    PauliOperator h(n);
    for (auto [i, j] : spec.graph.edges) {
        PauliString zz(n, 0, (1ull << i) | (1ull << j));
        h.add_term(zz, spec.j_coupling);
    }
    for (int i = 0; i < n; ++i) {
        h.add_term(PauliString(n, 1ull << i, 0), spec.h_x);
        if (spec.h_z != 0.0) h.add_term(PauliString(n, 0, 1ull << i), spec.h_z);
    }
    return h;
}

std::string edge_list_text(const CouplingGraph& graph) {
    std::ostringstream os;
    for (auto [i, j] : graph.edges) os << i << " " << j << "\n";
    return os.str();
}

}  // namespace piqae
