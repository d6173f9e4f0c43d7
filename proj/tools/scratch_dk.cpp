// Temporary probe for set sizes; removed once the CLI lands.
#include <chrono>
#include <iostream>

#include "piqae/fgks.hpp"
#include "piqae/grouping.hpp"
#include "piqae/lattice.hpp"

using namespace piqae;

static void report(const std::string& name, GraphKind kind, int d0, int d1, double hx, double hz,
                   int k) {
    ModelSpec spec;
    spec.graph = build_graph(kind, d0, d1);
    spec.h_x = hx;
    spec.h_z = hz;
    PauliOperator h = build_hamiltonian(spec);
    auto t0 = std::chrono::steady_clock::now();
    FgksBasis basis = build_pauli_sets(h, k);
    CpSet cp = build_cp_set(h, basis);
    auto t1 = std::chrono::steady_clock::now();
    auto groups = group_strings(cp);
    auto t2 = std::chrono::steady_clock::now();
    std::cout << name << " K=" << k << ": terms=" << h.size() << " N_K=" << basis.n_k()
              << " D_K=" << cp.d_k() << " N_g=" << groups.size() << "  (sets "
              << std::chrono::duration<double>(t1 - t0).count() << "s, grouping "
              << std::chrono::duration<double>(t2 - t1).count() << "s)\n";
}

int main() {
    report("quito MFIM", GraphKind::quito, 0, 0, -1.0, 0.5, 2);
    report("guadalupe MFIM", GraphKind::guadalupe, 0, 0, -1.0, 0.5, 1);
    report("square4x4 TFIM", GraphKind::square, 4, 4, -3.05, 0.0, 2);
    report("chain16 MFIM", GraphKind::chain, 16, 0, -1.0, 0.5, 2);
    for (int side : {2, 3, 4, 5}) {
        report("square TFIM N=" + std::to_string(side * side), GraphKind::square, side, side, -3.05,
               0.0, 1);
    }
    return 0;
}
