#pragma once

#include <Eigen/Core>
#include <string>
#include <unordered_map>
#include <vector>

#include "piqae/expval_table.hpp"
#include "piqae/pauli.hpp"
#include "piqae/statevector.hpp"

namespace piqae {

/// Fine-grained Krylov basis labels: per-moment string sets P_0..P_K (P_k is
/// the set of strings of H^k absent from all lower powers) and their
/// concatenation V_1..V_{N_K} in deterministic order.
struct FgksBasis {
    int moment = 0;
    std::vector<std::vector<PauliString>> per_moment_sets;
    std::vector<PauliString> labels;

    int n_k() const { return static_cast<int>(labels.size()); }
};

FgksBasis build_pauli_sets(const PauliOperator& h, int moment);

/// The unique phase-free strings appearing in triple products P_i M P_j with
/// P_i, P_j basis labels and M running over {I} union strings(H). Every
/// matrix element of the subspace Hamiltonian and overlap resolves to a
/// phase times one of these strings.
struct CpSet {
    int moment = 0;
    std::vector<PauliString> strings;  // deterministic order
    std::vector<PauliString> middle;   // I first, then strings(H)
    std::unordered_map<PauliString, int, PauliStringHash> index;

    int d_k() const { return static_cast<int>(strings.size()); }

    struct Triple {
        Phase phase;
        int string_index = -1;
    };
    /// Resolves a P_i * mid * P_j product; throws naming the string if the
    /// product escaped the set (a construction bug).
    Triple triple(const PauliString& left, const PauliString& mid, const PauliString& right) const;
};

CpSet build_cp_set(const PauliOperator& h, const FgksBasis& basis);

/// Exact <psi|P|psi> for every string in the set (stderr 0). Strings sharing
/// an x_mask are batched through one Walsh-Hadamard transform pass.
ExpvalTable exact_expvals(const StateVector& state, const CpSet& cp);

struct RunMetadata {
    std::string model;
    int layers = 0;
    int moment = 0;
    std::string noise = "none";
    std::uint64_t seed = 0;
    std::string basis = "fgks";
};

/// Hermitian subspace matrices over the basis labels plus provenance.
struct SubspaceMatrices {
    Eigen::MatrixXcd h_tilde;
    Eigen::MatrixXcd s_tilde;
    FgksBasis basis;
    RunMetadata metadata;

    int dimension() const { return static_cast<int>(s_tilde.rows()); }
};

/// S_ij and H_ij from tabulated expectation values; both matrices are
/// Hermitized as (M + M^dagger)/2. Throws (naming the string) if the table
/// is missing a required entry.
SubspaceMatrices assemble_matrices(const PauliOperator& h, const FgksBasis& basis, const CpSet& cp,
                                   const ExpvalTable& table);

/// Conventional Krylov reference: basis w_k = H^k|psi>, k = 0..K, with
/// H_kl = <w_k|H|w_l> and S_kl = <w_k|w_l> computed directly on the
/// statevector (no string table).
SubspaceMatrices ks_reference(const PauliOperator& h, const StateVector& state, int moment);

}  // namespace piqae
