#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>

#include "piqae/fgks.hpp"
#include "piqae/pauli.hpp"
#include "piqae/statevector.hpp"

namespace piqae {

/// Eigendecomposition of the overlap matrix, eigenvalues sorted descending,
/// eigenvector phases fixed so the largest-magnitude component is real
/// positive.
struct OverlapSpectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;  // columns match eigenvalues

    int size() const { return static_cast<int>(eigenvalues.size()); }
    /// |sum_{i<=M} s_i - target| for M = 1..N (the trace-distance curve).
    Eigen::VectorXd cumulative_trace_distance(double target) const;
};

/// Throws if S deviates from Hermitian by more than 1e-8 (max abs entry).
OverlapSpectrum overlap_spectrum(const Eigen::MatrixXcd& s_tilde);

/// Number of overlap eigenvalues above the threshold xi_c.
int threshold_select(const OverlapSpectrum& spectrum, double xi_c);

/// S-trace criterion: the M minimizing |sum_{i<=M} s_i - n_k|, ties broken
/// toward smaller M.
int strace_select(const OverlapSpectrum& spectrum, double n_k);

struct GevpDiagnostics {
    double exact_energy = 0.0;        // <g|H|g> with the exact Hamiltonian
    double exact_error_per_site = 0.0;
    std::optional<double> fidelity;   // |<g|G>|^2 when the ED state is supplied
};

struct GevpResult {
    int truncation_dim = 0;            // M
    Eigen::VectorXd eigenvalues;       // ascending
    Eigen::MatrixXcd eigenvectors;     // columns, in the whitened basis
    double ground_energy = 0.0;        // lowest eigenvalue
    Eigen::VectorXcd coeffs_truncated; // c_i over the kept overlap eigenvectors
    Eigen::VectorXcd coeffs_original;  // c'_k over the basis labels
    std::optional<GevpDiagnostics> diagnostics;
};

/// Canonical orthogonalization: columns |s_i>/sqrt(s_i) for the top M overlap
/// eigenvectors turn the pencil into a standard Hermitian problem. Requires
/// s_M > 0 (throws otherwise, suggesting a smaller M).
GevpResult solve_truncated(const Eigen::MatrixXcd& h_tilde, const OverlapSpectrum& spectrum, int m);
GevpResult solve_truncated(const Eigen::MatrixXcd& h_tilde, const Eigen::MatrixXcd& s_tilde, int m);

/// Basis vector provider for diagnostics: returns the k-th subspace basis
/// vector in the full Hilbert space.
using BasisVectorFn = std::function<Eigen::VectorXcd(int)>;

BasisVectorFn fgks_basis_vectors(const FgksBasis& basis, const StateVector& zero_moment);
BasisVectorFn ks_basis_vectors(const PauliOperator& h, const StateVector& zero_moment, int moment);

/// Reconstructs |g> = sum_k c'_k V_k, normalizes, and fills exact-energy /
/// fidelity diagnostics. Throws if the reconstructed norm collapses.
GevpResult& add_diagnostics(GevpResult& result, const BasisVectorFn& basis_vector, int basis_size,
                            const PauliOperator& h, double reference_energy,
                            const StateVector* ed_ground = nullptr);

/// Rayleigh quotient c'^dag H c' / c'^dag S c' (real parts; both forms are
/// real for Hermitian matrices).
double rayleigh_energy(const Eigen::MatrixXcd& h_tilde, const Eigen::MatrixXcd& s_tilde,
                       const Eigen::VectorXcd& coeffs);

/// Least-squares polynomial fit of E(lambda) evaluated at lambda = 0.
/// Requires at least order+1 points with distinct lambda values.
double zne_extrapolate(const std::vector<std::pair<double, double>>& points, int order = 2);

}  // namespace piqae
