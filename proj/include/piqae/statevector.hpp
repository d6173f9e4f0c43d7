#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "piqae/lattice.hpp"
#include "piqae/pauli.hpp"

namespace piqae {

/// Dense 2^N statevector. Amplitude index is the measured bitstring with site
/// 0 as the most significant bit. Unit norm after every public operation.
struct StateVector {
    int n_qubits = 0;
    Eigen::VectorXcd amps;

    Eigen::Index dim() const { return amps.size(); }
};

/// Default guardrail on statevector allocation; override per call for larger runs.
inline constexpr int default_qubit_cap = 24;

/// Maps a site-indexed bit mask (bit i = site i) to amplitude-index space
/// (site 0 most significant).
std::uint64_t site_to_index_mask(std::uint64_t site_mask, int n_qubits);

/// Uniform product state in the x basis: all amplitudes 2^(-N/2).
StateVector plus_state(int n_qubits, int qubit_cap = default_qubit_cap);

StateVector computational_state(std::uint64_t bits, int n_qubits, int qubit_cap = default_qubit_cap);

/// P|psi> on raw amplitudes (unnormalized in general only by phase; P is unitary).
Eigen::VectorXcd apply_string(const PauliString& p, const Eigen::VectorXcd& amps, int n_qubits);

/// exp(-i theta/2 P)|psi> = cos(theta/2)|psi> - i sin(theta/2) P|psi>.
StateVector apply_pauli_rotation(const StateVector& state, const PauliString& p, double theta);

/// Applies a 2x2 gate to one site (used for measurement basis changes).
void apply_one_qubit_inplace(Eigen::VectorXcd& amps, int n_qubits, int site,
                             const Eigen::Matrix2cd& gate);

/// Per-layer HVA angles; betas is empty for the TFIM form. Parameter count is
/// 3L for the MFIM and 2L for the TFIM.
struct HvaParams {
    int layers = 0;
    std::vector<double> alphas;  // ZZ angles, one per layer
    std::vector<double> betas;   // Z angles (MFIM only)
    std::vector<double> gammas;  // X angles

    bool mfim_form() const { return !betas.empty() || layers == 0; }

    std::vector<double> flatten() const;
    static HvaParams unflatten(const std::vector<double>& values, int layers, bool mfim);
};

/// Layered ansatz over |+>^N: within each layer the ZZ rotations are applied
/// first, then Z (MFIM only), then X; layer 1 acts on the reference state
/// first. The terms inside each unitary commute, so the per-edge/per-site
/// rotation ordering does not affect the state.
StateVector prepare_hva(const ModelSpec& spec, const HvaParams& params,
                        int qubit_cap = default_qubit_cap);

/// <psi|P|psi>, real for any state (P Hermitian).
double expval(const StateVector& state, const PauliString& p);
/// <psi|A|psi>, real part; imaginary part is fp noise for Hermitian A.
double expval(const StateVector& state, const PauliOperator& a);
Complex expval_complex(const StateVector& state, const PauliOperator& a);

/// Sum_j c_j P_j |psi>, unnormalized.
Eigen::VectorXcd apply_operator(const PauliOperator& a, const Eigen::VectorXcd& amps, int n_qubits);
Eigen::VectorXcd apply_operator(const PauliOperator& a, const StateVector& state);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

struct EdResult {
    double ground_energy = 0.0;
    StateVector ground_state;
    double residual_norm = 0.0;
    bool converged = false;
    int matvecs = 0;
};

struct LanczosOptions {
    int krylov_cap = 200;     // max Krylov dimension per restart cycle
    int max_matvecs = 500;    // total matrix applications before giving up
    double tolerance = 1e-10; // residual norm target
    std::uint64_t seed = 7;   // start-vector seed
    int qubit_cap = default_qubit_cap;
};

/// Lowest eigenpair by Lanczos with full reorthogonalization over
/// apply_operator matvecs, restarting from the current Ritz vector when the
/// Krylov cap is hit.
EdResult ground_state_ed(const PauliOperator& h, const LanczosOptions& opts = {});

/// Little-endian interleaved re/im doubles, amplitude index as documented above.
void dump_amplitudes(const StateVector& state, std::ostream& os);
StateVector load_amplitudes(std::istream& is, int n_qubits);

}  // namespace piqae
