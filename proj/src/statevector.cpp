#include "piqae/statevector.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "piqae/rng.hpp"

namespace piqae {

namespace {

constexpr Complex i_power(int y) {
    constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[y & 3];
}

void check_cap(int n_qubits, int cap) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    if (n_qubits > cap)
        throw std::invalid_argument("statevector with " + std::to_string(n_qubits) +
                                    " qubits exceeds the cap of " + std::to_string(cap));
}

void check_dim(const StateVector& s, int n) {
    if (s.n_qubits != n) throw std::invalid_argument("state/operator dimension mismatch");
}

}  // namespace

std::uint64_t site_to_index_mask(std::uint64_t site_mask, int n_qubits) {
    std::uint64_t out = 0;
    while (site_mask) {
        int i = std::countr_zero(site_mask);
        site_mask &= site_mask - 1;
        out |= 1ull << (n_qubits - 1 - i);
    }
    return out;
}

StateVector plus_state(int n_qubits, int qubit_cap) {
    check_cap(n_qubits, qubit_cap);
    StateVector s;
    s.n_qubits = n_qubits;
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    s.amps = Eigen::VectorXcd::Constant(dim, Complex(std::pow(2.0, -0.5 * n_qubits), 0.0));
    return s;
}

StateVector computational_state(std::uint64_t bits, int n_qubits, int qubit_cap) {
    check_cap(n_qubits, qubit_cap);
    StateVector s;
    s.n_qubits = n_qubits;
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    if (bits >= static_cast<std::uint64_t>(dim)) throw std::invalid_argument("bitstring out of range");
    s.amps = Eigen::VectorXcd::Zero(dim);
    s.amps[static_cast<Eigen::Index>(bits)] = Complex(1, 0);
    return s;
}

Eigen::VectorXcd apply_string(const PauliString& p, const Eigen::VectorXcd& amps, int n_qubits) {
    if (p.n_qubits != n_qubits) throw std::invalid_argument("pauli/state dimension mismatch");
    const std::uint64_t xm = site_to_index_mask(p.x_mask, n_qubits);
    const std::uint64_t zm = site_to_index_mask(p.z_mask, n_qubits);
    const Complex front = i_power(p.y_count());
    const auto dim = static_cast<std::uint64_t>(amps.size());
    Eigen::VectorXcd out(amps.size());
    for (std::uint64_t j = 0; j < dim; ++j) {
        const std::uint64_t src = j ^ xm;
        const double sign = (std::popcount(zm & src) & 1) ? -1.0 : 1.0;
        out[static_cast<Eigen::Index>(j)] = front * sign * amps[static_cast<Eigen::Index>(src)];
    }
    return out;
}

StateVector apply_pauli_rotation(const StateVector& state, const PauliString& p, double theta) {
    check_dim(state, p.n_qubits);
    const std::uint64_t xm = site_to_index_mask(p.x_mask, state.n_qubits);
    const std::uint64_t zm = site_to_index_mask(p.z_mask, state.n_qubits);
    const Complex c(std::cos(theta / 2), 0.0);
    const Complex ms = Complex(0, -1) * std::sin(theta / 2) * i_power(p.y_count());
    const auto dim = static_cast<std::uint64_t>(state.amps.size());
    StateVector out;
    out.n_qubits = state.n_qubits;
    out.amps.resize(state.amps.size());
    for (std::uint64_t j = 0; j < dim; ++j) {
        const std::uint64_t src = j ^ xm;
        const double sign = (std::popcount(zm & src) & 1) ? -1.0 : 1.0;
        out.amps[static_cast<Eigen::Index>(j)] =
            c * state.amps[static_cast<Eigen::Index>(j)] +
            ms * sign * state.amps[static_cast<Eigen::Index>(src)];
    }
    return out;
}

void apply_one_qubit_inplace(Eigen::VectorXcd& amps, int n_qubits, int site,
                             const Eigen::Matrix2cd& gate) {
    if (site < 0 || site >= n_qubits) throw std::invalid_argument("site out of range");
    const std::uint64_t bit = 1ull << (n_qubits - 1 - site);
    const auto dim = static_cast<std::uint64_t>(amps.size());
    for (std::uint64_t j = 0; j < dim; ++j) {
        if (j & bit) continue;
        const auto j0 = static_cast<Eigen::Index>(j);
        const auto j1 = static_cast<Eigen::Index>(j | bit);
        const Complex a0 = amps[j0], a1 = amps[j1];
        amps[j0] = gate(0, 0) * a0 + gate(0, 1) * a1;
        amps[j1] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
}

std::vector<double> HvaParams::flatten() const {
    std::vector<double> v;
    for (int l = 0; l < layers; ++l) {
        v.push_back(alphas[static_cast<std::size_t>(l)]);
        if (!betas.empty()) v.push_back(betas[static_cast<std::size_t>(l)]);
        v.push_back(gammas[static_cast<std::size_t>(l)]);
    }
    return v;
}

HvaParams HvaParams::unflatten(const std::vector<double>& values, int layers, bool mfim) {
    const std::size_t per_layer = mfim ? 3 : 2;
    if (values.size() != per_layer * static_cast<std::size_t>(layers))
        throw std::invalid_argument("HVA parameter count mismatch");
    HvaParams p;
    p.layers = layers;
    for (int l = 0; l < layers; ++l) {
        const std::size_t base = per_layer * static_cast<std::size_t>(l);
        p.alphas.push_back(values[base]);
        if (mfim) p.betas.push_back(values[base + 1]);
        p.gammas.push_back(values[base + per_layer - 1]);
    }
    return p;
}

StateVector prepare_hva(const ModelSpec& spec, const HvaParams& params, int qubit_cap) {
    const int n = spec.graph.n_sites;
    const bool mfim = !spec.is_tfim();
    const auto layers = static_cast<std::size_t>(params.layers);
    if (params.alphas.size() != layers || params.gammas.size() != layers ||
        params.betas.size() != (mfim ? layers : 0))
        throw std::invalid_argument("HVA parameter count inconsistent with model");
    StateVector state = plus_state(n, qubit_cap);
    for (std::size_t l = 0; l < layers; ++l) {
        for (auto [i, j] : spec.graph.edges)
            state = apply_pauli_rotation(state, PauliString(n, 0, (1ull << i) | (1ull << j)),
                                         params.alphas[l]);
        if (mfim)
            for (int i = 0; i < n; ++i)
                state = apply_pauli_rotation(state, PauliString(n, 0, 1ull << i), params.betas[l]);
        for (int i = 0; i < n; ++i)
            state = apply_pauli_rotation(state, PauliString(n, 1ull << i, 0), params.gammas[l]);
    }
    return state;
}

double expval(const StateVector& state, const PauliString& p) {
    check_dim(state, p.n_qubits);
    const std::uint64_t xm = site_to_index_mask(p.x_mask, state.n_qubits);
    const std::uint64_t zm = site_to_index_mask(p.z_mask, state.n_qubits);
    const Complex front = i_power(p.y_count());
    const auto dim = static_cast<std::uint64_t>(state.amps.size());
    Complex acc(0, 0);
    for (std::uint64_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(zm & b) & 1) ? -1.0 : 1.0;
        acc += std::conj(state.amps[static_cast<Eigen::Index>(b ^ xm)]) * sign *
               state.amps[static_cast<Eigen::Index>(b)];
    }
    return (front * acc).real();
}

Complex expval_complex(const StateVector& state, const PauliOperator& a) {
    check_dim(state, a.n_qubits());
    Eigen::VectorXcd h_psi = apply_operator(a, state.amps, state.n_qubits);
    return state.amps.dot(h_psi);  // Eigen dot conjugates the left argument
}

double expval(const StateVector& state, const PauliOperator& a) {
    return expval_complex(state, a).real();
}

Eigen::VectorXcd apply_operator(const PauliOperator& a, const Eigen::VectorXcd& amps, int n_qubits) {
    if (a.n_qubits() != n_qubits) throw std::invalid_argument("operator/state dimension mismatch");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(amps.size());
    const auto dim = static_cast<std::uint64_t>(amps.size());
    for (const auto& [p, coeff] : a.terms()) {
        const std::uint64_t xm = site_to_index_mask(p.x_mask, n_qubits);
        const std::uint64_t zm = site_to_index_mask(p.z_mask, n_qubits);
        const Complex front = coeff * i_power(p.y_count());
        for (std::uint64_t j = 0; j < dim; ++j) {
            const std::uint64_t src = j ^ xm;
            const double sign = (std::popcount(zm & src) & 1) ? -1.0 : 1.0;
            out[static_cast<Eigen::Index>(j)] += front * sign * amps[static_cast<Eigen::Index>(src)];
        }
    }
    return out;
}

Eigen::VectorXcd apply_operator(const PauliOperator& a, const StateVector& state) {
    return apply_operator(a, state.amps, state.n_qubits);
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.n_qubits != b.n_qubits) throw std::invalid_argument("state dimension mismatch");
    return std::norm(a.amps.dot(b.amps));
}

EdResult ground_state_ed(const PauliOperator& h, const LanczosOptions& opts) {
    const int n = h.n_qubits();
    check_cap(n, opts.qubit_cap);
    const Eigen::Index dim = Eigen::Index(1) << n;

    StreamRng rng = StreamRng::derive(opts.seed, 0x1a2b3c4d);
    Eigen::VectorXcd v(dim);
    for (Eigen::Index j = 0; j < dim; ++j) v[j] = Complex(rng.normal(), rng.normal());
    v.normalize();

    EdResult result;
    result.ground_state.n_qubits = n;

    while (result.matvecs < opts.max_matvecs) {
        // One Lanczos cycle with full reorthogonalization, starting from v.
        std::vector<Eigen::VectorXcd> basis{v};
        std::vector<double> alpha, beta;
        Eigen::VectorXd ritz_vec;
        double ritz_val = 0.0;
        bool cycle_done = false;

        while (!cycle_done && static_cast<int>(basis.size()) <= opts.krylov_cap &&
               result.matvecs < opts.max_matvecs) {
            Eigen::VectorXcd w = apply_operator(h, basis.back(), n);
            ++result.matvecs;
            alpha.push_back(basis.back().dot(w).real());
            w -= alpha.back() * basis.back();
            if (basis.size() > 1) w -= beta.back() * basis[basis.size() - 2];
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : basis) w -= u.dot(w) * u;

            const int m = static_cast<int>(alpha.size());
            Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
            for (int i = 0; i < m; ++i) tri(i, i) = alpha[static_cast<std::size_t>(i)];
            for (int i = 0; i + 1 < m; ++i)
                tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
            ritz_val = es.eigenvalues()(0);
            ritz_vec = es.eigenvectors().col(0);

            const double b = w.norm();
            // Residual bound |beta * last component|; cheap convergence probe.
            const double bound = b * std::abs(ritz_vec(m - 1));
            if (bound <= opts.tolerance || b < 1e-14 || m >= opts.krylov_cap ||
                result.matvecs >= opts.max_matvecs) {
                cycle_done = true;
            } else {
                beta.push_back(b);
                basis.push_back(w / b);
            }
        }

        Eigen::VectorXcd ritz = Eigen::VectorXcd::Zero(dim);
        for (std::size_t i = 0; i < alpha.size(); ++i)
            ritz += ritz_vec(static_cast<Eigen::Index>(i)) * basis[i];
        ritz.normalize();

        Eigen::VectorXcd h_ritz = apply_operator(h, ritz, n);
        ++result.matvecs;
        const double energy = ritz.dot(h_ritz).real();
        const double residual = (h_ritz - energy * ritz).norm();

        result.ground_energy = energy;
        result.ground_state.amps = std::move(ritz);
        result.residual_norm = residual;
        if (residual <= opts.tolerance) {
            result.converged = true;
            return result;
        }
        v = result.ground_state.amps;  // restart from the current Ritz vector
    }
    return result;  // non-convergence reported via converged=false + residual
}

void dump_amplitudes(const StateVector& state, std::ostream& os) {
    for (Eigen::Index j = 0; j < state.amps.size(); ++j) {
        const double re = state.amps[j].real();
        const double im = state.amps[j].imag();
        os.write(reinterpret_cast<const char*>(&re), sizeof(double));
        os.write(reinterpret_cast<const char*>(&im), sizeof(double));
    }
}

StateVector load_amplitudes(std::istream& is, int n_qubits) {
    StateVector s;
    s.n_qubits = n_qubits;
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    s.amps.resize(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        double re = 0, im = 0;
        is.read(reinterpret_cast<char*>(&re), sizeof(double));
        is.read(reinterpret_cast<char*>(&im), sizeof(double));
        s.amps[j] = Complex(re, im);
    }
    if (!is) throw std::runtime_error("amplitude stream truncated");
    return s;
}

}  // namespace piqae
