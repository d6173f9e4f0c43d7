#include "piqae/gevp.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace piqae {

Eigen::VectorXd OverlapSpectrum::cumulative_trace_distance(double target) const {
    Eigen::VectorXd out(eigenvalues.size());
    double cum = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        cum += eigenvalues(i);
        out(i) = std::abs(cum - target);
    }
    return out;
}

OverlapSpectrum overlap_spectrum(const Eigen::MatrixXcd& s_tilde) {
    if (s_tilde.rows() != s_tilde.cols()) throw std::invalid_argument("overlap matrix not square");
    const double herm_defect = (s_tilde - s_tilde.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-8)
        throw std::invalid_argument("overlap matrix is not Hermitian (defect " +
                                    std::to_string(herm_defect) + ")");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s_tilde);
    if (es.info() != Eigen::Success) throw std::runtime_error("overlap eigendecomposition failed");

    const Eigen::Index n = s_tilde.rows();
    OverlapSpectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index src = n - 1 - i;  // Eigen sorts ascending
        spec.eigenvalues(i) = es.eigenvalues()(src);
        Eigen::VectorXcd v = es.eigenvectors().col(src);
        Eigen::Index top = 0;
        v.cwiseAbs().maxCoeff(&top);
        const Complex pivot = v(top);
        if (std::abs(pivot) > 0) v *= std::conj(pivot) / std::abs(pivot);
        spec.eigenvectors.col(i) = v;
    }
    return spec;
}

int threshold_select(const OverlapSpectrum& spectrum, double xi_c) {
    if (xi_c <= 0) throw std::invalid_argument("xi_c must be positive");
    int m = 0;
    for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i)
        if (spectrum.eigenvalues(i) > xi_c) ++m;
    return m;
}

int strace_select(const OverlapSpectrum& spectrum, double n_k) {
    if (n_k < 1) throw std::invalid_argument("n_k must be >= 1");
    const Eigen::VectorXd dist = spectrum.cumulative_trace_distance(n_k);
    int best_m = 1;
    double best = dist(0);
    for (Eigen::Index i = 1; i < dist.size(); ++i) {
        if (dist(i) < best) {  // strict: ties resolve toward smaller M
            best = dist(i);
            best_m = static_cast<int>(i) + 1;
        }
    }
    return best_m;
}

GevpResult solve_truncated(const Eigen::MatrixXcd& h_tilde, const OverlapSpectrum& spectrum, int m) {
    const int n = spectrum.size();
    if (m < 1 || m > n) throw std::invalid_argument("truncation dimension out of range");
    const double s_m = spectrum.eigenvalues(m - 1);
    if (s_m <= 0)
        throw std::invalid_argument("overlap eigenvalue s_M = " + std::to_string(s_m) +
                                    " is not positive; choose a smaller M");

    const auto u_m = spectrum.eigenvectors.leftCols(m);
    const Eigen::VectorXd inv_sqrt =
        spectrum.eigenvalues.head(m).array().sqrt().inverse().matrix();
    const Eigen::MatrixXcd y = u_m * inv_sqrt.asDiagonal();
    const Eigen::MatrixXcd projected = y.adjoint() * h_tilde * y;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        ((projected + projected.adjoint()) / 2.0).eval());
    if (es.info() != Eigen::Success) throw std::runtime_error("projected eigendecomposition failed");

    GevpResult result;
    result.truncation_dim = m;
    result.eigenvalues = es.eigenvalues();
    result.eigenvectors = es.eigenvectors();
    result.ground_energy = es.eigenvalues()(0);

    const Eigen::VectorXcd w = es.eigenvectors().col(0);
    result.coeffs_truncated = inv_sqrt.cast<Complex>().asDiagonal() * w;  // c_i relative to |s_i>
    result.coeffs_original = u_m * result.coeffs_truncated;              // c'_k relative to |V_k>
    return result;
}

GevpResult solve_truncated(const Eigen::MatrixXcd& h_tilde, const Eigen::MatrixXcd& s_tilde, int m) {
    return solve_truncated(h_tilde, overlap_spectrum(s_tilde), m);
}

BasisVectorFn fgks_basis_vectors(const FgksBasis& basis, const StateVector& zero_moment) {
    return [labels = basis.labels, state = zero_moment](int k) {
        return apply_string(labels.at(static_cast<std::size_t>(k)), state.amps, state.n_qubits);
    };
}

BasisVectorFn ks_basis_vectors(const PauliOperator& h, const StateVector& zero_moment, int moment) {
    auto powers = std::make_shared<std::vector<Eigen::VectorXcd>>();
    powers->push_back(zero_moment.amps);
    for (int k = 1; k <= moment; ++k)
        powers->push_back(apply_operator(h, powers->back(), zero_moment.n_qubits));
    return [powers](int k) { return powers->at(static_cast<std::size_t>(k)); };
}

GevpResult& add_diagnostics(GevpResult& result, const BasisVectorFn& basis_vector, int basis_size,
                            const PauliOperator& h, double reference_energy,
                            const StateVector* ed_ground) {
    if (result.coeffs_original.size() != basis_size)
        throw std::invalid_argument("coefficient/basis size mismatch");

    Eigen::VectorXcd g;
    for (int k = 0; k < basis_size; ++k) {
        const Complex c = result.coeffs_original(k);
        if (k == 0)
            g = c * basis_vector(k);
        else
            g += c * basis_vector(k);
    }
    const double norm = g.norm();
    if (norm < 1e-10)
        throw std::runtime_error("reconstructed subspace state has degenerate coefficients");
    g /= norm;

    const int n = h.n_qubits();
    StateVector gs{n, std::move(g)};
    GevpDiagnostics diag;
    diag.exact_energy = expval(gs, h);
    diag.exact_error_per_site = std::abs(diag.exact_energy - reference_energy) / n;
    if (ed_ground != nullptr) diag.fidelity = fidelity(gs, *ed_ground);
    result.diagnostics = diag;
    return result;
}

double rayleigh_energy(const Eigen::MatrixXcd& h_tilde, const Eigen::MatrixXcd& s_tilde,
                       const Eigen::VectorXcd& coeffs) {
    const double denom = (coeffs.adjoint() * s_tilde * coeffs)(0).real();
    if (std::abs(denom) < 1e-300) throw std::runtime_error("vanishing overlap norm in Rayleigh quotient");
    return (coeffs.adjoint() * h_tilde * coeffs)(0).real() / denom;
}

double zne_extrapolate(const std::vector<std::pair<double, double>>& points, int order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    if (static_cast<int>(points.size()) < order + 1)
        throw std::invalid_argument("polynomial fit of order " + std::to_string(order) +
                                    " needs at least " + std::to_string(order + 1) + " points");
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd vand(n, order + 1);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        double pw = 1.0;
        for (int c = 0; c <= order; ++c) {
            vand(r, c) = pw;
            pw *= points[static_cast<std::size_t>(r)].first;
        }
        rhs(r) = points[static_cast<std::size_t>(r)].second;
    }
    const Eigen::VectorXd coef = vand.colPivHouseholderQr().solve(rhs);
    return coef(0);  // value at lambda = 0
}

}  // namespace piqae
