#include "piqae/fgks.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace piqae {

FgksBasis build_pauli_sets(const PauliOperator& h, int moment) {
    if (moment < 0) throw std::invalid_argument("moment must be >= 0");
    const int n = h.n_qubits();
    FgksBasis basis;
    basis.moment = moment;

    std::unordered_set<PauliString, PauliStringHash> seen;
    PauliOperator power(n);
    power.add_term(PauliString::identity(n), 1.0);  // H^0

    for (int k = 0; k <= moment; ++k) {
        if (k > 0) power = op_multiply(power, h);
        std::vector<PauliString> fresh;
        for (const auto& p : string_set(power))
            if (seen.insert(p).second) fresh.push_back(p);
        basis.per_moment_sets.push_back(fresh);
        basis.labels.insert(basis.labels.end(), fresh.begin(), fresh.end());
    }
    return basis;
}

CpSet build_cp_set(const PauliOperator& h, const FgksBasis& basis) {
    if (basis.per_moment_sets.empty()) throw std::invalid_argument("empty basis");
    const int n = h.n_qubits();

    CpSet cp;
    cp.moment = basis.moment;
    cp.middle.push_back(PauliString::identity(n));
    for (const auto& p : string_set(h))
        if (!p.is_identity()) cp.middle.push_back(p);

    std::unordered_set<PauliString, PauliStringHash> unique;
    for (const auto& pi : basis.labels) {
        for (const auto& mid : cp.middle) {
            const std::uint64_t x_im = pi.x_mask ^ mid.x_mask;
            const std::uint64_t z_im = pi.z_mask ^ mid.z_mask;
            for (const auto& pj : basis.labels)
                unique.insert(PauliString(n, x_im ^ pj.x_mask, z_im ^ pj.z_mask));
        }
    }
    cp.strings.assign(unique.begin(), unique.end());
    std::sort(cp.strings.begin(), cp.strings.end());
    cp.index.reserve(cp.strings.size());
    for (int i = 0; i < static_cast<int>(cp.strings.size()); ++i) cp.index.emplace(cp.strings[i], i);
    return cp;
}

CpSet::Triple CpSet::triple(const PauliString& left, const PauliString& mid,
                            const PauliString& right) const {
    auto [ph_lm, lm] = multiply(left, mid);
    auto [ph_all, product] = multiply(lm, right);
    auto it = index.find(product);
    if (it == index.end())
        throw std::runtime_error("triple product escaped the measurement set: " +
                                 piqae::to_string(product));
    return Triple{ph_lm * ph_all, it->second};
}

namespace {

// In-place fast Walsh-Hadamard transform (unnormalized).
void wht(std::vector<Complex>& v) {
    const std::size_t n = v.size();
    for (std::size_t h = 1; h < n; h <<= 1)
        for (std::size_t i = 0; i < n; i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                const Complex a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
}

constexpr Complex i_power(int y) {
    constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[y & 3];
}

}  // namespace

ExpvalTable exact_expvals(const StateVector& state, const CpSet& cp) {
    const int n = state.n_qubits;
    const auto dim = static_cast<std::uint64_t>(state.amps.size());

    // Group strings by x_mask: for fixed x, <P(x,z)> = i^y * WHT(w)[z] with
    // w[b] = conj(psi[b^x]) psi[b], so one transform serves all z values.
    std::unordered_map<std::uint64_t, std::vector<const PauliString*>> by_x;
    for (const auto& p : cp.strings) by_x[p.x_mask].push_back(&p);

    ExpvalTable table;
    table.entries.reserve(cp.strings.size());

    std::vector<Complex> w(dim);
    for (const auto& [x_mask, group] : by_x) {
        const std::uint64_t xm = site_to_index_mask(x_mask, n);
        for (std::uint64_t b = 0; b < dim; ++b)
            w[b] = std::conj(state.amps[static_cast<Eigen::Index>(b ^ xm)]) *
                   state.amps[static_cast<Eigen::Index>(b)];
        if (group.size() > 2) {
            wht(w);
            for (const PauliString* p : group) {
                const std::uint64_t zm = site_to_index_mask(p->z_mask, n);
                const double value = (i_power(p->y_count()) * w[zm]).real();
                table.entries.emplace(*p, ExpvalTable::Entry{value, 0.0});
            }
        } else {
            for (const PauliString* p : group) {
                const std::uint64_t zm = site_to_index_mask(p->z_mask, n);
                Complex acc(0, 0);
                for (std::uint64_t b = 0; b < dim; ++b)
                    acc += (std::popcount(zm & b) & 1) ? -w[b] : w[b];
                table.entries.emplace(*p, ExpvalTable::Entry{(i_power(p->y_count()) * acc).real(), 0.0});
            }
        }
    }
    return table;
}

SubspaceMatrices assemble_matrices(const PauliOperator& h, const FgksBasis& basis, const CpSet& cp,
                                   const ExpvalTable& table) {
    const int n_k = basis.n_k();
    const PauliString ident = PauliString::identity(h.n_qubits());

    auto lookup = [&table, &cp](const CpSet::Triple& t) -> double {
        const PauliString& s = cp.strings[static_cast<std::size_t>(t.string_index)];
        auto it = table.entries.find(s);
        if (it == table.entries.end())
            throw std::runtime_error("missing expectation value for string " + to_string(s));
        return it->second.mean;
    };

    SubspaceMatrices out;
    out.basis = basis;
    out.s_tilde.resize(n_k, n_k);
    out.h_tilde.resize(n_k, n_k);

    for (int i = 0; i < n_k; ++i) {
        const PauliString& pi = basis.labels[static_cast<std::size_t>(i)];
        for (int j = 0; j < n_k; ++j) {
            const PauliString& pj = basis.labels[static_cast<std::size_t>(j)];
            auto ts = cp.triple(pi, ident, pj);
            out.s_tilde(i, j) = ts.phase.value() * lookup(ts);
            Complex hij(0, 0);
            for (const auto& [pk, ck] : h.terms()) {
                auto th = cp.triple(pi, pk, pj);
                hij += ck * th.phase.value() * lookup(th);
            }
            out.h_tilde(i, j) = hij;
        }
    }
    out.s_tilde = ((out.s_tilde + out.s_tilde.adjoint()) / 2.0).eval();
    out.h_tilde = ((out.h_tilde + out.h_tilde.adjoint()) / 2.0).eval();
    return out;
}

SubspaceMatrices ks_reference(const PauliOperator& h, const StateVector& state, int moment) {
    if (moment < 0) throw std::invalid_argument("moment must be >= 0");
    const int n = state.n_qubits;
    if (h.n_qubits() != n) throw std::invalid_argument("operator/state dimension mismatch");

    std::vector<Eigen::VectorXcd> basis_vectors{state.amps};
    for (int k = 1; k <= moment; ++k)
        basis_vectors.push_back(apply_operator(h, basis_vectors.back(), n));

    const int m = moment + 1;
    SubspaceMatrices out;
    out.metadata.basis = "ks";
    out.basis.moment = moment;
    out.s_tilde.resize(m, m);
    out.h_tilde.resize(m, m);
    for (int k = 0; k < m; ++k) {
        const Eigen::VectorXcd h_wk =
            apply_operator(h, basis_vectors[static_cast<std::size_t>(k)], n);
        for (int l = 0; l < m; ++l) {
            out.s_tilde(l, k) =
                basis_vectors[static_cast<std::size_t>(l)].dot(basis_vectors[static_cast<std::size_t>(k)]);
            out.h_tilde(l, k) = basis_vectors[static_cast<std::size_t>(l)].dot(h_wk);
        }
    }
    out.s_tilde = ((out.s_tilde + out.s_tilde.adjoint()) / 2.0).eval();
    out.h_tilde = ((out.h_tilde + out.h_tilde.adjoint()) / 2.0).eval();
    return out;
}

}  // namespace piqae
