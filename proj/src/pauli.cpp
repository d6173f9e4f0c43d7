#include "piqae/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace piqae {

namespace {

void check_same_dim(const PauliString& a, const PauliString& b) {
    if (a.n_qubits != b.n_qubits)
        throw std::invalid_argument("pauli dimension mismatch: " + std::to_string(a.n_qubits) +
                                    " vs " + std::to_string(b.n_qubits));
}

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

std::pair<Phase, PauliString> multiply(const PauliString& a, const PauliString& b) {
    check_same_dim(a, b);
    PauliString c(a.n_qubits, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask);
    // Writing each string as i^{#Y} X^x Z^z, commuting Z^za past X^xb picks up
    // (-1)^{za.xb}; the Y bookkeeping absorbs the leftover i exponents.
    int exponent = a.y_count() + b.y_count() - c.y_count() + 2 * parity(a.z_mask & b.x_mask);
    return {Phase(exponent), c};
}

bool commutes(const PauliString& a, const PauliString& b) {
    check_same_dim(a, b);
    return (parity(a.x_mask & b.z_mask) ^ parity(a.z_mask & b.x_mask)) == 0;
}

bool qubitwise_commutes(const PauliString& a, const PauliString& b) {
    check_same_dim(a, b);
    std::uint64_t both = a.support_mask() & b.support_mask();
    std::uint64_t differ = (a.x_mask ^ b.x_mask) | (a.z_mask ^ b.z_mask);
    return (both & differ) == 0;
}

std::string to_string(const PauliString& p) {
    std::string s(static_cast<std::size_t>(p.n_qubits), 'I');
    for (int i = 0; i < p.n_qubits; ++i) {
        bool x = (p.x_mask >> i) & 1;
        bool z = (p.z_mask >> i) & 1;
        if (x && z)
            s[static_cast<std::size_t>(i)] = 'Y';
        else if (x)
            s[static_cast<std::size_t>(i)] = 'X';
        else if (z)
            s[static_cast<std::size_t>(i)] = 'Z';
    }
    return s;
}

PauliString parse_pauli(const std::string& text) {
    if (text.empty() || text.size() > 64)
        throw std::invalid_argument("pauli string length must be in [1, 64]");
    PauliString p(static_cast<int>(text.size()), 0, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        std::uint64_t bit = 1ull << i;
        switch (text[i]) {
            case 'I': break;
            case 'X': p.x_mask |= bit; break;
            case 'Y': p.x_mask |= bit; p.z_mask |= bit; break;
            case 'Z': p.z_mask |= bit; break;
            default:
                throw std::invalid_argument("invalid pauli character '" + std::string(1, text[i]) +
                                            "' in \"" + text + "\"");
        }
    }
    return p;
}

void PauliOperator::add_term(const PauliString& p, Complex coeff) {
    if (p.n_qubits != n_qubits_)
        throw std::invalid_argument("term dimension mismatch");
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) it->second += coeff;
    if (std::abs(it->second) < drop_tolerance) terms_.erase(it);
}

Complex PauliOperator::coefficient(const PauliString& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Complex(0, 0) : it->second;
}

bool PauliOperator::is_hermitian(double tol) const {
    for (const auto& [p, c] : terms_)
        if (std::abs(c.imag()) > tol) return false;
    return true;
}

PauliOperator& PauliOperator::operator*=(Complex scale) {
    if (std::abs(scale) < drop_tolerance) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= scale;
    return *this;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& other) {
    if (other.n_qubits_ != n_qubits_)
        throw std::invalid_argument("operator dimension mismatch");
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
}

PauliOperator op_multiply(const PauliOperator& a, const PauliOperator& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("operator dimension mismatch");
    PauliOperator out(a.n_qubits());
    PauliOperator::TermMap acc;
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            auto [phase, pc] = multiply(pa, pb);
            acc[pc] += ca * cb * phase.value();
        }
    }
    for (const auto& [p, c] : acc)
        if (std::abs(c) >= PauliOperator::drop_tolerance) out.add_term(p, c);
    return out;
}

std::vector<PauliString> string_set(const PauliOperator& a) {
    std::vector<PauliString> out;
    out.reserve(a.size());
    for (const auto& [p, c] : a.terms()) out.push_back(p);
    return out;
}

}  // namespace piqae
