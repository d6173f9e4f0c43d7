#pragma once

#include <bit>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace piqae {

using Complex = std::complex<double>;

/// Phase-free N-qubit Pauli string in symplectic bit form. Bit i of x_mask is
/// set iff site i carries X or Y; bit i of z_mask iff site i carries Z or Y.
/// Equality and ordering ignore phases entirely.
struct PauliString {
    int n_qubits = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;

    PauliString() = default;
    PauliString(int n, std::uint64_t x, std::uint64_t z)
        : n_qubits(n), x_mask(x), z_mask(z) {}

    static PauliString identity(int n) { return PauliString(n, 0, 0); }

    bool is_identity() const { return x_mask == 0 && z_mask == 0; }
    std::uint64_t support_mask() const { return x_mask | z_mask; }
    int support() const { return std::popcount(support_mask()); }
    /// Number of sites carrying Y.
    int y_count() const { return std::popcount(x_mask & z_mask); }

    friend bool operator==(const PauliString&, const PauliString&) = default;

    // Deterministic term ordering: lexicographic on (z_mask, x_mask).
    friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
        if (auto c = a.z_mask <=> b.z_mask; c != 0) return c;
        if (auto c = a.x_mask <=> b.x_mask; c != 0) return c;
        return a.n_qubits <=> b.n_qubits;
    }
};

struct PauliStringHash {
    std::size_t operator()(const PauliString& p) const noexcept {
        std::uint64_t h = p.x_mask * 0x9e3779b97f4a7c15ull;
        h ^= p.z_mask + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

/// Fourth root of unity i^k, k in {0,1,2,3}. Multiplication adds exponents mod 4.
struct Phase {
    std::uint8_t k = 0;

    constexpr Phase() = default;
    constexpr explicit Phase(int exponent) : k(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {}

    Complex value() const {
        static constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[k];
    }

    friend Phase operator*(Phase a, Phase b) { return Phase(a.k + b.k); }
    friend bool operator==(Phase, Phase) = default;
};

/// Product of two Pauli strings: matrix(a) * matrix(b) = phase * matrix(c).
std::pair<Phase, PauliString> multiply(const PauliString& a, const PauliString& b);

/// True iff the dense matrices commute (symplectic form is even).
bool commutes(const PauliString& a, const PauliString& b);

/// True iff on every site the single-qubit Paulis are equal or one is identity.
bool qubitwise_commutes(const PauliString& a, const PauliString& b);

/// Left-to-right site rendering over {I,X,Y,Z}, site 0 leftmost, e.g. "ZZIXI".
std::string to_string(const PauliString& p);
/// Exact inverse of to_string. Throws std::invalid_argument on bad input.
PauliString parse_pauli(const std::string& text);

/// Weighted sum of Pauli strings with complex coefficients. Terms are kept in
/// deterministic (z_mask, x_mask) order; coefficients below the drop tolerance
/// are removed on construction and after arithmetic.
class PauliOperator {
  public:
    // Below double-precision accumulation noise; prevents set blowup from
    // exact cancellations.
    static constexpr double drop_tolerance = 1e-12;

    using TermMap = std::map<PauliString, Complex>;

    PauliOperator() = default;
    explicit PauliOperator(int n_qubits) : n_qubits_(n_qubits) {}

    int n_qubits() const { return n_qubits_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Accumulates coeff onto the given string, dropping the term if the
    /// result falls below the drop tolerance.
    void add_term(const PauliString& p, Complex coeff);

    Complex coefficient(const PauliString& p) const;

    /// True iff every coefficient is real within tol.
    bool is_hermitian(double tol = 1e-12) const;

    PauliOperator& operator*=(Complex scale);
    PauliOperator& operator+=(const PauliOperator& other);

  private:
    int n_qubits_ = 0;
    TermMap terms_;
};

/// Expands all pairwise term products, accumulating phases into coefficients
/// and dropping terms below the tolerance. Throws on dimension mismatch.
PauliOperator op_multiply(const PauliOperator& a, const PauliOperator& b);

inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
    return op_multiply(a, b);
}

/// Phase-free support of A: the strings with nonzero coefficient, in
/// deterministic order.
std::vector<PauliString> string_set(const PauliOperator& a);

}  // namespace piqae
