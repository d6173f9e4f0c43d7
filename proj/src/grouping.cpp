#include "piqae/grouping.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace piqae {

std::string MeasurementGroup::basis_string(int n_qubits) const {
    std::string s(static_cast<std::size_t>(n_qubits), 'Z');
    for (int i = 0; i < n_qubits; ++i) {
        if (!((assigned >> i) & 1)) continue;  // free site, rendered as Z
        const bool x = (basis_x >> i) & 1;
        const bool z = (basis_z >> i) & 1;
        s[static_cast<std::size_t>(i)] = x && z ? 'Y' : (x ? 'X' : 'Z');
    }
    return s;
}

namespace {

inline bool conflicts(const PauliString& a, const PauliString& b) {
    const std::uint64_t both = a.support_mask() & b.support_mask();
    return (both & ((a.x_mask ^ b.x_mask) | (a.z_mask ^ b.z_mask))) != 0;
}

std::vector<std::uint32_t> conflict_degrees(const std::vector<PauliString>& strings) {
    const std::size_t n = strings.size();
    std::vector<std::uint32_t> degree(n, 0);

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers < 2 || n < 2048) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (conflicts(strings[i], strings[j])) {
                    ++degree[i];
                    ++degree[j];
                }
        return degree;
    }

    // Partitioned pair counting with per-worker tallies, merged in fixed order.
    std::vector<std::vector<std::uint32_t>> partial(workers,
                                                    std::vector<std::uint32_t>(n, 0));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            auto& local = partial[w];
            for (std::size_t i = w; i < n; i += workers)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (conflicts(strings[i], strings[j])) {
                        ++local[i];
                        ++local[j];
                    }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& local : partial)
        for (std::size_t i = 0; i < n; ++i) degree[i] += local[i];
    return degree;
}

}  // namespace

std::vector<MeasurementGroup> group_strings(const CpSet& cp) {
    const auto& strings = cp.strings;
    const std::size_t n = strings.size();
    const std::vector<std::uint32_t> degree = conflict_degrees(strings);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)])
            return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
        return strings[static_cast<std::size_t>(a)] < strings[static_cast<std::size_t>(b)];
    });

    // A candidate is compatible with a group iff its letters agree with the
    // group's assignment wherever both are fixed; this matches pairwise
    // qubit-wise commutation with every member.
    std::vector<MeasurementGroup> groups;
    for (int idx : order) {
        const PauliString& p = strings[static_cast<std::size_t>(idx)];
        const std::uint64_t support = p.support_mask();
        bool placed = false;
        for (auto& g : groups) {
            const std::uint64_t overlap = support & g.assigned;
            if (((p.x_mask ^ g.basis_x) & overlap) != 0) continue;
            if (((p.z_mask ^ g.basis_z) & overlap) != 0) continue;
            g.members.push_back(idx);
            g.basis_x |= p.x_mask;
            g.basis_z |= p.z_mask;
            g.assigned |= support;
            placed = true;
            break;
        }
        if (!placed) {
            MeasurementGroup g;
            g.members.push_back(idx);
            g.basis_x = p.x_mask;
            g.basis_z = p.z_mask;
            g.assigned = support;
            groups.push_back(std::move(g));
        }
    }
    for (auto& g : groups) std::sort(g.members.begin(), g.members.end());
    return groups;
}

int tfim_group_bound(int n_sites) {
    if (n_sites < 2) throw std::invalid_argument("bound defined for N >= 2");
    return 8 * n_sites + 3;
}

}  // namespace piqae
