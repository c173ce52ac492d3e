#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cuelab/rational.hpp"

namespace cuelab {

/// Integer partition: weakly decreasing nonnegative parts, trailing zeros trimmed.
struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) throw std::invalid_argument("Partition: not weakly decreasing");
        if (!parts.empty() && parts.back() < 0) throw std::invalid_argument("Partition: negative part");
    }
    /// Rectangle N^k.
    static Partition rect(long N, long k) {
        if (N == 0) return Partition();
        return Partition(std::vector<long>(static_cast<size_t>(k), N));
    }

    long size() const {
        long s = 0;
        for (long p : parts) s += p;
        return s;
    }
    long length() const { return static_cast<long>(parts.size()); }
    long part(long i) const { return (i >= 0 && i < length()) ? parts[i] : 0; }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    bool contains(const Partition& mu) const {
        for (long i = 0; i < mu.length(); ++i)
            if (mu.parts[i] > part(i)) return false;
        return true;
    }
};

/// Hooks and contents of all cells of a partition.
struct CellData {
    std::vector<long> hooks;    // multiset
    std::vector<long> contents; // multiset, c = j - i (0-based)
};

inline Partition conjugate(const Partition& la) {
    std::vector<long> cols;
    if (la.parts.empty()) return Partition();
    cols.assign(static_cast<size_t>(la.parts[0]), 0);
    for (long p : la.parts)
        for (long j = 0; j < p; ++j) cols[static_cast<size_t>(j)]++;
    return Partition(std::move(cols));
}

inline CellData cell_data(const Partition& la) {
    CellData cd;
    Partition lc = conjugate(la);
    for (long i = 0; i < la.length(); ++i) {
        for (long j = 0; j < la.parts[i]; ++j) {
            cd.hooks.push_back(la.parts[i] - j + lc.parts[static_cast<size_t>(j)] - i - 1);
            cd.contents.push_back(j - i);
        }
    }
    return cd;
}

/// Number of standard Young tableaux d_lambda = |lambda|! / hook product.
inline BigInt syt_count(const Partition& la) {
    CellData cd = cell_data(la);
    BigInt num = factorial(la.size());
    for (long h : cd.hooks) num /= h;
    return num;
}

namespace detail {
inline void enum_box_rec(long maxpart, long rows_left, long m, std::vector<long>& cur,
                         std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (rows_left == 0 || m > maxpart * rows_left) return;
    long hi = std::min(maxpart, m);
    for (long p = hi; p >= 1; --p) {
        cur.push_back(p);
        enum_box_rec(p, rows_left - 1, m - p, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

/// All partitions with length <= k, parts <= N, size m, reverse-lexicographic order.
inline std::vector<Partition> enumerate_box(long k, long N, long m) {
    std::vector<Partition> out;
    if (m < 0 || m > k * N) return out;
    std::vector<long> cur;
    detail::enum_box_rec(N, k, m, cur, out);
    return out;
}

/// All partitions of m (no box restriction).
inline std::vector<Partition> partitions_of(long m) { return enumerate_box(m, m, m); }

/// Complement in the k x N box: mu^c_i = N - mu_{k+1-i}.
inline Partition box_complement(const Partition& mu, long k, long N) {
    if (mu.length() > k || mu.part(0) > N) throw std::invalid_argument("box_complement: mu does not fit");
    std::vector<long> c(static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) c[static_cast<size_t>(i)] = N - mu.part(k - 1 - i);
    return Partition(std::move(c));
}

namespace detail {
inline void strip_rec(const Partition& la, long row, long j, std::vector<long>& cur,
                      std::vector<Partition>& out) {
    if (row == la.length()) {
        if (j == 0) out.push_back(Partition(std::vector<long>(cur)));
        return;
    }
    // nu_row in [la_{row+1}, la_row], removing la_row - nu_row cells
    long lo = std::max(la.part(row + 1), la.parts[row] - j);
    for (long v = la.parts[row]; v >= lo; --v) {
        cur.push_back(v);
        strip_rec(la, row + 1, j - (la.parts[row] - v), cur, out);
        cur.pop_back();
    }
}
} // namespace detail

/// All nu contained in la with |la| - |nu| = j and la/nu a horizontal strip.
inline std::vector<Partition> horizontal_strip_predecessors(const Partition& la, long j) {
    std::vector<Partition> out;
    if (j < 0 || j > la.size()) return out;
    std::vector<long> cur;
    detail::strip_rec(la, 0, j, cur, out);
    return out;
}

} // namespace cuelab
