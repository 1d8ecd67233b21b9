// Exact rank computations: sparse elimination over GF(p) or Q, and
// fraction-free (Bareiss) elimination for small dense rational ranks.
#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ferrers/field.hpp"

namespace ferrers {

struct Triplet {
    int row;
    int col;
    long long value;
};

namespace detail {

inline long long mod_pow(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long long>((__int128)r * base % p);
        base = static_cast<long long>((__int128)base * base % p);
        exp >>= 1;
    }
    return r;
}

struct GfCoeffs {
    long long p;
    using value = long long;
    value from_int(long long v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
    bool is_zero(const value& v) const { return v == 0; }
    // a / b for the elimination factor
    value div(const value& a, const value& b) const {
        return static_cast<long long>((__int128)a * mod_pow(b, p - 2, p) % p);
    }
    // cur - f * x
    value submul(const value& cur, const value& f, const value& x) const {
        long long r = (cur - static_cast<long long>((__int128)f * x % p)) % p;
        return r < 0 ? r + p : r;
    }
};

struct RationalCoeffs {
    using value = boost::multiprecision::cpp_rational;
    value from_int(long long v) const { return value(v); }
    bool is_zero(const value& v) const { return v == 0; }
    value div(const value& a, const value& b) const { return a / b; }
    value submul(const value& cur, const value& f, const value& x) const { return cur - f * x; }
};

/**
 * Sparse Gaussian elimination with a min-fill heuristic: pivot on a
 * column of minimal live support, inside it on a row of minimal live
 * support.  The boundary matrices showing up here stay very sparse
 * under this rule.
 */
template <class Coeffs>
long long sparse_rank(const std::vector<Triplet>& trips, int nrows, int ncols, const Coeffs& K) {
    using V = typename Coeffs::value;
    std::vector<std::unordered_map<int, V>> rows(nrows), cols(ncols);
    for (const Triplet& t : trips) {
        V v = K.from_int(t.value);
        if (K.is_zero(v)) continue;
        rows[t.row][t.col] = v;
        cols[t.col][t.row] = v;
    }
    std::set<std::pair<int, int>> queue;  // (nnz, col)
    for (int c = 0; c < ncols; ++c)
        if (!cols[c].empty()) queue.insert({static_cast<int>(cols[c].size()), c});

    long long rank = 0;
    while (!queue.empty()) {
        auto [nnz, pc] = *queue.begin();
        queue.erase(queue.begin());
        if (cols[pc].empty()) continue;
        if (static_cast<int>(cols[pc].size()) != nnz) {
            queue.insert({static_cast<int>(cols[pc].size()), pc});
            continue;
        }
        int pr = -1;
        size_t best = SIZE_MAX;
        for (const auto& [r, v] : cols[pc])
            if (rows[r].size() < best) {
                best = rows[r].size();
                pr = r;
            }
        ++rank;
        const V piv = cols[pc][pr];
        const std::vector<std::pair<int, V>> colentries(cols[pc].begin(), cols[pc].end());
        const std::vector<std::pair<int, V>> rowentries(rows[pr].begin(), rows[pr].end());
        for (const auto& [r2, v2] : colentries) {
            if (r2 == pr) continue;
            const V f = K.div(v2, piv);
            for (const auto& [c2, pv] : rowentries) {
                if (c2 == pc) continue;
                auto it = rows[r2].find(c2);
                V nv = K.submul(it == rows[r2].end() ? K.from_int(0) : it->second, f, pv);
                const int old = static_cast<int>(cols[c2].size());
                if (K.is_zero(nv)) {
                    if (it != rows[r2].end()) {
                        rows[r2].erase(it);
                        cols[c2].erase(r2);
                        queue.erase({old, c2});
                        if (old > 1) queue.insert({old - 1, c2});
                    }
                } else if (it == rows[r2].end()) {
                    rows[r2][c2] = nv;
                    cols[c2][r2] = nv;
                    queue.erase({old, c2});
                    queue.insert({old + 1, c2});
                } else {
                    it->second = nv;
                    cols[c2][r2] = nv;
                }
            }
            rows[r2].erase(pc);
        }
        for (const auto& [c2, pv] : rowentries) {
            if (c2 == pc) continue;
            const int old = static_cast<int>(cols[c2].size());
            cols[c2].erase(pr);
            queue.erase({old, c2});
            if (old > 1) queue.insert({old - 1, c2});
        }
        rows[pr].clear();
        cols[pc].clear();
    }
    return rank;
}

// Bareiss fraction-free elimination; exact over Z, hence the rank over Q.
inline long long bareiss_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> M) {
    using boost::multiprecision::cpp_int;
    const int nr = static_cast<int>(M.size());
    const int nc = nr == 0 ? 0 : static_cast<int>(M[0].size());
    cpp_int prev = 1;
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (M[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        for (int r = rank + 1; r < nr; ++r) {
            for (int c2 = c + 1; c2 < nc; ++c2)
                M[r][c2] = (M[rank][c] * M[r][c2] - M[r][c] * M[rank][c2]) / prev;
            M[r][c] = 0;
        }
        prev = M[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace detail

/**
 * Rank of a sparse integer matrix over the given field.  GF(p) uses
 * sparse elimination.  Q uses fraction-free Bareiss elimination on a
 * dense copy when the matrix is small and sparse rational elimination
 * otherwise.
 */
inline long long rank_over(const std::vector<Triplet>& trips, int nrows, int ncols,
                           const Field& field) {
    if (nrows == 0 || ncols == 0) return 0;
    if (!field.is_rational)
        return detail::sparse_rank(trips, nrows, ncols, detail::GfCoeffs{field.p});
    if (static_cast<long long>(nrows) * ncols <= 256 * 256) {
        using boost::multiprecision::cpp_int;
        std::vector<std::vector<cpp_int>> M(nrows, std::vector<cpp_int>(ncols, 0));
        for (const Triplet& t : trips) M[t.row][t.col] += t.value;
        return detail::bareiss_rank(std::move(M));
    }
    return detail::sparse_rank(trips, nrows, ncols, detail::RationalCoeffs{});
}

}  // namespace ferrers
