// Cellular chain complexes with signed monomial differentials.
#pragma once

#include <map>
#include <vector>

#include "ferrers/cell_complex.hpp"
#include "ferrers/monomial.hpp"

namespace ferrers {

struct ChainEntry {
    int row = 0;
    int col = 0;
    int sign = 1;
    Monomial monomial;
};

struct SparseMonomialMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<ChainEntry> entries;  // sorted by (col, row)
};

/**
 * A complex of free modules
 *     0 -> S^{r_d} -> ... -> S^{r_1} -> S -> 0
 * in homological indexing: degree 0 is the ring itself, faces of
 * dimension k sit in degree k+1.  diffs[h] maps degree h+1 to degree h;
 * diffs[0] sends a vertex basis element to its label.
 */
struct ChainComplex {
    VariableContext ctx;
    std::vector<long long> ranks;                     // ranks[h], h = 0..length
    std::vector<SparseMonomialMatrix> diffs;          // diffs[h]: h+1 -> h
    std::vector<std::vector<MultiDegree>> basis_labels;  // per degree h >= 1

    int length() const { return static_cast<int>(ranks.size()) - 1; }
};

inline ChainComplex cellular_chain_complex(const LabeledCellComplex& X) {
    ChainComplex C;
    C.ctx = X.context();
    C.ranks.push_back(1);  // the ring
    const int dim = X.dimension();
    for (int d = 0; d <= dim; ++d) {
        C.ranks.push_back(static_cast<long long>(X.faces(d).size()));
        std::vector<MultiDegree> labels;
        for (const LabeledFace& lf : X.faces(d)) labels.push_back(lf.label);
        C.basis_labels.push_back(std::move(labels));
    }
    if (X.empty()) return C;

    // Augmentation: each vertex maps to its label.
    SparseMonomialMatrix aug;
    aug.rows = 1;
    aug.cols = static_cast<int>(X.faces(0).size());
    for (int j = 0; j < aug.cols; ++j) aug.entries.push_back({0, j, 1, X.faces(0)[j].label});
    C.diffs.push_back(std::move(aug));

    for (int d = 1; d <= dim; ++d) {
        SparseMonomialMatrix D;
        D.rows = static_cast<int>(X.faces(d - 1).size());
        D.cols = static_cast<int>(X.faces(d).size());
        for (int j = 0; j < D.cols; ++j) {
            const LabeledFace& P = X.faces(d)[j];
            for_each_facet(P.face, [&](const Face& Q, int sign) {
                auto pos = X.find(Q);
                if (!pos) throw error(errc::bad_input, "complex not closed under facets");
                const Monomial& ql = X.faces(d - 1)[pos->second].label;
                D.entries.push_back({pos->second, j, sign, P.label.quotient_by(ql)});
            });
        }
        std::sort(D.entries.begin(), D.entries.end(), [](const ChainEntry& a, const ChainEntry& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
        C.diffs.push_back(std::move(D));
    }
    return C;
}

/**
 * Expands each composite entry of consecutive differentials as a sum of
 * sign * monomial products per (row, column) pair and checks that every
 * coefficient cancels.
 */
inline bool d_squared_is_zero(const ChainComplex& C) {
    for (size_t h = 0; h + 1 < C.diffs.size(); ++h) {
        const SparseMonomialMatrix& lo = C.diffs[h];
        const SparseMonomialMatrix& hi = C.diffs[h + 1];
        std::vector<std::vector<const ChainEntry*>> lo_by_col(lo.cols);
        for (const ChainEntry& e : lo.entries) lo_by_col[e.col].push_back(&e);

        int col = -1;
        std::map<std::pair<int, std::vector<int>>, long long> acc;
        auto flush = [&]() {
            for (const auto& [key, coeff] : acc)
                if (coeff != 0) return false;
            acc.clear();
            return true;
        };
        for (size_t i = 0; i <= hi.entries.size(); ++i) {
            if (i == hi.entries.size() || hi.entries[i].col != col) {
                if (!flush()) return false;
                if (i == hi.entries.size()) break;
                col = hi.entries[i].col;
            }
            const ChainEntry& top = hi.entries[i];
            for (const ChainEntry* bot : lo_by_col[top.row]) {
                Monomial m = top.monomial * bot->monomial;
                acc[{bot->row, m.exponents()}] += static_cast<long long>(top.sign) * bot->sign;
            }
        }
    }
    return true;
}

// A resolution fragment is minimal iff no differential entry is a unit.
inline bool check_minimal(const ChainComplex& C) {
    for (size_t h = 1; h < C.diffs.size(); ++h)
        for (const ChainEntry& e : C.diffs[h].entries)
            if (e.monomial.degree() < 1) return false;
    return true;
}

}  // namespace ferrers
