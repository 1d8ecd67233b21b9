// Reduced homology of cell complexes and simplicial complexes over a field,
// by exact rank-nullity on the sign matrices of the boundary maps.
#pragma once

#include <unordered_map>
#include <vector>

#include "ferrers/cell_complex.hpp"
#include "ferrers/field.hpp"
#include "ferrers/linalg.hpp"
#include "ferrers/simplicial.hpp"

namespace ferrers {

/**
 * Reduced Betti numbers of a labeled cell complex; entry k is the rank
 * of the k-th reduced homology, k = 0..dim.  The augmented complex has
 * the field in degree -1; a non-empty complex always has vanishing
 * reduced homology there, and the empty complex is acyclic by convention
 * (an empty vector is returned).
 */
inline std::vector<long long> reduced_homology(const LabeledCellComplex& X, const Field& field) {
    if (X.empty()) return {};
    const int dim = X.dimension();
    std::vector<long long> sizes(dim + 1);
    for (int d = 0; d <= dim; ++d) sizes[d] = static_cast<long long>(X.faces(d).size());

    std::vector<long long> ranks(dim + 2, 0);  // ranks[d] = rank of boundary from dim d
    ranks[0] = sizes[0] > 0 ? 1 : 0;           // augmentation row of ones
    for (int d = 1; d <= dim; ++d) {
        std::vector<Triplet> trips;
        const auto& below = X.faces(d - 1);
        std::unordered_map<uint64_t, int> pos;
        pos.reserve(below.size() * 2);
        for (int i = 0; i < static_cast<int>(below.size()); ++i) pos[below[i].face.key()] = i;
        const auto& layer = X.faces(d);
        for (int j = 0; j < static_cast<int>(layer.size()); ++j)
            for_each_facet(layer[j].face, [&](const Face& q, int sign) {
                trips.push_back({pos.at(q.key()), j, sign});
            });
        ranks[d] = rank_over(trips, static_cast<int>(below.size()),
                             static_cast<int>(layer.size()), field);
    }

    std::vector<long long> reduced(dim + 1, 0);
    for (int d = 0; d <= dim; ++d) reduced[d] = sizes[d] - ranks[d] - ranks[d + 1];
    return reduced;
}

inline bool is_acyclic(const LabeledCellComplex& X, const Field& field) {
    for (long long r : reduced_homology(X, field))
        if (r != 0) return false;
    return true;
}

/**
 * Reduced Betti numbers of a simplicial complex; the returned vector is
 * indexed with an offset of one, res[k+1] = rank of reduced homology in
 * degree k for k = -1..dim.  Void complexes return an empty vector.
 */
inline std::vector<long long> reduced_homology(const SimplicialComplex& K, const Field& field) {
    if (K.void_complex()) return {};
    const int dim = K.dim();
    std::vector<std::vector<uint32_t>> by_card(dim + 2);
    for (uint32_t f : K.faces) by_card[std::popcount(f)].push_back(f);
    std::vector<std::unordered_map<uint32_t, int>> pos(dim + 2);
    for (int c = 0; c <= dim + 1; ++c)
        for (int i = 0; i < static_cast<int>(by_card[c].size()); ++i) pos[c][by_card[c][i]] = i;

    // ranks[c] = rank of the boundary map from cardinality c to c-1;
    // the map from vertices to the empty face is the augmentation.
    std::vector<long long> ranks(dim + 3, 0);
    for (int c = 1; c <= dim + 1; ++c) {
        if (by_card[c].empty() || by_card[c - 1].empty()) continue;
        std::vector<Triplet> trips;
        for (int j = 0; j < static_cast<int>(by_card[c].size()); ++j) {
            uint32_t f = by_card[c][j];
            int k = 0;
            for (uint32_t m = f; m; m &= m - 1) {
                ++k;
                uint32_t facet = f ^ (m & (~m + 1));
                auto it = pos[c - 1].find(facet);
                if (it != pos[c - 1].end())
                    trips.push_back({it->second, j, (k % 2 == 1) ? 1 : -1});
            }
        }
        ranks[c] = rank_over(trips, static_cast<int>(by_card[c - 1].size()),
                             static_cast<int>(by_card[c].size()), field);
    }

    std::vector<long long> reduced(dim + 2, 0);  // reduced[k+1] = H~_k
    for (int c = 0; c <= dim + 1; ++c)
        reduced[c] = static_cast<long long>(by_card[c].size()) - ranks[c] - ranks[c + 1];
    return reduced;
}

}  // namespace ferrers
