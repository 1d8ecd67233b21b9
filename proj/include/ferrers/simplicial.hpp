// Abstract simplicial complexes on small ground sets, stored as bitmasks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ferrers/monomial.hpp"

namespace ferrers {

/**
 * A simplicial complex on a ground set of variable indices.  Faces are
 * bitmasks over ground-set positions and include the empty face when the
 * complex is non-void.  The void complex (no faces at all) and the
 * irrelevant complex {empty face} are distinguished: the former has zero
 * reduced homology everywhere, the latter has reduced homology of rank
 * one in degree -1.
 */
struct SimplicialComplex {
    std::vector<int> ground;          // 1-based variable indices, ascending
    std::vector<uint32_t> faces;      // sorted bitmasks over ground positions

    bool void_complex() const { return faces.empty(); }

    int dim() const {
        int d = -2;
        for (uint32_t f : faces) d = std::max(d, std::popcount(f) - 1);
        return d;
    }

    static SimplicialComplex make(std::vector<int> ground, std::vector<uint32_t> faces) {
        SimplicialComplex K;
        K.ground = std::move(ground);
        K.faces = std::move(faces);
        std::sort(K.faces.begin(), K.faces.end());
        K.faces.erase(std::unique(K.faces.begin(), K.faces.end()), K.faces.end());
        return K;
    }
};

}  // namespace ferrers
