// Monomial ideals given by generator sets, minimization and specialization.
#pragma once

#include <algorithm>
#include <vector>

#include "ferrers/monomial.hpp"

namespace ferrers {

/**
 * A monomial ideal presented by a finite generating set.  Generators are
 * kept sorted (degree, then row-major) and exact duplicates removed at
 * construction; minimization (dropping divisible generators) is a
 * separate explicit step.
 */
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(VariableContext ctx, std::vector<Monomial> gens)
        : ctx_(ctx), gens_(std::move(gens)) {
        for (const Monomial& g : gens_) {
            if (g.nvars() != ctx_.size())
                throw error(errc::bad_input, "generator does not match variable context");
            if (g.is_one()) throw error(errc::bad_input, "unit generator");
        }
        std::sort(gens_.begin(), gens_.end(), generator_less);
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    }

    const VariableContext& context() const { return ctx_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    // Monomial membership: divisibility by some generator.
    bool contains(const Monomial& m) const {
        for (const Monomial& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    bool operator==(const MonomialIdeal&) const = default;

private:
    VariableContext ctx_;
    std::vector<Monomial> gens_;
};

// Drops every generator divisible by another one.  Idempotent.
inline MonomialIdeal minimize(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : kept) {
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        }
        // gens are sorted by degree, so no later generator divides g
        // unless it has equal degree, i.e. is equal (already deduped).
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal(ideal.context(), std::move(kept));
}

/**
 * Applies a substitution y_j -> x_{sigma(j)} to every generator and
 * minimizes the image.  The result lives in a pure-x context with
 * max(n, m, max sigma) variables.
 */
inline MonomialIdeal specialize(const MonomialIdeal& ideal, const Substitution& sigma) {
    const VariableContext& src = ideal.context();
    if (!src.mixed()) throw error(errc::bad_input, "specialize requires an x/y context");
    int k = sigma.codomain_size(src);
    VariableContext dst = VariableContext::xonly(k);
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators())
        gens.push_back(specialize_monomial(g, src, sigma, k));
    return minimize(MonomialIdeal(dst, std::move(gens)));
}

// Relabels variables by a permutation of positions (0-based: new position
// perm[i] receives old variable i).  Used for canonical forms in tests
// and the oracle cache.
inline MonomialIdeal permute_variables(const MonomialIdeal& ideal, const std::vector<int>& perm) {
    const int n = ideal.context().size();
    if (static_cast<int>(perm.size()) != n) throw error(errc::bad_input, "permutation size mismatch");
    std::vector<Monomial> gens;
    for (const Monomial& g : ideal.generators()) {
        std::vector<int> e(n, 0);
        for (int i = 0; i < n; ++i) e[perm[i]] = g[i];
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(ideal.context(), std::move(gens));
}

}  // namespace ferrers
