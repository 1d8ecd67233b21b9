// Brute-force Betti numbers and ring invariants of monomial ideals,
// independent of any supporting complex.  Two routes are provided: the
// upper Koszul simplicial complexes and the graded strands of the Taylor
// complex.  They must agree on every input.
#pragma once

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "ferrers/betti.hpp"
#include "ferrers/field.hpp"
#include "ferrers/homology.hpp"
#include "ferrers/ideal.hpp"
#include "ferrers/linalg.hpp"
#include "ferrers/simplicial.hpp"

namespace ferrers {

// Joins of the non-empty subsets of the generator degrees, deduplicated
// and sorted.  Only these degrees can carry Betti numbers.
inline std::vector<MultiDegree> lcm_lattice_degrees(const MonomialIdeal& ideal) {
    std::set<std::vector<int>> lattice;
    lattice.insert(std::vector<int>(ideal.context().size(), 0));
    for (const Monomial& g : ideal.generators()) {
        std::vector<std::vector<int>> fresh;
        for (const std::vector<int>& s : lattice) {
            std::vector<int> j(s);
            for (int i = 0; i < g.nvars(); ++i) j[i] = std::max(j[i], g[i]);
            fresh.push_back(std::move(j));
        }
        for (auto& j : fresh) lattice.insert(std::move(j));
    }
    lattice.erase(std::vector<int>(ideal.context().size(), 0));
    std::vector<MultiDegree> out;
    out.reserve(lattice.size());
    for (const auto& e : lattice) out.push_back(MultiDegree(e));
    return out;
}

/**
 * The upper Koszul complex of I at degree a: the complex on the support
 * of a whose faces are the squarefree vectors b <= a with x^(a-b) in I.
 * Its reduced homology in degree i-1 is the Betti number beta_{i,a}(I).
 */
inline SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const MultiDegree& a) {
    if (a.nvars() != ideal.context().size())
        throw error(errc::bad_input, "degree does not match the ideal context");
    std::vector<int> ground;
    for (int t = 0; t < a.nvars(); ++t)
        if (a[t] > 0) ground.push_back(t + 1);
    const int g = static_cast<int>(ground.size());
    if (g > 25) throw error(errc::bad_input, "upper Koszul support too large for desk scale");
    std::vector<uint32_t> faces;
    std::vector<int> rem(a.exponents());
    for (uint32_t b = 0; b < (1u << g); ++b) {
        for (int t = 0; t < a.nvars(); ++t) rem[t] = a[t];
        for (uint32_t m = b; m;) {
            int pos = std::countr_zero(m);
            rem[ground[pos] - 1] -= 1;
            m &= m - 1;
        }
        if (ideal.contains(Monomial(rem))) faces.push_back(b);
    }
    return SimplicialComplex::make(std::move(ground), std::move(faces));
}

/**
 * Multigraded Betti numbers of the quotient ring via upper Koszul
 * homology, iterating over the lcm lattice of the minimal generators.
 */
inline BettiTable betti_oracle(const MonomialIdeal& ideal, const Field& field) {
    BettiTable table = BettiTable::quotient_unit();
    for (const MultiDegree& a : lcm_lattice_degrees(ideal)) {
        const SimplicialComplex K = upper_koszul_complex(ideal, a);
        const std::vector<long long> reduced = reduced_homology(K, field);
        // reduced[j] is the homology in degree j-1, i.e. beta_{j,a} of the
        // ideal, which is beta_{j+1,a} of the quotient.
        for (int j = 0; j < static_cast<int>(reduced.size()); ++j)
            if (reduced[j] != 0) table.add(j + 1, a, reduced[j]);
    }
    return table;
}

namespace detail {

/**
 * Homology of the degree-a strand of the Taylor complex.  A subset F of
 * the generators is a strand cell when lcm(F) = a; the differential is
 * the simplicial boundary restricted to the strand (all other entries
 * acquire positive degree and die modulo the maximal ideal).
 *
 * Two exact reductions keep the strands small:
 *  - a generator that is the unique achiever of some coordinate of a is
 *    contained in every strand cell and can be factored out (a diagonal
 *    change of basis, which preserves all boundary ranks);
 *  - if some remaining generator achieves no remaining coordinate, the
 *    strand is a cone and its homology vanishes.
 */
inline void taylor_strand(const std::vector<Monomial>& gens, const MultiDegree& a,
                          const Field& field, BettiTable& out) {
    const int N = a.nvars();
    std::vector<int> Ga;
    for (int t = 0; t < static_cast<int>(gens.size()); ++t)
        if (gens[t].divides(a)) Ga.push_back(t);

    // Mandatory closure.
    std::vector<char> in_m(Ga.size(), 0);
    std::vector<char> satisfied(N, 0);
    for (int t = 0; t < N; ++t)
        if (a[t] == 0) satisfied[t] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t < N; ++t) {
            if (satisfied[t]) continue;
            int achievers = 0, last = -1;
            bool by_m = false;
            for (size_t gi = 0; gi < Ga.size(); ++gi) {
                if (gens[Ga[gi]][t] != a[t]) continue;
                if (in_m[gi]) by_m = true;
                ++achievers;
                last = static_cast<int>(gi);
            }
            if (by_m) {
                satisfied[t] = 1;
                changed = true;
            } else if (achievers == 1 && !in_m[last]) {
                in_m[last] = 1;
                changed = true;
            }
        }
    }

    std::vector<int> core;
    int mandatory = 0;
    for (size_t gi = 0; gi < Ga.size(); ++gi) {
        if (in_m[gi])
            ++mandatory;
        else
            core.push_back(Ga[gi]);
    }
    std::vector<int> need;
    for (int t = 0; t < N; ++t)
        if (!satisfied[t]) need.push_back(t);

    if (core.empty()) {
        if (need.empty() && mandatory > 0) out.add(mandatory, a);  // single cell
        return;
    }
    // Cone check: a core generator achieving no needed coordinate can be
    // toggled freely, so the strand is acyclic.
    for (int g : core) {
        bool achieves = false;
        for (int t : need)
            if (gens[g][t] == a[t]) {
                achieves = true;
                break;
            }
        if (!achieves) return;
    }

    const int rc = static_cast<int>(core.size());
    if (rc > 24) throw error(errc::bad_input, "taylor strand too large for desk scale");
    const int nn = static_cast<int>(need.size());
    std::vector<uint32_t> cover(rc, 0);
    for (int gi = 0; gi < rc; ++gi)
        for (int ti = 0; ti < nn; ++ti)
            if (gens[core[gi]][need[ti]] == a[need[ti]]) cover[gi] |= 1u << ti;
    const uint32_t full = (nn == 32) ? ~0u : ((1u << nn) - 1);

    const size_t NM = size_t{1} << rc;
    std::vector<uint32_t> covered(NM, 0);
    for (size_t mask = 1; mask < NM; ++mask) {
        const size_t low = mask & (~mask + 1);
        covered[mask] = covered[mask ^ low] | cover[std::countr_zero(mask)];
    }

    std::vector<std::vector<uint32_t>> by_card(rc + 1);
    for (size_t mask = 0; mask < NM; ++mask)
        if (covered[mask] == full) by_card[std::popcount(mask)].push_back(static_cast<uint32_t>(mask));
    std::vector<std::unordered_map<uint32_t, int>> pos(rc + 1);
    for (int c = 0; c <= rc; ++c)
        for (int i = 0; i < static_cast<int>(by_card[c].size()); ++i) pos[c][by_card[c][i]] = i;

    std::vector<long long> ranks(rc + 2, 0);
    for (int c = 1; c <= rc; ++c) {
        if (by_card[c].empty() || by_card[c - 1].empty()) continue;
        std::vector<Triplet> trips;
        for (int j = 0; j < static_cast<int>(by_card[c].size()); ++j) {
            const uint32_t mask = by_card[c][j];
            int k = 0;
            for (uint32_t m = mask; m; m &= m - 1) {
                ++k;
                const uint32_t facet = mask ^ (m & (~m + 1));
                if (covered[facet] == full)
                    trips.push_back({pos[c - 1].at(facet), j, (k % 2 == 1) ? 1 : -1});
            }
        }
        ranks[c] = rank_over(trips, static_cast<int>(by_card[c - 1].size()),
                             static_cast<int>(by_card[c].size()), field);
    }
    for (int c = 0; c <= rc; ++c) {
        const long long h = static_cast<long long>(by_card[c].size()) - ranks[c] - ranks[c + 1];
        if (h != 0) out.add(c + mandatory, a, h);
    }
}

}  // namespace detail

/**
 * Multigraded Betti numbers of the quotient ring via the Taylor complex:
 * per multidegree, the homology of the strand of cells whose lcm is that
 * degree.  A second, independent route that must agree with the Koszul
 * oracle on every input.
 */
inline BettiTable taylor_betti(const MonomialIdeal& ideal, const Field& field) {
    if (ideal.generators().size() > 24)
        throw error(errc::bad_input, "taylor oracle supports at most 24 generators at desk scale");
    BettiTable table = BettiTable::quotient_unit();
    for (const MultiDegree& a : lcm_lattice_degrees(ideal))
        detail::taylor_strand(ideal.generators(), a, field, table);
    return table;
}

// Minimum cardinality of a set of variables meeting the support of every
// generator; for monomial ideals this is the height (the minimal primes
// are generated by variables).
inline int height_by_cover(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw error(errc::zero_ideal, "height of the zero ideal");
    const int N = ideal.context().size();
    if (N > 25) throw error(errc::bad_input, "height search too large for desk scale");
    std::vector<uint32_t> supports;
    for (const Monomial& g : ideal.generators()) {
        uint32_t s = 0;
        for (int t = 0; t < N; ++t)
            if (g[t] > 0) s |= 1u << t;
        supports.push_back(s);
    }
    for (int k = 1; k <= N; ++k)
        for (uint32_t cand = 0; cand < (1u << N); ++cand) {
            if (std::popcount(cand) != k) continue;
            bool covers = true;
            for (uint32_t s : supports)
                if ((s & cand) == 0) {
                    covers = false;
                    break;
                }
            if (covers) return k;
        }
    return N;
}

struct InvariantReport {
    BettiTable betti;       // quotient convention
    int pdim = 0;           // of the quotient ring
    int depth = 0;          // of the quotient ring
    int height = 0;         // of the ideal
    int dim = 0;            // of the quotient ring
    int reg = 0;            // of the ideal
    bool cohen_macaulay = false;
};

/**
 * Brute-force invariants of S/I: projective dimension from the Betti
 * table, depth by the Auslander-Buchsbaum formula, height by exhaustive
 * cover search, regularity from the graded table.
 */
inline InvariantReport invariants_oracle(const MonomialIdeal& ideal, const Field& field) {
    if (ideal.is_zero()) throw error(errc::zero_ideal, "invariants of the zero ideal");
    const MonomialIdeal I = minimize(ideal);
    const int nvars = I.context().size();
    InvariantReport rep;
    rep.betti = betti_oracle(I, field);
    rep.pdim = rep.betti.pdim();
    rep.depth = nvars - rep.pdim;
    rep.height = height_by_cover(I);
    rep.dim = nvars - rep.height;
    rep.reg = 0;
    for (const auto& [i, layer] : rep.betti.entries()) {
        if (i == 0) continue;
        for (const auto& [a, v] : layer) {
            int d = 0;
            for (int e : a) d += e;
            rep.reg = std::max(rep.reg, d - (i - 1));
        }
    }
    rep.cohen_macaulay = (rep.depth == rep.dim);
    return rep;
}

}  // namespace ferrers
