// Acyclicity verification for labeled complexes: the supported module
// complex is a resolution iff every degree restriction has vanishing
// reduced homology over the coefficient field.
#pragma once

#include <atomic>
#include <thread>
#include <vector>

#include "ferrers/cell_complex.hpp"
#include "ferrers/field.hpp"
#include "ferrers/homology.hpp"

namespace ferrers {

struct HomologyDefect {
    MultiDegree degree;
    int homological_dim = 0;
    long long rank = 0;
    Field field;
};

struct VerificationReport {
    std::vector<HomologyDefect> defects;
    size_t degrees_checked = 0;
    bool acyclic() const { return defects.empty(); }
};

/**
 * Runs the restriction test over every degree in the lcm lattice of the
 * complex, for each requested field.  Restrictions are independent, so
 * they may be checked concurrently; defects are collected in (degree,
 * dimension, field) order regardless of the thread count.
 */
inline VerificationReport verify_resolution(const LabeledCellComplex& X,
                                            const std::vector<Field>& fields, int jobs = 1) {
    const std::vector<MultiDegree> lattice = lcm_lattice_degrees(X);
    VerificationReport report;
    report.degrees_checked = lattice.size();

    std::vector<std::vector<HomologyDefect>> found(lattice.size());
    auto check_degree = [&](size_t idx) {
        const LabeledCellComplex sub = restrict_complex(X, lattice[idx]);
        for (const Field& field : fields) {
            const std::vector<long long> reduced = reduced_homology(sub, field);
            for (int k = 0; k < static_cast<int>(reduced.size()); ++k)
                if (reduced[k] != 0)
                    found[idx].push_back({lattice[idx], k, reduced[k], field});
        }
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < lattice.size(); ++i) check_degree(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < lattice.size(); i = next.fetch_add(1))
                    check_degree(i);
            });
        for (std::thread& th : pool) th.join();
    }

    for (auto& per_degree : found)
        for (HomologyDefect& d : per_degree) report.defects.push_back(std::move(d));
    return report;
}

}  // namespace ferrers
