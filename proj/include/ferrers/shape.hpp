// Generalized Ferrers shapes: a partition lambda with a weakly increasing
// offset vector mu cutting boxes from the left of each row.
#pragma once

#include <string>
#include <vector>

#include "ferrers/ideal.hpp"
#include "ferrers/monomial.hpp"

namespace ferrers {

/**
 * A validated shape (lambda, mu) with
 *   lambda_1 >= ... >= lambda_n >= 1,
 *   0 <= mu_1 <= ... <= mu_n < lambda_n,
 *   lambda_1 >= n.
 * Row i of the diagram carries the cells (i, j) with mu_i < j <= lambda_i.
 */
class Shape {
public:
    static Shape validate(std::vector<int> lambda, std::vector<int> mu) {
        if (lambda.empty() || lambda.size() != mu.size())
            throw error(errc::bad_input, "lambda and mu must be non-empty sequences of equal length");
        const int n = static_cast<int>(lambda.size());
        for (int i = 0; i + 1 < n; ++i)
            if (lambda[i] < lambda[i + 1])
                throw error(errc::not_a_partition, "lambda must be weakly decreasing");
        if (lambda[n - 1] < 1) throw error(errc::not_a_partition, "lambda entries must be positive");
        if (mu[0] < 0) throw error(errc::mu_out_of_range, "mu entries must be non-negative");
        for (int i = 0; i + 1 < n; ++i)
            if (mu[i] > mu[i + 1])
                throw error(errc::mu_out_of_range, "mu must be weakly increasing");
        if (mu[n - 1] >= lambda[n - 1])
            throw error(errc::mu_out_of_range, "mu_n must be smaller than lambda_n");
        if (lambda[0] < n)
            throw error(errc::width_less_than_height, "lambda_1 must be at least the number of rows");
        return Shape(std::move(lambda), std::move(mu));
    }

    int rows() const { return static_cast<int>(lambda_.size()); }  // n
    int cols() const { return lambda_[0]; }                        // m
    const std::vector<int>& lambda() const { return lambda_; }
    const std::vector<int>& mu() const { return mu_; }

    // 1-based cell membership.
    bool cell(int i, int j) const {
        if (i < 1 || i > rows() || j < 1 || j > cols()) return false;
        return mu_[i - 1] < j && j <= lambda_[i - 1];
    }

    long long cell_count() const {
        long long c = 0;
        for (int i = 0; i < rows(); ++i) c += lambda_[i] - mu_[i];
        return c;
    }

    // Whether mu_i >= i-1 holds in every row; the specialization theorems
    // assume this.
    bool mu_row_dominant() const {
        for (int i = 0; i < rows(); ++i)
            if (mu_[i] < i) return false;
        return true;
    }

    std::string ascii_diagram() const {
        std::string out;
        for (int i = 1; i <= rows(); ++i) {
            for (int j = 1; j <= cols(); ++j) out += cell(i, j) ? 'X' : '.';
            out += '\n';
        }
        return out;
    }

    bool operator==(const Shape&) const = default;

private:
    Shape(std::vector<int> lambda, std::vector<int> mu)
        : lambda_(std::move(lambda)), mu_(std::move(mu)) {}

    std::vector<int> lambda_;
    std::vector<int> mu_;
};

inline Shape validate_shape(std::vector<int> lambda, std::vector<int> mu) {
    return Shape::validate(std::move(lambda), std::move(mu));
}

// The ideal generated by x_i y_j over the diagram cells, in the mixed
// context x_1..x_n, y_1..y_m.
inline MonomialIdeal generators(const Shape& shape) {
    const int n = shape.rows(), m = shape.cols();
    VariableContext ctx = VariableContext::xy(n, m);
    std::vector<Monomial> gens;
    gens.reserve(static_cast<size_t>(shape.cell_count()));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            if (shape.cell(i, j)) {
                std::vector<int> e(n + m, 0);
                e[i - 1] = 1;
                e[n + j - 1] = 1;
                gens.push_back(Monomial(std::move(e)));
            }
    return MonomialIdeal(ctx, std::move(gens));
}

/**
 * Predicted number of minimal generators of the specialized ideal,
 * |lambda| - |mu|.  Valid only when mu_i >= i-1 in every row, which makes
 * the identity specialization injective on generators.
 */
inline long long generator_count_predicted(const Shape& shape) {
    if (!shape.mu_row_dominant())
        throw error(errc::mu_too_small, "prediction requires mu_i >= i-1 for all i");
    return shape.cell_count();
}

}  // namespace ferrers
