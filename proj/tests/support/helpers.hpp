// Shared test helpers: monomial literals, shape sweeps, small brute-force
// oracles kept independent of the library internals they check.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "ferrers/graph.hpp"
#include "ferrers/ideal.hpp"
#include "ferrers/monomial.hpp"
#include "ferrers/shape.hpp"

namespace testsupport {

using namespace ferrers;

// Parses "x1*y2^2" style monomial literals against a context.
inline Monomial mono(const VariableContext& ctx, const std::string& text) {
    std::vector<int> e(ctx.size(), 0);
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '*') {
            ++i;
            continue;
        }
        const char kind = text[i++];
        size_t start = i;
        while (i < text.size() && std::isdigit(text[i])) ++i;
        const int idx = std::stoi(text.substr(start, i - start));
        int exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            start = i;
            while (i < text.size() && std::isdigit(text[i])) ++i;
            exp = std::stoi(text.substr(start, i - start));
        }
        const int pos = (kind == 'x') ? idx - 1 : ctx.xcount + idx - 1;
        e.at(pos) += exp;
    }
    return Monomial(std::move(e));
}

inline MonomialIdeal ideal_of(const VariableContext& ctx, const std::vector<std::string>& gens) {
    std::vector<Monomial> ms;
    for (const std::string& s : gens) ms.push_back(mono(ctx, s));
    return MonomialIdeal(ctx, std::move(ms));
}

// Every valid shape with n <= nmax rows and m <= mmax columns; when
// mu_dominant is set, only shapes with mu_i >= i-1.
inline std::vector<Shape> all_shapes(int nmax, int mmax, bool mu_dominant) {
    std::vector<Shape> out;
    std::vector<int> lambda, mu;
    auto rec_mu = [&](auto&& self, int i, int n) -> void {
        if (i == n) {
            out.push_back(validate_shape(lambda, mu));
            return;
        }
        const int lo = std::max({i > 0 ? mu[i - 1] : 0, mu_dominant ? i : 0});
        for (int v = lo; v < lambda[n - 1]; ++v) {
            mu.push_back(v);
            self(self, i + 1, n);
            mu.pop_back();
        }
    };
    auto rec_lambda = [&](auto&& self, int i, int n) -> void {
        if (i == n) {
            mu.clear();
            rec_mu(rec_mu, 0, n);
            return;
        }
        const int hi = i == 0 ? mmax : lambda[i - 1];
        for (int v = i == 0 ? n : 1; v <= hi; ++v) {
            lambda.push_back(v);
            self(self, i + 1, n);
            lambda.pop_back();
        }
    };
    for (int n = 1; n <= nmax; ++n) {
        lambda.clear();
        rec_lambda(rec_lambda, 0, n);
    }
    return out;
}

// All graphs built from creation sequences on mv vertices: position k is
// added as isolated or dominating relative to the earlier vertices.
inline std::vector<Graph> threshold_graphs_from_sequences(int mv) {
    std::vector<Graph> out;
    for (uint32_t bits = 0; bits < (1u << (mv - 1)); ++bits) {
        Graph g = Graph::on(mv);
        for (int k = 2; k <= mv; ++k)
            if (bits >> (k - 2) & 1)
                for (int u = 1; u < k; ++u) g.add_edge(u, k);
        out.push_back(g);
    }
    return out;
}

}  // namespace testsupport
