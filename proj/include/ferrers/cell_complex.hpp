// Labeled polyhedral cell complexes supported on products of simplices.
// Faces are pairs (S, T) of non-empty index sets stored as bitmasks; the
// face (S, T) is the product of the simplex on S with the simplex on T
// and has dimension |S| + |T| - 2.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "ferrers/monomial.hpp"
#include "ferrers/shape.hpp"

namespace ferrers {

struct Face {
    uint32_t rows = 0;  // bit i-1 set <=> i in S
    uint32_t cols = 0;  // bit j-1 set <=> j in T

    int dim() const { return std::popcount(rows) + std::popcount(cols) - 2; }
    uint64_t key() const { return (static_cast<uint64_t>(rows) << 32) | cols; }

    std::vector<int> row_list() const { return bits(rows); }
    std::vector<int> col_list() const { return bits(cols); }

    static std::vector<int> bits(uint32_t mask) {
        std::vector<int> out;
        for (int b = 0; mask; ++b, mask >>= 1)
            if (mask & 1) out.push_back(b + 1);
        return out;
    }

    bool operator==(const Face&) const = default;
    bool operator<(const Face& o) const {
        return rows != o.rows ? rows < o.rows : cols < o.cols;
    }
};

/**
 * Enumerates the facets of a face with the tensor-product orientation:
 * dropping the k-th smallest row index carries sign (-1)^(k-1), dropping
 * the l-th smallest column index carries sign (-1)^(|S|-1) * (-1)^(l-1).
 * A one-point factor cannot be dropped.
 */
template <class Fn>
void for_each_facet(const Face& f, Fn&& fn) {
    const int s = std::popcount(f.rows);
    const int t = std::popcount(f.cols);
    if (s >= 2) {
        int k = 0;
        for (uint32_t m = f.rows; m; m &= m - 1) {
            ++k;
            uint32_t low = m & (~m + 1);
            fn(Face{f.rows ^ low, f.cols}, (k % 2 == 1) ? 1 : -1);
        }
    }
    if (t >= 2) {
        const int base = (s % 2 == 1) ? 1 : -1;
        int l = 0;
        for (uint32_t m = f.cols; m; m &= m - 1) {
            ++l;
            uint32_t low = m & (~m + 1);
            fn(Face{f.rows, f.cols ^ low}, base * ((l % 2 == 1) ? 1 : -1));
        }
    }
}

struct LabeledFace {
    Face face;
    Monomial label;
};

/**
 * A finite collection of product faces, closed under the facet relation,
 * with a monomial label on every face.  Faces are stored per dimension
 * in a canonical (rows, cols) order so that chain-complex bases and all
 * exports are deterministic.
 */
class LabeledCellComplex {
public:
    LabeledCellComplex() = default;
    LabeledCellComplex(VariableContext ctx, std::vector<LabeledFace> faces) : ctx_(ctx) {
        int maxdim = -1;
        for (const LabeledFace& lf : faces) maxdim = std::max(maxdim, lf.face.dim());
        by_dim_.assign(maxdim + 1, {});
        for (LabeledFace& lf : faces) {
            if (lf.face.rows == 0 || lf.face.cols == 0)
                throw error(errc::bad_input, "faces must have non-empty row and column sets");
            if (lf.label.nvars() != ctx_.size())
                throw error(errc::bad_input, "label does not match context");
            by_dim_[lf.face.dim()].push_back(std::move(lf));
        }
        for (auto& layer : by_dim_)
            std::sort(layer.begin(), layer.end(),
                      [](const LabeledFace& a, const LabeledFace& b) { return a.face < b.face; });
        for (int d = 0; d <= maxdim; ++d)
            for (int i = 0; i < static_cast<int>(by_dim_[d].size()); ++i) {
                auto [it, fresh] = index_.emplace(by_dim_[d][i].face.key(), std::pair<int, int>{d, i});
                if (!fresh) throw error(errc::bad_input, "duplicate face");
            }
        check_closed();
    }

    const VariableContext& context() const { return ctx_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }

    const std::vector<LabeledFace>& faces(int dim) const {
        static const std::vector<LabeledFace> none;
        if (dim < 0 || dim > dimension()) return none;
        return by_dim_[dim];
    }

    size_t face_count() const {
        size_t n = 0;
        for (const auto& layer : by_dim_) n += layer.size();
        return n;
    }

    std::vector<long long> f_vector() const {
        std::vector<long long> f;
        for (const auto& layer : by_dim_) f.push_back(static_cast<long long>(layer.size()));
        return f;
    }

    std::optional<std::pair<int, int>> find(const Face& f) const {
        auto it = index_.find(f.key());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const Monomial* label(const Face& f) const {
        auto pos = find(f);
        if (!pos) return nullptr;
        return &by_dim_[pos->first][pos->second].label;
    }

    std::vector<LabeledFace> all_faces() const {
        std::vector<LabeledFace> out;
        out.reserve(face_count());
        for (const auto& layer : by_dim_)
            for (const LabeledFace& lf : layer) out.push_back(lf);
        return out;
    }

    // Facets of the maximal-face poset (faces contained in no other face).
    std::vector<LabeledFace> facets() const {
        std::vector<LabeledFace> out;
        std::set<uint64_t> covered;
        for (int d = dimension(); d >= 0; --d)
            for (const LabeledFace& lf : by_dim_[d]) {
                if (covered.count(lf.face.key())) continue;
                out.push_back(lf);
                collect_subfaces(lf.face, covered);
            }
        std::sort(out.begin(), out.end(),
                  [](const LabeledFace& a, const LabeledFace& b) {
                      return a.face.dim() != b.face.dim() ? a.face.dim() > b.face.dim()
                                                          : a.face < b.face;
                  });
        return out;
    }

    // Provenance used by the Betti-number guarantees.
    const std::optional<Shape>& shape() const { return shape_; }
    bool specialized() const { return specialized_; }
    void set_provenance(std::optional<Shape> s, bool specialized) {
        shape_ = std::move(s);
        specialized_ = specialized;
    }

    bool same_faces(const LabeledCellComplex& other) const {
        if (by_dim_.size() != other.by_dim_.size()) return false;
        for (size_t d = 0; d < by_dim_.size(); ++d) {
            if (by_dim_[d].size() != other.by_dim_[d].size()) return false;
            for (size_t i = 0; i < by_dim_[d].size(); ++i)
                if (!(by_dim_[d][i].face == other.by_dim_[d][i].face)) return false;
        }
        return true;
    }

    bool operator==(const LabeledCellComplex& other) const {
        if (!(ctx_ == other.ctx_) || !same_faces(other)) return false;
        for (size_t d = 0; d < by_dim_.size(); ++d)
            for (size_t i = 0; i < by_dim_[d].size(); ++i)
                if (!(by_dim_[d][i].label == other.by_dim_[d][i].label)) return false;
        return true;
    }

private:
    void check_closed() const {
        for (const auto& layer : by_dim_)
            for (const LabeledFace& lf : layer) {
                bool ok = true;
                for_each_facet(lf.face, [&](const Face& q, int) {
                    if (!index_.count(q.key())) ok = false;
                });
                if (!ok) throw error(errc::bad_input, "face collection is not closed under facets");
            }
    }

    void collect_subfaces(const Face& f, std::set<uint64_t>& covered) const {
        for_each_facet(f, [&](const Face& q, int) {
            if (covered.insert(q.key()).second) collect_subfaces(q, covered);
        });
    }

    VariableContext ctx_;
    std::vector<std::vector<LabeledFace>> by_dim_;
    std::unordered_map<uint64_t, std::pair<int, int>> index_;
    std::optional<Shape> shape_;
    bool specialized_ = false;
};

namespace detail {

inline Monomial product_label(int n, int m, uint32_t rows, uint32_t cols) {
    std::vector<int> e(n + m, 0);
    for (uint32_t s = rows; s;) {
        int b = std::countr_zero(s);
        e[b] = 1;
        s &= s - 1;
    }
    for (uint32_t t = cols; t;) {
        int b = std::countr_zero(t);
        e[n + b] = 1;
        t &= t - 1;
    }
    return Monomial(std::move(e));
}

}  // namespace detail

/**
 * The full product complex on the (n-1)-simplex with vertices x_1..x_n
 * and the (m-1)-simplex with vertices y_1..y_m.  The vertex (i, j) is
 * labeled x_i y_j, and each face's label is the lcm of its vertex labels.
 */
inline LabeledCellComplex build_bipartite_complex(int n, int m) {
    if (n < 1 || m < 1) throw error(errc::bad_input, "need n, m >= 1");
    if (n > 20 || m > 20) throw error(errc::bad_input, "product complex too large");
    std::vector<LabeledFace> faces;
    for (uint32_t S = 1; S < (1u << n); ++S)
        for (uint32_t T = 1; T < (1u << m); ++T)
            faces.push_back({Face{S, T}, detail::product_label(n, m, S, T)});
    return LabeledCellComplex(VariableContext::xy(n, m), std::move(faces));
}

/**
 * The subcomplex of the product complex whose faces (S, T) satisfy
 * S x T <= diagram cells.  Because lambda is weakly decreasing and mu
 * weakly increasing this is the interval criterion
 *     mu_{max S} < min T  and  max T <= lambda_{max S},
 * which lets faces be enumerated directly by their pivot row max S
 * without materializing the ambient product complex.
 */
inline LabeledCellComplex build_shape_complex(const Shape& shape) {
    const int n = shape.rows(), m = shape.cols();
    std::vector<LabeledFace> faces;
    for (int p = 1; p <= n; ++p) {
        const int lo = shape.mu()[p - 1];      // T <= (lo, hi]
        const int hi = shape.lambda()[p - 1];
        const int w = hi - lo;
        if (w <= 0) continue;
        const uint32_t pivot = 1u << (p - 1);
        for (uint32_t Sbelow = 0; Sbelow < (1u << (p - 1)); ++Sbelow) {
            const uint32_t S = (Sbelow | pivot);
            for (uint32_t Tbits = 1; Tbits < (1u << w); ++Tbits) {
                const uint32_t T = Tbits << lo;
                faces.push_back({Face{S, T}, detail::product_label(n, m, S, T)});
            }
        }
    }
    LabeledCellComplex X(VariableContext::xy(n, m), std::move(faces));
    X.set_provenance(shape, false);
    return X;
}

// Pushes every label through the substitution; the face poset is kept.
inline LabeledCellComplex specialize_labels(const LabeledCellComplex& X, const Substitution& sigma) {
    const VariableContext& src = X.context();
    if (!src.mixed()) throw error(errc::bad_input, "specialize_labels requires an x/y context");
    const int k = sigma.codomain_size(src);
    std::vector<LabeledFace> faces;
    faces.reserve(X.face_count());
    for (const LabeledFace& lf : X.all_faces())
        faces.push_back({lf.face, specialize_monomial(lf.label, src, sigma, k)});
    LabeledCellComplex Y(VariableContext::xonly(k), std::move(faces));
    Y.set_provenance(X.shape(), true);
    return Y;
}

// The subcomplex of faces whose label divides x^c.
inline LabeledCellComplex restrict_complex(const LabeledCellComplex& X, const MultiDegree& c) {
    if (c.nvars() != X.context().size())
        throw error(errc::bad_input, "degree does not match the complex context");
    std::vector<LabeledFace> faces;
    for (const LabeledFace& lf : X.all_faces())
        if (lf.label.divides(c)) faces.push_back(lf);
    LabeledCellComplex Y(X.context(), std::move(faces));
    Y.set_provenance(X.shape(), X.specialized());
    return Y;
}

/**
 * Lifts a degree on the specialized variables x_1..x_m back to the mixed
 * context x_1..x_n, y_1..y_m:
 *     a_i = max(0, c_i - 1)          (1 <= i <= n)
 *     b_i = c_i - a_i                (1 <= i <= n)
 *     b_i = c_i                      (n <  i <= m).
 */
inline MultiDegree lift_degree(const MultiDegree& cbar, const Shape& shape) {
    const int n = shape.rows(), m = shape.cols();
    if (cbar.nvars() != m) throw error(errc::bad_input, "degree must live on x_1..x_m");
    std::vector<int> e(n + m, 0);
    for (int i = 0; i < n; ++i) {
        e[i] = std::max(0, cbar[i] - 1);
        e[n + i] = cbar[i] - e[i];
    }
    for (int i = n; i < m; ++i) e[n + i] = cbar[i];
    return MultiDegree(std::move(e));
}

/**
 * The join of the original labels of all vertices whose specialized
 * label divides x^cbar.  When every specialized vertex label is
 * squarefree (for the identity substitution: no diagonal cell (i,i)),
 * restricting the mixed complex at this degree captures exactly the
 * faces whose specialized labels divide x^cbar, so specialization
 * commutes with restriction through it.  With diagonal cells no single
 * mixed degree can capture that face set: a coordinate with cbar_i = 1
 * may be spent on a row by one vertex and on a column by another, which
 * then lets the diagonal vertex (i,i) with label exponent two slip into
 * any componentwise restriction.  The closed per-coordinate formula of
 * lift_degree misses in the other direction: it zeroes each row
 * coordinate with cbar_i = 1 and loses squarefree vertices outright.
 */
inline MultiDegree preimage_join_degree(const LabeledCellComplex& X, const Substitution& sigma,
                                        const MultiDegree& cbar) {
    const VariableContext& src = X.context();
    if (!src.mixed()) throw error(errc::bad_input, "preimage join requires an x/y context");
    const int k = sigma.codomain_size(src);
    if (cbar.nvars() != k) throw error(errc::bad_input, "degree does not match the specialized context");
    Monomial join = Monomial::one(src.size());
    for (const LabeledFace& v : X.faces(0))
        if (specialize_monomial(v.label, src, sigma, k).divides(cbar)) join = join.lcm(v.label);
    return join;
}

// All joins of subsets of the vertex labels, zero included; sorted.
inline std::vector<MultiDegree> lcm_lattice_degrees(const LabeledCellComplex& X) {
    std::set<std::vector<int>> lattice;
    lattice.insert(std::vector<int>(X.context().size(), 0));
    for (const LabeledFace& v : X.faces(0)) {
        std::vector<std::vector<int>> fresh;
        for (const std::vector<int>& s : lattice) {
            std::vector<int> j(s);
            for (int i = 0; i < v.label.nvars(); ++i) j[i] = std::max(j[i], v.label[i]);
            fresh.push_back(std::move(j));
        }
        for (auto& j : fresh) lattice.insert(std::move(j));
    }
    std::vector<MultiDegree> out;
    out.reserve(lattice.size());
    for (const auto& e : lattice) out.push_back(MultiDegree(e));
    return out;
}

}  // namespace ferrers
