#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ferrers/cell_complex.hpp"
#include "support/helpers.hpp"

using namespace ferrers;
using testsupport::all_shapes;
using testsupport::mono;

namespace {

// Independent face oracle: every (S, T) with S x T inside the diagram.
std::set<std::pair<uint32_t, uint32_t>> brute_faces(const Shape& s) {
    std::set<std::pair<uint32_t, uint32_t>> out;
    const int n = s.rows(), m = s.cols();
    for (uint32_t S = 1; S < (1u << n); ++S)
        for (uint32_t T = 1; T < (1u << m); ++T) {
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i)
                for (int j = 1; j <= m && ok; ++j)
                    if ((S >> (i - 1) & 1) && (T >> (j - 1) & 1) && !s.cell(i, j)) ok = false;
            if (ok) out.insert({S, T});
        }
    return out;
}

}  // namespace

TEST_CASE("bipartite product complex has the prism f-vector") {
    const LabeledCellComplex X = build_bipartite_complex(2, 3);
    CHECK(X.f_vector() == std::vector<long long>{6, 9, 5, 1});

    const LabeledCellComplex pt = build_bipartite_complex(1, 1);
    CHECK(pt.f_vector() == std::vector<long long>{1});
    CHECK(pt.faces(0)[0].label == mono(VariableContext::xy(1, 1), "x1y1"));

    const LabeledCellComplex seg = build_bipartite_complex(1, 2);
    CHECK(seg.f_vector() == std::vector<long long>{2, 1});
    CHECK(seg.faces(1)[0].label == mono(VariableContext::xy(1, 2), "x1y1y2"));
}

TEST_CASE("shape complex of the two-triangles-and-a-rectangle example") {
    const LabeledCellComplex X = build_shape_complex(validate_shape({4, 4, 4}, {1, 2, 3}));
    CHECK(X.f_vector() == std::vector<long long>{6, 8, 3});
    const auto facets = X.facets();
    REQUIRE(facets.size() == 3);
    int triangles = 0, quads = 0;
    for (const LabeledFace& f : facets) {
        const int s = std::popcount(f.face.rows), t = std::popcount(f.face.cols);
        if ((s == 1 && t == 3) || (s == 3 && t == 1)) ++triangles;
        if (s == 2 && t == 2) ++quads;
    }
    CHECK(triangles == 2);
    CHECK(quads == 1);
}

TEST_CASE("zero mu gives back the whole product complex") {
    const LabeledCellComplex A = build_shape_complex(validate_shape({3, 3}, {0, 0}));
    const LabeledCellComplex B = build_bipartite_complex(2, 3);
    CHECK(A.same_faces(B));
    CHECK(A.f_vector() == B.f_vector());
}

TEST_CASE("the steep staircase has a 2-simplex facet") {
    const LabeledCellComplex X = build_shape_complex(validate_shape({5, 5, 5}, {1, 3, 4}));
    bool found = false;
    for (const LabeledFace& f : X.facets())
        if (f.face.rows == 0b111u && f.face.cols == 0b10000u) found = true;
    CHECK(found);
}

TEST_CASE("interval criterion agrees with the brute-force face test") {
    for (const Shape& s : all_shapes(4, 6, false)) {
        const LabeledCellComplex X = build_shape_complex(s);
        const auto expected = brute_faces(s);
        size_t count = 0;
        for (const LabeledFace& lf : X.all_faces()) {
            ++count;
            CHECK(expected.count({lf.face.rows, lf.face.cols}) == 1);
        }
        REQUIRE(count == expected.size());
    }
}

TEST_CASE("labels are lcms of vertex labels") {
    const LabeledCellComplex X = build_shape_complex(validate_shape({4, 4}, {1, 2}));
    for (const LabeledFace& lf : X.all_faces()) {
        Monomial join = Monomial::one(X.context().size());
        for (int i : lf.face.row_list())
            for (int j : lf.face.col_list()) {
                const Monomial* v = X.label(Face{1u << (i - 1), 1u << (j - 1)});
                REQUIRE(v != nullptr);
                join = join.lcm(*v);
            }
        CHECK(lf.label == join);
        CHECK(lf.label.degree() == lf.face.dim() + 2);
    }
}

TEST_CASE("specialized labels of the running example") {
    const LabeledCellComplex X = build_shape_complex(validate_shape({4, 4, 4}, {1, 2, 3}));
    const LabeledCellComplex Y = specialize_labels(X, Substitution::identity(4));
    REQUIRE(Y.context() == VariableContext::xonly(4));
    std::set<std::vector<int>> labels;
    for (const LabeledFace& v : Y.faces(0)) labels.insert(v.label.exponents());
    const VariableContext x4 = VariableContext::xonly(4);
    std::set<std::vector<int>> expected;
    for (const char* s : {"x1x2", "x1x3", "x1x4", "x2x3", "x2x4", "x3x4"})
        expected.insert(mono(x4, s).exponents());
    CHECK(labels == expected);

    // Same poset, labels pushed through; degree preserved.
    CHECK(Y.same_faces(X));
    for (int d = 0; d <= Y.dimension(); ++d)
        for (const LabeledFace& lf : Y.faces(d)) CHECK(lf.label.degree() == d + 2);
}

TEST_CASE("specializing a single vertex squares its label") {
    const LabeledCellComplex X = build_shape_complex(validate_shape({1}, {0}));
    const LabeledCellComplex Y = specialize_labels(X, Substitution::identity(1));
    CHECK(Y.faces(0)[0].label == mono(VariableContext::xonly(1), "x1^2"));
}

TEST_CASE("specializing an edge label") {
    const LabeledCellComplex X = build_shape_complex(validate_shape({4, 4}, {1, 2}));
    const LabeledCellComplex Y = specialize_labels(X, Substitution::identity(4));
    const Monomial* lbl = Y.label(Face{0b01u, 0b1100u});  // ({1},{3,4})
    REQUIRE(lbl != nullptr);
    CHECK(*lbl == mono(VariableContext::xonly(4), "x1x3x4"));
}

TEST_CASE("restriction picks out the expected subcomplexes") {
    const LabeledCellComplex X = build_bipartite_complex(2, 3);
    const VariableContext ctx = X.context();

    const LabeledCellComplex v = restrict_complex(X, mono(ctx, "x1y1"));
    CHECK(v.f_vector() == std::vector<long long>{1});

    const LabeledCellComplex all = restrict_complex(X, mono(ctx, "x1x2y1y2y3"));
    CHECK(all.same_faces(X));

    const LabeledCellComplex path = restrict_complex(X, mono(ctx, "x1y1y2"));
    CHECK(path.f_vector() == std::vector<long long>{2, 1});
}

TEST_CASE("restriction is closed under facets") {
    const LabeledCellComplex X = build_shape_complex(validate_shape({5, 4, 4}, {1, 2, 3}));
    for (const MultiDegree& c : lcm_lattice_degrees(X)) {
        const LabeledCellComplex sub = restrict_complex(X, c);  // constructor verifies closure
        for (int d = 1; d <= sub.dimension(); ++d)
            for (const LabeledFace& lf : sub.faces(d))
                for_each_facet(lf.face, [&](const Face& q, int) { CHECK(sub.find(q).has_value()); });
    }
}

TEST_CASE("degree lifting formulas") {
    const Shape s12 = validate_shape({2}, {0});  // n=1, m=2
    CHECK(lift_degree(Monomial({2, 1}), s12) == Monomial({1, 1, 1}));
    CHECK(lift_degree(Monomial({0, 0}), s12) == Monomial({0, 0, 0}));

    const Shape s23 = validate_shape({3, 3}, {0, 0});  // n=2, m=3
    CHECK(lift_degree(Monomial({1, 1, 1}), s23) == Monomial({0, 0, 1, 1, 1}));
}

TEST_CASE("lcm lattice by brute-force joins") {
    const LabeledCellComplex pt = build_shape_complex(validate_shape({1}, {0}));
    CHECK(lcm_lattice_degrees(pt).size() == 2);  // zero and the vertex degree

    const LabeledCellComplex seg = build_bipartite_complex(1, 2);
    CHECK(lcm_lattice_degrees(seg).size() == 4);

    // Independent route: joins over all subsets of the four vertex labels.
    const LabeledCellComplex sq = build_bipartite_complex(2, 2);
    std::vector<Monomial> verts;
    for (const LabeledFace& v : sq.faces(0)) verts.push_back(v.label);
    std::set<std::vector<int>> brute;
    brute.insert(Monomial::one(4).exponents());
    for (uint32_t mask = 1; mask < 16; ++mask) {
        Monomial j = Monomial::one(4);
        for (int b = 0; b < 4; ++b)
            if (mask >> b & 1) j = j.lcm(verts[b]);
        brute.insert(j.exponents());
    }
    CHECK(brute.size() == 10);  // 9 non-zero joins plus zero
    std::set<std::vector<int>> lattice;
    for (const MultiDegree& d : lcm_lattice_degrees(sq)) lattice.insert(d.exponents());
    CHECK(lattice == brute);
}

TEST_CASE("specialized vertex labels distinct and facet labels strict, row-dominant case") {
    for (const Shape& s : all_shapes(3, 5, true)) {
        const LabeledCellComplex Y =
            specialize_labels(build_shape_complex(s), Substitution::identity(s.cols()));
        std::set<std::vector<int>> seen;
        for (const LabeledFace& v : Y.faces(0)) CHECK(seen.insert(v.label.exponents()).second);
        for (int d = 1; d <= Y.dimension(); ++d)
            for (const LabeledFace& lf : Y.faces(d))
                for_each_facet(lf.face, [&](const Face& q, int) {
                    const Monomial* ql = Y.label(q);
                    REQUIRE(ql != nullptr);
                    CHECK(ql->divides(lf.label));
                    CHECK(ql->degree() < lf.label.degree());
                });
    }
}

TEST_CASE("specialization commutes with restriction through the preimage join") {
    // Holds whenever the diagram has no diagonal cell, i.e. all
    // specialized vertex labels are squarefree.
    for (const Shape& s : {validate_shape({4, 4, 4}, {1, 2, 3}), validate_shape({4, 4}, {1, 2}),
                           validate_shape({5, 5, 5}, {1, 3, 4}), validate_shape({6, 4}, {1, 3})}) {
        const LabeledCellComplex X = build_shape_complex(s);
        const Substitution id = Substitution::identity(s.cols());
        const LabeledCellComplex Y = specialize_labels(X, id);
        for (const MultiDegree& cbar : lcm_lattice_degrees(Y)) {
            const MultiDegree joined = preimage_join_degree(X, id, cbar);
            const LabeledCellComplex lhs = specialize_labels(restrict_complex(X, joined), id);
            const LabeledCellComplex rhs = restrict_complex(Y, cbar);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("a diagonal cell obstructs any single lifted degree") {
    // Vertices (1,2) and (2,3) force both x2 and y2 into every candidate
    // degree, which then admits the diagonal vertex (2,2) whose
    // specialized label x2^2 exceeds cbar = x1x2x3.
    const Shape s = validate_shape({3, 3, 3}, {0, 1, 2});
    const LabeledCellComplex X = build_shape_complex(s);
    const Substitution id = Substitution::identity(3);
    const LabeledCellComplex Y = specialize_labels(X, id);
    const MultiDegree cbar = Monomial({1, 1, 1});
    const LabeledCellComplex rhs = restrict_complex(Y, cbar);
    CHECK(rhs.f_vector() == std::vector<long long>{3, 2});
    const LabeledCellComplex lhs =
        specialize_labels(restrict_complex(X, preimage_join_degree(X, id, cbar)), id);
    CHECK_FALSE(lhs == rhs);
    CHECK(lhs.find(Face{0b10u, 0b10u}).has_value());  // the diagonal vertex slipped in
}

TEST_CASE("the componentwise lift can miss single-use coordinates") {
    // For cbar = x3*x4 the only matching vertex is (3,4), but the
    // componentwise lift zeroes every row coordinate, so the lifted
    // restriction is empty while the specialized restriction is not.
    const Shape s = validate_shape({4, 4, 4}, {1, 2, 3});
    const LabeledCellComplex X = build_shape_complex(s);
    const Substitution id = Substitution::identity(4);
    const LabeledCellComplex Y = specialize_labels(X, id);
    const MultiDegree cbar = Monomial({0, 0, 1, 1});
    CHECK(restrict_complex(X, lift_degree(cbar, s)).empty());
    CHECK(restrict_complex(Y, cbar).f_vector() == std::vector<long long>{1});
}
