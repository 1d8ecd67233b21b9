#include <catch2/catch_amalgamated.hpp>

#include "ferrers/betti.hpp"
#include "ferrers/chain_complex.hpp"
#include "ferrers/verify.hpp"
#include "support/helpers.hpp"

using namespace ferrers;
using testsupport::all_shapes;
using testsupport::mono;

namespace {

// Taylor complex of an ideal as a chain complex: one basis element per
// non-empty subset of generators, labeled by the subset lcm.  Used as a
// known non-minimal fixture.
ChainComplex taylor_chain_complex(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    const int r = static_cast<int>(gens.size());
    ChainComplex C;
    C.ctx = ideal.context();
    std::vector<std::vector<uint32_t>> by_card(r + 1);
    for (uint32_t mask = 1; mask < (1u << r); ++mask)
        by_card[std::popcount(mask)].push_back(mask);
    auto lcm_of = [&](uint32_t mask) {
        Monomial l = Monomial::one(C.ctx.size());
        for (int b = 0; b < r; ++b)
            if (mask >> b & 1) l = l.lcm(gens[b]);
        return l;
    };
    C.ranks.push_back(1);
    for (int c = 1; c <= r; ++c) {
        C.ranks.push_back(static_cast<long long>(by_card[c].size()));
        std::vector<MultiDegree> labels;
        for (uint32_t mask : by_card[c]) labels.push_back(lcm_of(mask));
        C.basis_labels.push_back(std::move(labels));
    }
    SparseMonomialMatrix aug;
    aug.rows = 1;
    aug.cols = r;
    for (int j = 0; j < r; ++j) aug.entries.push_back({0, j, 1, gens[j]});
    C.diffs.push_back(std::move(aug));
    for (int c = 2; c <= r; ++c) {
        SparseMonomialMatrix D;
        D.rows = static_cast<int>(by_card[c - 1].size());
        D.cols = static_cast<int>(by_card[c].size());
        for (int j = 0; j < D.cols; ++j) {
            const uint32_t mask = by_card[c][j];
            const Monomial top = lcm_of(mask);
            int k = 0;
            for (uint32_t m = mask; m; m &= m - 1) {
                ++k;
                const uint32_t facet = mask ^ (m & (~m + 1));
                const int row = static_cast<int>(
                    std::find(by_card[c - 1].begin(), by_card[c - 1].end(), facet) -
                    by_card[c - 1].begin());
                D.entries.push_back({row, j, (k % 2 == 1) ? 1 : -1, top.quotient_by(lcm_of(facet))});
            }
        }
        C.diffs.push_back(std::move(D));
    }
    return C;
}

}  // namespace

TEST_CASE("single-vertex complex resolves a principal square") {
    const LabeledCellComplex Y =
        specialize_labels(build_shape_complex(validate_shape({1}, {0})), Substitution::identity(1));
    const ChainComplex C = cellular_chain_complex(Y);
    CHECK(C.ranks == std::vector<long long>{1, 1});
    REQUIRE(C.diffs.size() == 1);
    REQUIRE(C.diffs[0].entries.size() == 1);
    CHECK(C.diffs[0].entries[0].monomial == mono(VariableContext::xonly(1), "x1^2"));
    CHECK(d_squared_is_zero(C));
    CHECK(check_minimal(C));
}

TEST_CASE("prism chain complex has the expected ranks and boundary") {
    const LabeledCellComplex X = build_bipartite_complex(2, 3);
    const ChainComplex C = cellular_chain_complex(X);
    CHECK(C.ranks == std::vector<long long>{1, 6, 9, 5, 1});
    CHECK(d_squared_is_zero(C));
    CHECK(check_minimal(C));

    // The edge ({1},{1,2}) maps to +/- (y2 e_{x1y1} - y1 e_{x1y2}).
    const VariableContext ctx = X.context();
    const auto epos = X.find(Face{0b1u, 0b11u});
    REQUIRE(epos.has_value());
    const auto v11 = X.find(Face{0b1u, 0b01u});
    const auto v12 = X.find(Face{0b1u, 0b10u});
    REQUIRE((v11 && v12));
    int sign_y2 = 0, sign_y1 = 0;
    for (const ChainEntry& e : C.diffs[1].entries) {
        if (e.col != epos->second) continue;
        if (e.row == v11->second) {
            CHECK(e.monomial == mono(ctx, "y2"));
            sign_y2 = e.sign;
        }
        if (e.row == v12->second) {
            CHECK(e.monomial == mono(ctx, "y1"));
            sign_y1 = e.sign;
        }
    }
    CHECK(sign_y2 == -sign_y1);
    CHECK(sign_y2 != 0);
}

TEST_CASE("boundary squares to zero across shapes and specializations") {
    for (const Shape& s : all_shapes(3, 4, false)) {
        const LabeledCellComplex X = build_shape_complex(s);
        CHECK(d_squared_is_zero(cellular_chain_complex(X)));
        const LabeledCellComplex Y = specialize_labels(X, Substitution::identity(s.cols()));
        CHECK(d_squared_is_zero(cellular_chain_complex(Y)));
    }
}

TEST_CASE("face-count Betti numbers of the named complexes") {
    const BettiResult prism = betti_from_faces(build_bipartite_complex(2, 3));
    CHECK(prism.guaranteed_minimal);
    const std::vector<long long> expected{6, 9, 5, 1};
    for (int i = 1; i <= 4; ++i) CHECK(prism.table.total(i) == expected[i - 1]);

    const LabeledCellComplex Y = specialize_labels(
        build_shape_complex(validate_shape({4, 4, 4}, {1, 2, 3})), Substitution::identity(4));
    const BettiResult spec = betti_from_faces(Y);
    CHECK(spec.guaranteed_minimal);
    CHECK(spec.table.total(1) == 6);
    CHECK(spec.table.total(2) == 8);
    CHECK(spec.table.total(3) == 3);

    const BettiResult one = betti_from_faces(build_shape_complex(validate_shape({1}, {0})));
    CHECK(one.table.total(1) == 1);
}

TEST_CASE("face counts of a below-diagonal specialization are flagged") {
    const LabeledCellComplex Y = specialize_labels(
        build_shape_complex(validate_shape({2, 2}, {0, 0})), Substitution::identity(2));
    const BettiResult res = betti_from_faces(Y);
    CHECK_FALSE(res.guaranteed_minimal);
    CHECK(res.table.total(1) == 4);  // four vertices but only three minimal generators
}

TEST_CASE("closed-form Betti numbers") {
    const Shape prism = validate_shape({3, 3}, {0, 0});
    CHECK(betti_closed_form(prism, 1) == 6);
    CHECK(betti_closed_form(prism, 2) == 9);
    CHECK(betti_closed_form(prism, 3) == 5);
    CHECK(betti_closed_form(prism, 4) == 1);
    CHECK(betti_closed_form(prism, 5) == 0);

    const Shape k4e = validate_shape({4, 4}, {1, 2});
    CHECK(betti_closed_form(k4e, 1) == 5);
    CHECK(betti_closed_form(k4e, 2) == 6);
    CHECK(betti_closed_form(k4e, 3) == 2);

    const Shape tiny = validate_shape({1}, {0});
    CHECK(betti_closed_form(tiny, 1) == 1);
    CHECK(betti_closed_form(tiny, 2) == 0);
}

TEST_CASE("graded tables live on the two-linear strand") {
    const GradedBetti prism = graded_betti(build_bipartite_complex(2, 3));
    CHECK(prism.two_linear);
    CHECK(prism.zgraded.at(1).at(2) == 6);
    CHECK(prism.zgraded.at(2).at(3) == 9);
    CHECK(prism.zgraded.at(3).at(4) == 5);
    CHECK(prism.zgraded.at(4).at(5) == 1);

    const GradedBetti spec = graded_betti(specialize_labels(
        build_shape_complex(validate_shape({4, 4}, {1, 2})), Substitution::identity(4)));
    CHECK(spec.two_linear);
    CHECK(spec.zgraded.at(1).at(2) == 5);
    CHECK(spec.zgraded.at(2).at(3) == 6);
    CHECK(spec.zgraded.at(3).at(4) == 2);

    const GradedBetti one = graded_betti(build_shape_complex(validate_shape({1}, {0})));
    CHECK(one.zgraded.at(1).at(2) == 1);
}

TEST_CASE("the Taylor complex of the triangle is not minimal") {
    const VariableContext x3 = VariableContext::xonly(3);
    const MonomialIdeal tri = testsupport::ideal_of(x3, {"x1x2", "x1x3", "x2x3"});
    const ChainComplex C = taylor_chain_complex(tri);
    CHECK(d_squared_is_zero(C));
    CHECK_FALSE(check_minimal(C));

    const ChainComplex single = taylor_chain_complex(testsupport::ideal_of(x3, {"x1x2"}));
    CHECK(check_minimal(single));
}

TEST_CASE("restriction homology verifies the named resolutions") {
    const std::vector<Field> fields = {Field::gf(2), Field::gf(32003), Field::rationals()};
    const VerificationReport prism = verify_resolution(build_bipartite_complex(2, 3), fields);
    CHECK(prism.acyclic());
    CHECK(prism.degrees_checked > 1);

    const LabeledCellComplex Y = specialize_labels(
        build_shape_complex(validate_shape({4, 4, 4}, {1, 2, 3})), Substitution::identity(4));
    CHECK(verify_resolution(Y, fields).acyclic());
}

TEST_CASE("two disjoint vertices fail the restriction test") {
    const VariableContext ctx = VariableContext::xy(2, 2);
    std::vector<LabeledFace> faces;
    faces.push_back({Face{0b01u, 0b01u}, mono(ctx, "x1y1")});
    faces.push_back({Face{0b10u, 0b10u}, mono(ctx, "x2y2")});
    const LabeledCellComplex X(ctx, std::move(faces));
    const VerificationReport rep = verify_resolution(X, {Field::gf(2)});
    REQUIRE_FALSE(rep.acyclic());
    CHECK(rep.defects[0].homological_dim == 0);
    CHECK(rep.defects[0].rank == 1);
    CHECK(rep.defects[0].degree == mono(ctx, "x1x2y1y2"));
}

TEST_CASE("a punctured prism is caught at the missing face's degree") {
    const LabeledCellComplex X = build_bipartite_complex(2, 3);
    std::vector<LabeledFace> faces;
    for (const LabeledFace& lf : X.all_faces()) {
        if (lf.face.dim() == 3) continue;                               // drop the solid cell
        if (lf.face.rows == 0b11u && lf.face.cols == 0b011u) continue;  // drop one rectangle
        faces.push_back(lf);
    }
    const LabeledCellComplex punctured(X.context(), std::move(faces));
    const VerificationReport rep = verify_resolution(punctured, {Field::gf(2), Field::rationals()});
    REQUIRE_FALSE(rep.acyclic());
    bool at_rectangle_degree = false;
    for (const HomologyDefect& d : rep.defects)
        if (d.degree == mono(X.context(), "x1x2y1y2") && d.homological_dim == 1)
            at_rectangle_degree = true;
    CHECK(at_rectangle_degree);
}

TEST_CASE("verification is independent of the thread count") {
    const LabeledCellComplex X = build_shape_complex(validate_shape({4, 4}, {1, 2}));
    const VerificationReport a = verify_resolution(X, {Field::gf(2)}, 1);
    const VerificationReport b = verify_resolution(X, {Field::gf(2)}, 4);
    CHECK(a.acyclic() == b.acyclic());
    CHECK(a.degrees_checked == b.degrees_checked);
}
