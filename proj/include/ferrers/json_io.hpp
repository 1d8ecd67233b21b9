// JSON serialization for shapes, ideals, graphs, complexes, chain
// complexes and Betti tables, plus DOT export of complex skeletons.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ferrers/betti.hpp"
#include "ferrers/cell_complex.hpp"
#include "ferrers/chain_complex.hpp"
#include "ferrers/graph.hpp"
#include "ferrers/ideal.hpp"
#include "ferrers/shape.hpp"
#include "ferrers/verify.hpp"

namespace ferrers {

using json = nlohmann::ordered_json;

inline json to_json(const Shape& shape) {
    return json{{"lambda", shape.lambda()}, {"mu", shape.mu()}};
}

inline Shape shape_from_json(const json& j) {
    if (!j.contains("lambda") || !j.contains("mu"))
        throw error(errc::bad_input, "shape file needs 'lambda' and 'mu'");
    return validate_shape(j.at("lambda").get<std::vector<int>>(),
                          j.at("mu").get<std::vector<int>>());
}

inline json to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const Monomial& g : ideal.generators()) gens.push_back(g.exponents());
    return json{{"variables", ideal.context().names()}, {"generators", gens}};
}

inline MonomialIdeal ideal_from_json(const json& j) {
    if (!j.contains("variables") || !j.contains("generators"))
        throw error(errc::bad_input, "ideal file needs 'variables' and 'generators'");
    auto ctx = VariableContext::from_names(j.at("variables").get<std::vector<std::string>>());
    if (!ctx) throw error(errc::bad_input, "variables must be x1..xn followed by y1..ym");
    std::vector<Monomial> gens;
    for (const auto& row : j.at("generators")) gens.push_back(Monomial(row.get<std::vector<int>>()));
    return MonomialIdeal(*ctx, std::move(gens));
}

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back(json::array({i, j}));
    json loops = json::array();
    for (int v : g.loops) loops.push_back(v);
    return json{{"m", g.m}, {"edges", edges}, {"loops", loops}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.contains("m") || !j.contains("edges"))
        throw error(errc::bad_input, "graph file needs 'm' and 'edges'");
    Graph g = Graph::on(j.at("m").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw error(errc::bad_input, "edges must be pairs");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("loops"))
        for (const auto& v : j.at("loops")) g.add_edge(v.get<int>(), v.get<int>());
    return g;
}

inline json to_json(const LabeledCellComplex& X) {
    json faces = json::array();
    for (const LabeledFace& lf : X.all_faces())
        faces.push_back(json{{"rows", lf.face.row_list()},
                             {"cols", lf.face.col_list()},
                             {"dim", lf.face.dim()},
                             {"label", lf.label.exponents()}});
    return json{{"context", X.context().names()}, {"faces", faces}};
}

inline LabeledCellComplex complex_from_json(const json& j) {
    if (!j.contains("context") || !j.contains("faces"))
        throw error(errc::bad_input, "complex file needs 'context' and 'faces'");
    auto ctx = VariableContext::from_names(j.at("context").get<std::vector<std::string>>());
    if (!ctx) throw error(errc::bad_input, "context must be x1..xn followed by y1..ym");
    std::vector<LabeledFace> faces;
    for (const auto& f : j.at("faces")) {
        Face face;
        for (int r : f.at("rows").get<std::vector<int>>()) {
            if (r < 1 || r > 32) throw error(errc::bad_input, "row index out of range");
            face.rows |= 1u << (r - 1);
        }
        for (int c : f.at("cols").get<std::vector<int>>()) {
            if (c < 1 || c > 32) throw error(errc::bad_input, "column index out of range");
            face.cols |= 1u << (c - 1);
        }
        faces.push_back({face, Monomial(f.at("label").get<std::vector<int>>())});
    }
    return LabeledCellComplex(*ctx, std::move(faces));
}

inline json to_json(const ChainComplex& C) {
    json diffs = json::array();
    for (const SparseMonomialMatrix& D : C.diffs) {
        json entries = json::array();
        for (const ChainEntry& e : D.entries)
            entries.push_back(json{{"row", e.row},
                                   {"col", e.col},
                                   {"sign", e.sign},
                                   {"monomial", e.monomial.exponents()}});
        diffs.push_back(json{{"rows", D.rows}, {"cols", D.cols}, {"entries", entries}});
    }
    json labels = json::array();
    for (const auto& layer : C.basis_labels) {
        json row = json::array();
        for (const MultiDegree& d : layer) row.push_back(d.exponents());
        labels.push_back(row);
    }
    return json{{"context", C.ctx.names()},
                {"ranks", C.ranks},
                {"differentials", diffs},
                {"basis_labels", labels}};
}

inline json to_json(const BettiTable& table) {
    json multi = json::array();
    for (const auto& [i, layer] : table.entries())
        for (const auto& [a, v] : layer)
            multi.push_back(json{{"i", i}, {"degree", a}, {"value", v}});
    json z = json::array();
    for (const auto& [i, row] : table.zgraded())
        for (const auto& [d, v] : row) z.push_back(json{{"i", i}, {"d", d}, {"value", v}});
    return json{{"multigraded", multi}, {"zgraded", z}};
}

inline json to_json(const VerificationReport& report) {
    json defects = json::array();
    for (const HomologyDefect& d : report.defects)
        defects.push_back(json{{"degree", d.degree.exponents()},
                               {"dim", d.homological_dim},
                               {"rank", d.rank},
                               {"field", d.field.str()}});
    return json{{"degrees_checked", report.degrees_checked},
                {"acyclic", report.acyclic()},
                {"defects", defects}};
}

// 1-skeleton as an undirected DOT graph, vertices labeled by monomials.
inline std::string to_dot(const LabeledCellComplex& X) {
    std::ostringstream out;
    out << "graph skeleton {\n";
    const auto& verts = X.faces(0);
    for (size_t i = 0; i < verts.size(); ++i)
        out << "  v" << i << " [label=\"" << verts[i].label.str(X.context()) << "\"];\n";
    auto vertex_index = [&](uint32_t rows, uint32_t cols) {
        auto pos = X.find(Face{rows, cols});
        return pos ? pos->second : -1;
    };
    for (const LabeledFace& e : X.faces(1)) {
        std::vector<int> ends;
        for_each_facet(e.face, [&](const Face& q, int) {
            ends.push_back(vertex_index(q.rows, q.cols));
        });
        if (ends.size() == 2) out << "  v" << ends[0] << " -- v" << ends[1] << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 1; v <= g.m; ++v) out << "  " << v << ";\n";
    for (const auto& [i, j] : g.edges) out << "  " << i << " -- " << j << ";\n";
    for (int v : g.loops) out << "  " << v << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::bad_input, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error(errc::bad_input, std::string("invalid JSON: ") + e.what());
    }
    return j;
}

}  // namespace ferrers
