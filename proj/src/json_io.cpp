#include "crystalpoly/json_io.hpp"

#include "crystalpoly/crystal.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace crystalpoly {

namespace {

using ojson = nlohmann::ordered_json;

ojson weight_json(const Weight& w) {
    ojson arr = ojson::array();
    for (Int c : w.coeffs) arr.push_back(c);
    return arr;
}

ojson vector_json(const FinSuppVector& x) {
    ojson entries = ojson::object();
    for (const auto& [k, v] : x.entries()) entries[std::to_string(k)] = v;
    return ojson{{"lambda", weight_json(x.lambda())}, {"entries", entries}};
}

ojson form_json(const LinearForm& f) {
    ojson coeffs = ojson::object();
    for (const auto& [k, v] : f.coeffs()) coeffs[std::to_string(k)] = v;
    return ojson{{"c", f.constant()}, {"coeffs", coeffs}};
}

ojson form_set_json(const FormSet& fs) {
    ojson forms = ojson::array();
    for (const auto& f : fs.forms) forms.push_back(form_json(f));
    return ojson{{"tag", fs.tag},
                 {"window", fs.window},
                 {"depth", fs.depth},
                 {"forms", forms}};
}

std::string vertex_label(const FinSuppVector& x, const IotaSequence& iota) {
    std::ostringstream out;
    if (x.entries().empty()) {
        out << "0";
    } else {
        bool first = true;
        for (const auto& [k, v] : x.entries()) {
            if (!first) out << ", ";
            out << "x[" << k << "]=" << v;
            first = false;
        }
    }
    const Weight wt = weight_of(x, iota);
    out << "\\nwt=(";
    for (size_t i = 0; i < wt.coeffs.size(); ++i) {
        if (i) out << ",";
        out << wt.coeffs[i];
    }
    out << ")";
    return out.str();
}

}  // namespace

std::string vector_to_json(const FinSuppVector& x) { return vector_json(x).dump(); }

std::string form_to_json(const LinearForm& f) { return form_json(f).dump(); }

std::string form_set_to_json(const FormSet& fs) { return form_set_json(fs).dump(2); }

std::string form_sets_to_json(const std::vector<FormSet>& sets) {
    ojson arr = ojson::array();
    for (const auto& fs : sets) arr.push_back(form_set_json(fs));
    return arr.dump(2);
}

std::string graph_to_json(const CrystalGraph& g) {
    std::map<FinSuppVector, size_t> order;
    ojson vertices = ojson::array();
    for (const auto& v : g.vertices) {
        order.emplace(v, order.size());
        vertices.push_back(vector_json(v));
    }
    ojson edges = ojson::array();
    for (const auto& e : g.edges) {
        edges.push_back(ojson{{"source", order.at(e.source)},
                              {"color", e.color},
                              {"target", order.at(e.target)}});
    }
    ojson doc{{"seed", vector_json(g.seed)},
              {"depth", g.depth},
              {"truncated", g.truncated},
              {"vertices", vertices},
              {"edges", edges}};
    return doc.dump(2);
}

std::string graph_to_dot(const CrystalGraph& g) {
    std::map<FinSuppVector, size_t> order;
    for (const auto& v : g.vertices) order.emplace(v, order.size());
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  node [shape=box];\n";
    for (const auto& v : g.vertices) {
        out << "  v" << order.at(v) << " [label=\"" << vertex_label(v, g.iota)
            << "\"];\n";
    }
    for (const auto& e : g.edges) {
        out << "  v" << order.at(e.source) << " -> v" << order.at(e.target)
            << " [label=\"" << e.color << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string oracle_report_to_json(const OracleReport& r) {
    ojson missing_bfs = ojson::array();
    for (const auto& x : r.missing_from_bfs) missing_bfs.push_back(vector_json(x));
    ojson missing_ineq = ojson::array();
    for (const auto& x : r.missing_from_ineq) missing_ineq.push_back(vector_json(x));
    ojson doc{
        {"params",
         ojson{{"type", r.params.kind == CartanKind::FiniteA ? "a" : "a1affine"},
               {"lambda", weight_json(r.params.lambda)},
               {"bfs_depth", r.params.bfs_depth},
               {"window", r.params.window},
               {"gen_depth", r.params.gen_depth},
               {"vertex_budget", r.params.vertex_budget},
               {"enum_budget", r.params.enum_budget}}},
        {"bfs_size", r.bfs_size},
        {"ineq_size", r.ineq_size},
        {"missing_from_bfs", missing_bfs},
        {"missing_from_ineq", missing_ineq},
        {"verdict", verdict_name(r.verdict)},
        {"stable", r.stable},
        {"bfs_truncated", r.bfs_truncated},
        {"box_overflow", r.box_overflow},
        {"note", r.note}};
    return doc.dump(2);
}

}  // namespace crystalpoly
