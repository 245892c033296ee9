#include "simrep/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace simrep {
namespace {

// Vertex-set comparison shared by both models; returns the vertices present in both.
template <typename Rep>
std::vector<VertexId> compare_vertex_sets(const Graph& g, const Rep& rep, std::size_t gi,
                                          ViolationReport& report) {
    std::vector<VertexId> common;
    for (const auto& v : g.vertices()) {
        if (rep.contains(v)) common.push_back(v);
        else report.violations.push_back({ViolationKind::vertex_set_mismatch, {v}, {gi}});
    }
    for (const auto& [v, _] : rep)
        if (!g.contains(v)) report.violations.push_back({ViolationKind::vertex_set_mismatch, {v}, {gi}});
    return common;
}

template <typename Meets>
void check_pairs(const Graph& g, const std::vector<VertexId>& vs, std::size_t gi, Meets meets,
                 ViolationReport& report) {
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            const bool edge = g.adjacent(vs[a], vs[b]);
            const bool meet = meets(vs[a], vs[b]);
            if (edge && !meet)
                report.violations.push_back({ViolationKind::missing_edge_overlap, {vs[a], vs[b]}, {gi}});
            else if (!edge && meet)
                report.violations.push_back({ViolationKind::forbidden_overlap, {vs[a], vs[b]}, {gi}});
        }
    }
}

void append(ViolationReport& into, ViolationReport&& from) {
    into.violations.insert(into.violations.end(), std::make_move_iterator(from.violations.begin()),
                           std::make_move_iterator(from.violations.end()));
}

struct ArcLookup {
    const CircularArcRep& rep;
    bool contains(const VertexId& v) const { return rep.contains(v); }
    auto begin() const { return rep.arcs().begin(); }
    auto end() const { return rep.arcs().end(); }
};

}  // namespace

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
        case ViolationKind::missing_edge_overlap: return "missing-edge-overlap";
        case ViolationKind::forbidden_overlap: return "forbidden-overlap";
        case ViolationKind::shared_vertex_mismatch: return "shared-vertex-mismatch";
        case ViolationKind::vertex_set_mismatch: return "vertex-set-mismatch";
    }
    return "unknown";
}

bool ViolationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string format_report(const ViolationReport& report) {
    if (report.ok()) return "OK\n";
    std::string out;
    for (const auto& v : report.violations) {
        out += "VIOLATION " + std::string(to_string(v.kind)) + " ";
        for (std::size_t i = 0; i < v.subject.size(); ++i) out += (i ? "," : "") + v.subject[i].str();
        out += " ";
        for (std::size_t i = 0; i < v.graphs.size(); ++i) out += (i ? "," : "") + std::to_string(v.graphs[i]);
        out += "\n";
    }
    return out;
}

ViolationReport verify_interval_rep(const Graph& g, const IntervalRep& rep, std::size_t graph_index) {
    ViolationReport report;
    auto common = compare_vertex_sets(g, rep, graph_index, report);
    check_pairs(g, common, graph_index,
                [&](const VertexId& u, const VertexId& v) { return overlaps(rep.at(u), rep.at(v)); }, report);
    return report;
}

ViolationReport verify_arc_rep(const Graph& g, const CircularArcRep& rep, std::size_t graph_index) {
    ViolationReport report;
    auto common = compare_vertex_sets(g, ArcLookup{rep}, graph_index, report);
    check_pairs(g, common, graph_index,
                [&](const VertexId& u, const VertexId& v) { return rep.overlaps(rep.at(u), rep.at(v)); }, report);
    return report;
}

ViolationReport verify_simultaneous(const SimRepInstance& inst, const SimultaneousReps& reps) {
    if (reps.model() != inst.model) throw std::invalid_argument("representation model does not match instance model");
    ViolationReport report;
    const std::size_t k = inst.k();
    const std::size_t common = std::min(k, reps.size());

    for (std::size_t i = common; i < k; ++i)
        for (const auto& v : inst.graphs[i].vertices())
            report.violations.push_back({ViolationKind::vertex_set_mismatch, {v}, {i}});

    auto check_shared = [&](const auto& family) {
        for (std::size_t i = 0; i < common; ++i) {
            for (std::size_t j = i + 1; j < common; ++j) {
                for (const auto& v : shared_vertices(inst, i, j)) {
                    if (!family[i].contains(v) || !family[j].contains(v)) continue;
                    if (!(family[i].at(v) == family[j].at(v)))
                        report.violations.push_back({ViolationKind::shared_vertex_mismatch, {v}, {i, j}});
                }
            }
        }
    };

    if (reps.model() == ModelKind::interval) {
        const auto& family = reps.intervals();
        for (std::size_t i = 0; i < common; ++i) append(report, verify_interval_rep(inst.graphs[i], family[i], i));
        for (std::size_t i = common; i < family.size(); ++i)
            for (const auto& [v, _] : family[i]) report.violations.push_back({ViolationKind::vertex_set_mismatch, {v}, {i}});
        check_shared(family);
    } else {
        const auto& family = reps.arcs();
        for (std::size_t i = 0; i < common; ++i) append(report, verify_arc_rep(inst.graphs[i], family[i], i));
        for (std::size_t i = common; i < family.size(); ++i)
            for (const auto& [v, _] : family[i].arcs())
                report.violations.push_back({ViolationKind::vertex_set_mismatch, {v}, {i}});
        check_shared(family);
    }
    return report;
}

SunflowerReport classify_sunflower(const SimRepInstance& inst) {
    SunflowerReport report;
    if (inst.k() == 0) throw std::invalid_argument("classify_sunflower needs at least one graph");
    if (inst.k() == 1) {
        report.is_sunflower = true;
        report.core = inst.graphs.front().vertex_set();
        return report;
    }
    const VertexSet first = shared_vertices(inst, 0, 1);
    for (std::size_t i = 0; i < inst.k(); ++i) {
        for (std::size_t j = i + 1; j < inst.k(); ++j) {
            if (shared_vertices(inst, i, j) != first) {
                report.witness = {{0, 1}, {i, j}};
                return report;
            }
        }
    }
    report.is_sunflower = true;
    report.core = first;
    return report;
}

}  // namespace simrep
