#include "simrep/model.hpp"

#include <algorithm>
#include <cctype>

namespace simrep {

bool is_valid_label(std::string_view label) noexcept {
    if (label.empty()) return false;
    return std::none_of(label.begin(), label.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '|' || c == ',';
    });
}

VertexId::VertexId(std::string label) : label_(std::move(label)) {
    if (!is_valid_label(label_)) throw ModelError("invalid vertex label '" + label_ + "'");
}

Graph::Edge make_edge(const VertexId& u, const VertexId& v) {
    return u < v ? Graph::Edge{u, v} : Graph::Edge{v, u};
}

void Graph::add_vertex(const VertexId& v) {
    if (vertex_set_.insert(v).second) vertices_.push_back(v);
}

void Graph::add_edge(const VertexId& u, const VertexId& v) {
    if (u == v) throw ModelError("loop at vertex '" + u.str() + "'");
    if (!contains(u) || !contains(v))
        throw ModelError("edge " + u.str() + "-" + v.str() + " has an endpoint outside the vertex set");
    auto e = make_edge(u, v);
    if (!edge_set_.insert(e).second)
        throw ModelError("duplicate edge " + u.str() + "-" + v.str());
    edges_.push_back(std::move(e));
}

bool Graph::adjacent(const VertexId& u, const VertexId& v) const {
    return u != v && edge_set_.contains(make_edge(u, v));
}

TotalOrderingInstance::TotalOrderingInstance(std::vector<VertexId> ground, std::vector<Triple> triples)
    : ground_(std::move(ground)), triples_(std::move(triples)) {
    VertexSet seen;
    for (const auto& v : ground_)
        if (!seen.insert(v).second) throw ModelError("duplicate ground element '" + v.str() + "'");
    for (const auto& [x, y, z] : triples_) {
        for (const auto* m : {&x, &y, &z})
            if (!seen.contains(*m)) throw ModelError("triple member '" + m->str() + "' is not in S");
        if (x == y || y == z || x == z)
            throw ModelError("repeated member in triple (" + x.str() + "," + y.str() + "," + z.str() + ")");
    }
}

std::string_view to_string(ModelKind kind) noexcept {
    return kind == ModelKind::interval ? "interval" : "circular-arc";
}

VertexSet shared_vertices(const SimRepInstance& inst, std::size_t i, std::size_t j) {
    if (i >= inst.k() || j >= inst.k()) throw std::out_of_range("graph index out of range");
    const auto& a = inst.graphs[i].vertex_set();
    const auto& b = inst.graphs[j].vertex_set();
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

Interval::Interval(Rational l, Rational r) : l_(l), r_(r) {
    if (r_ < l_) throw ModelError("interval with l > r");
}

IntervalRep canonicalize(const IntervalRep& rep) {
    std::vector<Rational> points;
    points.reserve(rep.size() * 2);
    for (const auto& [v, iv] : rep) {
        points.push_back(iv.l());
        points.push_back(iv.r());
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto rank = [&](const Rational& p) {
        return Rational(std::lower_bound(points.begin(), points.end(), p) - points.begin());
    };
    IntervalRep out;
    for (const auto& [v, iv] : rep) out.emplace(v, Interval(rank(iv.l()), rank(iv.r())));
    return out;
}

Rational mod_circle(Rational x, const Rational& circumference) {
    // floor division on rationals
    Rational q = x / circumference;
    std::int64_t f = q.numerator() / q.denominator();
    if (q.numerator() < 0 && q.numerator() % q.denominator() != 0) --f;
    return x - circumference * f;
}

CircularArcRep::CircularArcRep(Rational circumference) : circumference_(circumference) {
    if (circumference_ <= 0) throw ModelError("circumference must be positive");
}

void CircularArcRep::set(const VertexId& v, Arc arc) {
    if (arc.start < 0 || arc.start >= circumference_)
        throw ModelError("arc start of '" + v.str() + "' outside [0, L)");
    if (arc.length <= 0 || arc.length >= circumference_)
        throw ModelError("arc length of '" + v.str() + "' outside (0, L)");
    arcs_.insert_or_assign(v, arc);
}

bool CircularArcRep::covers(const Arc& arc, const Rational& p) const {
    Rational offset = p - arc.start;
    if (offset < 0) offset += circumference_;
    return offset <= arc.length;
}

// Two closed arcs meet iff one contains the other's starting point.
bool CircularArcRep::overlaps(const Arc& a, const Arc& b) const {
    return covers(a, b.start) || covers(b, a.start);
}

SimultaneousReps::SimultaneousReps(Arcs reps) : reps_(std::move(reps)) {
    const auto& arcs = std::get<Arcs>(reps_);
    for (const auto& r : arcs)
        if (r.circumference() != arcs.front().circumference())
            throw ModelError("circular-arc representations disagree on circumference");
}

std::size_t SimultaneousReps::size() const noexcept {
    return std::visit([](const auto& v) { return v.size(); }, reps_);
}

}  // namespace simrep
