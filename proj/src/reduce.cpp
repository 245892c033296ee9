#include "simrep/reduce.hpp"

#include "simrep/solve.hpp"
#include "simrep/verify.hpp"

#include <algorithm>
#include <map>

namespace simrep {

namespace gadget {
VertexId a(std::size_t triple) { return VertexId("@a." + std::to_string(triple)); }
VertexId b(std::size_t triple) { return VertexId("@b." + std::to_string(triple)); }
VertexId c(std::size_t triple) { return VertexId("@c." + std::to_string(triple)); }
VertexId iso() { return VertexId("@iso"); }
}  // namespace gadget

namespace {

SimRepInstance build(const TotalOrderingInstance& to, ModelKind model) {
    SimRepInstance inst;
    inst.model = model;

    Graph g0;
    for (const auto& v : to.ground()) g0.add_vertex(v);
    inst.graphs.push_back(std::move(g0));

    for (std::size_t i = 1; i <= to.t(); ++i) {
        const auto& [x, y, z] = to.triples()[i - 1];
        const auto a = gadget::a(i), b = gadget::b(i), c = gadget::c(i);
        Graph g;
        for (const auto& v : {x, y, z, a, b, c}) g.add_vertex(v);
        g.add_edge(x, b);
        g.add_edge(y, b);
        g.add_edge(z, b);
        g.add_edge(x, a);
        g.add_edge(z, c);
        inst.graphs.push_back(std::move(g));
    }
    if (model == ModelKind::circular_arc)
        for (auto& g : inst.graphs) g.add_vertex(gadget::iso());
    return inst;
}

// Coordinates of every vertex in the union of the reduced graphs.
std::map<VertexId, Interval> lift_union(const TotalOrderingInstance& to, const LinearOrder& order) {
    if (!check_order(to, order)) throw WitnessError("order not satisfying");

    std::map<VertexId, std::int64_t> rank;
    for (std::size_t p = 0; p < order.size(); ++p) rank.emplace(order[p], static_cast<std::int64_t>(p + 1));

    std::map<VertexId, Interval> coords;
    for (const auto& [v, p] : rank) coords.emplace(v, Interval(8 * p, 8 * p + 4));

    for (std::size_t i = 1; i <= to.t(); ++i) {
        const auto& [x, y, z] = to.triples()[i - 1];
        const std::int64_t rx = rank.at(x), rz = rank.at(z);
        const std::int64_t m = std::min(rx, rz), M = std::max(rx, rz);
        // x < y < z puts @a.i on the left; x > y > z swaps the outer gadgets.
        const VertexId left = rx < rz ? gadget::a(i) : gadget::c(i);
        const VertexId right = rx < rz ? gadget::c(i) : gadget::a(i);
        coords.emplace(gadget::b(i), Interval(8 * m + 2, 8 * M + 2));
        coords.emplace(left, Interval(8 * m - 2, 8 * m + 1));
        coords.emplace(right, Interval(8 * M + 3, 8 * M + 6));
    }
    return coords;
}

void require_certificate(const SimRepInstance& inst, const SimultaneousReps& reps, const SimRepInstance& expected) {
    if (!(inst == expected) || reps.model() != inst.model || reps.size() != inst.k() ||
        !verify_simultaneous(inst, reps).ok())
        throw WitnessError("not a valid certificate");
}

LinearOrder sort_by(const TotalOrderingInstance& to, const std::map<VertexId, Rational>& key) {
    LinearOrder order = to.ground();
    std::sort(order.begin(), order.end(), [&](const VertexId& a, const VertexId& b) { return key.at(a) < key.at(b); });
    return order;
}

}  // namespace

SimRepInstance build_interval_instance(const TotalOrderingInstance& to) { return build(to, ModelKind::interval); }

SimRepInstance build_circular_arc_instance(const TotalOrderingInstance& to) {
    return build(to, ModelKind::circular_arc);
}

SimultaneousReps lift_order(const TotalOrderingInstance& to, const LinearOrder& order) {
    const auto coords = lift_union(to, order);
    const auto inst = build_interval_instance(to);
    SimultaneousReps::Intervals reps;
    for (const auto& g : inst.graphs) {
        IntervalRep rep;
        for (const auto& v : g.vertices()) rep.emplace(v, coords.at(v));
        reps.push_back(std::move(rep));
    }
    return SimultaneousReps(std::move(reps));
}

SimultaneousReps lift_order_ca(const TotalOrderingInstance& to, const LinearOrder& order) {
    const auto coords = lift_union(to, order);
    const auto inst = build_circular_arc_instance(to);
    const std::int64_t s = static_cast<std::int64_t>(to.s());
    const Rational circumference(8 * s + 16);
    const Arc iso_arc{Rational(8 * s + 10), Rational(2)};

    SimultaneousReps::Arcs reps;
    for (const auto& g : inst.graphs) {
        CircularArcRep rep(circumference);
        for (const auto& v : g.vertices()) {
            if (v == gadget::iso()) {
                rep.set(v, iso_arc);
            } else {
                const auto& iv = coords.at(v);
                rep.set(v, Arc{iv.l(), iv.r() - iv.l()});
            }
        }
        reps.push_back(std::move(rep));
    }
    return SimultaneousReps(std::move(reps));
}

LinearOrder extract_order(const SimRepInstance& inst, const SimultaneousReps& reps, const TotalOrderingInstance& to) {
    require_certificate(inst, reps, build_interval_instance(to));
    std::map<VertexId, Rational> left;
    for (const auto& [v, iv] : reps.intervals().front()) left.emplace(v, iv.l());
    return sort_by(to, left);
}

LinearOrder extract_order_ca(const SimRepInstance& inst, const SimultaneousReps& reps,
                             const TotalOrderingInstance& to) {
    require_certificate(inst, reps, build_circular_arc_instance(to));
    const auto& rep = reps.arcs().front();
    const Rational& L = rep.circumference();
    const Arc& iso_arc = rep.at(gadget::iso());
    // @iso is disjoint from every arc of S, so the cut point lies on none of them.
    const Rational cut = mod_circle(iso_arc.start + iso_arc.length / 2, L);

    std::map<VertexId, Rational> left;
    for (const auto& v : to.ground()) left.emplace(v, mod_circle(rep.at(v).start - cut, L));
    return sort_by(to, left);
}

}  // namespace simrep
