#include "simrep/reduce.hpp"
#include "simrep/verify.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace simrep;
using simrep::testing::labels;

namespace {

VertexId V(const char* s) { return VertexId(s); }

Graph path_abc() {
    Graph g;
    for (auto* v : {"a", "b", "c"}) g.add_vertex(V(v));
    g.add_edge(V("a"), V("b"));
    g.add_edge(V("b"), V("c"));
    return g;
}

Graph edge_uv(bool with_edge) {
    Graph g;
    g.add_vertex(V("u"));
    g.add_vertex(V("v"));
    if (with_edge) g.add_edge(V("u"), V("v"));
    return g;
}

// Brute force: list every pair whose raw overlap disagrees with adjacency.
template <typename Meet>
std::size_t brute_violations(const Graph& g, Meet meet) {
    std::size_t count = 0;
    const auto& vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (meet(vs[a], vs[b]) != g.adjacent(vs[a], vs[b])) ++count;
    return count;
}

}  // namespace

TEST_CASE("interval verifier examples") {
    const Graph g = path_abc();
    IntervalRep rep{{V("a"), Interval(0, 2)}, {V("b"), Interval(1, 4)}, {V("c"), Interval(3, 5)}};
    CHECK(verify_interval_rep(g, rep).ok());

    rep.insert_or_assign(V("c"), Interval(Rational(1, 2), Rational(3, 2)));
    auto report = verify_interval_rep(g, rep);
    CHECK_FALSE(report.ok());
    CHECK(std::find(report.violations.begin(), report.violations.end(),
                    Violation{ViolationKind::forbidden_overlap, {V("a"), V("c")}, {0}}) != report.violations.end());

    Graph single;
    single.add_vertex(V("v"));
    CHECK(verify_interval_rep(single, IntervalRep{{V("v"), Interval(0, 0)}}).ok());
}

TEST_CASE("interval verifier reports missing overlaps and vertex-set mismatches") {
    const Graph g = path_abc();
    IntervalRep rep{{V("a"), Interval(0, 1)}, {V("b"), Interval(2, 3)}, {V("d"), Interval(0, 9)}};
    auto report = verify_interval_rep(g, rep, 4);
    CHECK(report.has(ViolationKind::missing_edge_overlap));
    CHECK(report.has(ViolationKind::vertex_set_mismatch));
    std::size_t mismatches = 0;
    for (const auto& v : report.violations)
        if (v.kind == ViolationKind::vertex_set_mismatch) {
            ++mismatches;
            CHECK(v.graphs == std::vector<std::size_t>{4});
        }
    CHECK(mismatches == 2);  // c missing, d extra
    // touching endpoints count as meeting
    IntervalRep touching{{V("a"), Interval(0, 1)}, {V("b"), Interval(1, 2)}, {V("c"), Interval(2, 3)}};
    CHECK(verify_interval_rep(g, touching).ok());
}

TEST_CASE("arc verifier examples") {
    CircularArcRep wrap(10);
    wrap.set(V("u"), Arc{9, 3});
    wrap.set(V("v"), Arc{1, 3});
    CHECK(verify_arc_rep(edge_uv(true), wrap).ok());

    CircularArcRep apart(10);
    apart.set(V("u"), Arc{0, 2});
    apart.set(V("v"), Arc{5, 2});
    CHECK(verify_arc_rep(edge_uv(false), apart).ok());

    CircularArcRep crossing(10);
    crossing.set(V("u"), Arc{9, 2});
    crossing.set(V("v"), Arc{0, Rational(1, 2)});
    REQUIRE(simrep::testing::raw_arc_meet(crossing.at(V("u")), crossing.at(V("v")), 10));
    auto report = verify_arc_rep(edge_uv(false), crossing);
    CHECK(report.violations == std::vector<Violation>{{ViolationKind::forbidden_overlap, {V("u"), V("v")}, {0}}});
}

TEST_CASE("verifiers agree with brute-force overlap recomputation") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 500; ++round) {
        const auto vs = labels(1 + rng() % 8);
        const Graph g = simrep::testing::random_graph(rng, vs);

        const auto rep = simrep::testing::random_interval_rep(rng, vs, 6);
        const auto brute = brute_violations(g, [&](const VertexId& u, const VertexId& v) {
            return simrep::testing::raw_interval_meet(rep.at(u), rep.at(v));
        });
        CHECK(verify_interval_rep(g, rep).violations.size() == brute);

        const Rational L(1 + rng() % 12);
        CircularArcRep arcs(L);
        for (const auto& v : vs) {
            const Rational start = mod_circle(simrep::testing::random_rational(rng, 12), L);
            Rational len = simrep::testing::random_rational(rng, 12);
            len = mod_circle(len, L);
            if (len == 0) len = L / 2;
            arcs.set(v, Arc{start, len});
        }
        const auto brute_arcs = brute_violations(g, [&](const VertexId& u, const VertexId& v) {
            return simrep::testing::raw_arc_meet(arcs.at(u), arcs.at(v), L);
        });
        CHECK(verify_arc_rep(g, arcs).violations.size() == brute_arcs);
    }
}

TEST_CASE("simultaneous verification") {
    Graph g1 = edge_uv(false), g2;
    g2.add_vertex(V("v"));
    SimRepInstance inst{ModelKind::interval, {g1, g2}};

    SimultaneousReps good(SimultaneousReps::Intervals{
        {{V("u"), Interval(2, 3)}, {V("v"), Interval(0, 1)}}, {{V("v"), Interval(0, 1)}}});
    CHECK(verify_simultaneous(inst, good).ok());

    SimultaneousReps bad(SimultaneousReps::Intervals{
        {{V("u"), Interval(2, 3)}, {V("v"), Interval(0, 1)}}, {{V("v"), Interval(0, 2)}}});
    auto report = verify_simultaneous(inst, bad);
    CHECK(report.violations ==
          std::vector<Violation>{{ViolationKind::shared_vertex_mismatch, {V("v")}, {0, 1}}});

    SimultaneousReps short_family(SimultaneousReps::Intervals{{{V("u"), Interval(2, 3)}, {V("v"), Interval(0, 1)}}});
    CHECK(verify_simultaneous(inst, short_family).has(ViolationKind::vertex_set_mismatch));

    SimultaneousReps arcs(SimultaneousReps::Arcs{CircularArcRep(4), CircularArcRep(4)});
    CHECK_THROWS_AS(verify_simultaneous(inst, arcs), std::invalid_argument);
}

TEST_CASE("k = 1 simultaneous verification equals single-graph verification") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
        const auto vs = labels(1 + rng() % 6);
        const Graph g = simrep::testing::random_graph(rng, vs);
        const auto rep = simrep::testing::random_interval_rep(rng, vs);
        SimRepInstance inst{ModelKind::interval, {g}};
        CHECK(verify_simultaneous(inst, SimultaneousReps(SimultaneousReps::Intervals{rep})).violations ==
              verify_interval_rep(g, rep).violations);
    }
}

TEST_CASE("simultaneous ok implies every per-graph check is ok") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 200; ++round) {
        // two graphs over overlapping random vertex sets, reps drawn from one shared map
        const auto vs = labels(2 + rng() % 5);
        const auto shared_rep = simrep::testing::random_interval_rep(rng, vs, 4);
        SimRepInstance inst{ModelKind::interval, {}};
        SimultaneousReps::Intervals family;
        for (int i = 0; i < 2; ++i) {
            std::vector<VertexId> sub;
            for (const auto& v : vs)
                if (rng() % 3) sub.push_back(v);
            Graph g;
            for (const auto& v : sub) g.add_vertex(v);
            IntervalRep rep;
            for (const auto& v : sub) rep.emplace(v, shared_rep.at(v));
            // adjacency taken from the intervals so some families are fully valid
            for (std::size_t a = 0; a < sub.size(); ++a)
                for (std::size_t b = a + 1; b < sub.size(); ++b)
                    if (overlaps(rep.at(sub[a]), rep.at(sub[b])) != (rng() % 10 == 0)) g.add_edge(sub[a], sub[b]);
            inst.graphs.push_back(std::move(g));
            family.push_back(std::move(rep));
        }
        const bool all_ok = verify_simultaneous(inst, SimultaneousReps(family)).ok();
        const bool each_ok = verify_interval_rep(inst.graphs[0], family[0]).ok() &&
                             verify_interval_rep(inst.graphs[1], family[1]).ok();
        CHECK(all_ok == each_ok);  // shared vertices agree by construction
    }
}

TEST_CASE("format_report") {
    ViolationReport report;
    CHECK(format_report(report) == "OK\n");
    report.violations.push_back({ViolationKind::forbidden_overlap, {V("a"), V("c")}, {2}});
    report.violations.push_back({ViolationKind::shared_vertex_mismatch, {V("v")}, {0, 1}});
    CHECK(format_report(report) ==
          "VIOLATION forbidden-overlap a,c 2\nVIOLATION shared-vertex-mismatch v 0,1\n");
}

TEST_CASE("sunflower classification") {
    auto graph_on = [](std::initializer_list<const char*> names) {
        Graph g;
        for (auto* n : names) g.add_vertex(V(n));
        return g;
    };
    SimRepInstance two{ModelKind::interval, {graph_on({"a", "b"}), graph_on({"c"})}};
    auto r2 = classify_sunflower(two);
    CHECK(r2.is_sunflower);
    CHECK(r2.core->empty());
    CHECK_FALSE(r2.witness);

    SimRepInstance petals{ModelKind::interval, {graph_on({"c", "x"}), graph_on({"c", "y"}), graph_on({"c", "z"})}};
    auto r3 = classify_sunflower(petals);
    CHECK(r3.is_sunflower);
    CHECK(*r3.core == VertexSet{V("c")});

    SimRepInstance one{ModelKind::interval, {graph_on({"a", "b"})}};
    CHECK(classify_sunflower(one).is_sunflower);
    CHECK(*classify_sunflower(one).core == VertexSet{V("a"), V("b")});

    auto to = TotalOrderingInstance({V("1"), V("2"), V("3"), V("4"), V("5")},
                                    {{V("5"), V("1"), V("2")}, {V("2"), V("4"), V("3")}, {V("1"), V("4"), V("3")}});
    auto r = classify_sunflower(build_interval_instance(to));
    CHECK_FALSE(r.is_sunflower);
    CHECK_FALSE(r.core);
    REQUIRE(r.witness);
    CHECK(r.witness->first == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(r.witness->second == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("sunflower classification is invariant under graph permutations") {
    std::mt19937_64 rng(13);
    const auto pool = labels(6);
    for (int round = 0; round < 200; ++round) {
        SimRepInstance inst{ModelKind::interval, {}};
        const std::size_t k = 1 + rng() % 4;
        for (std::size_t i = 0; i < k; ++i) {
            Graph g;
            for (const auto& v : pool)
                if (rng() % 2) g.add_vertex(v);
            inst.graphs.push_back(std::move(g));
        }
        const auto base = classify_sunflower(inst);
        std::shuffle(inst.graphs.begin(), inst.graphs.end(), rng);
        const auto shuffled = classify_sunflower(inst);
        CHECK(base.is_sunflower == shuffled.is_sunflower);
        if (base.is_sunflower && k > 1) CHECK(*base.core == *shuffled.core);
    }
}
