// Test-only generators and brute-force oracles. Nothing here calls into the
// search or verification code it is used to check.
#ifndef SIMREP_TESTS_ORACLES_HPP
#define SIMREP_TESTS_ORACLES_HPP

#include "simrep/model.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace simrep::testing {

inline std::vector<VertexId> labels(std::size_t n, const std::string& prefix = "v") {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(prefix + std::to_string(i));
    return out;
}

/// Graph on `vs` whose edges are the bits of `mask` over pairs (a<b) in
/// lexicographic order.
inline Graph graph_from_mask(const std::vector<VertexId>& vs, std::uint64_t mask) {
    Graph g;
    for (const auto& v : vs) g.add_vertex(v);
    std::size_t bit = 0;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b, ++bit)
            if (mask >> bit & 1) g.add_edge(vs[a], vs[b]);
    return g;
}

inline Graph cycle(std::size_t n) {
    auto vs = labels(n);
    Graph g;
    for (const auto& v : vs) g.add_vertex(v);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(vs[i], vs[(i + 1) % n]);
    return g;
}

inline Graph path(std::size_t n) {
    auto vs = labels(n);
    Graph g;
    for (const auto& v : vs) g.add_vertex(v);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(vs[i], vs[i + 1]);
    return g;
}

inline Graph complete(std::size_t n) {
    return graph_from_mask(labels(n), (std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t hi, std::int64_t den_max = 4) {
    std::uniform_int_distribution<std::int64_t> num(0, hi * den_max), den(1, den_max);
    const auto d = den(rng);
    return Rational(num(rng) % (hi * d + 1), d);
}

inline IntervalRep random_interval_rep(std::mt19937_64& rng, const std::vector<VertexId>& vs, std::int64_t span = 10) {
    IntervalRep rep;
    for (const auto& v : vs) {
        Rational a = random_rational(rng, span), b = random_rational(rng, span);
        if (b < a) std::swap(a, b);
        rep.emplace(v, Interval(a, b));
    }
    return rep;
}

inline Graph random_graph(std::mt19937_64& rng, const std::vector<VertexId>& vs, double p = 0.5) {
    std::bernoulli_distribution edge(p);
    Graph g;
    for (const auto& v : vs) g.add_vertex(v);
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (edge(rng)) g.add_edge(vs[a], vs[b]);
    return g;
}

// --------------------------------------------------------------- overlaps

/// Closed intervals meet iff each starts no later than the other ends.
inline bool raw_interval_meet(const Interval& a, const Interval& b) { return a.l() <= b.r() && b.l() <= a.r(); }

/// Unrolls a closed arc on [0, L) into at most two closed linear pieces.
inline std::vector<std::pair<Rational, Rational>> unroll(const Arc& arc, const Rational& L) {
    const Rational end = arc.start + arc.length;
    if (end < L) return {{arc.start, end}};
    return {{arc.start, L}, {Rational(0), end - L}};
}

/// Arc intersection by comparing unrolled pieces; the point L is identified with 0.
inline bool raw_arc_meet(const Arc& a, const Arc& b, const Rational& L) {
    const auto pa = unroll(a, L), pb = unroll(b, L);
    for (const auto& [l1, r1] : pa)
        for (const auto& [l2, r2] : pb)
            if (l1 <= r2 && l2 <= r1) return true;
    return false;
}

// ------------------------------------------------------------- betweenness

/// Every permutation of S that satisfies all triples, by exhaustive enumeration.
inline bool brute_betweenness(const TotalOrderingInstance& to) {
    std::vector<std::size_t> perm(to.s());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < to.s(); ++i) index.emplace(to.ground()[i], i);
    do {
        std::vector<std::size_t> rank(to.s());
        for (std::size_t p = 0; p < perm.size(); ++p) rank[perm[p]] = p;
        bool good = true;
        for (const auto& t : to.triples()) {
            auto x = rank[index.at(t.x)], y = rank[index.at(t.y)], z = rank[index.at(t.z)];
            if (!((x < y && y < z) || (z < y && y < x))) {
                good = false;
                break;
            }
        }
        if (good) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ------------------------------------------------- unpruned endpoint orders

/// Calls `visit(adjacency_mask)` for every sequence of the 2n interval events
/// (open before close, all positions distinct). The mask uses the pair order
/// of graph_from_mask.
inline void enumerate_interval_sequences(std::size_t n, const std::function<void(std::uint64_t)>& visit) {
    std::vector<int> state(n, 0);  // 0 unopened, 1 open, 2 closed
    std::vector<std::uint64_t> meets(n, 0);
    auto pair_bit = [n](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    };
    std::function<void(std::size_t)> rec = [&](std::size_t placed) {
        if (placed == 2 * n) {
            std::uint64_t mask = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    if (meets[a] >> b & 1) mask |= std::uint64_t{1} << pair_bit(a, b);
            visit(mask);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (state[v] == 0) {
                auto saved = meets;
                for (std::size_t u = 0; u < n; ++u)
                    if (state[u] == 1) {
                        meets[u] |= std::uint64_t{1} << v;
                        meets[v] |= std::uint64_t{1} << u;
                    }
                state[v] = 1;
                rec(placed + 1);
                state[v] = 0;
                meets = saved;
            } else if (state[v] == 1) {
                state[v] = 2;
                rec(placed + 1);
                state[v] = 1;
            }
        }
    };
    rec(0);
}

/// Calls `visit(adjacency_mask)` for every circular arrangement of the 2n arc
/// events with vertex 0's opening at position 0. Arcs run clockwise from their
/// opening to their closing event; two arcs are disjoint iff neither contains
/// an event of the other.
inline void enumerate_arc_sequences(std::size_t n, const std::function<void(std::uint64_t)>& visit) {
    const std::size_t m = 2 * n;
    // event 2v opens v, 2v+1 closes it
    std::vector<bool> placed(m, false);
    std::vector<std::size_t> where(m, 0);
    auto pair_bit = [n](std::size_t a, std::size_t b) { return a * n - a * (a + 1) / 2 + (b - a - 1); };
    auto inside = [&](std::size_t v, std::size_t p) {
        const std::size_t o = where[2 * v], c = where[2 * v + 1];
        return o <= c ? (o <= p && p <= c) : (p >= o || p <= c);
    };
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == m) {
            std::uint64_t mask = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    const bool meet = inside(a, where[2 * b]) || inside(a, where[2 * b + 1]) ||
                                      inside(b, where[2 * a]) || inside(b, where[2 * a + 1]);
                    if (meet) mask |= std::uint64_t{1} << pair_bit(a, b);
                }
            visit(mask);
            return;
        }
        for (std::size_t e = 0; e < m; ++e) {
            if (placed[e]) continue;
            placed[e] = true;
            where[e] = pos;
            rec(pos + 1);
            placed[e] = false;
        }
    };
    if (n == 0) {
        visit(0);
        return;
    }
    placed[0] = true;
    where[0] = 0;
    rec(1);
}

/// Set of labeled graphs on n vertices (as masks) realized by some sequence.
inline std::vector<bool> realizable_masks(std::size_t n, bool circular) {
    std::vector<bool> seen(std::size_t{1} << (n * (n - 1) / 2), false);
    auto visit = [&](std::uint64_t mask) { seen[mask] = true; };
    if (circular) enumerate_arc_sequences(n, visit);
    else enumerate_interval_sequences(n, visit);
    return seen;
}

}  // namespace simrep::testing

#endif
