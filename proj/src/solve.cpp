#include "simrep/solve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <vector>

namespace simrep {
namespace {

void require_budget(const SearchLimits& limits) {
    if (limits.max_nodes == 0) throw std::invalid_argument("max_nodes must be positive");
}

// ---------------------------------------------------------------- betweenness

class BetweennessSearch {
public:
    BetweennessSearch(const TotalOrderingInstance& to, const SearchLimits& limits)
        : to_(to), limits_(limits), pos_(to.s(), -1), incident_(to.s()), placed_(to.s(), false) {
        std::map<VertexId, std::size_t> index;
        for (std::size_t i = 0; i < to.s(); ++i) index.emplace(to.ground()[i], i);
        for (const auto& [x, y, z] : to.triples()) {
            triples_.push_back({index.at(x), index.at(y), index.at(z)});
            const std::size_t t = triples_.size() - 1;
            for (auto m : triples_.back()) incident_[m].push_back(t);
        }
    }

    Verdict<LinearOrder> run() {
        Verdict<LinearOrder> verdict;
        const bool found = extend();
        verdict.nodes = nodes_;
        if (exceeded_) {
            verdict.outcome = Outcome::resource_exceeded;
        } else if (found) {
            verdict.outcome = Outcome::yes;
            LinearOrder order;
            for (auto i : prefix_) order.push_back(to_.ground()[i]);
            verdict.witness = std::move(order);
        }
        return verdict;
    }

private:
    // Unplaced members all land after every placed one, so a triple is dead
    // exactly when its placed members already rule out y being in the middle.
    bool feasible(const std::array<std::size_t, 3>& t) const {
        const int px = pos_[t[0]], py = pos_[t[1]], pz = pos_[t[2]];
        const bool hx = px >= 0, hy = py >= 0, hz = pz >= 0;
        if (!hy) return !(hx && hz);
        if (hx && hz) return (px < py && py < pz) || (pz < py && py < px);
        if (hx) return px < py;
        if (hz) return pz < py;
        return false;
    }

    bool extend() {
        if (prefix_.size() == to_.s()) return true;
        if (dead_.contains(placed_)) return false;
        for (std::size_t e = 0; e < to_.s(); ++e) {
            if (placed_[e]) continue;
            if (++nodes_ > limits_.max_nodes) {
                exceeded_ = true;
                return false;
            }
            pos_[e] = static_cast<int>(prefix_.size());
            placed_[e] = true;
            prefix_.push_back(e);
            const bool ok = std::all_of(incident_[e].begin(), incident_[e].end(),
                                        [&](std::size_t t) { return feasible(triples_[t]); });
            if (ok && extend()) return true;
            prefix_.pop_back();
            placed_[e] = false;
            pos_[e] = -1;
            if (exceeded_) return false;
        }
        // Only the placed set matters for the rest of the search.
        dead_.insert(placed_);
        return false;
    }

    const TotalOrderingInstance& to_;
    SearchLimits limits_;
    std::vector<std::array<std::size_t, 3>> triples_;
    std::vector<int> pos_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<bool> placed_;
    std::vector<std::size_t> prefix_;
    std::unordered_set<std::vector<bool>> dead_;
    std::uint64_t nodes_ = 0;
    bool exceeded_ = false;
};

// ------------------------------------------------------------ endpoint search
//
// Vertices are indexed in label order. A vertex is in one of five phases:
//
//   U  no event yet
//   O  opened, not closed             (ordinary interval / non-wrapping arc)
//   C  closed
//   P  closed first: the arc wraps past the cut, so it was active from the
//      start until now and will reopen later
//   S  reopened wrapping arc, active until the end
//
// Only the circular search may move a vertex U -> P. Whether a pair of
// vertices meets is settled as phases change; a pair is pending while it
// must meet and has not yet.

enum class Relation : std::uint8_t { free, meet, avoid };

struct Event {
    std::size_t vertex;
    bool open;
};

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

struct KeyHash {
    std::size_t operator()(const std::vector<Mask>& key) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Mask w : key) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class EndpointSearch {
public:
    EndpointSearch(std::vector<std::vector<Relation>> rel, bool cyclic, const SearchLimits& limits)
        : n_(rel.size()), cyclic_(cyclic), limits_(limits), meet_(n_, 0), avoid_(n_, 0), pending_(n_, 0) {
        if (n_ > 64) throw std::invalid_argument("endpoint search supports at most 64 vertices");
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = 0; v < n_; ++v) {
                if (rel[u][v] == Relation::meet) meet_[u] |= bit(v);
                if (rel[u][v] == Relation::avoid) avoid_[u] |= bit(v);
            }
            pending_[u] = meet_[u];
        }
    }

    Outcome run() {
        const bool found = extend();
        if (exceeded_) return Outcome::resource_exceeded;
        return found ? Outcome::yes : Outcome::no;
    }

    const std::vector<Event>& events() const noexcept { return events_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }
    Mask unstarted() const { return all() & ~(open_ | closed_ | paused_ | suffix_); }
    Mask active() const { return open_ | suffix_; }

    void settle(std::size_t v, Mask others) {
        const Mask met = meet_[v] & others;
        pending_[v] &= ~met;
        for (Mask m = met; m; m &= m - 1) pending_[std::countr_zero(m)] &= ~bit(v);
    }

    std::vector<Mask> key() const {
        std::vector<Mask> k{open_, closed_};
        if (cyclic_) {
            k.push_back(paused_);
            k.push_back(suffix_);
            k.insert(k.end(), pending_.begin(), pending_.end());
        }
        return k;
    }

    // Applies one event if it keeps every decided pair consistent.
    bool apply(std::size_t v, bool open_event) {
        const Mask u = unstarted();
        if (open_event) {
            if (u & bit(v)) {
                // an ordinary opening can never reach an already closed partner
                if ((avoid_[v] & active()) || (pending_[v] & closed_)) return false;
                settle(v, active());
                open_ |= bit(v);
            } else {
                if (avoid_[v] & active()) return false;
                settle(v, active());
                paused_ &= ~bit(v);
                suffix_ |= bit(v);
            }
        } else if (u & bit(v)) {
            // wrapping arc, retroactively active since the cut
            const Mask seen = all() & ~u;
            if (avoid_[v] & seen) return false;
            settle(v, seen);
            paused_ |= bit(v);
        } else {
            const Mask still_possible = cyclic_ ? u : Mask{0};
            if (pending_[v] & ~still_possible) return false;
            open_ &= ~bit(v);
            closed_ |= bit(v);
        }
        events_.push_back({v, open_event});
        return true;
    }

    bool extend() {
        if (events_.size() == 2 * n_) return true;
        auto k = key();
        if (dead_.contains(k)) return false;

        const auto snapshot = std::make_tuple(open_, closed_, paused_, suffix_, pending_);
        auto restore = [&] {
            std::tie(open_, closed_, paused_, suffix_, pending_) = snapshot;
        };
        auto attempt = [&](std::size_t v, bool open_event) {
            if (++nodes_ > limits_.max_nodes) {
                exceeded_ = true;
                return false;
            }
            if (apply(v, open_event)) {
                if (extend()) return true;
                events_.pop_back();
            }
            restore();
            return false;
        };

        const Mask u = unstarted();
        if (cyclic_ && events_.empty()) {
            // rotation pinned: the first vertex opens at position 0
            if (attempt(0, true)) return true;
        } else {
            for (std::size_t v = 0; v < n_ && !exceeded_; ++v)
                if ((u | paused_) & bit(v))
                    if (attempt(v, true)) return true;
            for (std::size_t v = 0; v < n_ && !exceeded_; ++v)
                if ((open_ | (cyclic_ ? u : Mask{0})) & bit(v))
                    if (attempt(v, false)) return true;
        }
        if (!exceeded_) dead_.insert(std::move(k));
        return false;
    }

    std::size_t n_;
    bool cyclic_;
    SearchLimits limits_;
    std::vector<Mask> meet_, avoid_, pending_;
    Mask open_ = 0, closed_ = 0, paused_ = 0, suffix_ = 0;
    std::vector<Event> events_;
    std::unordered_set<std::vector<Mask>, KeyHash> dead_;
    std::uint64_t nodes_ = 0;
    bool exceeded_ = false;
};

struct UnionView {
    std::vector<VertexId> vertices;  // label order
    std::map<VertexId, std::size_t> index;
    std::vector<std::vector<Relation>> rel;
    bool conflict = false;  // some pair must both meet and avoid
};

UnionView build_union(const SimRepInstance& inst) {
    UnionView view;
    VertexSet all;
    for (const auto& g : inst.graphs) all.insert(g.vertices().begin(), g.vertices().end());
    view.vertices.assign(all.begin(), all.end());
    for (std::size_t i = 0; i < view.vertices.size(); ++i) view.index.emplace(view.vertices[i], i);
    const std::size_t n = view.vertices.size();
    view.rel.assign(n, std::vector<Relation>(n, Relation::free));
    for (const auto& g : inst.graphs) {
        const auto& vs = g.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                const auto want = g.adjacent(vs[a], vs[b]) ? Relation::meet : Relation::avoid;
                auto& slot = view.rel[view.index.at(vs[a])][view.index.at(vs[b])];
                if (slot != Relation::free && slot != want) view.conflict = true;
                slot = want;
                view.rel[view.index.at(vs[b])][view.index.at(vs[a])] = want;
            }
        }
    }
    return view;
}

template <typename MakeRep>
Verdict<SimultaneousReps> run_endpoint_search(const SimRepInstance& inst, const SearchLimits& limits, bool cyclic,
                                              MakeRep make_reps) {
    require_budget(limits);
    Verdict<SimultaneousReps> verdict;
    const auto view = build_union(inst);
    if (view.conflict) return verdict;

    EndpointSearch search(view.rel, cyclic, limits);
    verdict.outcome = search.run();
    verdict.nodes = search.nodes();
    if (verdict.outcome != Outcome::yes) return verdict;

    std::vector<std::int64_t> open_at(view.vertices.size()), close_at(view.vertices.size());
    const auto& events = search.events();
    for (std::size_t p = 0; p < events.size(); ++p)
        (events[p].open ? open_at : close_at)[events[p].vertex] = static_cast<std::int64_t>(p);
    verdict.witness = make_reps(view, open_at, close_at, static_cast<std::int64_t>(events.size()));
    return verdict;
}

}  // namespace

bool check_order(const TotalOrderingInstance& to, const LinearOrder& order) {
    std::map<VertexId, std::size_t> rank;
    for (std::size_t p = 0; p < order.size(); ++p)
        if (!rank.emplace(order[p], p).second) throw std::invalid_argument("order repeats '" + order[p].str() + "'");
    if (rank.size() != to.s()) throw std::invalid_argument("order is not a permutation of S");
    for (const auto& v : to.ground())
        if (!rank.contains(v)) throw std::invalid_argument("order is missing '" + v.str() + "'");
    return std::all_of(to.triples().begin(), to.triples().end(), [&](const Triple& t) {
        const auto x = rank.at(t.x), y = rank.at(t.y), z = rank.at(t.z);
        return (x < y && y < z) || (x > y && y > z);
    });
}

Verdict<LinearOrder> solve_betweenness(const TotalOrderingInstance& to, const SearchLimits& limits) {
    require_budget(limits);
    return BetweennessSearch(to, limits).run();
}

Verdict<SimultaneousReps> solve_simrep_interval(const SimRepInstance& inst, const SearchLimits& limits) {
    if (inst.model != ModelKind::interval) throw std::invalid_argument("instance is not an interval instance");
    return run_endpoint_search(inst, limits, false,
                               [&](const UnionView& view, const auto& open_at, const auto& close_at, std::int64_t) {
                                   SimultaneousReps::Intervals reps;
                                   for (const auto& g : inst.graphs) {
                                       IntervalRep rep;
                                       for (const auto& v : g.vertices()) {
                                           const auto i = view.index.at(v);
                                           rep.emplace(v, Interval(open_at[i], close_at[i]));
                                       }
                                       reps.push_back(std::move(rep));
                                   }
                                   return SimultaneousReps(std::move(reps));
                               });
}

Verdict<SimultaneousReps> solve_simrep_circular_arc(const SimRepInstance& inst, const SearchLimits& limits) {
    if (inst.model != ModelKind::circular_arc) throw std::invalid_argument("instance is not a circular-arc instance");
    return run_endpoint_search(
        inst, limits, true,
        [&](const UnionView& view, const auto& open_at, const auto& close_at, std::int64_t positions) {
            // An empty union has no events; any positive circumference will do.
            const Rational circumference(std::max<std::int64_t>(positions, 1));
            SimultaneousReps::Arcs reps;
            for (const auto& g : inst.graphs) {
                CircularArcRep rep(circumference);
                for (const auto& v : g.vertices()) {
                    const auto i = view.index.at(v);
                    std::int64_t length = close_at[i] - open_at[i];
                    if (length < 0) length += positions;
                    rep.set(v, Arc{Rational(open_at[i]), Rational(length)});
                }
                reps.push_back(std::move(rep));
            }
            return SimultaneousReps(std::move(reps));
        });
}

Verdict<SimultaneousReps> solve_simrep(const SimRepInstance& inst, const SearchLimits& limits) {
    return inst.model == ModelKind::interval ? solve_simrep_interval(inst, limits)
                                             : solve_simrep_circular_arc(inst, limits);
}

Verdict<IntervalRep> recognize_interval(const Graph& g, const SearchLimits& limits) {
    SimRepInstance inst;
    inst.graphs.push_back(g);
    auto found = solve_simrep_interval(inst, limits);
    Verdict<IntervalRep> verdict;
    verdict.outcome = found.outcome;
    verdict.nodes = found.nodes;
    if (found.witness) verdict.witness = found.witness->intervals().front();
    return verdict;
}

}  // namespace simrep
