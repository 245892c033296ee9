#include "simrep/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace simrep {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) tokens.push_back(std::move(w));
        if (tokens.empty() || tokens.front().front() == '#') continue;
        lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
    throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

VertexId label(const Line& line, const std::string& token) {
    if (!is_valid_label(token)) fail(line, "invalid label '" + token + "'");
    return VertexId(token);
}

std::size_t parse_index(const Line& line, const std::string& token) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail(line, "bad index '" + token + "'");
    return value;
}

ModelKind parse_model_line(const Line& line) {
    if (line.tokens.size() != 2 || line.tokens[0] != "MODEL:") fail(line, "expected 'MODEL: interval|circular-arc'");
    if (line.tokens[1] == "interval") return ModelKind::interval;
    if (line.tokens[1] == "circular-arc") return ModelKind::circular_arc;
    fail(line, "unknown model '" + line.tokens[1] + "'");
}

Graph::Edge parse_edge(const Line& line, const std::string& token, const Graph& g) {
    // Labels may contain '-', so accept the unique split whose halves are both vertices.
    std::optional<Graph::Edge> found;
    for (auto pos = token.find('-'); pos != std::string::npos; pos = token.find('-', pos + 1)) {
        auto a = token.substr(0, pos), b = token.substr(pos + 1);
        if (!is_valid_label(a) || !is_valid_label(b)) continue;
        VertexId u(a), v(b);
        if (!g.contains(u) || !g.contains(v)) continue;
        if (found) fail(line, "ambiguous edge '" + token + "'");
        found = Graph::Edge{u, v};
    }
    if (!found) fail(line, "edge '" + token + "' does not join two listed vertices");
    return *found;
}

}  // namespace

Rational parse_rational(std::string_view token) {
    auto bad = [&] { return ParseError("bad rational '" + std::string(token) + "'"); };
    auto slash = token.find('/');
    auto num_part = token.substr(0, slash);
    std::int64_t num = 0, den = 1;
    auto [p, ec] = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
    if (num_part.empty() || ec != std::errc{} || p != num_part.data() + num_part.size()) throw bad();
    if (slash != std::string_view::npos) {
        auto den_part = token.substr(slash + 1);
        if (den_part.empty() || den_part.front() == '-' || den_part.front() == '+') throw bad();
        auto [q, ec2] = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
        if (ec2 != std::errc{} || q != den_part.data() + den_part.size() || den == 0) throw bad();
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

DocumentKind detect_kind(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) return DocumentKind::unknown;
    const auto& head = lines.front().tokens.front();
    if (head == "S:") return DocumentKind::total_ordering;
    if (head == "ORDER:") return DocumentKind::order;
    if (head != "MODEL:") return DocumentKind::unknown;
    if (lines.size() == 1) return DocumentKind::unknown;
    const auto& next = lines[1].tokens.front();
    if (next == "GRAPH") return DocumentKind::simrep;
    if (next == "REP" || next == "CIRC:") return DocumentKind::representation;
    return DocumentKind::unknown;
}

TotalOrderingInstance parse_total_ordering(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens.front() != "S:")
        throw ParseError("expected 'S:' line first");
    std::vector<VertexId> ground;
    for (std::size_t i = 1; i < lines.front().tokens.size(); ++i)
        ground.push_back(label(lines.front(), lines.front().tokens[i]));

    VertexSet members(ground.begin(), ground.end());
    if (members.size() != ground.size()) fail(lines.front(), "duplicate element in S");

    std::vector<Triple> triples;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.front() != "T:") fail(line, "expected 'T: x y z'");
        if (line.tokens.size() != 4) fail(line, "a triple needs exactly three members");
        Triple t{label(line, line.tokens[1]), label(line, line.tokens[2]), label(line, line.tokens[3])};
        for (const auto* m : {&t.x, &t.y, &t.z})
            if (!members.contains(*m)) fail(line, "triple member '" + m->str() + "' outside S");
        if (t.x == t.y || t.y == t.z || t.x == t.z) fail(line, "repeated member in triple");
        triples.push_back(std::move(t));
    }
    return TotalOrderingInstance(std::move(ground), std::move(triples));
}

std::string write_total_ordering(const TotalOrderingInstance& inst) {
    std::string out = "S:";
    for (const auto& v : inst.ground()) out += " " + v.str();
    out += "\n";
    for (const auto& [x, y, z] : inst.triples()) out += "T: " + x.str() + " " + y.str() + " " + z.str() + "\n";
    return out;
}

SimRepInstance parse_simrep(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty SimRep document");
    SimRepInstance inst;
    inst.model = parse_model_line(lines.front());

    std::size_t i = 1;
    while (i < lines.size()) {
        const auto& header = lines[i];
        if (header.tokens.size() != 2 || header.tokens[0] != "GRAPH") fail(header, "expected 'GRAPH i'");
        if (parse_index(header, header.tokens[1]) != inst.k())
            fail(header, "graphs must be numbered 0, 1, ... in order");
        if (i + 2 >= lines.size()) fail(header, "graph block needs V: and E: lines");
        const auto& vline = lines[i + 1];
        const auto& eline = lines[i + 2];
        if (vline.tokens.front() != "V:") fail(vline, "expected 'V:' line");
        if (eline.tokens.front() != "E:") fail(eline, "expected 'E:' line");

        Graph g;
        for (std::size_t j = 1; j < vline.tokens.size(); ++j) {
            auto v = label(vline, vline.tokens[j]);
            if (g.contains(v)) fail(vline, "duplicate vertex '" + v.str() + "'");
            g.add_vertex(v);
        }
        for (std::size_t j = 1; j < eline.tokens.size(); ++j) {
            auto [u, v] = parse_edge(eline, eline.tokens[j], g);
            try {
                g.add_edge(u, v);
            } catch (const ModelError& e) {
                fail(eline, e.what());
            }
        }
        inst.graphs.push_back(std::move(g));
        i += 3;
    }
    if (inst.graphs.empty()) throw ParseError("a SimRep instance needs at least one graph");
    return inst;
}

std::string write_simrep(const SimRepInstance& inst) {
    std::string out = "MODEL: " + std::string(to_string(inst.model)) + "\n";
    for (std::size_t i = 0; i < inst.k(); ++i) {
        const auto& g = inst.graphs[i];
        out += "GRAPH " + std::to_string(i) + "\nV:";
        for (const auto& v : g.vertices()) out += " " + v.str();
        out += "\nE:";
        for (const auto& [u, v] : g.edges()) out += " " + u.str() + "-" + v.str();
        out += "\n";
    }
    return out;
}

SimultaneousReps parse_reps(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty representation document");
    const ModelKind model = parse_model_line(lines.front());

    std::size_t i = 1;
    std::optional<Rational> circumference;
    if (i < lines.size() && lines[i].tokens.front() == "CIRC:") {
        const auto& line = lines[i];
        if (line.tokens.size() != 2) fail(line, "expected 'CIRC: L'");
        try {
            circumference = parse_rational(line.tokens[1]);
        } catch (const ParseError& e) {
            fail(line, e.what());
        }
        if (*circumference <= 0) fail(line, "circumference must be positive");
        ++i;
    }
    if (model == ModelKind::circular_arc && !circumference) throw ParseError("circular-arc representation needs 'CIRC: L'");
    if (model == ModelKind::interval && circumference) fail(lines[1], "'CIRC:' is only valid for circular-arc");

    SimultaneousReps::Intervals intervals;
    SimultaneousReps::Arcs arcs;
    std::size_t count = 0;
    while (i < lines.size()) {
        const auto& header = lines[i];
        if (header.tokens.size() != 2 || header.tokens[0] != "REP") fail(header, "expected 'REP i'");
        if (parse_index(header, header.tokens[1]) != count) fail(header, "representations must be numbered 0, 1, ... in order");
        ++count;
        ++i;
        IntervalRep rep;
        CircularArcRep arc_rep(circumference.value_or(Rational(1)));
        for (; i < lines.size() && lines[i].tokens.front() != "REP"; ++i) {
            const auto& line = lines[i];
            if (line.tokens.size() != 3) fail(line, "expected 'v a b'");
            auto v = label(line, line.tokens[0]);
            try {
                Rational a = parse_rational(line.tokens[1]);
                Rational b = parse_rational(line.tokens[2]);
                if (model == ModelKind::interval) {
                    if (!rep.emplace(v, Interval(a, b)).second) fail(line, "vertex '" + v.str() + "' listed twice");
                } else {
                    if (arc_rep.contains(v)) fail(line, "vertex '" + v.str() + "' listed twice");
                    arc_rep.set(v, Arc{a, b});
                }
            } catch (const ModelError& e) {
                fail(line, e.what());
            } catch (const ParseError& e) {
                if (std::string_view(e.what()).starts_with("line ")) throw;
                fail(line, e.what());
            }
        }
        if (model == ModelKind::interval) intervals.push_back(std::move(rep));
        else arcs.push_back(std::move(arc_rep));
    }
    if (model == ModelKind::interval) return SimultaneousReps(std::move(intervals));
    return SimultaneousReps(std::move(arcs));
}

std::string write_reps(const SimultaneousReps& reps) {
    std::string out = "MODEL: " + std::string(to_string(reps.model())) + "\n";
    if (reps.model() == ModelKind::interval) {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            out += "REP " + std::to_string(i) + "\n";
            for (const auto& [v, iv] : reps.intervals()[i])
                out += v.str() + " " + format_rational(iv.l()) + " " + format_rational(iv.r()) + "\n";
        }
        return out;
    }
    const auto& arcs = reps.arcs();
    if (!arcs.empty()) out += "CIRC: " + format_rational(arcs.front().circumference()) + "\n";
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        out += "REP " + std::to_string(i) + "\n";
        for (const auto& [v, a] : arcs[i].arcs())
            out += v.str() + " " + format_rational(a.start) + " " + format_rational(a.length) + "\n";
    }
    return out;
}

LinearOrder parse_order(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.size() != 1 || lines.front().tokens.front() != "ORDER:") throw ParseError("expected a single 'ORDER:' line");
    LinearOrder order;
    for (std::size_t i = 1; i < lines.front().tokens.size(); ++i)
        order.push_back(label(lines.front(), lines.front().tokens[i]));
    return order;
}

std::string write_order(const LinearOrder& order) {
    std::string out = "ORDER:";
    for (const auto& v : order) out += " " + v.str();
    return out + "\n";
}

}  // namespace simrep
