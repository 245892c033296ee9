#include "simrep/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace simrep {
namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::size_t label_width(const SimRepInstance& inst) {
    std::size_t w = 1;
    for (const auto& g : inst.graphs)
        for (const auto& v : g.vertices()) w = std::max(w, v.str().size());
    return w;
}

// Union of the per-graph intervals; shared vertices agree in a verified family.
IntervalRep interval_union(const SimultaneousReps& reps) {
    IntervalRep all;
    for (const auto& rep : reps.intervals()) all.insert(rep.begin(), rep.end());
    return canonicalize(all);
}

struct ArcColumns {
    std::size_t count = 0;
    std::map<VertexId, std::pair<std::size_t, std::size_t>> ends;  // start/end column
};

ArcColumns arc_columns(const SimultaneousReps& reps) {
    ArcColumns cols;
    if (reps.arcs().empty()) return cols;
    const Rational L = reps.arcs().front().circumference();
    std::map<VertexId, std::pair<Rational, Rational>> raw;
    std::vector<Rational> points;
    for (const auto& rep : reps.arcs()) {
        for (const auto& [v, a] : rep.arcs()) {
            const Rational end = mod_circle(a.start + a.length, L);
            raw.insert_or_assign(v, std::pair{a.start, end});
            points.push_back(a.start);
            points.push_back(end);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto rank = [&](const Rational& p) {
        return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
    };
    cols.count = points.size();
    for (const auto& [v, se] : raw) cols.ends.emplace(v, std::pair{rank(se.first), rank(se.second)});
    return cols;
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

}  // namespace

std::string render_ascii(const SimRepInstance& inst, const SimultaneousReps& reps) {
    const std::size_t width = label_width(inst);
    std::string out;

    if (reps.model() == ModelKind::interval) {
        const auto coords = interval_union(reps);
        std::size_t last = 0;
        for (const auto& [v, iv] : coords) last = std::max<std::size_t>(last, iv.r().numerator());
        for (std::size_t i = 0; i < inst.k(); ++i) {
            out += "G" + std::to_string(i) + "\n";
            for (const auto& v : inst.graphs[i].vertices()) {
                std::string row(2 * last + 1, ' ');
                const auto& iv = coords.at(v);
                const auto l = static_cast<std::size_t>(2 * iv.l().numerator());
                const auto r = static_cast<std::size_t>(2 * iv.r().numerator());
                if (l == r) {
                    row[l] = '|';
                } else {
                    std::fill(row.begin() + l, row.begin() + r, '-');
                    row[l] = '[';
                    row[r] = ']';
                }
                while (!row.empty() && row.back() == ' ') row.pop_back();
                out += "  " + pad(v.str(), width) + " " + row + "\n";
            }
        }
        return out;
    }

    const auto cols = arc_columns(reps);
    const std::size_t span = cols.count == 0 ? 1 : 2 * (cols.count - 1) + 1;
    for (std::size_t i = 0; i < inst.k(); ++i) {
        out += "G" + std::to_string(i) + "  (circle cut at 0)\n";
        for (const auto& v : inst.graphs[i].vertices()) {
            std::string row(span, ' ');
            const auto [s, e] = cols.ends.at(v);
            const std::size_t a = 2 * s, b = 2 * e;
            if (a < b) {
                std::fill(row.begin() + a, row.begin() + b, '-');
            } else {
                std::fill(row.begin() + a, row.end(), '-');
                std::fill(row.begin(), row.begin() + b, '-');
            }
            row[a] = '[';
            row[b] = ']';
            while (!row.empty() && row.back() == ' ') row.pop_back();
            out += "  " + pad(v.str(), width) + " " + row + "\n";
        }
    }
    return out;
}

std::string render_svg(const SimRepInstance& inst, const SimultaneousReps& reps) {
    constexpr double margin = 20, label_space = 80, unit = 24, row = 16, gap = 28;
    std::string body;
    double width = 0, height = margin;

    if (reps.model() == ModelKind::interval) {
        const auto coords = interval_union(reps);
        double last = 0;
        for (const auto& [v, iv] : coords) last = std::max(last, iv.r().to_double());
        width = 2 * margin + label_space + unit * std::max(last, 1.0);
        for (std::size_t i = 0; i < inst.k(); ++i) {
            body += "<g id=\"G" + std::to_string(i) + "\">\n";
            body += "<text x=\"" + num(margin) + "\" y=\"" + num(height + row) + "\" font-weight=\"bold\">G" +
                    std::to_string(i) + "</text>\n";
            height += row;
            for (const auto& v : inst.graphs[i].vertices()) {
                height += row;
                const auto& iv = coords.at(v);
                const double x1 = margin + label_space + unit * iv.l().to_double();
                const double x2 = margin + label_space + unit * iv.r().to_double();
                body += "<text x=\"" + num(margin) + "\" y=\"" + num(height + 4) + "\">" + escape(v.str()) + "</text>";
                body += "<line x1=\"" + num(x1) + "\" y1=\"" + num(height) + "\" x2=\"" + num(x2) + "\" y2=\"" +
                        num(height) + "\" stroke=\"black\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
            }
            body += "</g>\n";
            height += gap;
        }
    } else {
        const double L = reps.arcs().empty() ? 1.0 : reps.arcs().front().circumference().to_double();
        std::size_t most = 1;
        for (const auto& g : inst.graphs) most = std::max(most, g.order());
        const double inner = 40, step = 8;
        const double outer = inner + step * static_cast<double>(most);
        const double cell = 2 * outer + 2 * margin;
        width = cell * static_cast<double>(std::max<std::size_t>(inst.k(), 1));
        height = cell + 2 * margin;
        auto point = [&](double cx, double cy, double r, double pos) {
            const double angle = 2 * std::numbers::pi * pos / L - std::numbers::pi / 2;
            return std::pair{cx + r * std::cos(angle), cy + r * std::sin(angle)};
        };
        for (std::size_t i = 0; i < inst.k(); ++i) {
            const double cx = cell * static_cast<double>(i) + cell / 2, cy = margin + cell / 2;
            body += "<g id=\"G" + std::to_string(i) + "\">\n";
            body += "<text x=\"" + num(cx - 8) + "\" y=\"" + num(margin) + "\" font-weight=\"bold\">G" +
                    std::to_string(i) + "</text>\n";
            body += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(inner - step) +
                    "\" fill=\"none\" stroke=\"#bbb\"/>\n";
            std::size_t track = 0;
            for (const auto& v : inst.graphs[i].vertices()) {
                const auto& a = reps.arcs()[i].at(v);
                const double r = inner + step * static_cast<double>(track++);
                const double s = a.start.to_double();
                const double d = a.length.to_double();
                const auto [x1, y1] = point(cx, cy, r, s);
                const auto [x2, y2] = point(cx, cy, r, s + d);
                const int large = d > L / 2 ? 1 : 0;
                body += "<path d=\"M " + num(x1) + " " + num(y1) + " A " + num(r) + " " + num(r) + " 0 " +
                        std::to_string(large) + " 1 " + num(x2) + " " + num(y2) +
                        "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"><title>" + escape(v.str()) +
                        "</title></path>\n";
            }
            body += "</g>\n";
        }
    }
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" font-family=\"monospace\" font-size=\"12\">\n" + body + "</svg>\n";
}

}  // namespace simrep
