#include "cli.hpp"

#include "simrep/io.hpp"
#include "simrep/reduce.hpp"
#include "simrep/render.hpp"
#include "simrep/solve.hpp"
#include "simrep/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace simrep::cli {
namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ModelKind parse_model(const std::string& name) {
    return name == "circular-arc" ? ModelKind::circular_arc : ModelKind::interval;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::yes: return "yes";
        case Outcome::no: return "no";
        case Outcome::resource_exceeded: return "resource-exceeded";
    }
    return "?";
}

struct Options {
    std::string input, second, model = "interval", format = "ascii", output;
    std::uint64_t limit = 10'000'000, seed = 1;
    std::size_t s = 0, t = 0;
    bool satisfiable = false;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    int reduce() {
        auto to = parse_total_ordering(slurp(opt_.input));
        auto inst = parse_model(opt_.model) == ModelKind::interval ? build_interval_instance(to)
                                                                   : build_circular_arc_instance(to);
        emit(write_simrep(inst));
        return ok;
    }

    int solve() {
        const auto text = slurp(opt_.input);
        const SearchLimits limits{opt_.limit};
        switch (detect_kind(text)) {
            case DocumentKind::total_ordering: {
                auto to = parse_total_ordering(text);
                auto verdict = solve_betweenness(to, limits);
                if (verdict.yes()) emit(write_order(*verdict.witness));
                return finish(verdict.outcome, verdict.nodes);
            }
            case DocumentKind::simrep: {
                auto inst = parse_simrep(text);
                auto verdict = solve_simrep(inst, limits);
                if (verdict.yes()) emit(write_reps(*verdict.witness));
                return finish(verdict.outcome, verdict.nodes);
            }
            default:
                throw InputError("'" + opt_.input + "' is neither a TotalOrdering nor a SimRep document");
        }
    }

    int verify() {
        auto inst = parse_simrep(slurp(opt_.input));
        auto reps = parse_reps(slurp(opt_.second));
        if (reps.model() != inst.model) throw InputError("representation model does not match instance model");
        auto report = verify_simultaneous(inst, reps);
        out_ << format_report(report);
        return report.ok() ? ok : negative;
    }

    int classify() {
        auto inst = parse_simrep(slurp(opt_.input));
        auto report = classify_sunflower(inst);
        if (report.is_sunflower) {
            out_ << "sunflower core:";
            for (const auto& v : *report.core) out_ << ' ' << v.str();
            out_ << '\n';
        } else {
            const auto& [p, q] = *report.witness;
            out_ << "non-sunflower witness: (" << p.first << "," << p.second << ") (" << q.first << "," << q.second
                 << ")\n";
        }
        return ok;
    }

    int gen() {
        if (opt_.t > 0 && opt_.s < 3) throw InputError("triples need at least 3 ground elements");
        emit(write_total_ordering(generate(opt_.seed, opt_.s, opt_.t, opt_.satisfiable)));
        return ok;
    }

    int render() {
        auto inst = parse_simrep(slurp(opt_.input));
        auto reps = parse_reps(slurp(opt_.second));
        if (reps.model() != inst.model) throw InputError("representation model does not match instance model");
        auto report = verify_simultaneous(inst, reps);
        if (!report.ok()) {
            err_ << format_report(report);
            return negative;
        }
        emit(opt_.format == "svg" ? render_svg(inst, reps) : render_ascii(inst, reps));
        return ok;
    }

    int roundtrip() {
        auto to = parse_total_ordering(slurp(opt_.input));
        const SearchLimits limits{opt_.limit};
        const bool circular = parse_model(opt_.model) == ModelKind::circular_arc;
        const auto inst = circular ? build_circular_arc_instance(to) : build_interval_instance(to);

        const auto direct = solve_betweenness(to, limits);
        const auto reduced = solve_simrep(inst, limits);
        out_ << "betweenness: " << outcome_name(direct.outcome) << '\n';
        out_ << "simrep(" << to_string(inst.model) << "): " << outcome_name(reduced.outcome) << '\n';
        if (direct.outcome == Outcome::resource_exceeded || reduced.outcome == Outcome::resource_exceeded) {
            err_ << "search budget exhausted\n";
            return exhausted;
        }
        if (reduced.yes()) {
            if (!verify_simultaneous(inst, *reduced.witness).ok()) {
                out_ << "DISAGREE: solver witness fails verification\n";
                return negative;
            }
            const auto order = circular ? extract_order_ca(inst, *reduced.witness, to)
                                        : extract_order(inst, *reduced.witness, to);
            const bool valid = check_order(to, order);
            out_ << "extracted " << write_order(order);
            if (!valid) {
                out_ << "DISAGREE: extracted order violates a triple\n";
                return negative;
            }
        }
        if (direct.yes() != reduced.yes()) {
            out_ << "DISAGREE\n";
            return negative;
        }
        out_ << "AGREE\n";
        return ok;
    }

private:
    void emit(const std::string& doc) {
        if (opt_.output.empty()) {
            out_ << doc;
            return;
        }
        std::ofstream file(opt_.output, std::ios::binary);
        if (!file) throw InputError("cannot write '" + opt_.output + "'");
        file << doc;
    }

    int finish(Outcome outcome, std::uint64_t nodes) {
        switch (outcome) {
            case Outcome::yes: return ok;
            case Outcome::no:
                err_ << "no solution (exhaustive search, " << nodes << " nodes)\n";
                return negative;
            case Outcome::resource_exceeded:
                err_ << "node budget of " << opt_.limit << " exhausted\n";
                return exhausted;
        }
        return usage;
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

TotalOrderingInstance generate(std::uint64_t seed, std::size_t s, std::size_t t, bool satisfiable) {
    if (t > 0 && s < 3) throw std::invalid_argument("triples need at least 3 ground elements");
    std::mt19937_64 rng(seed);
    std::vector<VertexId> ground;
    for (std::size_t i = 1; i <= s; ++i) ground.emplace_back(std::to_string(i));

    std::vector<std::size_t> hidden(s);
    std::iota(hidden.begin(), hidden.end(), 0);
    std::shuffle(hidden.begin(), hidden.end(), rng);

    std::vector<Triple> triples;
    std::uniform_int_distribution<std::size_t> pick(0, s == 0 ? 0 : s - 1);
    for (std::size_t i = 0; i < t; ++i) {
        std::array<std::size_t, 3> m{};
        m[0] = pick(rng);
        do m[1] = pick(rng); while (m[1] == m[0]);
        do m[2] = pick(rng); while (m[2] == m[0] || m[2] == m[1]);
        if (satisfiable) {
            std::sort(m.begin(), m.end(), [&](std::size_t a, std::size_t b) { return hidden[a] < hidden[b]; });
            if (rng() & 1) std::swap(m[0], m[2]);
        }
        triples.push_back({ground[m[0]], ground[m[1]], ground[m[2]]});
    }
    return TotalOrderingInstance(std::move(ground), std::move(triples));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simultaneous interval / circular-arc representation toolkit"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::string> models{"interval", "circular-arc"};
    auto add_output = [&](CLI::App* cmd) { cmd->add_option("--output", opt.output, "Write the result here"); };
    auto add_limit = [&](CLI::App* cmd) {
        cmd->add_option("--limit", opt.limit, "Search node budget")->check(CLI::PositiveNumber);
    };
    auto add_model = [&](CLI::App* cmd) {
        cmd->add_option("--model", opt.model, "interval or circular-arc")->check(CLI::IsMember(models));
    };

    auto* reduce = app.add_subcommand("reduce", "Reduce a TotalOrdering instance to SimRep");
    reduce->add_option("input", opt.input, "TotalOrdering file")->required();
    add_model(reduce);
    add_output(reduce);

    auto* solve = app.add_subcommand("solve", "Decide a TotalOrdering or SimRep instance");
    solve->add_option("input", opt.input, "Instance file")->required();
    add_limit(solve);
    add_output(solve);

    auto* verify = app.add_subcommand("verify", "Check a representation file against an instance");
    verify->add_option("instance", opt.input)->required();
    verify->add_option("representation", opt.second)->required();

    auto* classify = app.add_subcommand("classify", "Sunflower or non-sunflower position");
    classify->add_option("instance", opt.input)->required();

    auto* gen = app.add_subcommand("gen", "Generate a random TotalOrdering instance");
    gen->add_option("s", opt.s, "Ground set size")->required();
    gen->add_option("t", opt.t, "Number of triples")->required();
    gen->add_option("--seed", opt.seed);
    gen->add_flag("--satisfiable", opt.satisfiable, "Sample triples consistent with a hidden order");
    add_output(gen);

    auto* render = app.add_subcommand("render", "Draw a verified representation");
    render->add_option("instance", opt.input)->required();
    render->add_option("representation", opt.second)->required();
    render->add_option("--format", opt.format)->check(CLI::IsMember({"ascii", "svg"}));
    add_output(render);

    auto* roundtrip = app.add_subcommand("roundtrip", "Reduce, solve both sides and compare");
    roundtrip->add_option("input", opt.input, "TotalOrdering file")->required();
    add_model(roundtrip);
    add_limit(roundtrip);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    Runner runner(opt, out, err);
    try {
        if (*reduce) return runner.reduce();
        if (*solve) return runner.solve();
        if (*verify) return runner.verify();
        if (*classify) return runner.classify();
        if (*gen) return runner.gen();
        if (*render) return runner.render();
        if (*roundtrip) return runner.roundtrip();
    } catch (const ParseError& e) {
        err << opt.input << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << e.what() << '\n';
    }
    return usage;
}

}  // namespace simrep::cli
