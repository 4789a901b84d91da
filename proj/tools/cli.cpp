#include "cli.hpp"

#include "trackcut/errors.hpp"
#include "trackcut/ftfvs.hpp"
#include "trackcut/fvs.hpp"
#include "trackcut/generators.hpp"
#include "trackcut/io.hpp"
#include "trackcut/multicut.hpp"
#include "trackcut/oracles.hpp"
#include "trackcut/preprocess.hpp"
#include "trackcut/tracking.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace trackcut::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kInternal = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> files;
    std::string problem;
    std::string kind;
    bool oracle = false;
    bool quiet = false;
    std::optional<int> r;
    std::string solution;
    int jobs = 1;
    std::uint64_t seed = 1;
    int n = 8;
    int m = 12;
    Weight max_weight = 1;
    std::optional<int> k;
    int pairs = 3;
    std::string vc_file;
};

struct Outcome {
    Json report;
    int code = kOk;
    std::string message;  // diagnostic for stderr
    std::string text;     // raw (non-JSON) output
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

Json one_based(std::span<const int> vs) {
    Json arr = Json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

Json base_report(const std::string& problem, const WeightedGraph& g) {
    Json rep;
    rep["problem"] = problem;
    rep["n"] = g.vertex_count();
    rep["m"] = g.edge_count();
    rep["solution"] = Json::array();
    rep["weight"] = 0;
    rep["feasible"] = false;
    rep["lp_opt"] = nullptr;
    rep["oracle_opt"] = nullptr;
    rep["ratio"] = nullptr;
    rep["stages"] = Json::array();
    return rep;
}

void set_solution(Json& rep, const VertexSelection& sel) {
    rep["solution"] = one_based(sel.members());
    rep["weight"] = sel.total_weight();
}

void set_stages(Json& rep, const std::vector<StageTiming>& stages) {
    for (const auto& s : stages) rep["stages"].push_back(Json{{"name", s.name}, {"millis", s.millis}});
}

void set_oracle(Json& rep, Weight weight, Weight opt) {
    rep["oracle_opt"] = opt;
    if (opt > 0) {
        rep["ratio"] = to_fraction_string(Rational(weight, opt));
    } else if (weight == 0) {
        rep["ratio"] = to_fraction_string(Rational(1));
    }
}

TrackingInstance tracking_of(const InstanceFile& f) {
    if (!f.st) throw UsageError("instance has no 'st' line");
    return TrackingInstance(f.graph, f.st->first, f.st->second);
}

FtfvsInstance ftfvs_of(const InstanceFile& f, const Options& opt) {
    const auto r = opt.r ? opt.r : f.r;
    if (!r) throw UsageError("fault tolerance missing: pass --r or add an 'r' line");
    return FtfvsInstance(f.graph, *r);
}

McfInstance mcf_of(const InstanceFile& f) {
    if (is_forest(f.graph)) return McfInstance::forest_from_pairs(f.graph, f.pairs);
    if (is_chordal(f.graph)) return McfInstance::chordal(f.graph, f.pairs);
    throw UsageError("multicut needs a forest or a chordal graph");
}

std::vector<int> parse_solution(const std::string& text, int n) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) continue;
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError("bad vertex '" + token + "' in --solution");
        }
        if (v < 1 || v > n) throw UsageError("solution vertex " + token + " out of range");
        out.push_back(v - 1);
    }
    return out;
}

Outcome solve_tracking_cmd(const InstanceFile& f, const Options& opt) {
    const auto inst = tracking_of(f);
    const auto res = solve_tracking_detailed(inst);
    Outcome out{base_report("tracking", f.graph)};
    set_solution(out.report, res.solution);
    out.report["feasible"] = true;
    if (res.lp) out.report["lp_opt"] = to_fraction_string(res.lp->objective_value);
    if (opt.oracle) {
        set_oracle(out.report, res.solution.total_weight(), exact_tracking(inst).total_weight());
    }
    set_stages(out.report, res.stages);
    return out;
}

Outcome solve_ftfvs_cmd(const InstanceFile& f, const Options& opt) {
    const auto inst = ftfvs_of(f, opt);
    Outcome out{base_report("ftfvs", f.graph)};
    if (!check_feasible(inst)) {
        out.report["witness"] = one_based(shortest_cycle(f.graph)->vertices);
        out.code = kInfeasible;
        out.message = "no r-fault tolerant fvs exists: cycle of length <= r";
        return out;
    }
    const auto res = solve_ftfvs_detailed(inst);
    set_solution(out.report, res.solution);
    out.report["feasible"] = true;
    out.report["lp_opt"] = to_fraction_string(res.lp.objective_value);
    if (opt.oracle) set_oracle(out.report, res.solution.total_weight(), exact_ftfvs(inst)->total_weight());
    set_stages(out.report, res.stages);
    return out;
}

Outcome solve_mcf_cmd(const InstanceFile& f, const Options& opt) {
    const auto inst = mcf_of(f);
    Outcome out{base_report("mcf", f.graph)};
    std::vector<StageTiming> stages;
    StageClock clock(stages);
    VertexSelection cut;
    Rational lp_opt;
    if (!inst.cut_paths.empty() || is_forest(inst.graph)) {
        clock.start("lp");
        const auto frac = solve(forest_mcf_lp(inst));
        lp_opt = frac.objective_value;
        clock.stop();
        clock.start("round");
        cut = inst.graph.has_uniform_weights() ? solve_unweighted_forest(inst)
                                               : round_weighted_forest(inst, frac);
        clock.stop();
    } else {
        clock.start("lp");
        const auto lp = solve_chordal_lp(inst);
        lp_opt = lp.solution.objective_value;
        clock.stop();
        clock.start("round");
        cut = round_chordal(inst, lp.solution);
        clock.stop();
    }
    set_solution(out.report, cut);
    out.report["feasible"] = is_multicut(inst, cut.members());
    out.report["lp_opt"] = to_fraction_string(lp_opt);
    if (opt.oracle) set_oracle(out.report, cut.total_weight(), exact_multicut(inst).total_weight());
    set_stages(out.report, stages);
    return out;
}

Outcome verify_cmd(const InstanceFile& f, const Options& opt) {
    const auto& g = f.graph;
    const auto cand = parse_solution(opt.solution, g.vertex_count());
    const VertexSelection sel(g, cand);
    Outcome out{base_report(opt.problem, g)};
    set_solution(out.report, sel);
    bool ok = false;
    if (opt.problem == "tracking") {
        const auto w = find_tracking_violation(tracking_of(f), sel.members());
        ok = !w;
        if (w) {
            out.report["witness"] = Json{{"cycle", one_based(w->cycle.vertices)},
                                         {"a", w->a + 1},
                                         {"b", w->b + 1},
                                         {"paths", {one_based(w->first.vertices),
                                                    one_based(w->second.vertices)}}};
        }
    } else if (opt.problem == "ftfvs") {
        const auto c = ftfvs_violation(ftfvs_of(f, opt), sel.members());
        ok = !c;
        if (c) out.report["witness"] = one_based(c->vertices);
    } else if (opt.problem == "fvs") {
        const auto c = find_cycle(g.without_vertices(sel.members()));
        ok = !c;
        if (c) out.report["witness"] = one_based(c->vertices);
    } else if (opt.problem == "mcf") {
        ok = is_multicut(mcf_of(f), sel.members());
    } else {
        throw UsageError("unknown problem '" + opt.problem + "'");
    }
    out.report["feasible"] = ok;
    if (!ok) out.code = kInfeasible;
    return out;
}

Outcome oracle_cmd(const InstanceFile& f, const Options& opt) {
    const auto& g = f.graph;
    Outcome out{base_report(opt.problem, g)};
    std::optional<VertexSelection> sel;
    if (opt.problem == "tracking") {
        sel = exact_tracking(tracking_of(f));
    } else if (opt.problem == "ftfvs") {
        sel = exact_ftfvs(ftfvs_of(f, opt));
    } else if (opt.problem == "fvs") {
        sel = exact_fvs(g);
    } else if (opt.problem == "mcf") {
        sel = exact_multicut(mcf_of(f));
    } else if (opt.problem == "vc") {
        sel = min_weight_vertex_cover(g);
    } else {
        throw UsageError("unknown problem '" + opt.problem + "'");
    }
    if (!sel) {
        out.code = kInfeasible;
        out.message = "instance has no feasible solution";
        out.report["witness"] = one_based(shortest_cycle(g)->vertices);
        return out;
    }
    set_solution(out.report, *sel);
    out.report["feasible"] = true;
    set_oracle(out.report, sel->total_weight(), sel->total_weight());
    return out;
}

Outcome reduce_cmd(const InstanceFile& f, const Options&) {
    const auto red = reduce(tracking_of(f));
    InstanceFile reduced;
    reduced.graph = red.instance.graph();
    reduced.st = {red.instance.source(), red.instance.target()};
    std::string kept = "kept";
    for (int v : red.kept) kept += " " + std::to_string(v + 1);
    reduced.comments.push_back(kept);
    Outcome out;
    out.text = render_instance(reduced);
    return out;
}

Outcome gen_cmd(const Options& opt) {
    Rng rng(opt.seed);
    InstanceFile inst;
    if (opt.kind == "random") {
        if (opt.r) {
            inst.graph = random_girth_graph(rng, opt.n, *opt.r, 4 * opt.m, opt.max_weight);
            inst.r = opt.r;
        } else {
            inst.graph = random_connected_graph(rng, opt.n, opt.m, opt.max_weight);
            if (opt.n >= 2) {
                const int s = static_cast<int>(rng.uniform(0, opt.n - 1));
                int t = static_cast<int>(rng.uniform(0, opt.n - 2));
                if (t >= s) ++t;
                inst.st = {s, t};
            }
        }
    } else if (opt.kind == "chordal") {
        const int k = opt.k ? *opt.k : static_cast<int>(rng.uniform(2, 4));
        inst.graph = random_k_tree(rng, opt.n, k, opt.max_weight);
        inst.pairs = random_pairs(rng, opt.n, opt.pairs);
    } else if (opt.kind == "star") {
        const auto g = random_connected_graph(rng, opt.n, opt.m, opt.max_weight);
        const auto star = vc_to_mcf_star(g);
        inst.graph = star.graph;
        for (const auto& p : star.cut_paths) inst.pairs.emplace_back(p.front(), p.back());
    } else if (opt.kind == "gadget") {
        if (opt.vc_file.empty()) throw UsageError("gen gadget needs --vc <file>");
        if (!opt.r) throw UsageError("gen gadget needs --r");
        const auto vc = parse_instance(read_input(opt.vc_file));
        const int k = opt.k.value_or(0);
        auto gadget = gen_hardness_gadget(vc.graph, k, *opt.r);
        inst.graph = gadget.instance.graph();
        inst.r = gadget.instance.r();
        inst.comments.push_back("k " + std::to_string(k));
        inst.comments.push_back("kprime " + std::to_string(gadget.k_prime));
    } else {
        throw UsageError("unknown generator '" + opt.kind + "'");
    }
    Outcome out;
    out.text = render_instance(inst);
    return out;
}

Outcome guarded(const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        return Outcome{{}, kUsage, e.what()};
    } catch (const ParseError& e) {
        return Outcome{{}, kUsage, e.what()};
    } catch (const GraphError& e) {
        return Outcome{{}, kUsage, e.what()};
    } catch (const InfeasibleInstance& e) {
        Json rep{{"feasible", false}, {"witness", one_based(e.witness())}};
        return Outcome{rep, kInfeasible, e.what()};
    } catch (const CapExceeded& e) {
        return Outcome{{}, kCapExceeded, e.what()};
    } catch (const Error& e) {
        return Outcome{{}, kInfeasible, e.what()};
    } catch (const std::invalid_argument& e) {
        return Outcome{{}, kUsage, e.what()};
    } catch (const std::exception& e) {
        return Outcome{{}, kInternal, std::string("internal error: ") + e.what()};
    }
}

using FileCommand = Outcome (*)(const InstanceFile&, const Options&);

int run_on_files(FileCommand cmd, const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.files.empty()) {
        err << "error: no instance file given\n";
        return kUsage;
    }
    std::vector<Outcome> results(opt.files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < opt.files.size(); i = next++) {
            results[i] = guarded([&] { return cmd(parse_instance(read_input(opt.files[i])), opt); });
        }
    };
    const int threads = std::clamp<int>(opt.jobs, 1, static_cast<int>(opt.files.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    int code = kOk;
    const bool batch = opt.files.size() > 1;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        code = std::max(code, r.code);
        if (!r.message.empty()) err << opt.files[i] << ": " << r.message << '\n';
        if (opt.quiet) continue;
        if (!r.text.empty()) {
            out << r.text;
        } else if (!r.report.is_null()) {
            out << (batch ? r.report.dump() : r.report.dump(2)) << '\n';
        }
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tracking paths, fault tolerant fvs and vertex multicut approximations"};
    app.require_subcommand(1);
    Options opt;

    auto output_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", "JSON report on stdout (default)");
        sub->add_flag("--quiet", opt.quiet, "suppress the report; exit status only");
    };
    auto solver = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("files", opt.files, "instance files ('-' for stdin)")->required();
        sub->add_flag("--oracle", opt.oracle, "attach the brute-force optimum and the ratio");
        sub->add_option("--jobs", opt.jobs, "solve files concurrently")->check(CLI::PositiveNumber);
        output_flags(sub);
        return sub;
    };

    auto* tracking = solver("solve-tracking", "approximate a minimum tracking set");
    auto* ftfvs = solver("solve-ftfvs", "approximate a minimum r-fault tolerant fvs");
    ftfvs->add_option("--r", opt.r, "fault tolerance (overrides the file)");
    auto* mcf = solver("solve-mcf", "vertex multicut on a forest or chordal graph");

    auto* verify = app.add_subcommand("verify", "check a candidate solution");
    verify->add_option("problem", opt.problem, "tracking | ftfvs | fvs | mcf")->required();
    verify->add_option("files", opt.files, "instance file")->required();
    verify->add_option("--solution", opt.solution, "comma-separated 1-indexed vertices");
    verify->add_option("--r", opt.r, "fault tolerance (ftfvs)");
    output_flags(verify);

    auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
    oracle->add_option("problem", opt.problem, "tracking | ftfvs | fvs | mcf | vc")->required();
    oracle->add_option("files", opt.files, "instance files")->required();
    oracle->add_option("--r", opt.r, "fault tolerance (ftfvs)");
    oracle->add_option("--jobs", opt.jobs, "solve files concurrently")->check(CLI::PositiveNumber);
    output_flags(oracle);

    auto* gen = app.add_subcommand("gen", "write a generated instance to stdout");
    gen->add_option("kind", opt.kind, "random | gadget | star | chordal")->required();
    gen->add_option("--seed", opt.seed, "generator seed");
    gen->add_option("--n", opt.n, "vertex count")->check(CLI::Range(1, 100000));
    gen->add_option("--m", opt.m, "edge count (random, star)")->check(CLI::NonNegativeNumber);
    gen->add_option("--max-weight", opt.max_weight, "weights uniform in 1..max")->check(CLI::PositiveNumber);
    gen->add_option("--r", opt.r, "girth > r (random) or gadget parameter");
    gen->add_option("--k", opt.k, "k-tree width (chordal) or cover size (gadget)");
    gen->add_option("--pairs", opt.pairs, "terminal pairs (chordal)")->check(CLI::NonNegativeNumber);
    gen->add_option("--vc", opt.vc_file, "vertex cover instance (gadget)");

    auto* red = app.add_subcommand("reduce", "drop vertices and edges on no s-t path");
    red->add_option("files", opt.files, "instance file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (tracking->parsed()) return run_on_files(solve_tracking_cmd, opt, out, err);
    if (ftfvs->parsed()) return run_on_files(solve_ftfvs_cmd, opt, out, err);
    if (mcf->parsed()) return run_on_files(solve_mcf_cmd, opt, out, err);
    if (verify->parsed()) return run_on_files(verify_cmd, opt, out, err);
    if (oracle->parsed()) return run_on_files(oracle_cmd, opt, out, err);
    if (red->parsed()) return run_on_files(reduce_cmd, opt, out, err);
    if (gen->parsed()) {
        auto res = guarded([&] { return gen_cmd(opt); });
        if (!res.message.empty()) err << res.message << '\n';
        if (!opt.quiet) out << res.text;
        return res.code;
    }
    return kUsage;
}

}  // namespace trackcut::cli
