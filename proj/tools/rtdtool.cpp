// Copyright 2026 The rtdkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rtdtool -- command-line front end for rtdkit.
//
// Exit codes: 0 success, 1 negative verdict (rejected plan, violation),
// 2 usage or parse error, 3 capacity or budget error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtdkit/metadata.hpp"
#include "rtdkit/rtdkit.hpp"

using namespace rtdkit;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_capacity = 3;

/// Usage-level failure with a specific exit code.
struct CommandError
{
    int code;
    std::string message;
};

std::string fnv1a64(const std::string& data)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
}

/// Collects human-readable lines and a parallel machine-readable document.
class Report
{
public:
    Report(std::string command, std::vector<std::string> argv)
    {
        _doc["command"] = std::move(command);
        _doc["argv"] = std::move(argv);
        _doc["inputs"] = json::array();
        _start = std::chrono::steady_clock::now();
    }

    void input(const std::string& path, const std::string& contents)
    {
        _doc["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a64(contents)}});
    }

    template <class T>
    void set(const std::string& key, T&& value)
    {
        _doc["result"][key] = std::forward<T>(value);
    }

    void line(const std::string& s) { _lines.push_back(s); }

    void emit(bool as_json, std::ostream& os)
    {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - _start)
                        .count();
        if (as_json) {
            _doc["milliseconds"] = ms;
            os << _doc.dump(2) << "\n";
        } else {
            for (const auto& l : _lines)
                os << l << "\n";
        }
    }

private:
    json _doc;
    std::vector<std::string> _lines;
    std::chrono::steady_clock::time_point _start;
};

std::string read_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CommandError{exit_usage, "cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& contents)
{
    if (path.empty() || path == "-") {
        std::cout << contents;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw CommandError{exit_usage, "cannot write '" + path + "'"};
    out << contents;
}

std::string point_list(const ConceptClass& klass, const IndexSet& points)
{
    std::string s = "{";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i)
            s += ",";
        s += klass.domain()[points[i]].label;
    }
    return s + "}";
}

std::string vertex_list(const IndexSet& vs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            s += ",";
        s += Graph::vertex_label(vs[i]);
    }
    return s + "}";
}

json plan_json(const TeachingPlan& plan)
{
    json steps = json::array();
    for (const auto& s : plan.steps)
        steps.push_back({{"concept", s.concept_label}, {"points", s.points}});
    return steps;
}

void plan_lines(Report& report, const ConceptClass& klass, const TeachingPlan& plan)
{
    report.line("plan:");
    for (const auto& s : plan.steps)
        report.line("  " + s.concept_label + " " + point_list(klass, s.points));
}

// ---------------------------------------------------------------------------

struct Options
{
    bool json = false;
    std::vector<std::string> argv;

    std::string class_file;
    std::string plan_file;
    std::string plan_out;
    std::string concept_label;
    std::size_t oracle_cap = default_oracle_cap;

    std::size_t gadget_k = 0;
    std::size_t gadget_cap = default_gadget_cap;
    bool verify = false;

    std::string variant;
    std::string graph_file;
    std::optional<std::size_t> k;
    std::string out_file;
    std::string meta_file;

    bool budget_override = false;
    std::size_t max_sets = 200000;
    std::uint64_t seed = 0;

    std::size_t gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;

    std::vector<std::string> sweep;
    double edge_prob = 0.5;
};

int cmd_compute(const std::string& which, const Options& o)
{
    std::string text = read_input(o.class_file);
    ConceptClass klass = parse_class(text);
    Report report(which, o.argv);
    report.input(o.class_file, text);
    int code = exit_ok;

    if (which == "ts") {
        auto idx = klass.find(o.concept_label);
        if (!idx)
            throw CommandError{exit_usage, "no concept labelled '" + o.concept_label + "'"};
        auto r = min_teaching_set(klass, *idx);
        report.set("TS", r.size);
        report.set("concept", o.concept_label);
        report.set("witness", r.witness);
        report.line("TS = " + std::to_string(r.size));
        report.line("witness: " + point_list(klass, r.witness));
    } else if (which == "td" || which == "tdmin") {
        auto r = which == "td" ? teaching_dim(klass) : td_min(klass);
        std::string name = which == "td" ? "TD" : "TD_min";
        report.set(name, r.value);
        report.set("concept", r.label);
        report.line(name + " = " + std::to_string(r.value) + " (concept " + r.label + ")");
    } else if (which == "rtd") {
        auto r = rtd(klass);
        std::size_t checked = check_plan(klass, r.plan);
        report.set("RTD", r.value);
        report.set("plan", plan_json(r.plan));
        report.set("plan_check", checked == r.value ? "PASS" : "FAIL");
        report.line("RTD = " + std::to_string(r.value));
        plan_lines(report, klass, r.plan);
        if (!o.plan_out.empty())
            write_output(o.plan_out, serialize_plan(r.plan));
    } else if (which == "rtd-oracle") {
        std::size_t v = rtd_oracle_subsets(klass, o.oracle_cap);
        report.set("RTD", v);
        report.line("RTD (subset oracle) = " + std::to_string(v));
    } else if (which == "plan-check") {
        std::string ptext = read_input(o.plan_file);
        report.input(o.plan_file, ptext);
        TeachingPlan plan = parse_plan(ptext);
        try {
            std::size_t w = check_plan(klass, plan);
            report.set("valid", true);
            report.set("width", w);
            report.line("plan valid, width = " + std::to_string(w));
        } catch (const InvalidPlan& e) {
            report.set("valid", false);
            report.set("failing_step", e.step());
            report.set("witness", e.witness_label());
            report.line(std::string("plan invalid: ") + e.what());
            code = exit_negative;
        }
    }
    report.emit(o.json, std::cout);
    return code;
}

int cmd_gadget(const Options& o)
{
    Gadget g = build_gadget(o.gadget_k, o.gadget_cap);
    std::string text = serialize_class(g.klass);
    if (!o.verify) {
        std::cout << text;
        return exit_ok;
    }
    GadgetReport r = verify_gadget(g);
    Report report("gadget", o.argv);
    report.set("k", g.k);
    report.set("p", g.p);
    report.set("q", g.q);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& pc = r.property[i];
        std::string key = "property" + std::to_string(i + 1);
        report.set(key, pc.pass ? "PASS" : "FAIL");
        std::string l = "# property " + std::to_string(i + 1) + ": " + (pc.pass ? "PASS" : "FAIL");
        if (pc.counterexample)
            l += " (counterexample " + pc.counterexample->concept_label + " " +
                 point_list(g.klass, pc.counterexample->points) + ")";
        report.line(l);
    }
    report.line(std::string("# properties 1,2,3: ") + (r.all_pass() ? "PASS" : "FAIL"));
    if (!o.json)
        std::cout << text;
    report.emit(o.json, std::cout);
    return r.all_pass() ? exit_ok : exit_negative;
}

Graph load_graph(const Options& o, std::string& text)
{
    text = read_input(o.graph_file);
    return parse_graph(text);
}

int cmd_reduce(const Options& o)
{
    std::string gtext;
    Graph g = load_graph(o, gtext);
    std::string meta_path = o.meta_file;
    if (meta_path.empty() && !o.out_file.empty() && o.out_file != "-")
        meta_path = o.out_file + ".meta.json";

    json meta;
    std::string text;
    if (o.variant == "rtd") {
        if (!o.k)
            throw CommandError{exit_usage, "reduce rtd needs k"};
        auto out = domset_to_rtd(g, *o.k);
        text = serialize_class(out.klass);
        meta = reduction_metadata(out);
    } else {
        auto out = shinohara_reduce(g);
        text = serialize_class(out.klass);
        meta = shinohara_metadata(out);
        std::cerr << "distinguished concept: " << out.klass.label(out.star) << "\n";
        for (const auto& m : out.merges)
            std::cerr << "merged " << Graph::vertex_label(m.merged) << " into "
                      << Graph::vertex_label(m.kept) << " (identical rows)\n";
    }
    meta["source"] = {{"path", o.graph_file}, {"fnv1a64", fnv1a64(gtext)}};
    write_output(o.out_file, text);
    if (!meta_path.empty())
        write_output(meta_path, meta.dump(2) + "\n");
    return exit_ok;
}

int cmd_verify(const Options& o)
{
    std::string gtext;
    Graph g = load_graph(o, gtext);
    const std::size_t k = *o.k;
    if (g.size() < 2 || k < 1 || k > g.size())
        throw CommandError{exit_usage, "verify needs N >= 2 and 1 <= k <= N (N = " +
                                           std::to_string(g.size()) + ", k = " +
                                           std::to_string(k) + ")"};
    if (!o.budget_override && (g.size() > 8 || k > 2))
        throw CommandError{exit_capacity, "verify is budgeted to N <= 8 and k <= 2; "
                                          "pass --budget-override to run anyway"};

    Report report("verify", o.argv);
    report.input(o.graph_file, gtext);
    auto out = domset_to_rtd(g, k);
    const auto& prm = out.params;
    report.set("N", prm.N);
    report.set("k", prm.k);
    report.set("p", prm.p);
    report.set("q", prm.q);
    report.set("concepts", out.klass.size());
    report.set("points", out.klass.domain_size());
    report.line("instance: " + std::to_string(out.klass.size()) + " concepts over " +
                std::to_string(out.klass.domain_size()) + " points (p=" +
                std::to_string(prm.p) + ", q=" + std::to_string(prm.q) + ")");

    bool ok = true;
    auto ds = has_dominating_set(g, k);
    auto r = rtd(out.klass);
    bool rtd_yes = r.value <= k;
    report.set("domset", ds.found);
    report.set("rtd", r.value);
    report.line("rtd = " + std::to_string(r.value));

    if (ds.found) {
        IndexSet t = pad_to_size(g, ds.witness, k);
        report.set("domset_witness", t);
        report.line("dominating set: " + vertex_list(t));
        try {
            std::size_t w = check_plan(out.klass, witness_plan(out, t));
            report.set("witness_plan", "PASS");
            report.line("witness plan: PASS (width " + std::to_string(w) + ")");
        } catch (const std::exception& e) {
            ok = false;
            report.set("witness_plan", "FAIL");
            report.line(std::string("witness plan: FAIL (") + e.what() + ")");
        }
    }
    if (rtd_yes) {
        const auto& first = r.plan.steps.front();
        std::size_t c = out.klass.index_of(first.concept_label);
        try {
            if (out.concept_map[c].family != Family::Constraint)
                throw SoundnessViolation("first plan step teaches vertex concept " +
                                         first.concept_label);
            IndexSet t = extract_domset(out, out.concept_map[c].h, first.points);
            report.set("extracted_domset", t);
            report.line("extracted dominating set: " + vertex_list(t) + " from " +
                        first.concept_label);
        } catch (const SoundnessViolation& e) {
            ok = false;
            report.set("extracted_domset", e.what());
            report.line(std::string("soundness: VIOLATION (") + e.what() + ")");
        }
    }

    ObservationOptions oo;
    oo.max_sets = o.max_sets;
    oo.seed = o.seed;
    auto obs = check_observations(out, oo);
    ok = ok && obs.holds();
    report.set("observations", obs.holds() ? "PASS" : "FAIL");
    report.set("observation_sets", obs.sets_checked);
    report.set("observation_exhaustive", obs.exhaustive);
    std::string ol = "observations: " + std::string(obs.holds() ? "PASS" : "FAIL") + " (" +
                     std::to_string(obs.sets_checked) + " sets, " +
                     (obs.exhaustive ? "exhaustive" : "sampled") + ")";
    if (obs.counterexample)
        ol += " counterexample " + obs.counterexample->concept_label + " " +
              point_list(out.klass, obs.counterexample->points);
    report.line(ol);

    bool equivalent = ds.found == rtd_yes;
    ok = ok && equivalent;
    std::string verdict = ok ? "EQUIVALENT" : "VIOLATION";
    report.set("verdict", verdict);
    report.line(std::string("domset: ") + (ds.found ? "YES" : "NO") + ", rtd ≤ " +
                std::to_string(k) + ": " + (rtd_yes ? "YES" : "NO") + ", " + verdict);
    report.emit(o.json, std::cout);
    return ok ? exit_ok : exit_negative;
}

int cmd_gen(const Options& o)
{
    if (!(o.gen_p >= 0.0 && o.gen_p <= 1.0))
        throw CommandError{exit_usage, "edge probability must lie in [0, 1]"};
    write_output(o.out_file, serialize_graph(gen_random_graph(o.gen_n, o.gen_p, o.gen_seed)));
    return exit_ok;
}

struct Range
{
    std::size_t lo;
    std::size_t hi;
};

Range parse_range(const std::string& token, const std::string& name)
{
    std::regex re("^" + name + "=([0-9]+)(?:\\.\\.([0-9]+))?$");
    std::smatch m;
    if (!std::regex_match(token, m, re))
        throw CommandError{exit_usage, "invalid sweep term '" + token + "', expected " + name +
                                           "=<lo>..<hi>"};
    Range r{std::stoul(m[1]), m[2].matched ? std::stoul(m[2]) : std::stoul(m[1])};
    if (r.lo > r.hi)
        throw CommandError{exit_usage, "empty range in '" + token + "'"};
    return r;
}

int cmd_bench(const Options& o)
{
    if (o.sweep.size() != 2)
        throw CommandError{exit_usage, "bench needs a sweep like 'N=2..5 k=1..2'"};
    Range nr = parse_range(o.sweep[0], "N");
    Range kr = parse_range(o.sweep[1], "k");
    if (nr.lo < 2 || kr.lo < 1)
        throw CommandError{exit_usage, "bench needs N >= 2 and k >= 1"};

    std::ostringstream csv;
    csv << "N,k,concepts,points,rtd,milliseconds\n";
    for (std::size_t n = nr.lo; n <= nr.hi; ++n)
        for (std::size_t k = kr.lo; k <= kr.hi; ++k) {
            if (k > n)
                continue;
            Graph g = gen_random_graph(n, o.edge_prob, o.seed + n);
            auto t0 = std::chrono::steady_clock::now();
            auto out = domset_to_rtd(g, k);
            auto r = rtd(out.klass);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            csv << n << "," << k << "," << out.klass.size() << "," << out.klass.domain_size()
                << "," << r.value << "," << std::fixed << std::setprecision(3) << ms << "\n";
        }
    write_output(o.out_file, csv.str());
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rtdkit: teaching dimension, recursive teaching dimension and the "
                 "dominating-set reduction"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    o.argv.assign(argv, argv + argc);
    app.add_flag("--json", o.json, "Emit a machine-readable JSON report");

    auto add_class = [&](CLI::App* sub) {
        sub->add_option("class", o.class_file, "Concept class file")->required();
    };
    auto* ts = app.add_subcommand("ts", "Minimum teaching set of one concept");
    add_class(ts);
    ts->add_option("--concept", o.concept_label, "Concept label")->required();
    auto* td = app.add_subcommand("td", "Teaching dimension");
    add_class(td);
    auto* tdmin = app.add_subcommand("tdmin", "Minimum teaching set size over the class");
    add_class(tdmin);
    auto* rtdc = app.add_subcommand("rtd", "Recursive teaching dimension with a plan");
    add_class(rtdc);
    rtdc->add_option("--plan-out", o.plan_out, "Write the plan in plan format");
    auto* oracle = app.add_subcommand("rtd-oracle", "RTD by enumerating all subclasses");
    add_class(oracle);
    oracle->add_option("--cap", o.oracle_cap, "Largest class size accepted")
        ->capture_default_str();
    auto* pcheck = app.add_subcommand("plan-check", "Validate a teaching plan");
    add_class(pcheck);
    pcheck->add_option("plan", o.plan_file, "Plan file")->required();

    auto* gadget = app.add_subcommand("gadget", "Emit the weight-k gadget class");
    gadget->add_option("k", o.gadget_k, "Gadget parameter")->required();
    gadget->add_flag("--verify", o.verify, "Exhaustively check the three gadget properties");
    gadget->add_option("--cap", o.gadget_cap, "Largest k accepted")->capture_default_str();

    auto* reduce = app.add_subcommand("reduce", "Reduce a graph to a concept class");
    reduce->add_option("variant", o.variant, "rtd or shinohara")
        ->required()
        ->check(CLI::IsMember({"rtd", "shinohara"}));
    reduce->add_option("graph", o.graph_file, "Graph file")->required();
    reduce->add_option("k", o.k, "Dominating set size (rtd variant)");
    reduce->add_option("--out", o.out_file, "Class output file (default stdout)");
    reduce->add_option("--meta", o.meta_file,
                       "Metadata sidecar (default <out>.meta.json when --out is set)");

    auto* verify = app.add_subcommand("verify", "Check both directions of the reduction");
    verify->add_option("graph", o.graph_file, "Graph file")->required();
    verify->add_option("k", o.k, "Dominating set size")->required();
    verify->add_flag("--budget-override", o.budget_override, "Allow N > 8 or k > 2");
    verify->add_option("--max-sets", o.max_sets,
                       "Observation check: exhaustive up to this many sets, else sampled")
        ->capture_default_str();
    verify->add_option("--seed", o.seed, "Seed for sampled observation checks")
        ->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Generate an Erdos-Renyi graph");
    gen->add_option("n", o.gen_n, "Vertex count")->required();
    gen->add_option("p", o.gen_p, "Edge probability")->required();
    gen->add_option("seed", o.gen_seed, "Seed")->required();
    gen->add_option("--out", o.out_file, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Time reduction + RTD over an (N, k) sweep");
    bench->add_option("sweep", o.sweep, "e.g. N=2..5 k=1..2")->required()->expected(2);
    bench->add_option("--seed", o.seed, "Base seed; graph for N uses seed + N")
        ->capture_default_str();
    bench->add_option("--edge-prob", o.edge_prob, "Edge probability")->capture_default_str();
    bench->add_option("--out", o.out_file, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        for (const char* name : {"ts", "td", "tdmin", "rtd", "rtd-oracle", "plan-check"})
            if (app.got_subcommand(name))
                return cmd_compute(name, o);
        if (app.got_subcommand("gadget"))
            return cmd_gadget(o);
        if (app.got_subcommand("reduce"))
            return cmd_reduce(o);
        if (app.got_subcommand("verify"))
            return cmd_verify(o);
        if (app.got_subcommand("gen"))
            return cmd_gen(o);
        if (app.got_subcommand("bench"))
            return cmd_bench(o);
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return exit_capacity;
    } catch (const SoundnessViolation& e) {
        std::cerr << "VIOLATION: " << e.what() << "\n";
        return exit_negative;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
