#include <zfcube_cli.hpp>

#include <zfcube/errors.hpp>
#include <zfcube/forcing.hpp>
#include <zfcube/minority.hpp>
#include <zfcube/serialize.hpp>
#include <zfcube/solver.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace zfcube::cli {

namespace {
    using Json = nlohmann::ordered_json;

    auto sha256(const std::string & bytes) -> std::string
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (! EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr))
            throw std::runtime_error("sha256 failed");
        std::ostringstream hex;
        for (unsigned i = 0; i < length; ++i)
            hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
        return hex.str();
    }

    // Thrown for anything the user got wrong: bad flags, unreadable files,
    // missing payloads.
    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    class Invocation {
      public:
        Invocation(std::istream & in, std::ostream & out, std::ostream & err) :
            in_(in), out_(out), err_(err)
        {
        }

        Json parameters = Json::object();
        Json inputs = Json::object();
        std::string outcome = "error";

        auto read_input(const std::string & path) -> std::string
        {
            std::string text;
            if (path == "-") {
                std::ostringstream buffer;
                buffer << in_.rdbuf();
                text = buffer.str();
            }
            else {
                std::ifstream file(path, std::ios::binary);
                if (! file)
                    throw UsageError("cannot read " + path);
                std::ostringstream buffer;
                buffer << file.rdbuf();
                text = buffer.str();
            }
            inputs[path] = "sha256:" + sha256(text);
            return text;
        }

        auto read_document(const std::string & path) -> GraphDocument
        {
            return parse_document(read_input(path));
        }

        void emit(const std::string & text, const std::string & path)
        {
            if (path.empty() || path == "-") {
                out_ << text;
                return;
            }
            std::ofstream file(path, std::ios::binary);
            if (! (file << text))
                throw UsageError("cannot write " + path);
        }

        auto out() -> std::ostream & { return out_; }
        auto err() -> std::ostream & { return err_; }

      private:
        std::istream & in_;
        std::ostream & out_;
        std::ostream & err_;
    };

    auto labels(const Graph & g, const VertexSet & s) -> Json
    {
        Json j = Json::array();
        for (auto v : s)
            j.push_back(g.label(v));
        return j;
    }

    auto parse_set(const Graph & g, const std::string & text) -> VertexSet
    {
        VertexSet s;
        std::istringstream stream(text);
        for (std::string item; std::getline(stream, item, ',');) {
            item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
            if (item.empty())
                continue;
            auto v = g.find(item);
            if (! v)
                throw UsageError("--set names unknown vertex '" + item + "'");
            s.push_back(*v);
        }
        return make_vertex_set(std::move(s));
    }

    auto default_workers() -> unsigned
    {
        if (auto env = std::getenv("ZFCUBE_WORKERS")) {
            try {
                auto w = std::stoul(env);
                if (w >= 1 && w <= 1024)
                    return static_cast<unsigned>(w);
            }
            catch (const std::exception &) {
            }
            throw UsageError(std::string("ZFCUBE_WORKERS must be an integer in [1, 1024], got '") + env + "'");
        }
        return 1;
    }

    struct BuildArgs {
        std::string kind;
        int n = -1;
        std::string spec, output;
    };

    auto cmd_build(Invocation & inv, const BuildArgs & a) -> int
    {
        inv.parameters = {{"kind", a.kind}};
        GraphDocument doc;
        if (a.kind == "hypercube" || a.kind == "minority") {
            if (a.n < 0)
                throw UsageError("build " + a.kind + " needs -n");
            inv.parameters["n"] = a.n;
            doc = a.kind == "hypercube" ? make_document(share(build_hypercube(a.n)))
                                        : make_document(build_minority_recursive(a.n));
        }
        else {
            if (a.spec.empty())
                throw UsageError("build twisted needs --spec");
            inv.parameters["spec"] = a.spec;
            doc = make_document(share(build_twisted(parse_twist_spec(inv.read_input(a.spec)))));
        }
        inv.emit(to_json(doc), a.output);
        inv.outcome = "pass";
        return exit_pass;
    }

    struct VerifyArgs {
        std::string input, mode, set, detector;
    };

    auto verify_set(Invocation & inv, const GraphDocument & doc, const VerifyArgs & a) -> int
    {
        const auto & g = *doc.graph;
        VertexSet s;
        if (! a.set.empty())
            s = parse_set(g, a.set);
        else if (doc.set)
            s = *doc.set;
        else
            throw UsageError("verify set needs --set or a document with a \"set\"");

        auto r = closure(g, s);
        bool pass = r.derived.size() == g.order();
        VertexSet unforced;
        for (VertexId v = 0, i = 0; v < g.order(); ++v) {
            if (i < r.derived.size() && r.derived[i] == v)
                ++i;
            else
                unforced.push_back(v);
        }

        Json j;
        j["mode"] = "set";
        j["result"] = pass ? "pass" : "fail";
        j["set_size"] = s.size();
        j["derived"] = r.derived.size();
        j["unforced"] = unforced.size();
        j["unforced_vertices"] = labels(g, unforced);
        j["forces"] = r.trace.forces.size();
        inv.out() << j.dump() << "\n";
        inv.outcome = pass ? "pass" : "fail";
        return pass ? exit_pass : exit_fail;
    }

    auto verify_arcs(Invocation & inv, const GraphDocument & doc) -> int
    {
        const auto & f = *doc.arcs;
        const auto & g = f.host();
        Json j;
        j["mode"] = "arcs";
        j["arcs"] = f.size();

        auto fail = [&](const std::string & reason) {
            j["result"] = "fail";
            j["reason"] = reason;
            inv.out() << j.dump() << "\n";
            inv.outcome = "fail";
            return exit_fail;
        };

        if (auto violations = validate(f); ! violations.empty())
            return fail("not an arc set: " + violations.front().describe(g));
        try {
            require_dipath_forest(f);
        }
        catch (const StructureError & e) {
            return fail(e.what());
        }

        auto run = execute_arcs(f);
        j["executed"] = run.performed.size();
        j["initial_set_size"] = g.order() - f.size();
        if (! run.complete) {
            std::vector<std::string> stuck;
            auto performed = run.performed;
            std::sort(performed.begin(), performed.end());
            for (auto & a : f.arcs())
                if (! std::binary_search(performed.begin(), performed.end(), a))
                    stuck.push_back(g.label(a.tail) + "->" + g.label(a.head));
            j["unperformed"] = stuck;
            return fail("greedy execution stalls after " + std::to_string(run.performed.size()) + " arcs");
        }
        j["result"] = "pass";
        inv.out() << j.dump() << "\n";
        inv.outcome = "pass";
        return exit_pass;
    }

    auto verify_twist(Invocation & inv, const GraphDocument & doc, const VerifyArgs & a) -> int
    {
        const auto & f = *doc.arcs;
        TwistDetector detector;
        if (a.detector == "exhaustive")
            detector = TwistDetector::exhaustive;
        else if (a.detector == "walk")
            detector = TwistDetector::walk;
        else
            detector = f.host().order() <= max_exhaustive_twist_order ? TwistDetector::exhaustive : TwistDetector::walk;

        Json j;
        j["mode"] = "twist";
        j["detector"] = detector == TwistDetector::exhaustive ? "exhaustive" : "walk";
        auto w = find_chain_twist(f, detector);
        if (w) {
            Json cycle = Json::array();
            for (auto v : *w)
                cycle.push_back(f.host().label(v));
            j["twist"] = cycle;
        }
        else
            j["twist"] = "none";
        j["result"] = w ? "fail" : "pass";
        inv.out() << j.dump() << "\n";
        inv.outcome = w ? "fail" : "pass";
        return w ? exit_fail : exit_pass;
    }

    auto cmd_verify(Invocation & inv, const VerifyArgs & a) -> int
    {
        inv.parameters = {{"input", a.input}, {"mode", a.mode}};
        if (! a.set.empty())
            inv.parameters["set"] = a.set;
        if (! a.detector.empty())
            inv.parameters["detector"] = a.detector;

        auto doc = inv.read_document(a.input);
        if (a.mode == "set")
            return verify_set(inv, doc, a);
        if (! doc.arcs)
            throw UsageError("verify " + a.mode + " needs a document with \"arcs\"");
        if (a.mode == "arcs")
            return verify_arcs(inv, doc);
        return verify_twist(inv, doc, a);
    }

    struct SolveArgs {
        std::string input;
        std::optional<std::size_t> max_k;
        std::optional<double> budget_secs;
        std::optional<std::uint64_t> budget_subsets;
        std::optional<unsigned> workers;
        bool allow_large = false;
    };

    auto cmd_solve(Invocation & inv, const SolveArgs & a) -> int
    {
        SolveOptions o;
        o.max_k = a.max_k;
        if (a.budget_secs)
            o.time_budget = std::chrono::duration<double>(*a.budget_secs);
        o.subset_budget = a.budget_subsets;
        o.workers = a.workers ? *a.workers : default_workers();
        o.allow_large = a.allow_large;

        inv.parameters = {{"input", a.input}, {"workers", o.workers}, {"allow_large", a.allow_large}};
        if (a.max_k)
            inv.parameters["max_k"] = *a.max_k;
        if (a.budget_secs)
            inv.parameters["budget_secs"] = *a.budget_secs;
        if (a.budget_subsets)
            inv.parameters["budget_subsets"] = *a.budget_subsets;

        auto doc = inv.read_document(a.input);
        const auto & g = *doc.graph;
        auto r = solve_exact(g, o);

        Json j;
        j["z"] = r.z ? Json(*r.z) : Json(nullptr);
        j["witness"] = labels(g, r.witness);
        j["status"] = r.status == SolveStatus::exact ? "exact" : "inconclusive";
        j["bounds"] = {r.lower, r.upper};
        j["subsets_tested"] = r.subsets_tested;
        inv.out() << j.dump() << "\n";
        inv.outcome = j["status"];
        return exit_pass;
    }

    struct ExportArgs {
        std::string input, format = "json", output;
        bool dot = false, json = false;
    };

    auto cmd_export(Invocation & inv, ExportArgs a) -> int
    {
        if (a.dot && a.json)
            throw UsageError("--dot and --json are exclusive");
        if (a.dot)
            a.format = "dot";
        if (a.json)
            a.format = "json";
        inv.parameters = {{"input", a.input}, {"format", a.format}};
        if (! a.output.empty())
            inv.parameters["output"] = a.output;

        auto doc = inv.read_document(a.input);
        inv.emit(a.format == "dot" ? to_dot(doc) : to_json(doc), a.output);
        inv.outcome = "pass";
        return exit_pass;
    }
}

auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    auto start = std::chrono::steady_clock::now();
    Invocation inv(in, out, err);

    CLI::App app{"Zero forcing on hypercubes and twisted hypercubes", "zfcube"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ZFCUBE_VERSION);

    BuildArgs build;
    auto build_cmd = app.add_subcommand("build", "Emit the JSON document of a graph family");
    build_cmd->add_option("kind", build.kind, "hypercube, minority or twisted")
        ->required()
        ->check(CLI::IsMember({"hypercube", "minority", "twisted"}));
    build_cmd->add_option("-n", build.n, "Dimension");
    build_cmd->add_option("--spec", build.spec, "Twist spec JSON file for kind twisted");
    build_cmd->add_option("-o,--output", build.output, "Write here instead of standard output");

    VerifyArgs verify;
    auto verify_cmd = app.add_subcommand("verify", "Check a zero forcing set, an arc set, or chain twist absence");
    verify_cmd->add_option("-i,--input", verify.input, "Graph document, - for standard input")->required();
    verify_cmd->add_option("--mode", verify.mode, "set, arcs or twist")
        ->required()
        ->check(CLI::IsMember({"set", "arcs", "twist"}));
    verify_cmd->add_option("--set", verify.set, "Comma-separated vertex labels (overrides the document's set)");
    verify_cmd->add_option("--detector", verify.detector, "exhaustive or walk; default picks by graph size")
        ->check(CLI::IsMember({"exhaustive", "walk"}));

    SolveArgs solve;
    auto solve_cmd = app.add_subcommand("solve", "Exact zero forcing number");
    solve_cmd->add_option("-i,--input", solve.input, "Graph document, - for standard input")->required();
    solve_cmd->add_option("--max-k", solve.max_k, "Largest set size to try");
    solve_cmd->add_option("--budget-secs", solve.budget_secs, "Wall-clock budget")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--budget-subsets", solve.budget_subsets, "Subset budget");
    solve_cmd->add_option("--workers", solve.workers, "Worker threads (default $ZFCUBE_WORKERS or 1)")->check(CLI::Range(1, 1024));
    solve_cmd->add_flag("--allow-large", solve.allow_large, "Permit graphs above 32 vertices");

    ExportArgs exp;
    auto export_cmd = app.add_subcommand("export", "Re-emit a document as JSON or Graphviz DOT");
    export_cmd->add_option("-i,--input", exp.input, "Graph document, - for standard input")->required();
    export_cmd->add_option("--format", exp.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    export_cmd->add_flag("--dot", exp.dot, "Same as --format dot");
    export_cmd->add_flag("--json", exp.json, "Same as --format json");
    export_cmd->add_option("-o,--output", exp.output, "Write here instead of standard output");

    std::string command = args.empty() ? "" : args.front();
    int code = exit_usage;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*build_cmd)
            code = cmd_build(inv, build);
        else if (*verify_cmd)
            code = cmd_verify(inv, verify);
        else if (*solve_cmd)
            code = cmd_solve(inv, solve);
        else
            code = cmd_export(inv, exp);
    }
    catch (const CLI::ParseError & e) {
        auto c = app.exit(e, out, err);
        code = c == 0 ? exit_pass : exit_usage;
        inv.outcome = c == 0 ? "help" : "usage error";
    }
    catch (const ParseError & e) {
        err << "zfcube: parse error: " << e.what() << "\n";
        code = exit_usage;
    }
    catch (const UsageError & e) {
        err << "zfcube: " << e.what() << "\n";
        code = exit_usage;
    }
    catch (const std::invalid_argument & e) {
        err << "zfcube: invalid input: " << e.what() << "\n";
        code = exit_usage;
    }
    catch (const ResourceError & e) {
        err << "zfcube: " << e.what() << "\n";
        code = exit_usage;
    }
    catch (const StructureError & e) {
        err << "zfcube: " << e.what() << "\n";
        code = exit_usage;
    }

    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    Json manifest;
    manifest["manifest"] = "zfcube-run";
    manifest["command"] = command;
    manifest["parameters"] = inv.parameters;
    manifest["inputs"] = inv.inputs;
    manifest["version"] = ZFCUBE_VERSION;
    manifest["elapsed_secs"] = elapsed.count();
    manifest["outcome"] = inv.outcome;
    manifest["exit_code"] = code;
    err << manifest.dump() << "\n";
    return code;
}

}
