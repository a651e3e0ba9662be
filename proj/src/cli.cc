#include <kconpath/cli.hh>

#include <kconpath/connectivity.hh>
#include <kconpath/generators.hh>
#include <kconpath/graph_io.hh>
#include <kconpath/oracle.hh>
#include <kconpath/removable_path.hh>
#include <kconpath/serialize.hh>

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace kconpath::cli
{
    namespace
    {
        /// Runs body(i) for every i in [0, count) on up to `threads` workers.
        auto parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> & body) -> void
        {
            threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
            if (threads <= 1) {
                for (std::size_t i = 0; i < count; ++i)
                    body(i);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> workers;
            for (unsigned t = 0; t < threads; ++t)
                workers.emplace_back([&] {
                    for (std::size_t i; (i = next++) < count;)
                        body(i);
                });
        }

        auto slurp(const std::string & source, std::istream & in) -> std::string
        {
            if (source == "-") {
                std::ostringstream buf;
                buf << in.rdbuf();
                return buf.str();
            }
            std::ifstream file(source);
            if (! file)
                throw ParseError("cannot open " + source);
            std::ostringstream buf;
            buf << file.rdbuf();
            return buf.str();
        }

        auto first_record(const std::string & text) -> std::string
        {
            std::istringstream lines(text);
            std::string line;
            while (std::getline(lines, line))
                if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] != '#')
                    return line;
            throw ParseError("no graph in input");
        }

        auto parse_graph(const std::string & text, const std::string & format) -> Graph
        {
            auto fmt = format;
            if (fmt == "auto") {
                auto line = first_record(text);
                auto digits = line.find_first_not_of(" \t\r0123456789");
                fmt = digits == std::string::npos ? "edgelist" : "g6";
            }
            if (fmt == "edgelist")
                return read_edge_list(std::string_view(text));
            return read_graph6(first_record(text));
        }

        auto emit_graph(std::ostream & out, const Graph & g, const std::string & format) -> void
        {
            if (format == "edgelist")
                out << write_edge_list(g);
            else
                out << write_graph6(g) << '\n';
        }

        auto ceil_half(int m) -> int { return (m + 1) / 2; }

        struct Common
        {
            std::string input = "-";
            std::string format = "auto";
            int k = 1;
            int m = 1;
            std::size_t cap = default_cut_cap;
            bool guard_override = false;
        };

        auto cmd_find(const Common & c, std::istream & in, std::ostream & out) -> int
        {
            auto g = parse_graph(slurp(c.input, in), c.format);
            auto cert = find_removable_path(g, c.k, c.m, SearchOptions{c.cap});
            out << certificate_to_json(cert, g).dump() << '\n';
            return success;
        }

        auto cmd_verify(const Common & c, const std::string & certificate_source, std::optional<int> k_override,
            std::istream & in, std::ostream & out) -> int
        {
            auto g = parse_graph(slurp(c.input, in), c.format);
            Json doc;
            try {
                doc = Json::parse(slurp(certificate_source, in));
            }
            catch (const Json::exception & e) {
                throw ParseError(std::string("certificate: ") + e.what());
            }
            auto cert = certificate_from_json(doc);
            int k = k_override.value_or(cert.k);
            auto result = verify_certificate(g, k, cert);
            out << Json{{"schema", schema_tag}, {"kind", "verdict"}, {"ok", result.ok}, {"failure", result.failure},
                            {"detail", result.detail}}
                       .dump()
                << '\n';
            return result.ok ? success : verification_failed;
        }

        auto cmd_oracle(const Common & c, std::size_t limit, std::istream & in, std::ostream & out, std::ostream & err) -> int
        {
            auto text = slurp(c.input, in);
            std::vector<std::string> lines;
            {
                std::istringstream stream(text);
                std::string line;
                while (std::getline(stream, line))
                    if (line.find_first_not_of(" \t\r") != std::string::npos)
                        lines.push_back(line);
            }

            struct Outcome
            {
                std::optional<Json> report;
                std::string error;
                bool hypothesis = false, witnessed = false, agrees = false;
            };
            std::vector<Outcome> outcomes(lines.size());
            OracleGuard guard;
            guard.override = c.guard_override;

            parallel_for(lines.size(), worker_count(), [&](std::size_t i) {
                auto & o = outcomes[i];
                try {
                    auto g = read_graph6(lines[i]);
                    auto report = brute_force_paths(g, c.k, c.m, unlimited, guard);
                    std::optional<bool> agreement;
                    if (report.hypothesis_ok) {
                        o.hypothesis = true;
                        o.witnessed = report.witness_count > 0;
                        try {
                            auto cert = find_removable_path(g, c.k, c.m, SearchOptions{c.cap});
                            auto p = cert.path.vertices;
                            if (p.size() > 1 && p.front() > p.back())
                                std::reverse(p.begin(), p.end());
                            agreement = std::find(report.witness_paths.begin(), report.witness_paths.end(), VertexPath{p})
                                != report.witness_paths.end();
                        }
                        catch (const std::exception & e) {
                            report.violated_claims.push_back(std::string("algorithm failed: ") + e.what());
                            agreement = false;
                        }
                        if (! o.witnessed)
                            report.violated_claims.push_back("no removable path although the hypotheses hold");
                        if (agreement && ! *agreement && report.violated_claims.empty())
                            report.violated_claims.push_back("certificate path is not among the oracle witnesses");
                        o.agrees = agreement.value_or(false);
                    }
                    if (report.witness_paths.size() > limit)
                        report.witness_paths.resize(limit);
                    auto j = report_to_json(report, c.k, c.m);
                    j["algorithm_agrees"] = agreement ? Json(*agreement) : Json(nullptr);
                    o.report = std::move(j);
                }
                catch (const std::exception & e) {
                    o.error = e.what();
                }
            });

            int errors = 0, hypothesis = 0, witnessed = 0, agreed = 0, violations = 0;
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                auto & o = outcomes[i];
                if (! o.report) {
                    ++errors;
                    err << "line " << i + 1 << ": " << o.error << '\n';
                    continue;
                }
                out << o.report->dump() << '\n';
                hypothesis += o.hypothesis;
                witnessed += o.witnessed;
                agreed += o.agrees;
                violations += ! o.report->at("violated_claims").empty();
            }
            out << Json{{"schema", schema_tag},
                       {"kind", "oracle_summary"},
                       {"instances", outcomes.size() - errors},
                       {"errors", errors},
                       {"hypothesis_met", hypothesis},
                       {"witnesses_found", witnessed},
                       {"algorithm_agreement", agreed},
                       {"violations", violations}}
                       .dump()
                << '\n';
            return violations ? invariant_violation : success;
        }

        auto hunt_to_json(const HuntConfig & config, const HuntReport & report) -> Json
        {
            Json failures = Json::array();
            for (auto & f : report.failures)
                failures.push_back({{"graph", f.graph}, {"min_degree", f.min_degree}, {"kappa", f.kappa}});
            Json doc{{"schema", schema_tag},
                {"kind", "hunt_report"},
                {"target", config.target},
                {"k", config.k}};
            if (config.target == "degree_bound")
                doc["m"] = config.m;
            else {
                doc["tree"] = report.tree;
                doc["t"] = report.t;
            }
            doc["delta"] = report.delta;
            doc["n_max"] = config.n_max;
            doc["seed"] = config.seed;
            doc["tested"] = report.tested;
            doc["skipped"] = report.skipped;
            doc["failures"] = failures;
            doc["verdict"] = report.failures.empty() ? "no counterexample in budget" : "counterexamples found";
            doc["elapsed_ms"] = report.elapsed_ms;
            return doc;
        }

        auto hunt_config_from_json(const Json & doc, HuntConfig & config) -> void
        {
            try {
                config.target = doc.value("target", config.target);
                config.k = doc.value("k", config.k);
                config.m = doc.value("m", config.m);
                if (doc.contains("delta"))
                    config.delta = doc.at("delta").get<int>();
                config.n_max = doc.value("n_max", config.n_max);
                config.budget = doc.value("budget", config.budget);
                config.seed = doc.value("seed", config.seed);
                if (doc.contains("tree")) {
                    auto & tree = doc.at("tree");
                    if (tree.is_string())
                        config.tree = tree.get<std::string>();
                    else {
                        auto spec = genspec_from_json(tree);
                        if (spec.kind != "random_tree")
                            throw ParseError("hunt config: tree stanza must be a random_tree generator or a graph6 string");
                        auto built = generate(spec);
                        config.tree = write_graph6(*built);
                    }
                }
            }
            catch (const Json::exception & e) {
                throw ParseError(std::string("hunt config: ") + e.what());
            }
        }

        auto gen_spec_from_flags(const std::string & kind, const std::map<std::string, long long> & flags, std::uint64_t seed) -> GenSpec
        {
            GenSpec spec{kind, {}, seed};
            for (auto & [key, value] : flags)
                if (value >= 0)
                    spec.parameters[key] = value;
            return spec;
        }
    }

    auto worker_count() -> unsigned
    {
        if (auto env = std::getenv("KCONPATH_THREADS")) {
            int n = std::atoi(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto run_hunt(const HuntConfig & config, unsigned threads, std::ostream & warnings) -> HuntReport
    {
        auto start = std::chrono::steady_clock::now();
        HuntReport report;
        OracleGuard guard;
        guard.override = config.guard_override;

        if (config.k < 1 || config.m < 1)
            throw HypothesisError("k and m must be positive");
        if (config.budget < 0)
            throw HypothesisError("budget must be non-negative");

        std::optional<Graph> tree;
        if (config.target == "degree_bound") {
            report.delta = config.delta.value_or(config.k + ceil_half(config.m));
            if (report.delta >= config.k + config.m)
                throw HypothesisError("delta must stay below k + m; at or above it a removable path always exists");
            if (report.delta < config.k + ceil_half(config.m))
                warnings << "warning: delta below k + ceil(m/2) is already known to fail on K_{delta,delta}\n";
        }
        else if (config.target == "tree_conjecture") {
            tree = config.tree ? read_graph6(*config.tree) : random_tree(config.tree_order, config.seed).tree;
            if (! is_connected(*tree) || tree->edge_count() + 1 != static_cast<std::size_t>(tree->order()))
                throw HypothesisError("pattern is not a tree");
            auto sides = bipartition(*tree);
            report.t = static_cast<int>(std::max(sides->x.size(), sides->y.size()));
            report.tree = write_graph6(*tree);
            report.delta = config.delta.value_or(config.k + report.t);
        }
        else
            throw HypothesisError("unknown hunt target '" + config.target + "'");

        if (report.delta < config.k)
            throw HypothesisError("delta must be at least k");
        if (config.n_max < 2 * report.delta)
            throw HypothesisError("n_max must be at least 2 * delta");
        if (! guard.override && config.n_max > guard.max_order)
            throw GuardExceeded("n_max exceeds the oracle guard of " + std::to_string(guard.max_order) + " vertices");

        struct Outcome
        {
            bool produced = false;
            std::optional<HuntFailure> failure;
        };
        std::vector<Outcome> outcomes(config.budget);

        parallel_for(outcomes.size(), threads, [&](std::size_t i) {
            std::mt19937_64 rng(config.seed + i);
            auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
            int nx = pick(report.delta, config.n_max - report.delta);
            int ny = pick(report.delta, config.n_max - nx);
            double p = 0.15 + 0.85 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
            auto g = random_k_connected_bipartite(nx, ny, config.k, report.delta, rng(), p, 20);
            if (! g)
                return;
            outcomes[i].produced = true;

            auto exists = [&](const Graph & host) {
                if (tree)
                    return tree_removal_exists(host, config.k, *tree, guard);
                return brute_force_paths(host, config.k, config.m, 1, guard).witness_count > 0;
            };
            if (exists(*g))
                return;
            // both checks are exhaustive; a second pass with the hypotheses
            // recomputed guards the report against a sampler slip
            auto kappa = vertex_connectivity(*g).kappa;
            if (min_degree(*g) >= report.delta && kappa >= config.k && bipartition(*g) && ! exists(*g))
                outcomes[i].failure = HuntFailure{write_graph6(*g), min_degree(*g), kappa};
        });

        for (auto & o : outcomes) {
            if (! o.produced) {
                ++report.skipped;
                continue;
            }
            ++report.tested;
            if (o.failure)
                report.failures.push_back(*o.failure);
        }
        report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Connectivity-keeping paths in k-connected bipartite graphs", "kconpath"};
        app.require_subcommand(1);

        Common common;
        auto add_input = [&](CLI::App * sub) {
            sub->add_option("--input", common.input, "graph file, or - for stdin")->capture_default_str();
            sub->add_option("--format", common.format, "input format")
                ->check(CLI::IsMember({"auto", "g6", "edgelist"}))
                ->capture_default_str();
        };
        auto add_km = [&](CLI::App * sub, bool required) {
            auto k = sub->add_option("--k", common.k, "connectivity to keep");
            auto m = sub->add_option("--m", common.m, "path order");
            if (required) {
                k->required();
                m->required();
            }
        };

        auto find = app.add_subcommand("find", "find a path whose removal keeps k-connectivity");
        add_input(find);
        add_km(find, true);
        find->add_option("--cap", common.cap, "minimum-cut enumeration cap")->capture_default_str();

        std::string certificate_source;
        std::optional<int> k_override;
        auto verify = app.add_subcommand("verify", "check a certificate against a graph");
        add_input(verify);
        verify->add_option("--certificate", certificate_source, "certificate JSON file, or - for stdin")->required();
        verify->add_option("--k", k_override, "override the certificate's k");

        std::size_t limit = 50;
        auto oracle = app.add_subcommand("oracle", "exhaustive removable-path sweep over a graph6 corpus");
        oracle->add_option("--input", common.input, "graph6 corpus, or - for stdin")->capture_default_str();
        add_km(oracle, true);
        oracle->add_option("--limit", limit, "witness paths listed per instance")->capture_default_str();
        oracle->add_option("--cap", common.cap, "minimum-cut enumeration cap")->capture_default_str();
        oracle->add_flag("--guard-override", common.guard_override, "allow graphs above the oracle size guard");

        HuntConfig hunt_config;
        std::string hunt_config_file;
        int delta = -1;
        std::string tree_g6;
        auto hunt = app.add_subcommand("hunt", "search for counterexamples below the proven degree bound");
        hunt->add_option("--config", hunt_config_file, "JSON hunt configuration; flags override it");
        hunt->add_option("--target", hunt_config.target)->check(CLI::IsMember({"degree_bound", "tree_conjecture"}));
        hunt->add_option("--k", hunt_config.k);
        hunt->add_option("--m", hunt_config.m);
        hunt->add_option("--delta", delta, "minimum degree of sampled instances");
        hunt->add_option("--tree", tree_g6, "pattern tree in graph6");
        hunt->add_option("--tree-n", hunt_config.tree_order, "order of a random pattern tree");
        hunt->add_option("--n-max", hunt_config.n_max);
        hunt->add_option("--budget", hunt_config.budget);
        hunt->add_option("--seed", hunt_config.seed);
        hunt->add_flag("--guard-override", hunt_config.guard_override);

        std::string kind, spec_text, out_format = "g6";
        std::map<std::string, long long> gen_flags{{"r", -1}, {"s", -1}, {"k", -1}, {"m", -1}, {"t", -1}, {"nx", -1},
            {"ny", -1}, {"dmin", -1}, {"n", -1}};
        std::uint64_t gen_seed = 0;
        int count = 1;
        auto gen = app.add_subcommand("gen", "emit generated instances");
        gen->add_option("--kind", kind)->check(
            CLI::IsMember({"complete_bipartite", "extremal_completion", "sharpness", "random_bipartite", "random_tree"}));
        gen->add_option("--spec", spec_text, "generator spec as JSON, or @file");
        for (auto & [key, value] : gen_flags)
            gen->add_option("--" + key, value);
        gen->add_option("--seed", gen_seed);
        gen->add_option("--count", count, "instances, seeds seed..seed+count-1")->capture_default_str();
        gen->add_option("--format", out_format)->check(CLI::IsMember({"g6", "edgelist"}))->capture_default_str();

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? success : io_failure;
        }

        try {
            if (*find)
                return cmd_find(common, in, out);
            if (*verify)
                return cmd_verify(common, certificate_source, k_override, in, out);
            if (*oracle)
                return cmd_oracle(common, limit, in, out, err);
            if (*hunt) {
                if (! hunt_config_file.empty()) {
                    auto user = hunt_config;
                    HuntConfig from_file;
                    hunt_config_from_json(Json::parse(slurp(hunt_config_file, in)), from_file);
                    // explicit flags win over the file
                    if (hunt->count("--target")) from_file.target = user.target;
                    if (hunt->count("--k")) from_file.k = user.k;
                    if (hunt->count("--m")) from_file.m = user.m;
                    if (hunt->count("--n-max")) from_file.n_max = user.n_max;
                    if (hunt->count("--budget")) from_file.budget = user.budget;
                    if (hunt->count("--seed")) from_file.seed = user.seed;
                    if (hunt->count("--tree-n")) from_file.tree_order = user.tree_order;
                    from_file.guard_override = user.guard_override;
                    hunt_config = from_file;
                }
                if (delta >= 0)
                    hunt_config.delta = delta;
                if (! tree_g6.empty())
                    hunt_config.tree = tree_g6;
                auto report = run_hunt(hunt_config, worker_count(), err);
                out << hunt_to_json(hunt_config, report).dump() << '\n';
                return success;
            }
            if (*gen) {
                GenSpec spec;
                if (! spec_text.empty())
                    spec = genspec_from_json(Json::parse(spec_text.front() == '@' ? slurp(spec_text.substr(1), in) : spec_text));
                else if (! kind.empty())
                    spec = gen_spec_from_flags(kind, gen_flags, gen_seed);
                else
                    throw GraphError("gen needs --kind or --spec");
                for (int i = 0; i < count; ++i) {
                    auto instance = spec;
                    instance.seed = spec.seed + static_cast<std::uint64_t>(i);
                    auto g = generate(instance);
                    if (! g) {
                        err << "generator gave up for seed " << instance.seed << '\n';
                        continue;
                    }
                    emit_graph(out, *g, out_format);
                }
                return success;
            }
        }
        catch (const HypothesisError & e) {
            err << "hypothesis failure: " << e.what() << '\n';
            return hypothesis_failure;
        }
        catch (const GuardExceeded & e) {
            err << "hypothesis failure: " << e.what() << '\n';
            return hypothesis_failure;
        }
        catch (const InvariantViolation & e) {
            err << "internal invariant violation: " << e.what() << '\n';
            return invariant_violation;
        }
        catch (const EnumerationExhausted & e) {
            err << "minimum-cut enumeration exhausted (raise --cap): " << e.what() << '\n';
            return invariant_violation;
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
            return io_failure;
        }
        catch (const Json::exception & e) {
            err << "parse error: " << e.what() << '\n';
            return io_failure;
        }
        catch (const GraphError & e) {
            err << "invalid input: " << e.what() << '\n';
            return io_failure;
        }
        catch (const std::logic_error & e) {
            err << "internal invariant violation: " << e.what() << '\n';
            return invariant_violation;
        }
        return success;
    }
}
