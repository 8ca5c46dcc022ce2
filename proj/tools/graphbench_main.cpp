// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "graphbench/agent.hpp"
#include "graphbench/benchmark.hpp"
#include "graphbench/evaluation.hpp"
#include "graphbench/generator.hpp"
#include "graphbench/llm_client.hpp"
#include "graphbench/maze.hpp"
#include "graphbench/presets.hpp"
#include "graphbench/prompts.hpp"
#include "graphbench/scripted.hpp"
#include "graphbench/transcript.hpp"

namespace fs = std::filesystem;
using namespace graphbench;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
}

json config_echo(const GeneratorConfig& c) {
    return {{"num_nodes", c.num_nodes},
            {"node_classes", c.node_classes},
            {"rel_classes", c.rel_classes},
            {"avg_props_per_entity", c.avg_props_per_entity},
            {"values_per_property", c.values_per_property},
            {"edge_density", c.edge_density},
            {"seed", c.seed}};
}

// ---------------------------------------------------------------- generate-graph

struct GraphOptions {
    std::string preset;
    GeneratorConfig config;
    std::string out;
    std::string schema_out;
    bool print_text = false;
    // set by the parser so explicit flags can override a preset
    CLI::Option* nodes_opt = nullptr;
    CLI::Option* node_classes_opt = nullptr;
    CLI::Option* rel_classes_opt = nullptr;
    CLI::Option* props_opt = nullptr;
    CLI::Option* values_opt = nullptr;
    CLI::Option* density_opt = nullptr;
};

GeneratorConfig resolve_graph_config(const GraphOptions& o) {
    if (o.preset.empty())
        return o.config;
    auto preset = preset_config(o.preset);
    if (!preset)
        throw std::runtime_error("unknown preset '" + o.preset + "'");
    GeneratorConfig config = *preset;
    config.seed = o.config.seed;
    if (o.nodes_opt && o.nodes_opt->count())
        config.num_nodes = o.config.num_nodes;
    if (o.node_classes_opt && o.node_classes_opt->count())
        config.node_classes = o.config.node_classes;
    if (o.rel_classes_opt && o.rel_classes_opt->count())
        config.rel_classes = o.config.rel_classes;
    if (o.props_opt && o.props_opt->count())
        config.avg_props_per_entity = o.config.avg_props_per_entity;
    if (o.values_opt && o.values_opt->count())
        config.values_per_property = o.config.values_per_property;
    if (o.density_opt && o.density_opt->count())
        config.edge_density = o.config.edge_density;
    return config;
}

int cmd_generate_graph(const GraphOptions& o) {
    auto config = resolve_graph_config(o);
    auto generated = generate_graph(config);
    if (!o.out.empty()) {
        json payload = {{"config", config_echo(config)},
                        {"blueprint", generated.blueprint.to_json()},
                        {"graph", generated.graph.to_json()}};
        write_file(o.out, payload.dump(2) + "\n");
    }
    if (!o.schema_out.empty())
        write_file(o.schema_out,
                   render_schema(generated.graph.schema_description()).to_text());
    if (o.print_text)
        std::cout << generated.graph.to_text();
    std::cout << "graph: " << generated.graph.node_count() << " nodes, "
              << generated.graph.relationship_count() << " relationships, seed "
              << config.seed << "\n";
    return 0;
}

// ---------------------------------------------------------------- generate-maze

struct MazeOptions {
    MazeConfig config;
    int size = 0;  // square shorthand
    std::string render = "plain";
    std::string out;
};

int cmd_generate_maze(const MazeOptions& o) {
    MazeConfig config = o.config;
    if (o.size > 0) {
        config.width = o.size;
        config.height = o.size;
    }
    auto maze = generate_maze(config);
    if (!o.out.empty())
        write_file(o.out, maze.to_json().dump(2) + "\n");
    if (o.render == "plain")
        std::cout << maze.render_ascii(MazeOverlay::plain);
    else if (o.render == "exploration")
        std::cout << maze.render_ascii(MazeOverlay::exploration);
    else if (o.render != "none")
        throw std::runtime_error("unknown render mode '" + o.render + "'");
    std::cout << "maze: " << config.width << "x" << config.height << ", start "
              << maze.start_key() << ", goal " << maze.goal_key() << ", carved path "
              << maze.carved_path().size() << " cells, seed " << config.seed << "\n";
    return 0;
}

// ---------------------------------------------------------------- oracle-check

struct OracleOptions {
    std::size_t nodes = 30;
    int graphs = 100;
    std::uint64_t seed = 1;
    int hop_bound = 3;
};

int cmd_oracle_check(const OracleOptions& o) {
    std::map<std::string, int> compared;
    int mismatches = 0;
    for (int g = 0; g < o.graphs; ++g) {
        const std::uint64_t seed = o.seed + g;
        GeneratorConfig config;
        config.num_nodes = std::min<std::size_t>(o.nodes, 8 + seed % 23);
        config.node_classes = 2 + seed % 3;
        config.rel_classes = 1 + seed % 3;
        config.avg_props_per_entity = 2;
        config.values_per_property = 3;
        config.edge_density = 0.06 + 0.03 * (seed % 4);
        config.seed = seed;
        auto generated = generate_graph(config);
        auto schema = generated.graph.schema_description();
        int index = 0;
        for (auto t : kAllTemplates) {
            Rng rng(seed * 977 + index++);
            QueryInstance q;
            try {
                q = instantiate(t, generated.graph, schema, rng, o.hop_bound);
            } catch (const std::runtime_error&) {
                continue;
            }
            auto fast = gold_answer(q, generated.graph);
            auto brute = brute_force_gold(q, generated.graph);
            ++compared[std::string(template_name(t))];
            if (!(fast == brute)) {
                ++mismatches;
                std::cout << "MISMATCH " << template_name(t) << " graph seed " << seed
                          << "\n  question: " << q.question_text
                          << "\n  gold:  " << fast.to_json().dump()
                          << "\n  brute: " << brute.to_json().dump() << "\n";
            }
        }
    }
    int total = 0;
    for (auto t : kAllTemplates) {
        auto name = std::string(template_name(t));
        std::cout << name << ": " << compared[name] << " compared\n";
        total += compared[name];
    }
    std::cout << (mismatches == 0 ? "OK" : "FAILED") << ": " << total
              << " instances compared across " << o.graphs << " graphs, " << mismatches
              << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- run-bench

struct BackendOptions {
    std::string backend = "scripted";  // scripted | llm
    std::string base_url = "http://127.0.0.1:8000";
    std::string chat_path = "/v1/chat/completions";
    std::string api_key;
    std::string model = "gpt-4o";
    double temperature = 0.0;
    int timeout_seconds = 300;
};

LlmConfig llm_config_from(const BackendOptions& o) {
    LlmConfig config;
    config.base_url = o.base_url;
    config.chat_path = o.chat_path;
    config.api_key = o.api_key;
    config.model = o.model;
    config.temperature = o.temperature;
    config.timeout_seconds = o.timeout_seconds;
    return config;
}

struct BenchOptions {
    std::string preset = "paper-100";
    int runs = 10;
    std::uint64_t seed = 1;
    bool no_tools = false;
    int max_iterations = 30;
    int hop_bound = 3;
    int workers = 4;
    std::string out_dir = "bench-out";
    std::string system_time = "2025-01-01T00:00:00Z";
    BackendOptions backend;
};

struct PreparedRun {
    GeneratedGraph generated;
    SchemaDescription schema;
    ToolRegistry registry;
    std::string tool_prompt;
    std::string flat_prompt;
    std::uint64_t graph_seed = 0;
    std::vector<QueryInstance> instances;  // one per template
    std::vector<GoldAnswer> golds;
};

// Regenerates with derived seeds until every template instantiates, so a
// sparse draw cannot sink the whole run.
std::unique_ptr<PreparedRun> prepare_run(const GeneratorConfig& base,
                                         std::uint64_t run_seed, int hop_bound,
                                         const std::string& system_time) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        GeneratorConfig config = base;
        config.seed = run_seed + 1000003ULL * static_cast<std::uint64_t>(attempt);
        auto prepared = std::make_unique<PreparedRun>();
        prepared->generated = generate_graph(config);
        prepared->graph_seed = config.seed;
        prepared->schema = prepared->generated.graph.schema_description();
        bool complete = true;
        int index = 0;
        for (auto t : kAllTemplates) {
            Rng rng(config.seed * 7919 + index++);
            try {
                prepared->instances.push_back(
                    instantiate(t, prepared->generated.graph, prepared->schema, rng,
                                hop_bound));
            } catch (const std::runtime_error&) {
                complete = false;
                break;
            }
            prepared->golds.push_back(
                gold_answer(prepared->instances.back(), prepared->generated.graph));
        }
        if (!complete)
            continue;
        prepared->registry = kg_registry(prepared->generated.graph, prepared->schema);
        prepared->tool_prompt = build_prompt_with_tools(
            render_schema(prepared->schema).to_text(), system_time);
        prepared->flat_prompt =
            build_prompt_no_tools(prepared->generated.graph.to_text(), system_time);
        return prepared;
    }
    throw std::runtime_error("no fully instantiable graph after 50 attempts (seed " +
                             std::to_string(run_seed) + ")");
}

struct EpisodeResult {
    ScoredQuestion row;
    std::string status;
    std::string extraction;
    int run = 0;
    std::uint64_t graph_seed = 0;
};

void write_scores_and_reports(const fs::path& out_dir,
                              const std::vector<EpisodeResult>& results) {
    std::string lines;
    std::vector<ScoredQuestion> rows;
    for (const auto& r : results) {
        rows.push_back(r.row);
        json line = {{"model", r.row.model},
                     {"setting", r.row.setting},
                     {"template", r.row.template_name},
                     {"category", r.row.category},
                     {"run", r.run},
                     {"graph_seed", r.graph_seed},
                     {"status", r.status},
                     {"extraction", r.extraction},
                     {"correct", r.row.score.correct},
                     {"precision", r.row.score.precision},
                     {"recall", r.row.score.recall},
                     {"f1", r.row.score.f1},
                     {"false_positives", r.row.score.false_positives},
                     {"tool_calls", r.row.score.tool_calls},
                     {"inference_time", r.row.score.inference_time}};
        lines += line.dump() + "\n";
    }
    write_file(out_dir / "scores.jsonl", lines);
    auto report = aggregate(rows);
    write_file(out_dir / "report.csv", report.to_csv());
    write_file(out_dir / "categories.csv", report.category_csv());
    write_file(out_dir / "report.json", report.to_json().dump(2) + "\n");
    for (const auto& row : report.rows)
        std::cout << row.model << "/" << row.setting << ": " << row.correct << "/"
                  << row.total << " correct, accuracy "
                  << format_percent(row.accuracy) << ", mean F1 " << row.f1 << "\n";
}

int cmd_run_bench(const BenchOptions& o) {
    auto base = preset_config(o.preset);
    if (!base)
        throw std::runtime_error("unknown preset '" + o.preset + "'");
    const bool with_tools = !o.no_tools;
    const bool scripted = o.backend.backend == "scripted";
    if (!scripted && o.backend.backend != "llm")
        throw std::runtime_error("unknown backend '" + o.backend.backend + "'");
    if (scripted && !with_tools)
        throw std::runtime_error("the scripted solver requires tools; drop --no-tools");

    std::vector<std::unique_ptr<PreparedRun>> runs;
    for (int r = 0; r < o.runs; ++r)
        runs.push_back(prepare_run(*base, o.seed + 10007ULL * static_cast<std::uint64_t>(r),
                                   o.hop_bound, o.system_time));

    struct Episode {
        int run;
        int template_index;
    };
    std::vector<Episode> episodes;
    for (int r = 0; r < o.runs; ++r)
        for (int i = 0; i < static_cast<int>(kAllTemplates.size()); ++i)
            episodes.push_back({r, i});

    const std::string model_label = scripted ? "scripted" : o.backend.model;
    const std::string setting_label = with_tools ? "tools" : "full-context";
    const fs::path out_dir(o.out_dir);
    fs::create_directories(out_dir / "transcripts");

    std::vector<EpisodeResult> results(episodes.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex failures_mutex;
    std::vector<std::string> failures;

    auto work = [&]() {
        for (std::size_t i; (i = cursor.fetch_add(1)) < episodes.size();) {
            const auto& e = episodes[i];
            auto& run = *runs[e.run];
            const auto t = kAllTemplates[e.template_index];
            const auto& q = run.instances[e.template_index];
            const auto& gold = run.golds[e.template_index];
            try {
                std::unique_ptr<AgentBackend> backend;
                if (scripted)
                    backend = std::make_unique<ScriptedSolver>(q, run.schema);
                else
                    backend = std::make_unique<LlmBackend>(llm_config_from(o.backend));
                RunConfig run_config;
                run_config.with_tools = with_tools;
                run_config.max_iterations = o.max_iterations;
                run_config.system_time = o.system_time;
                EpisodeInput input{with_tools ? run.tool_prompt : run.flat_prompt,
                                   q.question_text};
                auto transcript = run_episode(
                    *backend, with_tools ? &run.registry : nullptr, input, run_config);

                char name[64];
                std::snprintf(name, sizeof(name), "run%02d-%s.jsonl", e.run,
                              std::string(template_name(t)).c_str());
                transcript.save_jsonl(out_dir / "transcripts" / name);

                ExtractedAnswer extracted;
                if (transcript.status == "completed")
                    extracted = extract_answer(transcript.final_answer, answer_fields(t));
                auto question_score = score(extracted, gold);
                question_score.tool_calls = transcript.tool_call_count();
                question_score.inference_time = transcript.model_seconds();

                auto& result = results[i];
                result.row = {model_label, setting_label,
                              std::string(template_name(t)),
                              std::string(category_name(t)), question_score};
                result.status = transcript.status;
                result.extraction = extracted.method;
                result.run = e.run;
                result.graph_seed = run.graph_seed;
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lock(failures_mutex);
                failures.push_back(std::string(template_name(t)) + " run " +
                                   std::to_string(e.run) + ": " + ex.what());
            }
        }
    };

    const int workers = std::max(1, std::min<int>(o.workers,
                                                  static_cast<int>(episodes.size())));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& thread : pool)
        thread.join();

    if (!failures.empty()) {
        for (const auto& f : failures)
            std::cerr << "episode failed: " << f << "\n";
        return 1;
    }
    write_scores_and_reports(out_dir, results);
    std::map<std::string, int> statuses;
    for (const auto& r : results)
        ++statuses[r.status];
    for (const auto& [status, count] : statuses)
        if (status != "completed")
            std::cout << "  " << status << ": " << count << " episodes\n";
    return 0;
}

// ---------------------------------------------------------------- run-maze

struct RunMazeOptions {
    int mazes = 10;
    MazeConfig config;
    int size = 0;
    bool no_tools = false;
    int max_iterations = 120;
    std::string out_dir = "maze-out";
    BackendOptions backend;
};

int cmd_run_maze(const RunMazeOptions& o) {
    const bool with_tools = !o.no_tools;
    const bool scripted = o.backend.backend == "scripted";
    if (!scripted && o.backend.backend != "llm")
        throw std::runtime_error("unknown backend '" + o.backend.backend + "'");
    if (scripted && !with_tools)
        throw std::runtime_error("the scripted maze agent requires tools; drop --no-tools");

    MazeConfig base = o.config;
    if (o.size > 0) {
        base.width = o.size;
        base.height = o.size;
    }
    const fs::path out_dir(o.out_dir);
    fs::create_directories(out_dir / "transcripts");
    const std::string model_label = scripted ? "scripted" : o.backend.model;
    const std::string setting_label = with_tools ? "tools" : "full-context";

    std::vector<EpisodeResult> results;
    int valid = 0;
    for (int m = 0; m < o.mazes; ++m) {
        MazeConfig config = base;
        config.seed = base.seed + m;
        auto maze = generate_maze(config);
        auto registry = maze_registry(maze);

        std::unique_ptr<AgentBackend> backend;
        if (scripted)
            backend = std::make_unique<MazeScriptedAgent>(maze.start_key(),
                                                          maze.goal_key());
        else
            backend = std::make_unique<LlmBackend>(llm_config_from(o.backend));
        RunConfig run_config;
        run_config.with_tools = with_tools;
        run_config.max_iterations = o.max_iterations;
        EpisodeInput input{with_tools ? build_maze_prompt_with_tools(maze)
                                      : build_maze_prompt_no_tools(maze),
                           ""};
        auto transcript = run_episode(*backend, with_tools ? &registry : nullptr,
                                      input, run_config);
        char name[32];
        std::snprintf(name, sizeof(name), "maze%02d.jsonl", m);
        transcript.save_jsonl(out_dir / "transcripts" / name);

        ExtractedAnswer extracted;
        if (transcript.status == "completed")
            extracted = extract_answer(transcript.final_answer, {"path"});
        MazePath path;
        if (!extracted.records.empty() && extracted.records[0].contains("path") &&
            extracted.records[0]["path"].is_array())
            for (const auto& cell : extracted.records[0]["path"])
                path.push_back(cell.is_string() ? cell.get<std::string>()
                                                : cell.dump());
        auto verdict = maze.validate_path(path);
        valid += verdict.valid;

        EpisodeResult result;
        result.row.model = model_label;
        result.row.setting = setting_label;
        result.row.template_name = "maze";
        result.row.category = "maze";
        result.row.score.correct = verdict.valid;
        result.row.score.precision = result.row.score.recall =
            result.row.score.f1 = verdict.valid ? 1.0 : 0.0;
        result.row.score.tool_calls = transcript.tool_call_count();
        result.row.score.inference_time = transcript.model_seconds();
        result.status = transcript.status;
        result.extraction = extracted.method;
        result.run = m;
        result.graph_seed = config.seed;
        results.push_back(std::move(result));
        if (!verdict.valid)
            std::cout << "maze " << m << " invalid: " << verdict.reason << "\n";
    }
    write_scores_and_reports(out_dir, results);
    std::cout << "valid paths: " << valid << "/" << o.mazes << "\n";
    return 0;
}

// ---------------------------------------------------------------- report

struct ReportOptions {
    std::string in;
    std::string layout = "table1";
    std::string out;
    std::string json_out;
};

int cmd_report(const ReportOptions& o) {
    fs::path path(o.in);
    if (fs::is_directory(path))
        path /= "scores.jsonl";
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::vector<ScoredQuestion> rows;
    for (std::string line; std::getline(in, line);) {
        if (line.empty())
            continue;
        auto j = json::parse(line);
        ScoredQuestion s;
        s.model = j.at("model").get<std::string>();
        s.setting = j.at("setting").get<std::string>();
        s.template_name = j.value("template", "");
        s.category = j.at("category").get<std::string>();
        s.score.correct = j.at("correct").get<bool>();
        s.score.precision = j.at("precision").get<double>();
        s.score.recall = j.at("recall").get<double>();
        s.score.f1 = j.at("f1").get<double>();
        s.score.false_positives = j.at("false_positives").get<int>();
        s.score.tool_calls = j.at("tool_calls").get<int>();
        s.score.inference_time = j.at("inference_time").get<double>();
        rows.push_back(std::move(s));
    }
    auto report = aggregate(rows);
    std::string text;
    if (o.layout == "table1")
        text = report.to_csv();
    else if (o.layout == "table2")
        text = report.category_csv();
    else
        throw std::runtime_error("unknown layout '" + o.layout + "'");
    if (o.out.empty())
        std::cout << text;
    else
        write_file(o.out, text);
    if (!o.json_out.empty())
        write_file(o.json_out, report.to_json().dump(2) + "\n");
    return 0;
}

void add_backend_flags(CLI::App* cmd, BackendOptions& o) {
    cmd->add_option("--backend", o.backend, "Agent backend: scripted or llm")
        ->capture_default_str();
    cmd->add_option("--base-url", o.base_url, "Chat-completions endpoint base URL")
        ->envname("GRAPHBENCH_BASE_URL");
    cmd->add_option("--chat-path", o.chat_path, "Chat-completions request path")
        ->capture_default_str();
    cmd->add_option("--api-key", o.api_key, "Bearer token for the endpoint")
        ->envname("GRAPHBENCH_API_KEY");
    cmd->add_option("--model", o.model, "Model name sent with each request")
        ->capture_default_str();
    cmd->add_option("--temperature", o.temperature, "Sampling temperature")
        ->capture_default_str();
    cmd->add_option("--timeout", o.timeout_seconds, "HTTP timeout in seconds")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphbench: synthetic property-graph and maze benchmark for "
                 "tool-using agents"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML config file; command-line flags override it");
    int rc = 0;

    GraphOptions graph_opts;
    auto* gen = app.add_subcommand("generate-graph",
                                   "Generate a random property graph and schema");
    gen->add_option("--preset", graph_opts.preset,
                    "Named setup: paper-100, paper-150, paper-200, paper-500");
    graph_opts.nodes_opt =
        gen->add_option("--nodes", graph_opts.config.num_nodes, "Node count")
            ->capture_default_str();
    graph_opts.node_classes_opt =
        gen->add_option("--node-classes", graph_opts.config.node_classes,
                        "Number of node classes")
            ->capture_default_str();
    graph_opts.rel_classes_opt =
        gen->add_option("--rel-classes", graph_opts.config.rel_classes,
                        "Number of relationship classes")
            ->capture_default_str();
    graph_opts.props_opt =
        gen->add_option("--props", graph_opts.config.avg_props_per_entity,
                        "Average properties per entity")
            ->capture_default_str();
    graph_opts.values_opt =
        gen->add_option("--values", graph_opts.config.values_per_property,
                        "Value pool size per property")
            ->capture_default_str();
    graph_opts.density_opt =
        gen->add_option("--density", graph_opts.config.edge_density, "Edge density")
            ->capture_default_str();
    gen->add_option("--seed", graph_opts.config.seed, "Random seed")
        ->capture_default_str();
    gen->add_option("--out", graph_opts.out, "Write graph + blueprint JSON here");
    gen->add_option("--schema-out", graph_opts.schema_out,
                    "Write the rendered schema table here");
    gen->add_flag("--text", graph_opts.print_text,
                  "Print the full serialized graph to stdout");
    gen->callback([&] { rc = cmd_generate_graph(graph_opts); });

    MazeOptions maze_opts;
    auto* gmaze = app.add_subcommand("generate-maze", "Generate a maze and render it");
    gmaze->add_option("--size", maze_opts.size, "Square maze side length");
    gmaze->add_option("--width", maze_opts.config.width, "Maze width")
        ->capture_default_str();
    gmaze->add_option("--height", maze_opts.config.height, "Maze height")
        ->capture_default_str();
    gmaze->add_option("--wall-ratio", maze_opts.config.wall_ratio,
                      "Fraction of non-path cells turned into walls")
        ->capture_default_str();
    gmaze->add_option("--min-path", maze_opts.config.min_path_len,
                      "Minimum carved path length in steps")
        ->capture_default_str();
    gmaze->add_option("--seed", maze_opts.config.seed, "Random seed")
        ->capture_default_str();
    gmaze->add_option("--render", maze_opts.render,
                      "ASCII overlay: plain, exploration, or none")
        ->capture_default_str();
    gmaze->add_option("--out", maze_opts.out, "Write maze JSON here");
    gmaze->callback([&] { rc = cmd_generate_maze(maze_opts); });

    OracleOptions oracle_opts;
    auto* oracle = app.add_subcommand(
        "oracle-check", "Compare the gold-answer engine against brute-force "
                        "enumeration on many small graphs");
    oracle->add_option("--nodes", oracle_opts.nodes, "Maximum nodes per graph")
        ->capture_default_str();
    oracle->add_option("--graphs", oracle_opts.graphs, "Number of graphs")
        ->capture_default_str();
    oracle->add_option("--seed", oracle_opts.seed, "Base seed")
        ->capture_default_str();
    oracle->add_option("--hop-bound", oracle_opts.hop_bound,
                       "Hop bound for path templates")
        ->capture_default_str();
    oracle->callback([&] { rc = cmd_oracle_check(oracle_opts); });

    BenchOptions bench_opts;
    auto* bench = app.add_subcommand(
        "run-bench", "Run the 12-template question benchmark and score it");
    bench->add_option("--preset", bench_opts.preset, "Graph preset")
        ->capture_default_str();
    bench->add_option("--runs", bench_opts.runs, "Independent graphs to run")
        ->capture_default_str();
    bench->add_option("--seed", bench_opts.seed, "Base seed")
        ->capture_default_str();
    bench->add_flag("--no-tools", bench_opts.no_tools,
                    "Serialize the whole graph into the prompt instead of tools");
    bench->add_option("--max-iterations", bench_opts.max_iterations,
                      "Model-turn cap per episode")
        ->capture_default_str();
    bench->add_option("--hop-bound", bench_opts.hop_bound,
                      "Hop bound for path templates")
        ->capture_default_str();
    bench->add_option("--workers", bench_opts.workers, "Parallel episodes")
        ->capture_default_str();
    bench->add_option("--out-dir", bench_opts.out_dir,
                      "Transcripts, scores, and reports land here")
        ->capture_default_str();
    bench->add_option("--system-time", bench_opts.system_time,
                      "Timestamp injected into prompts")
        ->capture_default_str();
    add_backend_flags(bench, bench_opts.backend);
    bench->callback([&] { rc = cmd_run_bench(bench_opts); });

    RunMazeOptions run_maze_opts;
    auto* rmaze = app.add_subcommand("run-maze",
                                     "Run maze-escape episodes and validate paths");
    rmaze->add_option("--mazes", run_maze_opts.mazes, "Number of mazes")
        ->capture_default_str();
    rmaze->add_option("--size", run_maze_opts.size, "Square maze side length");
    rmaze->add_option("--width", run_maze_opts.config.width, "Maze width")
        ->capture_default_str();
    rmaze->add_option("--height", run_maze_opts.config.height, "Maze height")
        ->capture_default_str();
    rmaze->add_option("--wall-ratio", run_maze_opts.config.wall_ratio, "Wall ratio")
        ->capture_default_str();
    rmaze->add_option("--min-path", run_maze_opts.config.min_path_len,
                      "Minimum carved path length in steps")
        ->capture_default_str();
    rmaze->add_option("--seed", run_maze_opts.config.seed, "Base seed")
        ->capture_default_str();
    rmaze->add_flag("--no-tools", run_maze_opts.no_tools,
                    "Embed the rendered maze instead of tools");
    rmaze->add_option("--max-iterations", run_maze_opts.max_iterations,
                      "Model-turn cap per episode")
        ->capture_default_str();
    rmaze->add_option("--out-dir", run_maze_opts.out_dir, "Output directory")
        ->capture_default_str();
    add_backend_flags(rmaze, run_maze_opts.backend);
    rmaze->callback([&] { rc = cmd_run_maze(run_maze_opts); });

    ReportOptions report_opts;
    auto* report = app.add_subcommand("report",
                                      "Aggregate saved scores into CSV/JSON tables");
    report->add_option("--in", report_opts.in,
                       "scores.jsonl file or a run output directory")
        ->required();
    report->add_option("--layout", report_opts.layout,
                       "table1 (summary rows) or table2 (category matrix)")
        ->capture_default_str();
    report->add_option("--out", report_opts.out, "Write CSV here (default stdout)");
    report->add_option("--json", report_opts.json_out, "Also write the JSON report");
    report->callback([&] { rc = cmd_report(report_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
