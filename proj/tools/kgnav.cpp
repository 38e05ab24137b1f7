// kgnav: ask questions against a scholarly knowledge graph, inspect one-hop
// relations, run the evaluation harness, or serve the pipeline over HTTP.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "kgnav/config.hpp"
#include "kgnav/eval.hpp"
#include "kgnav/pipeline.hpp"
#include "kgnav/service.hpp"

namespace {

using namespace kgnav;

std::string error_name(const Error& e) {
    if (dynamic_cast<const NoEntityError*>(&e)) return "NoEntityError";
    if (dynamic_cast<const EmptyCandidatesError*>(&e)) return "EmptyCandidatesError";
    if (dynamic_cast<const TransportError*>(&e)) return "TransportError";
    if (dynamic_cast<const ProtocolError*>(&e)) return "ProtocolError";
    if (dynamic_cast<const FormatError*>(&e)) return "FormatError";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const RequestError*>(&e)) return "RequestError";
    if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
    if (dynamic_cast<const DuplicateIdError*>(&e)) return "DuplicateIdError";
    if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
    return "Error";
}

int run_ask(const std::string& config_path, const std::string& question, bool trace) {
    App app(load_config(config_path));
    const AnswerSet ans = answer(question, app.make_deps());

    std::cout << "entity: " << ans.entity.iri.value;
    if (ans.entity.label) std::cout << " (" << *ans.entity.label << ")";
    std::cout << "\npredicate: " << ans.winning_predicate.value << "\n";
    for (const auto& term : ans.answers) std::cout << answer_string(term) << "\n";
    if (trace) {
        std::cout << "trace:\n";
        for (const auto& rc : ans.ranked_trace) {
            std::printf("  %.6f %s %s | %s\n", rc.score,
                        std::string(to_string(rc.pair.direction)).c_str(),
                        rc.pair.predicate.value.c_str(), rc.text.c_str());
        }
    }
    return 0;
}

int run_relations(const std::string& config_path, const std::string& entity_iri) {
    if (!is_valid_iri(entity_iri)) {
        std::cerr << "error: malformed IRI: " << entity_iri << "\n";
        return 2;
    }
    App app(load_config(config_path));
    const Iri entity{entity_iri};
    const auto pairs = app.graph()
                           ? one_hop(*app.graph(), entity)
                           : one_hop_remote(EndpointConfig{*app.config().sparql_endpoint,
                                                           app.config().timeout_ms,
                                                           app.config().retries},
                                            entity);
    for (const auto& p : pairs) {
        std::cout << to_string(p.direction) << " " << p.predicate.value;
        if (p.predicate_label) std::cout << " (" << *p.predicate_label << ")";
        std::cout << " " << render_term(p.neighbor);
        if (p.neighbor_label) std::cout << " (" << *p.neighbor_label << ")";
        std::cout << "\n";
    }
    return 0;
}

int run_link(const std::string& config_path, const std::string& question) {
    App app(load_config(config_path));
    const auto deps = app.make_deps();
    for (const auto& e : deps.linker(question)) {
        if (e.score) std::printf("%.4f ", *e.score);
        else std::printf("     - ");
        std::cout << e.iri.value;
        if (e.label) std::cout << " (" << *e.label << ")";
        std::cout << "\n";
    }
    return 0;
}

int run_eval(const std::string& config_path, const std::string& dataset_path,
             bool no_heuristics, bool gold_entities, const std::string& report_base) {
    App app(load_config(config_path));
    PipelineDeps deps = app.make_deps();
    if (no_heuristics) deps.heuristics.enabled = false;

    const auto dataset = load_dataset(dataset_path);
    const EvalReport report = evaluate(dataset, deps, gold_entities);

    if (!report_base.empty()) {
        write_file(report_base + ".json", report_to_json(report).dump(2) + "\n");
        write_file(report_base + ".txt", report_to_text(report));
    }
    std::printf("questions: %zu\n", report.per_question.size());
    std::printf("macro F1 (QA): %.4f\n", report.macro_f1_qa);
    std::printf("macro F1 (EL): %.4f\n", report.macro_f1_el);
    return 0;
}

int run_serve(const std::string& config_path, int port) {
    App app(load_config(config_path));
    const PipelineDeps deps = app.make_deps();
    ScopedServer server = serve_pipeline(deps, port);
    std::cout << "listening on " << server.base_url() << "\n";
    for (;;) std::this_thread::sleep_for(std::chrono::seconds(60));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"scholarly knowledge-graph question answering"};
    cli.require_subcommand(1);

    std::string config_path, question, entity_iri, dataset_path, report_base;
    bool trace = false, no_heuristics = false, gold_entities = false;
    int port = 8080;

    auto* ask = cli.add_subcommand("ask", "answer a single question");
    ask->add_option("--config", config_path, "config file")->required();
    ask->add_option("question", question, "the question text")->required();
    ask->add_flag("--trace", trace, "print ranked candidate scores");

    auto* relations = cli.add_subcommand("relations", "list one-hop relations of an entity");
    relations->add_option("--config", config_path, "config file")->required();
    relations->add_option("entity", entity_iri, "entity IRI")->required();

    auto* link = cli.add_subcommand("link", "show linker candidates for a question");
    link->add_option("--config", config_path, "config file")->required();
    link->add_option("question", question, "the question text")->required();

    auto* eval = cli.add_subcommand("eval", "evaluate a question dataset");
    eval->add_option("--config", config_path, "config file")->required();
    eval->add_option("dataset", dataset_path, "dataset JSON file")->required();
    eval->add_flag("--no-heuristics", no_heuristics, "disable candidate heuristics");
    eval->add_flag("--gold-entities", gold_entities, "use gold entities instead of linking");
    eval->add_option("--report", report_base, "write <base>.json and <base>.txt reports");

    auto* serve = cli.add_subcommand("serve", "run the HTTP query service");
    serve->add_option("--config", config_path, "config file")->required();
    serve->add_option("--port", port, "listen port")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        cli.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        cli.exit(e);
        return 2;
    }

    try {
        if (*ask) return run_ask(config_path, question, trace);
        if (*relations) return run_relations(config_path, entity_iri);
        if (*link) return run_link(config_path, question);
        if (*eval)
            return run_eval(config_path, dataset_path, no_heuristics, gold_entities,
                            report_base);
        if (*serve) return run_serve(config_path, port);
    } catch (const kgnav::ConfigError& e) {
        std::cerr << "error: ConfigError: " << e.what() << "\n";
        return 2;
    } catch (const kgnav::Error& e) {
        std::cerr << "error: " << error_name(e) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
