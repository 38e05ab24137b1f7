#pragma once

// Query service: the pipeline behind two HTTP endpoints.
//   POST /ask    {"question": "..."} -> {"entity", "predicate", "answers"}
//   GET  /health -> {"status":"ok"}
// Errors come back structured: 400 for malformed bodies, 422 when the
// pipeline cannot produce an answer, 502 when an upstream dependency fails.

#include <memory>
#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "kgnav/errors.hpp"
#include "kgnav/net.hpp"
#include "kgnav/pipeline.hpp"
#include "kgnav/rdf.hpp"

namespace kgnav {

inline nlohmann::json answer_to_json(const AnswerSet& ans) {
    nlohmann::json answers = nlohmann::json::array();
    for (const auto& term : ans.answers) answers.push_back(answer_string(term));
    return {{"entity", ans.entity.iri.value},
            {"predicate", ans.winning_predicate.value},
            {"answers", answers}};
}

// Deps must outlive the returned server. All shared state is read-only, so
// concurrent requests need no further coordination.
inline ScopedServer serve_pipeline(const PipelineDeps& deps, int port = 0) {
    auto server = std::make_shared<httplib::Server>();

    server->Get("/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"status":"ok"})", "application/json");
    });

    server->Post("/ask", [&deps](const httplib::Request& req, httplib::Response& res) {
        nlohmann::json doc = nlohmann::json::parse(req.body, nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("question") ||
            !doc["question"].is_string() || doc["question"].get<std::string>().empty()) {
            res.status = 400;
            res.set_content(
                nlohmann::json{{"error", "BadRequest"},
                               {"message", "body must be {\"question\": \"...\"}"}}
                    .dump(),
                "application/json");
            return;
        }
        const std::string question = doc["question"].get<std::string>();
        try {
            const AnswerSet ans = answer(question, deps);
            res.set_content(answer_to_json(ans).dump(), "application/json");
        } catch (const NoEntityError& e) {
            res.status = 422;
            res.set_content(nlohmann::json{{"error", "NoEntityError"},
                                           {"message", e.what()}}
                                .dump(),
                            "application/json");
        } catch (const EmptyCandidatesError& e) {
            res.status = 422;
            res.set_content(nlohmann::json{{"error", "EmptyCandidatesError"},
                                           {"message", e.what()}}
                                .dump(),
                            "application/json");
        } catch (const Error& e) {
            res.status = 502;
            res.set_content(nlohmann::json{{"error", "UpstreamError"},
                                           {"message", e.what()}}
                                .dump(),
                            "application/json");
        }
    });

    return ScopedServer(std::move(server), port);
}

} // namespace kgnav
