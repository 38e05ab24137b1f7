#pragma once

// In-process stub servers backed by a fixture graph: a SPARQL endpoint that
// answers exactly the two gateway query templates, a linking API delegating
// to the offline label matcher, and an embedding service delegating to a
// provider. They pin the wire contracts for tests; they are not general
// implementations of the protocols they imitate.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "kgnav/embedding.hpp"
#include "kgnav/linker.hpp"
#include "kgnav/net.hpp"
#include "kgnav/rdf.hpp"
#include "kgnav/sparql.hpp"

namespace kgnav {

namespace stub_detail {

inline nlohmann::json term_to_binding(const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t))
        return {{"type", "uri"}, {"value", iri->value}};
    if (const auto* b = std::get_if<BlankNode>(&t))
        return {{"type", "bnode"}, {"value", b->label}};
    const auto& lit = std::get<Literal>(t);
    nlohmann::json cell = {{"type", "literal"}, {"value", lit.lexical}};
    if (lit.lang) cell["xml:lang"] = *lit.lang;
    else if (lit.datatype) cell["datatype"] = lit.datatype->value;
    return cell;
}

// Extracts the focus IRI if `query` is exactly a template instantiation;
// matching is by rebuilding the template and comparing the full string.
inline std::optional<Iri> match_template(const std::string& query,
                                         const std::string& prefix,
                                         std::string (*builder)(const Iri&)) {
    if (query.rfind(prefix, 0) != 0) return std::nullopt;
    const auto start = prefix.size();
    const auto end = query.find('>', start);
    if (end == std::string::npos) return std::nullopt;
    Iri entity{query.substr(start, end - start)};
    try {
        if (builder(entity) == query) return entity;
    } catch (const RequestError&) {
    }
    return std::nullopt;
}

} // namespace stub_detail

// SPARQL results for the two fixed templates, computed over a fixture graph.
// rdfs:label triples feed the ?pl/?ol/?sl label bindings but are not emitted
// as relation rows. Any other query text gets a 400.
inline ScopedServer build_stub_sparql(const KnowledgeGraph& graph, int port = 0) {
    auto server = std::make_shared<httplib::Server>();
    server->Post("/sparql", [&graph](const httplib::Request& req,
                                     httplib::Response& res) {
        const std::string query = req.get_param_value("query");
        nlohmann::json bindings = nlohmann::json::array();

        auto label_cell = [&](const std::string& iri) -> std::optional<nlohmann::json> {
            if (auto label = label_of(graph, iri))
                return nlohmann::json{{"type", "literal"}, {"value", *label}};
            return std::nullopt;
        };

        if (auto entity = stub_detail::match_template(
                query, "SELECT ?p ?o ?pl ?ol WHERE { <", &build_outgoing_query)) {
            for (const auto& t : graph.triples) {
                const auto* subj = std::get_if<Iri>(&t.subject);
                if (!subj || subj->value != entity->value) continue;
                if (t.predicate.value == kRdfsLabel) continue;
                nlohmann::json row;
                row["p"] = stub_detail::term_to_binding(t.predicate);
                row["o"] = stub_detail::term_to_binding(t.object);
                if (auto pl = label_cell(t.predicate.value)) row["pl"] = *pl;
                if (const auto* obj = std::get_if<Iri>(&t.object))
                    if (auto ol = label_cell(obj->value)) row["ol"] = *ol;
                bindings.push_back(std::move(row));
            }
            nlohmann::json doc = {{"head", {{"vars", {"p", "o", "pl", "ol"}}}},
                                  {"results", {{"bindings", bindings}}}};
            res.set_content(doc.dump(), "application/sparql-results+json");
            return;
        }
        if (auto entity = stub_detail::match_template(
                query, "SELECT ?s ?p ?sl ?pl WHERE { ?s ?p <", &build_incoming_query)) {
            for (const auto& t : graph.triples) {
                const auto* obj = std::get_if<Iri>(&t.object);
                if (!obj || obj->value != entity->value) continue;
                if (t.predicate.value == kRdfsLabel) continue;
                nlohmann::json row;
                row["s"] = stub_detail::term_to_binding(subject_to_term(t.subject));
                row["p"] = stub_detail::term_to_binding(t.predicate);
                if (const auto* subj = std::get_if<Iri>(&t.subject))
                    if (auto sl = label_cell(subj->value)) row["sl"] = *sl;
                if (auto pl = label_cell(t.predicate.value)) row["pl"] = *pl;
                bindings.push_back(std::move(row));
            }
            nlohmann::json doc = {{"head", {{"vars", {"s", "p", "sl", "pl"}}}},
                                  {"results", {{"bindings", bindings}}}};
            res.set_content(doc.dump(), "application/sparql-results+json");
            return;
        }
        res.status = 400;
        res.set_content(R"({"error":"UnsupportedQuery"})", "application/json");
    });
    return ScopedServer(std::move(server), port);
}

// Linking API stub: the offline label matcher behind the remote wire contract.
inline ScopedServer build_stub_linker(const KnowledgeGraph& graph, int port = 0) {
    auto server = std::make_shared<httplib::Server>();
    server->Post("/link", [&graph](const httplib::Request& req, httplib::Response& res) {
        nlohmann::json doc = nlohmann::json::parse(req.body, nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("question") ||
            !doc["question"].is_string()) {
            res.status = 400;
            res.set_content(R"({"error":"BadRequest"})", "application/json");
            return;
        }
        nlohmann::json candidates = nlohmann::json::array();
        for (const auto& e : link_offline(graph, doc["question"].get<std::string>())) {
            nlohmann::json c = {{"iri", e.iri.value}};
            if (e.label) c["label"] = *e.label;
            if (e.score) c["score"] = *e.score;
            candidates.push_back(std::move(c));
        }
        res.set_content(nlohmann::json{{"candidates", candidates}}.dump(),
                        "application/json");
    });
    return ScopedServer(std::move(server), port);
}

// Embedding service stub delegating to a provider (the hash embedder in tests).
inline ScopedServer build_stub_embedder(const EmbeddingProvider& provider,
                                        int port = 0) {
    auto server = std::make_shared<httplib::Server>();
    server->Post("/embed", [&provider](const httplib::Request& req,
                                       httplib::Response& res) {
        nlohmann::json doc = nlohmann::json::parse(req.body, nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || !doc.contains("texts") ||
            !doc["texts"].is_array()) {
            res.status = 400;
            res.set_content(R"({"error":"BadRequest"})", "application/json");
            return;
        }
        nlohmann::json vectors = nlohmann::json::array();
        for (const auto& t : doc["texts"]) {
            if (!t.is_string()) {
                res.status = 400;
                res.set_content(R"({"error":"BadRequest"})", "application/json");
                return;
            }
            vectors.push_back(provider.embed(t.get<std::string>()));
        }
        res.set_content(nlohmann::json{{"vectors", vectors}}.dump(),
                        "application/json");
    });
    return ScopedServer(std::move(server), port);
}

} // namespace kgnav
