#pragma once

// SPARQL 1.1 protocol client: the two fixed one-hop query templates, POST
// execution with retries, results-JSON parsing, and a remote one_hop with the
// same contract as the offline index.

#include <chrono>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "kgnav/errors.hpp"
#include "kgnav/net.hpp"
#include "kgnav/rdf.hpp"

namespace kgnav {

struct EndpointConfig {
    std::string url;
    int timeout_ms = 5000;   // >= 1
    int retries = 2;         // <= 5
};

inline void validate_endpoint(const EndpointConfig& cfg) {
    if (cfg.timeout_ms < 1) throw ConfigError("endpoint timeout must be >= 1 ms");
    if (cfg.retries < 0 || cfg.retries > 5)
        throw ConfigError("endpoint retries must be in [0, 5]");
}

struct ResultTable {
    std::vector<std::string> vars;
    std::vector<std::map<std::string, Term>> rows;
};

// Injection guard: angle brackets, quotes or whitespace in an IRI would
// escape the <...> wrapper in the query text.
inline void check_query_iri(const Iri& entity) {
    const std::string& v = entity.value;
    if (!is_valid_iri(v) || v.find('<') != std::string::npos ||
        v.find('>') != std::string::npos || v.find('"') != std::string::npos)
        throw RequestError("invalid IRI for query: " + v);
}

inline std::string build_outgoing_query(const Iri& entity) {
    check_query_iri(entity);
    std::string label(kRdfsLabel);
    return "SELECT ?p ?o ?pl ?ol WHERE { <" + entity.value +
           "> ?p ?o . OPTIONAL { ?p <" + label + "> ?pl } OPTIONAL { ?o <" +
           label + "> ?ol } }";
}

inline std::string build_incoming_query(const Iri& entity) {
    check_query_iri(entity);
    std::string label(kRdfsLabel);
    return "SELECT ?s ?p ?sl ?pl WHERE { ?s ?p <" + entity.value +
           "> . OPTIONAL { ?s <" + label + "> ?sl } OPTIONAL { ?p <" + label +
           "> ?pl } }";
}

inline std::string url_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
            (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xF]);
        }
    }
    return out;
}

// Parses a SPARQL 1.1 Query Results JSON document into a ResultTable.
inline ResultTable parse_results_json(const std::string& body) {
    nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw FormatError("results document is not a JSON object");
    if (!doc.contains("head") || !doc["head"].is_object() ||
        !doc["head"].contains("vars") || !doc["head"]["vars"].is_array())
        throw FormatError("results document missing head.vars");
    if (!doc.contains("results") || !doc["results"].is_object() ||
        !doc["results"].contains("bindings") ||
        !doc["results"]["bindings"].is_array())
        throw FormatError("results document missing results.bindings");

    ResultTable table;
    for (const auto& v : doc["head"]["vars"]) {
        if (!v.is_string()) throw FormatError("head.vars entries must be strings");
        table.vars.push_back(v.get<std::string>());
    }
    for (const auto& binding : doc["results"]["bindings"]) {
        if (!binding.is_object()) throw FormatError("binding is not an object");
        std::map<std::string, Term> row;
        for (const auto& [var, cell] : binding.items()) {
            if (std::find(table.vars.begin(), table.vars.end(), var) ==
                table.vars.end())
                throw FormatError("bound variable '" + var + "' not in head.vars");
            if (!cell.is_object() || !cell.contains("type") ||
                !cell.contains("value") || !cell["type"].is_string() ||
                !cell["value"].is_string())
                throw FormatError("malformed binding for '" + var + "'");
            const std::string type = cell["type"].get<std::string>();
            const std::string value = cell["value"].get<std::string>();
            if (type == "uri") {
                row.emplace(var, Iri{value});
            } else if (type == "literal") {
                Literal lit{value, std::nullopt, std::nullopt};
                if (cell.contains("xml:lang") && cell["xml:lang"].is_string())
                    lit.lang = cell["xml:lang"].get<std::string>();
                else if (cell.contains("datatype") && cell["datatype"].is_string())
                    lit.datatype = Iri{cell["datatype"].get<std::string>()};
                row.emplace(var, std::move(lit));
            } else if (type == "bnode") {
                row.emplace(var, BlankNode{value});
            } else {
                throw FormatError("unknown binding type '" + type + "'");
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// POSTs the query (form-encoded, results requested as JSON) and parses the
// response. Transport failures are retried up to cfg.retries times with a
// 200 ms doubling backoff; protocol and format errors are not retried.
inline ResultTable execute(const EndpointConfig& cfg, const std::string& query) {
    validate_endpoint(cfg);
    const ParsedUrl u = parse_url(cfg.url);
    const std::string body = "query=" + url_encode(query);

    std::string last_error;
    int backoff_ms = 200;
    for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
            backoff_ms *= 2;
        }
        httplib::Client client(u.host, u.port);
        set_timeouts(client, cfg.timeout_ms);
        httplib::Headers headers = {{"Accept", "application/sparql-results+json"}};
        auto res = client.Post(u.path, headers, body,
                               "application/x-www-form-urlencoded");
        if (!res) {
            last_error = httplib::to_string(res.error());
            continue;
        }
        if (res->status < 200 || res->status >= 300)
            throw ProtocolError(res->status, "SPARQL endpoint " + cfg.url);
        return parse_results_json(res->body);
    }
    throw TransportError("SPARQL endpoint " + cfg.url + " unreachable after " +
                         std::to_string(cfg.retries + 1) + " attempts: " +
                         last_error);
}

namespace sparql_detail {

inline std::optional<std::string> optional_label(
    const std::map<std::string, Term>& row, const std::string& var) {
    auto it = row.find(var);
    if (it == row.end()) return std::nullopt;
    if (const auto* lit = std::get_if<Literal>(&it->second)) return lit->lexical;
    return std::nullopt;
}

} // namespace sparql_detail

// Remote FETCHONEHOPRELATIONS: both dual queries, rows converted to candidate
// pairs, then the same rdfs:label exclusion, dedup and ordering contract as
// the offline one_hop.
inline std::vector<CandidatePair> one_hop_remote(const EndpointConfig& cfg,
                                                 const Iri& entity) {
    std::vector<CandidatePair> pairs;

    const ResultTable outgoing = execute(cfg, build_outgoing_query(entity));
    for (const auto& row : outgoing.rows) {
        auto p = row.find("p");
        auto o = row.find("o");
        if (p == row.end() || o == row.end())
            throw FormatError("outgoing row missing ?p or ?o");
        const auto* pred = std::get_if<Iri>(&p->second);
        if (!pred) throw FormatError("?p binding is not an IRI");
        if (pred->value == kRdfsLabel) continue;
        pairs.push_back(CandidatePair{Direction::Outgoing, *pred,
                                      sparql_detail::optional_label(row, "pl"),
                                      o->second,
                                      sparql_detail::optional_label(row, "ol")});
    }

    const ResultTable incoming = execute(cfg, build_incoming_query(entity));
    for (const auto& row : incoming.rows) {
        auto s = row.find("s");
        auto p = row.find("p");
        if (s == row.end() || p == row.end())
            throw FormatError("incoming row missing ?s or ?p");
        const auto* pred = std::get_if<Iri>(&p->second);
        if (!pred) throw FormatError("?p binding is not an IRI");
        if (pred->value == kRdfsLabel) continue;
        if (std::holds_alternative<Literal>(s->second))
            throw FormatError("?s binding is a literal");
        pairs.push_back(CandidatePair{Direction::Incoming, *pred,
                                      sparql_detail::optional_label(row, "pl"),
                                      s->second,
                                      sparql_detail::optional_label(row, "sl")});
    }

    return normalize_pairs(std::move(pairs));
}

} // namespace kgnav
