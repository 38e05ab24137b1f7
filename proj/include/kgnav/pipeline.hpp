#pragma once

// End-to-end orchestration: link -> fetch one-hop pairs -> validate -> rank
// -> select winner -> assemble answers.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgnav/embedding.hpp"
#include "kgnav/errors.hpp"
#include "kgnav/heuristics.hpp"
#include "kgnav/linker.hpp"
#include "kgnav/ranker.hpp"
#include "kgnav/rdf.hpp"
#include "kgnav/sparql.hpp"

namespace kgnav {

// Read-only wiring for answer(). Exactly one graph source must be set:
// an indexed graph for offline mode or a SPARQL endpoint for remote mode.
struct PipelineDeps {
    std::function<std::vector<LinkedEntity>(const std::string&)> linker;
    const KnowledgeGraph* graph = nullptr;
    std::optional<EndpointConfig> endpoint;
    HeuristicsConfig heuristics;
    const EmbeddingProvider* provider = nullptr;
    SimilarityKind similarity = SimilarityKind::Cosine;
    // When set, the linking step is skipped entirely (gold-entity evaluation).
    std::optional<Iri> gold_entity_override;
};

struct AnswerSet {
    std::string question;
    LinkedEntity entity;
    Iri winning_predicate;
    std::vector<Term> answers;               // deduplicated, ranked order
    std::vector<RankedCandidate> ranked_trace;  // every scored candidate
};

// Neighbor terms of the expanded winners, deduplicated in first-occurrence
// order.
inline std::vector<Term> assemble_answers(const std::vector<RankedCandidate>& expanded) {
    std::vector<Term> out;
    std::vector<std::string> seen;
    for (const auto& rc : expanded) {
        std::string key = render_term(rc.pair.neighbor);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        out.push_back(rc.pair.neighbor);
    }
    return out;
}

inline AnswerSet answer(const std::string& question, const PipelineDeps& deps) {
    if ((deps.graph == nullptr) == !deps.endpoint.has_value())
        throw ConfigError("exactly one graph source must be configured");
    if (deps.provider == nullptr)
        throw ConfigError("no embedding provider configured");

    // Step 1: entity selection
    LinkedEntity entity;
    if (deps.gold_entity_override) {
        entity = LinkedEntity{*deps.gold_entity_override, std::nullopt, std::nullopt};
    } else {
        if (!deps.linker) throw ConfigError("no linker configured");
        const auto candidates = deps.linker(question);
        if (candidates.empty())
            throw NoEntityError("no entity linked for question: " + question);
        entity = select_relevant(candidates, question);
    }

    // Step 2: one-hop relation extraction
    const std::vector<CandidatePair> pairs =
        deps.graph ? one_hop(*deps.graph, entity.iri)
                   : one_hop_remote(*deps.endpoint, entity.iri);
    if (pairs.empty())
        throw EmptyCandidatesError("entity has no one-hop relations: " + entity.iri.value,
                                   entity.iri.value);

    // Step 3: heuristic validation
    const std::vector<CandidatePair> valid =
        filter_candidates(pairs, question, deps.heuristics);
    if (valid.empty())
        throw EmptyCandidatesError("no candidate pair passed validation for: " +
                                       entity.iri.value,
                                   entity.iri.value);

    // Steps 4-5: similarity ranking, winner selection, answer assembly
    std::vector<RankedCandidate> ranked =
        rank(*deps.provider, deps.similarity, question, valid);
    auto [winner, expanded] = select_winner(ranked);

    AnswerSet result;
    result.question = question;
    result.entity = std::move(entity);
    result.winning_predicate = winner.pair.predicate;
    result.answers = assemble_answers(expanded);
    result.ranked_trace = std::move(ranked);
    return result;
}

} // namespace kgnav
