#pragma once

// Phase 2: textualize candidate pairs, score them against the question with
// an embedding provider, pick the winner and expand to every candidate that
// shares its predicate.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kgnav/embedding.hpp"
#include "kgnav/errors.hpp"
#include "kgnav/rdf.hpp"

namespace kgnav {

enum class SimilarityKind { Cosine, Dot };

struct RankedCandidate {
    CandidatePair pair;
    std::string text;   // the textualization that was scored
    double score;

    friend bool operator==(const RankedCandidate&, const RankedCandidate&) = default;
};

// The scored string: predicate label (or IRI local name), then the neighbor
// label, literal lexical form or IRI local name. Incoming pairs read
// backwards from the entity, hence the "of" prefix.
inline std::string textualize(const CandidatePair& pair) {
    std::string out;
    if (pair.direction == Direction::Incoming) out += "of ";
    out += pair.predicate_label ? *pair.predicate_label
                                : local_name(pair.predicate.value);
    out += ' ';
    if (pair.neighbor_label) {
        out += *pair.neighbor_label;
    } else if (const auto* lit = std::get_if<Literal>(&pair.neighbor)) {
        out += lit->lexical;
    } else if (const auto* iri = std::get_if<Iri>(&pair.neighbor)) {
        out += local_name(iri->value);
    } else {
        out += std::get<BlankNode>(pair.neighbor).label;
    }
    return out;
}

// Embeds the question once and each textualized pair once; returns candidates
// sorted by (score desc, predicate IRI asc, neighbor rendering asc).
inline std::vector<RankedCandidate> rank(const EmbeddingProvider& provider,
                                         SimilarityKind kind,
                                         const std::string& question,
                                         const std::vector<CandidatePair>& pairs) {
    if (pairs.empty()) return {};
    const EmbeddingVector question_vec = provider.embed(question);
    std::vector<RankedCandidate> ranked;
    ranked.reserve(pairs.size());
    for (const auto& pair : pairs) {
        std::string text = textualize(pair);
        const EmbeddingVector v = provider.embed(text);
        const double score = kind == SimilarityKind::Cosine ? cosine(question_vec, v)
                                                            : dot(question_vec, v);
        ranked.push_back(RankedCandidate{pair, std::move(text), score});
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const RankedCandidate& a, const RankedCandidate& b) {
                  if (a.score != b.score) return a.score > b.score;
                  if (a.pair.predicate.value != b.pair.predicate.value)
                      return a.pair.predicate.value < b.pair.predicate.value;
                  return render_term(a.pair.neighbor) < render_term(b.pair.neighbor);
              });
    return ranked;
}

// Winner is the top-ranked candidate; the expansion is every candidate with
// the winner's predicate, in ranked order (winner included).
inline std::pair<RankedCandidate, std::vector<RankedCandidate>> select_winner(
    const std::vector<RankedCandidate>& ranked) {
    if (ranked.empty())
        throw EmptyCandidatesError("select_winner: no ranked candidates");
    const RankedCandidate& winner = ranked.front();
    std::vector<RankedCandidate> expanded;
    for (const auto& rc : ranked)
        if (rc.pair.predicate == winner.pair.predicate) expanded.push_back(rc);
    return {winner, expanded};
}

} // namespace kgnav
