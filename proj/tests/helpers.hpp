#pragma once

#include <random>
#include <string>
#include <vector>

#include "kgnav/fsutil.hpp"
#include "kgnav/rdf.hpp"

namespace kgnav::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(KGNAV_FIXTURE_DIR) + "/" + name;
}

inline const KnowledgeGraph& fixture_graph() {
    static const KnowledgeGraph graph =
        index_triples(parse_ntriples(read_file(fixture_path("kg.nt"))));
    return graph;
}

inline constexpr const char* kKg = "https://example.org/kg/";
inline constexpr const char* kSchema = "https://example.org/schema#";

// Random triples over a small vocabulary, so subjects and objects collide
// often enough to make one-hop extraction interesting.
struct TripleGenerator {
    std::mt19937_64 rng;
    std::vector<Iri> entities;
    std::vector<Iri> predicates;

    explicit TripleGenerator(std::uint64_t seed, std::size_t n_entities = 30,
                             std::size_t n_predicates = 8)
        : rng(seed) {
        for (std::size_t i = 0; i < n_entities; ++i)
            entities.push_back(Iri{std::string(kKg) + "e" + std::to_string(i)});
        for (std::size_t i = 0; i + 1 < n_predicates; ++i)
            predicates.push_back(Iri{std::string(kSchema) + "p" + std::to_string(i)});
        predicates.push_back(Iri{std::string(kRdfsLabel)});
    }

    Iri pick_entity() {
        return entities[std::uniform_int_distribution<std::size_t>(
            0, entities.size() - 1)(rng)];
    }

    Term pick_object() {
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
            case 0: {
                Literal lit{"lit" + std::to_string(
                                std::uniform_int_distribution<int>(0, 20)(rng)),
                            std::nullopt, std::nullopt};
                return lit;
            }
            case 1:
                return BlankNode{"b" + std::to_string(
                    std::uniform_int_distribution<int>(0, 5)(rng))};
            default:
                return pick_entity();
        }
    }

    std::vector<Triple> graph(std::size_t max_triples) {
        const std::size_t n =
            std::uniform_int_distribution<std::size_t>(0, max_triples)(rng);
        std::vector<Triple> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Iri predicate = predicates[std::uniform_int_distribution<std::size_t>(
                0, predicates.size() - 1)(rng)];
            out.push_back(Triple{pick_entity(), std::move(predicate), pick_object()});
        }
        return out;
    }
};

// Independent one-hop oracle: a plain scan over the triple list with its own
// dedup and ordering, no index involved.
inline std::vector<CandidatePair> brute_force_one_hop(const std::vector<Triple>& triples,
                                                      const Iri& entity) {
    std::unordered_map<std::string, std::string> labels;
    for (const auto& t : triples) {
        if (t.predicate.value != kRdfsLabel) continue;
        const auto* lit = std::get_if<Literal>(&t.object);
        const auto* subj = std::get_if<Iri>(&t.subject);
        if (lit && subj && !labels.contains(subj->value))
            labels.emplace(subj->value, lit->lexical);
    }
    auto label_for = [&](const std::string& iri) -> std::optional<std::string> {
        auto it = labels.find(iri);
        if (it == labels.end()) return std::nullopt;
        return it->second;
    };

    std::vector<CandidatePair> pairs;
    for (const auto& t : triples) {
        if (t.predicate.value == kRdfsLabel) continue;
        const auto* subj = std::get_if<Iri>(&t.subject);
        if (subj && subj->value == entity.value) {
            std::optional<std::string> nl;
            if (const auto* o = std::get_if<Iri>(&t.object)) nl = label_for(o->value);
            pairs.push_back(CandidatePair{Direction::Outgoing, t.predicate,
                                          label_for(t.predicate.value), t.object, nl});
        }
        const auto* obj = std::get_if<Iri>(&t.object);
        if (obj && obj->value == entity.value) {
            Term neighbor = subject_to_term(t.subject);
            std::optional<std::string> nl;
            if (const auto* n = std::get_if<Iri>(&neighbor)) nl = label_for(n->value);
            pairs.push_back(CandidatePair{Direction::Incoming, t.predicate,
                                          label_for(t.predicate.value), neighbor, nl});
        }
    }

    std::sort(pairs.begin(), pairs.end(),
              [](const CandidatePair& a, const CandidatePair& b) {
                  auto key = [](const CandidatePair& p) {
                      return std::tuple(p.direction == Direction::Incoming,
                                        p.predicate.value, render_term(p.neighbor));
                  };
                  return key(a) < key(b);
              });
    std::vector<CandidatePair> dedup;
    for (auto& p : pairs) {
        if (!dedup.empty() && dedup.back().direction == p.direction &&
            dedup.back().predicate == p.predicate &&
            render_term(dedup.back().neighbor) == render_term(p.neighbor))
            continue;
        dedup.push_back(std::move(p));
    }
    return dedup;
}

} // namespace kgnav::test
