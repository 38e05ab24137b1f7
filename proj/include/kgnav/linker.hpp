#pragma once

// Entity linking: a remote linking-API client and an offline label matcher,
// plus the selection rule that picks the single focus entity.

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgnav/errors.hpp"
#include "kgnav/net.hpp"
#include "kgnav/rdf.hpp"
#include "kgnav/text.hpp"

namespace kgnav {

struct LinkedEntity {
    Iri iri;
    std::optional<std::string> label;
    std::optional<double> score;  // in [0, 1] when present

    friend bool operator==(const LinkedEntity&, const LinkedEntity&) = default;
};

// POSTs {"question": ...} and expects {"candidates":[{iri, label?, score?}]}.
// Candidate order is preserved.
inline std::vector<LinkedEntity> link_remote(const std::string& api_url,
                                             const std::string& question,
                                             int timeout_ms) {
    const nlohmann::json request = {{"question", question}};
    const std::string body =
        http_post(api_url, request.dump(), "application/json", timeout_ms);

    nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("candidates") ||
        !doc["candidates"].is_array())
        throw FormatError("linker response missing candidates array");

    std::vector<LinkedEntity> out;
    for (const auto& c : doc["candidates"]) {
        if (!c.is_object() || !c.contains("iri") || !c["iri"].is_string())
            throw FormatError("linker candidate missing iri");
        LinkedEntity e{Iri{c["iri"].get<std::string>()}, std::nullopt, std::nullopt};
        if (c.contains("label")) {
            if (!c["label"].is_string()) throw FormatError("linker label not a string");
            e.label = c["label"].get<std::string>();
        }
        if (c.contains("score")) {
            if (!c["score"].is_number()) throw FormatError("linker score not a number");
            const double s = c["score"].get<double>();
            if (!(s >= 0.0 && s <= 1.0)) throw FormatError("linker score out of [0,1]");
            e.score = s;
        }
        out.push_back(std::move(e));
    }
    return out;
}

// Test-time substitute for the linking API: scores every labelled IRI in the
// graph by label-token coverage, |tokens(label) ∩ tokens(question)| /
// |tokens(label)|, and returns positive scorers sorted by score desc, IRI asc.
inline std::vector<LinkedEntity> link_offline(const KnowledgeGraph& graph,
                                              const std::string& question) {
    std::unordered_set<std::string> question_tokens;
    for (auto& tok : tokenize(question)) question_tokens.insert(std::move(tok));

    std::vector<LinkedEntity> out;
    for (const auto& [iri, label] : graph.label_index) {
        std::unordered_set<std::string> label_tokens;
        for (auto& tok : tokenize(label)) label_tokens.insert(std::move(tok));
        if (label_tokens.empty()) continue;
        std::size_t common = 0;
        for (const auto& tok : label_tokens)
            if (question_tokens.contains(tok)) ++common;
        if (common == 0) continue;
        out.push_back(LinkedEntity{
            Iri{iri}, label,
            static_cast<double>(common) / static_cast<double>(label_tokens.size())});
    }
    std::sort(out.begin(), out.end(), [](const LinkedEntity& a, const LinkedEntity& b) {
        if (*a.score != *b.score) return *a.score > *b.score;
        return a.iri.value < b.iri.value;
    });
    return out;
}

// Picks the most relevant entity: highest score first (candidates without a
// score sort below any scored one), then label-token overlap with the
// question, then smallest IRI. Duplicate IRIs with different labels still
// need an order, so the label is the final key; the order is total and the
// result does not depend on input order.
inline LinkedEntity select_relevant(const std::vector<LinkedEntity>& entities,
                                    const std::string& question) {
    if (entities.empty())
        throw NoEntityError("select_relevant: no candidate entities");

    std::unordered_set<std::string> question_tokens;
    for (auto& tok : tokenize(question)) question_tokens.insert(std::move(tok));

    auto overlap = [&](const LinkedEntity& e) -> std::size_t {
        if (!e.label) return 0;
        std::unordered_set<std::string> seen;
        std::size_t n = 0;
        for (const auto& tok : tokenize(*e.label))
            if (question_tokens.contains(tok) && seen.insert(tok).second) ++n;
        return n;
    };
    auto key = [&](const LinkedEntity& e) {
        return std::tuple(-e.score.value_or(-1.0), -static_cast<double>(overlap(e)),
                          e.iri.value, e.label.has_value(), e.label.value_or(""));
    };

    const LinkedEntity* best = &entities.front();
    auto best_key = key(*best);
    for (std::size_t i = 1; i < entities.size(); ++i) {
        auto k = key(entities[i]);
        if (k < best_key) {
            best = &entities[i];
            best_key = std::move(k);
        }
    }
    return *best;
}

// owl:sameAs alias map. Loaded when configured but deliberately not applied
// by the pipeline: distinct URIs for one real-world entity stay distinct,
// which reproduces the known coreference failure mode.
class AliasMap {
public:
    AliasMap() = default;

    static AliasMap from_ntriples(const std::string& text) {
        static constexpr std::string_view kSameAs =
            "http://www.w3.org/2002/07/owl#sameAs";
        AliasMap map;
        for (const auto& t : parse_ntriples(text)) {
            if (t.predicate.value != kSameAs) continue;
            const auto* s = std::get_if<Iri>(&t.subject);
            const auto* o = std::get_if<Iri>(&t.object);
            if (s && o) map.aliases_[s->value] = o->value;
        }
        return map;
    }

    std::size_t size() const noexcept { return aliases_.size(); }
    bool empty() const noexcept { return aliases_.empty(); }

    std::optional<std::string> canonical(const std::string& iri) const {
        auto it = aliases_.find(iri);
        if (it == aliases_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::unordered_map<std::string, std::string> aliases_;
};

} // namespace kgnav
