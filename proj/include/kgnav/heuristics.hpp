#pragma once

// Candidate validation heuristics, as an explicit and toggleable rule set.
//
// Rule R1 (pair-local): let K be the identifier keywords occurring in the
// lowercased question. When K is non-empty a pair passes iff it is an
// identifier pair for some keyword in K; when K is empty a pair passes iff it
// is not an identifier pair for any configured keyword.
//
// Rule R2 (set-level): a pair "overlaps" when the tokens of its predicate
// label (or of the predicate IRI local name when unlabelled) intersect the
// question tokens minus stopwords. If any R1 survivor overlaps, only
// overlapping pairs are kept; otherwise all R1 survivors are kept, so a
// non-empty survivor set never filters down to nothing.

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kgnav/rdf.hpp"
#include "kgnav/text.hpp"

namespace kgnav {

// The built-in stopword list: 50 English function words. R2 ignores these
// when matching question tokens against predicate labels.
inline const std::unordered_set<std::string>& builtin_stopwords() {
    static const std::unordered_set<std::string> words = {
        "a",     "an",    "the",   "and",   "or",    "but",   "not",
        "no",    "if",    "then",  "than",  "that",  "this",  "these",
        "those", "it",    "its",   "is",    "are",   "was",   "were",
        "be",    "been",  "being", "am",    "do",    "does",  "did",
        "have",  "has",   "had",   "will",  "would", "can",   "could",
        "should", "of",   "in",    "on",    "at",    "to",    "for",
        "from",  "by",    "with",  "as",    "what",  "which", "who",
        "whose",
    };
    return words;
}

struct HeuristicsConfig {
    bool enabled = true;
    // Lowercase, non-empty; matched as substrings of question and predicate.
    std::vector<std::string> identifier_keywords = {"orcid", "wikidata",
                                                    "bibtex", "doi"};
    std::unordered_set<std::string> stopwords = builtin_stopwords();
};

// True iff the keyword occurs in the lowercased predicate IRI or label.
inline bool is_identifier_pair(const CandidatePair& pair, std::string_view keyword) {
    const std::string kw(keyword);
    if (to_lower_ascii(pair.predicate.value).find(kw) != std::string::npos)
        return true;
    if (pair.predicate_label &&
        to_lower_ascii(*pair.predicate_label).find(kw) != std::string::npos)
        return true;
    return false;
}

inline bool validate_pair(const CandidatePair& pair, const std::string& question,
                          const HeuristicsConfig& cfg) {
    const std::string q = to_lower_ascii(question);
    std::vector<std::string_view> present;
    for (const auto& kw : cfg.identifier_keywords)
        if (q.find(kw) != std::string::npos) present.push_back(kw);
    if (!present.empty()) {
        for (auto kw : present)
            if (is_identifier_pair(pair, kw)) return true;
        return false;
    }
    for (const auto& kw : cfg.identifier_keywords)
        if (is_identifier_pair(pair, kw)) return false;
    return true;
}

// Applies R1 then R2; preserves input order. Disabled config passes the
// input through unchanged.
inline std::vector<CandidatePair> filter_candidates(
    const std::vector<CandidatePair>& pairs, const std::string& question,
    const HeuristicsConfig& cfg) {
    if (!cfg.enabled) return pairs;

    std::vector<CandidatePair> stage1;
    for (const auto& p : pairs)
        if (validate_pair(p, question, cfg)) stage1.push_back(p);

    std::unordered_set<std::string> question_tokens;
    for (auto& tok : tokenize(question))
        if (!cfg.stopwords.contains(tok)) question_tokens.insert(std::move(tok));

    auto overlaps = [&](const CandidatePair& p) {
        const std::string source =
            p.predicate_label ? *p.predicate_label : local_name(p.predicate.value);
        for (const auto& tok : tokenize(source))
            if (question_tokens.contains(tok)) return true;
        return false;
    };

    bool any_overlap = false;
    for (const auto& p : stage1)
        if (overlaps(p)) { any_overlap = true; break; }
    if (!any_overlap) return stage1;

    std::vector<CandidatePair> stage2;
    for (const auto& p : stage1)
        if (overlaps(p)) stage2.push_back(p);
    return stage2;
}

} // namespace kgnav
