#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kgnav/heuristics.hpp"

using namespace kgnav;
using kgnav::test::fixture_graph;

namespace {

CandidatePair make_pair(const std::string& pred,
                        std::optional<std::string> pred_label = std::nullopt,
                        const std::string& lit = "x") {
    return CandidatePair{Direction::Outgoing, Iri{pred}, std::move(pred_label),
                         Literal{lit, {}, {}}, std::nullopt};
}

const std::string kSchema = kgnav::test::kSchema;

} // namespace

TEST_CASE("is_identifier_pair checks predicate IRI and label substrings") {
    CHECK(is_identifier_pair(make_pair(kSchema + "orcid"), "orcid"));
    CHECK_FALSE(is_identifier_pair(make_pair(kSchema + "authoredBy"), "orcid"));
    CHECK(is_identifier_pair(make_pair("http://e/p", "wikidata ID"), "wikidata"));
    CHECK(is_identifier_pair(make_pair("http://e/ORCID"), "orcid"));  // case folded
}

TEST_CASE("validate_pair implements R1") {
    const HeuristicsConfig cfg;
    const auto orcid = make_pair(kSchema + "orcid", std::nullopt, "0000-0001");
    const auto authored = CandidatePair{Direction::Incoming, Iri{kSchema + "authoredBy"},
                                        "authored by", Iri{"http://e/paper"},
                                        std::nullopt};

    CHECK(validate_pair(orcid, "What is the ORCID of Alice Müller?", cfg));
    CHECK_FALSE(validate_pair(orcid, "Which papers are authored by Alice Müller?", cfg));
    CHECK(validate_pair(authored, "Which papers are authored by Alice Müller?", cfg));
    // with a keyword present, non-identifier pairs are dropped
    CHECK_FALSE(validate_pair(authored, "What is the ORCID of Alice Müller?", cfg));
}

TEST_CASE("filter_candidates on the fixture alice questions") {
    const HeuristicsConfig cfg;
    const auto pairs =
        one_hop(fixture_graph(), Iri{std::string(kgnav::test::kKg) + "alice"});
    REQUIRE(pairs.size() == 5);

    const auto orcid_only =
        filter_candidates(pairs, "What is the ORCID of Alice Müller?", cfg);
    REQUIRE(orcid_only.size() == 1);
    CHECK(local_name(orcid_only[0].predicate.value) == "orcid");

    const auto authored =
        filter_candidates(pairs, "Which papers are authored by Alice Müller?", cfg);
    REQUIRE(authored.size() == 2);
    CHECK(authored[0].direction == Direction::Incoming);
    CHECK(authored[1].direction == Direction::Incoming);
    CHECK(local_name(authored[0].predicate.value) == "authoredBy");

    HeuristicsConfig off;
    off.enabled = false;
    CHECK(filter_candidates(pairs, "What is the ORCID of Alice Müller?", off) == pairs);
}

TEST_CASE("R2 falls back to all R1 survivors when nothing overlaps") {
    const HeuristicsConfig cfg;
    std::vector<CandidatePair> pairs = {
        make_pair(kSchema + "primaryAffiliation", "primary affiliation", "TU"),
        CandidatePair{Direction::Incoming, Iri{kSchema + "authoredBy"}, "authored by",
                      Iri{"http://e/paper"}, std::nullopt},
    };
    const auto kept = filter_candidates(pairs, "Where does she teach?", cfg);
    CHECK(kept == pairs);
}

TEST_CASE("filter_candidates output is an order-preserving subsequence") {
    const HeuristicsConfig cfg;
    std::mt19937_64 rng(11);
    const std::vector<std::string> preds = {
        kSchema + "orcid", kSchema + "wikidata", kSchema + "authoredBy",
        kSchema + "primaryAffiliation", kSchema + "doi"};
    const std::vector<std::string> questions = {
        "What is the ORCID of X?", "Which papers are authored by X?",
        "Something entirely different", "wikidata and doi together?"};

    for (int round = 0; round < 100; ++round) {
        std::vector<CandidatePair> pairs;
        const int n = std::uniform_int_distribution<int>(0, 10)(rng);
        for (int i = 0; i < n; ++i)
            pairs.push_back(make_pair(
                preds[std::uniform_int_distribution<std::size_t>(0, preds.size() - 1)(rng)],
                std::nullopt, "v" + std::to_string(i)));
        const auto& q = questions[std::uniform_int_distribution<std::size_t>(
            0, questions.size() - 1)(rng)];

        const auto kept = filter_candidates(pairs, q, cfg);
        // subsequence check
        std::size_t pos = 0;
        for (const auto& k : kept) {
            while (pos < pairs.size() && !(pairs[pos] == k)) ++pos;
            REQUIRE(pos < pairs.size());
            ++pos;
        }
        // R2 fallback: non-empty whenever some pair passes R1
        const bool any_r1 = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
            return validate_pair(p, q, cfg);
        });
        CHECK(kept.empty() == !any_r1);
        // disabling heuristics never removes pairs
        HeuristicsConfig off;
        off.enabled = false;
        const auto all = filter_candidates(pairs, q, off);
        for (const auto& k : kept)
            CHECK(std::find(all.begin(), all.end(), k) != all.end());
    }
}
