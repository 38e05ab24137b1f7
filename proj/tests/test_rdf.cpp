#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kgnav/rdf.hpp"

using namespace kgnav;
using kgnav::test::brute_force_one_hop;
using kgnav::test::fixture_graph;
using kgnav::test::TripleGenerator;

TEST_CASE("parse_ntriples handles the grammar subset") {
    auto triples = parse_ntriples("<http://e/s> <http://e/p> \"hello\"@en .\n");
    REQUIRE(triples.size() == 1);
    CHECK(std::get<Iri>(triples[0].subject).value == "http://e/s");
    CHECK(triples[0].predicate.value == "http://e/p");
    const auto& lit = std::get<Literal>(triples[0].object);
    CHECK(lit.lexical == "hello");
    CHECK(lit.lang == "en");
    CHECK_FALSE(lit.datatype.has_value());

    CHECK(parse_ntriples("").empty());
    CHECK(parse_ntriples("# comment only\n\n").empty());
}

TEST_CASE("parse_ntriples decodes escapes and datatypes") {
    auto triples = parse_ntriples(
        "<http://e/s> <http://e/p> \"a\\\"b\\\\c\\nd\\te\" .\n"
        "_:b1 <http://e/p> \"2021\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n");
    REQUIRE(triples.size() == 2);
    CHECK(std::get<Literal>(triples[0].object).lexical == "a\"b\\c\nd\te");
    CHECK(std::get<BlankNode>(triples[1].subject).label == "b1");
    CHECK(std::get<Literal>(triples[1].object).datatype->value ==
          "http://www.w3.org/2001/XMLSchema#integer");
}

TEST_CASE("parse_ntriples reports the offending line") {
    CHECK_THROWS_MATCHES(parse_ntriples("<http://e/s> <http://e/p>"), ParseError,
                         Catch::Matchers::Predicate<ParseError>(
                             [](const ParseError& e) { return e.line() == 1; }));
    CHECK_THROWS_MATCHES(
        parse_ntriples("<http://e/s> <http://e/p> <http://e/o> .\n"
                       "<http://e/s> <bad iri> <http://e/o> .\n"),
        ParseError, Catch::Matchers::Predicate<ParseError>(
                        [](const ParseError& e) { return e.line() == 2; }));
    // no partial results on failure
    CHECK_THROWS_AS(parse_ntriples("<http://e/s> <http://e/p> \"x\" .\nnot a line\n"),
                    ParseError);
}

TEST_CASE("parse_ntriples rejects unsupported escapes and missing dots") {
    CHECK_THROWS_AS(parse_ntriples("<http://e/s> <http://e/p> \"a\\qb\" .\n"), ParseError);
    CHECK_THROWS_AS(parse_ntriples("<http://e/s> <http://e/p> \"x\"\n"), ParseError);
    CHECK_THROWS_AS(parse_ntriples("\"lit\" <http://e/p> <http://e/o> .\n"), ParseError);
}

TEST_CASE("serialize_ntriples round-trips") {
    CHECK(serialize_ntriples({}).empty());

    std::vector<Triple> triples = {
        Triple{Iri{"http://e/s"}, Iri{"http://e/p"},
               Literal{"a\"b", std::nullopt, std::nullopt}}};
    const std::string out = serialize_ntriples(triples);
    CHECK(out.find("\"a\\\"b\"") != std::string::npos);
    CHECK(parse_ntriples(out) == triples);
}

TEST_CASE("fixture corpus round-trips through parse and serialize") {
    const std::string text = read_file(kgnav::test::fixture_path("kg.nt"));
    const auto triples = parse_ntriples(text);
    CHECK(triples.size() >= 90);
    CHECK(parse_ntriples(serialize_ntriples(triples)) == triples);
}

TEST_CASE("random triples round-trip through serialize and parse") {
    TripleGenerator gen(1234);
    for (int i = 0; i < 25; ++i) {
        auto triples = gen.graph(200);
        // literals exercising every escape
        triples.push_back(Triple{Iri{"http://e/s"}, Iri{"http://e/p"},
                                 Literal{"q\"w\\e\nr\tt", {}, {}}});
        CHECK(parse_ntriples(serialize_ntriples(triples)) == triples);
    }
}

TEST_CASE("index_triples populates indexes and label_index") {
    const KnowledgeGraph empty = index_triples({});
    CHECK(empty.triples.empty());
    CHECK(empty.index_s.empty());
    CHECK(empty.label_index.empty());

    const auto& g = fixture_graph();
    auto label = label_of(g, std::string(kgnav::test::kKg) + "alice");
    REQUIRE(label.has_value());
    CHECK(*label == "Alice Müller");

    // duplicate triples are retained at ingest
    auto dup = parse_ntriples(
        "<http://e/s> <http://e/p> <http://e/o> .\n"
        "<http://e/s> <http://e/p> <http://e/o> .\n");
    const KnowledgeGraph gd = index_triples(dup);
    CHECK(gd.triples.size() == 2);
    CHECK(gd.index_s.at("<http://e/s>").size() == 2);
}

TEST_CASE("one_hop on the fixture matches the documented shape for alice") {
    const auto& g = fixture_graph();
    const auto pairs = one_hop(g, Iri{std::string(kgnav::test::kKg) + "alice"});
    REQUIRE(pairs.size() == 5);
    CHECK(pairs[0].direction == Direction::Outgoing);
    CHECK(local_name(pairs[0].predicate.value) == "orcid");
    CHECK(local_name(pairs[1].predicate.value) == "primaryAffiliation");
    CHECK(pairs[1].predicate_label == "primary affiliation");
    CHECK(local_name(pairs[2].predicate.value) == "wikidata");
    CHECK(pairs[3].direction == Direction::Incoming);
    CHECK(local_name(pairs[3].predicate.value) == "authoredBy");
    CHECK(pairs[3].neighbor_label == "Neural Parsing at Scale");
    CHECK(pairs[4].neighbor_label == "Deep Graph Kernels");
}

TEST_CASE("the fixture's duplicated triple dedups at one_hop") {
    const auto& g = fixture_graph();
    const Iri judy{std::string(kgnav::test::kKg) + "judy"};
    const std::string key = "<" + judy.value + ">";
    CHECK(g.index_o.at(key).size() == 3);  // paperJ, paperK, paperK again
    const auto pairs = one_hop(g, judy);
    CHECK(std::count_if(pairs.begin(), pairs.end(), [](const CandidatePair& p) {
              return p.direction == Direction::Incoming;
          }) == 2);
}

TEST_CASE("one_hop edge cases") {
    CHECK(one_hop(index_triples({}), Iri{"http://e/x"}).empty());

    const auto labels_only = index_triples(parse_ntriples(
        "<http://e/x> <http://www.w3.org/2000/01/rdf-schema#label> \"X\" .\n"));
    CHECK(one_hop(labels_only, Iri{"http://e/x"}).empty());

    const auto& g = fixture_graph();
    CHECK(one_hop(g, Iri{"http://nowhere/entity"}).empty());
}

TEST_CASE("one_hop equals the brute-force scan on randomized graphs") {
    TripleGenerator gen(99);
    for (int i = 0; i < 30; ++i) {
        const auto triples = gen.graph(1000);
        const KnowledgeGraph g = index_triples(triples);
        for (int k = 0; k < 5; ++k) {
            const Iri e = gen.pick_entity();
            const auto got = one_hop(g, e);
            const auto want = brute_force_one_hop(triples, e);
            REQUIRE(got == want);
            for (const auto& p : got)
                if (p.direction == Direction::Incoming)
                    CHECK_FALSE(std::holds_alternative<Literal>(p.neighbor));
        }
    }
}

TEST_CASE("one_hop order does not depend on triple order") {
    TripleGenerator gen(7);
    auto triples = gen.graph(300);
    // drop label triples: with duplicate labels the first one wins, which is
    // the one place where input order legitimately matters
    std::erase_if(triples,
                  [](const Triple& t) { return t.predicate.value == kRdfsLabel; });
    const Iri e = gen.pick_entity();
    const auto a = one_hop(index_triples(triples), e);
    std::shuffle(triples.begin(), triples.end(), std::mt19937_64(43));
    const auto b = one_hop(index_triples(triples), e);
    CHECK(a == b);
}

TEST_CASE("term rendering and answer strings") {
    CHECK(render_term(Iri{"http://e/x"}) == "<http://e/x>");
    CHECK(render_term(BlankNode{"b1"}) == "_:b1");
    CHECK(render_term(Literal{"hi", "en", {}}) == "\"hi\"@en");
    CHECK(answer_string(Iri{"http://e/x"}) == "http://e/x");
    CHECK(answer_string(Literal{"hi", "en", {}}) == "hi");
}
