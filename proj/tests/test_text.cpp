#include <catch2/catch_amalgamated.hpp>

#include "kgnav/text.hpp"

using namespace kgnav;

TEST_CASE("tokenize lowercases and splits on non-word characters") {
    CHECK(tokenize("Alice Müller?") == std::vector<std::string>{"alice", "müller"});
    CHECK(tokenize("") == std::vector<std::string>{});
    CHECK(tokenize("BERT-based QA") == std::vector<std::string>{"bert", "based", "qa"});
}

TEST_CASE("tokenize keeps digits and splits punctuation runs") {
    CHECK(tokenize("10.5555/3295222") ==
          std::vector<std::string>{"10", "5555", "3295222"});
    CHECK(tokenize("  ...  ") == std::vector<std::string>{});
    CHECK(tokenize("what's") == std::vector<std::string>{"what", "s"});
}

TEST_CASE("tokenize handles Latin-1 uppercase") {
    CHECK(tokenize("MÜLLER") == std::vector<std::string>{"müller"});
    CHECK(tokenize("École Été") == std::vector<std::string>{"école", "été"});
}

TEST_CASE("local_name strips to the last / or #") {
    CHECK(local_name("https://example.org/schema#orcid") == "orcid");
    CHECK(local_name("https://example.org/kg/alice") == "alice");
    CHECK(local_name("urn:x") == "urn:x");
}

TEST_CASE("to_lower_ascii leaves non-ASCII bytes alone") {
    CHECK(to_lower_ascii("OrCiD") == "orcid");
    // 'M' folds, the two UTF-8 bytes of 'ü' pass through untouched
    CHECK(to_lower_ascii("Müller") == "müller");
}
