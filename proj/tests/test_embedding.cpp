#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "kgnav/embedding.hpp"

using namespace kgnav;

namespace {

// Independent FNV-1a oracle, written from the published constants.
std::uint64_t fnv_oracle(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // 14695981039346656037
    for (unsigned char c : s) {
        h = (h ^ c) * 0x100000001b3ull;  // 1099511628211
    }
    return h;
}

} // namespace

TEST_CASE("fnv1a64 matches the independent oracle") {
    for (const std::string s : {"", "a", "b", "alice", "müller", "0000-0001"})
        CHECK(fnv1a64(s) == fnv_oracle(s));
}

TEST_CASE("hash_embed single token is a unit impulse") {
    const HashEmbedder embedder;
    const auto v = embedder.embed("a");
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0.0) { ++nonzero; where = i; }
    CHECK(nonzero == 1);
    CHECK(v[where] == 1.0);
    CHECK(where == fnv_oracle("a") % HashEmbedder::kDimension);
}

TEST_CASE("hash_embed of empty text is the zero vector") {
    const HashEmbedder embedder;
    const auto v = embedder.embed("");
    REQUIRE(v.size() == 256);
    for (double x : v) CHECK(x == 0.0);
}

TEST_CASE("hash_embed counts repeated tokens") {
    const std::size_t ia = fnv_oracle("a") % 256;
    const std::size_t ib = fnv_oracle("b") % 256;
    REQUIRE(ia != ib);  // no collision between these two tokens
    const HashEmbedder embedder;
    const auto v = embedder.embed("a a b");
    CHECK_THAT(v[ia], Catch::Matchers::WithinAbs(2.0 / std::sqrt(5.0), 1e-15));
    CHECK_THAT(v[ib], Catch::Matchers::WithinAbs(1.0 / std::sqrt(5.0), 1e-15));
}

TEST_CASE("hash_embed output is unit length whenever tokens exist") {
    const HashEmbedder embedder;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        std::string text;
        const int words = std::uniform_int_distribution<int>(1, 12)(rng);
        for (int w = 0; w < words; ++w) {
            text += "tok" + std::to_string(std::uniform_int_distribution<int>(0, 40)(rng));
            text += ' ';
        }
        const auto v = embedder.embed(text);
        double sumsq = 0.0;
        for (double x : v) sumsq += x * x;
        CHECK_THAT(std::sqrt(sumsq), Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("cosine basics") {
    CHECK(cosine({1, 0}, {0, 1}) == 0.0);
    CHECK_THAT(cosine({3, 4}, {3, 4}), Catch::Matchers::WithinAbs(1.0, 1e-15));
    CHECK_THAT(cosine({1, 2, 3}, {4, 5, 6}),
               Catch::Matchers::WithinAbs(32.0 / std::sqrt(14.0 * 77.0), 1e-15));
    CHECK_THAT(cosine({1, 2, 3}, {4, 5, 6}),
               Catch::Matchers::WithinAbs(0.974632, 1e-6));
    CHECK(cosine({0, 0}, {1, 2}) == 0.0);  // zero-norm convention
    CHECK_THROWS_AS(cosine({1}, {1, 2}), DimensionError);
}

TEST_CASE("dot basics") {
    CHECK(dot({1, 0}, {0, 1}) == 0.0);
    CHECK(dot({1, 2}, {3, 4}) == 11.0);
    CHECK(dot({5, -2, 7}, {0, 0, 0}) == 0.0);
    CHECK_THROWS_AS(dot({1}, {1, 2}), DimensionError);
}

TEST_CASE("cosine symmetry, bound and scale invariance on random vectors") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        EmbeddingVector u(64), v(64);
        for (auto& x : u) x = dist(rng);
        for (auto& x : v) x = dist(rng);
        const double c = cosine(u, v);
        CHECK_THAT(cosine(v, u), Catch::Matchers::WithinAbs(c, 1e-12));
        CHECK(std::abs(c) <= 1.0 + 1e-9);
        for (double alpha : {0.001, 7.0, 1e6}) {
            EmbeddingVector su = u;
            for (auto& x : su) x *= alpha;
            CHECK_THAT(cosine(su, v), Catch::Matchers::WithinAbs(c, 1e-9));
        }
    }
}
