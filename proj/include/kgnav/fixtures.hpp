#pragma once

// Manifest for the shipped desk-scale test assets. Loading validates that
// every referenced file exists and parses and that the counts match.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "kgnav/errors.hpp"
#include "kgnav/eval.hpp"
#include "kgnav/fsutil.hpp"
#include "kgnav/rdf.hpp"

namespace kgnav {

struct FixtureManifest {
    std::string kg_path;
    std::string dataset_path;
    std::string expected_report_path;
    std::size_t triple_count = 0;
    std::size_t question_count = 0;
};

inline FixtureManifest load_manifest(const std::string& manifest_path) {
    nlohmann::json doc = nlohmann::json::parse(read_file(manifest_path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw FormatError("manifest is not a JSON object");
    for (const char* key : {"kg_path", "dataset_path", "expected_report_path"})
        if (!doc.contains(key) || !doc[key].is_string())
            throw FormatError(std::string("manifest missing ") + key);
    if (!doc.contains("counts") || !doc["counts"].is_object())
        throw FormatError("manifest missing counts");

    const auto base = std::filesystem::path(manifest_path).parent_path();
    auto resolve = [&](const std::string& p) { return (base / p).string(); };

    FixtureManifest m;
    m.kg_path = resolve(doc["kg_path"].get<std::string>());
    m.dataset_path = resolve(doc["dataset_path"].get<std::string>());
    m.expected_report_path = resolve(doc["expected_report_path"].get<std::string>());
    m.triple_count = doc["counts"].value("triples", 0u);
    m.question_count = doc["counts"].value("questions", 0u);

    const auto triples = parse_ntriples(read_file(m.kg_path));
    if (triples.size() != m.triple_count)
        throw FormatError("manifest triple count mismatch: expected " +
                          std::to_string(m.triple_count) + ", file has " +
                          std::to_string(triples.size()));
    const auto dataset = load_dataset(m.dataset_path);
    if (dataset.size() != m.question_count)
        throw FormatError("manifest question count mismatch");
    const auto report = nlohmann::json::parse(read_file(m.expected_report_path),
                                              nullptr, false);
    if (report.is_discarded())
        throw FormatError("expected report does not parse");
    return m;
}

} // namespace kgnav
