#pragma once

// Application configuration: a JSON file selects the graph source, linker,
// embedder, similarity and heuristics; command-line flags override it.
// Relative file paths resolve against the config file's directory, so a
// config is runnable from anywhere.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgnav/embedding.hpp"
#include "kgnav/errors.hpp"
#include "kgnav/fsutil.hpp"
#include "kgnav/heuristics.hpp"
#include "kgnav/linker.hpp"
#include "kgnav/pipeline.hpp"
#include "kgnav/rdf.hpp"
#include "kgnav/remote_embedder.hpp"
#include "kgnav/sparql.hpp"

namespace kgnav {

struct AppConfig {
    std::optional<std::string> kg_file;          // XOR sparql_endpoint
    std::optional<std::string> sparql_endpoint;
    std::string linker = "offline";              // offline | remote
    std::optional<std::string> linker_url;
    int linker_timeout_ms = 5000;
    std::string embedder = "hash";               // hash | remote
    std::optional<std::string> embedder_url;
    std::size_t embedder_dim = HashEmbedder::kDimension;
    std::string similarity = "cosine";           // cosine | dot
    bool heuristics = true;
    std::optional<std::vector<std::string>> identifier_keywords;
    int timeout_ms = 5000;
    int retries = 2;
    std::optional<std::string> sameas_file;
};

namespace config_detail {

inline std::string resolve_path(const std::string& path,
                                const std::filesystem::path& base_dir) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (base_dir / p).string();
}

} // namespace config_detail

inline AppConfig parse_config(const std::string& text,
                              const std::filesystem::path& base_dir) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw ConfigError("config is not a JSON object");

    AppConfig cfg;
    auto get_string = [&](const char* key) -> std::optional<std::string> {
        if (!doc.contains(key)) return std::nullopt;
        if (!doc[key].is_string())
            throw ConfigError(std::string("config key '") + key + "' must be a string");
        return doc[key].get<std::string>();
    };
    auto get_int = [&](const char* key, int fallback) {
        if (!doc.contains(key)) return fallback;
        if (!doc[key].is_number_integer())
            throw ConfigError(std::string("config key '") + key + "' must be an integer");
        return doc[key].get<int>();
    };

    if (auto v = get_string("kg_file"))
        cfg.kg_file = config_detail::resolve_path(*v, base_dir);
    cfg.sparql_endpoint = get_string("sparql_endpoint");
    if (auto v = get_string("linker")) cfg.linker = *v;
    cfg.linker_url = get_string("linker_url");
    cfg.linker_timeout_ms = get_int("linker_timeout_ms", get_int("timeout_ms", 5000));
    if (auto v = get_string("embedder")) cfg.embedder = *v;
    cfg.embedder_url = get_string("embedder_url");
    if (doc.contains("embedder_dim")) {
        if (!doc["embedder_dim"].is_number_unsigned())
            throw ConfigError("config key 'embedder_dim' must be a positive integer");
        cfg.embedder_dim = doc["embedder_dim"].get<std::size_t>();
    }
    if (auto v = get_string("similarity")) cfg.similarity = *v;
    if (auto v = get_string("heuristics")) {
        if (*v != "on" && *v != "off")
            throw ConfigError("config key 'heuristics' must be \"on\" or \"off\"");
        cfg.heuristics = *v == "on";
    }
    if (doc.contains("identifier_keywords")) {
        if (!doc["identifier_keywords"].is_array())
            throw ConfigError("config key 'identifier_keywords' must be an array");
        std::vector<std::string> keywords;
        for (const auto& k : doc["identifier_keywords"]) {
            if (!k.is_string() || k.get<std::string>().empty())
                throw ConfigError("identifier keywords must be non-empty strings");
            keywords.push_back(to_lower_ascii(k.get<std::string>()));
        }
        cfg.identifier_keywords = std::move(keywords);
    }
    cfg.timeout_ms = get_int("timeout_ms", 5000);
    cfg.retries = get_int("retries", 2);
    if (auto v = get_string("sameas_file"))
        cfg.sameas_file = config_detail::resolve_path(*v, base_dir);

    if (cfg.kg_file.has_value() == cfg.sparql_endpoint.has_value())
        throw ConfigError("config must set exactly one of kg_file, sparql_endpoint");
    if (cfg.linker == "remote" && !cfg.linker_url)
        throw ConfigError("linker \"remote\" requires linker_url");
    if (cfg.linker != "remote" && cfg.linker != "offline")
        throw ConfigError("linker must be \"offline\" or \"remote\"");
    if (cfg.linker == "offline" && !cfg.kg_file)
        throw ConfigError("linker \"offline\" requires kg_file");
    if (cfg.embedder == "remote" && !cfg.embedder_url)
        throw ConfigError("embedder \"remote\" requires embedder_url");
    if (cfg.embedder != "remote" && cfg.embedder != "hash")
        throw ConfigError("embedder must be \"hash\" or \"remote\"");
    if (cfg.similarity != "cosine" && cfg.similarity != "dot")
        throw ConfigError("similarity must be \"cosine\" or \"dot\"");
    if (cfg.timeout_ms < 1 || cfg.linker_timeout_ms < 1)
        throw ConfigError("timeouts must be >= 1 ms");
    if (cfg.retries < 0 || cfg.retries > 5)
        throw ConfigError("retries must be in [0, 5]");
    return cfg;
}

inline AppConfig load_config(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const FormatError& e) {
        throw ConfigError(e.what());
    }
    return parse_config(text, std::filesystem::path(path).parent_path());
}

// Owns everything the pipeline borrows: the indexed graph, the embedding
// provider, the alias map. Build once, then hand out PipelineDeps.
class App {
public:
    explicit App(AppConfig config) : cfg_(std::move(config)) {
        if (cfg_.kg_file)
            graph_ = index_triples(parse_ntriples(read_file(*cfg_.kg_file)));
        if (cfg_.embedder == "hash") {
            provider_ = std::make_unique<HashEmbedder>();
        } else {
            provider_ = std::make_unique<RemoteEmbedder>(
                *cfg_.embedder_url, cfg_.embedder_dim, cfg_.timeout_ms);
        }
        if (cfg_.sameas_file)
            aliases_ = AliasMap::from_ntriples(read_file(*cfg_.sameas_file));
    }

    const AppConfig& config() const noexcept { return cfg_; }
    const KnowledgeGraph* graph() const noexcept {
        return graph_ ? &*graph_ : nullptr;
    }
    const EmbeddingProvider& provider() const noexcept { return *provider_; }
    const AliasMap& aliases() const noexcept { return aliases_; }

    PipelineDeps make_deps() const {
        PipelineDeps deps;
        if (graph_) deps.graph = &*graph_;
        if (cfg_.sparql_endpoint)
            deps.endpoint = EndpointConfig{*cfg_.sparql_endpoint, cfg_.timeout_ms,
                                           cfg_.retries};
        if (cfg_.linker == "offline") {
            deps.linker = [this](const std::string& question) {
                return link_offline(*graph_, question);
            };
        } else {
            deps.linker = [this](const std::string& question) {
                return link_remote(*cfg_.linker_url, question, cfg_.linker_timeout_ms);
            };
        }
        deps.heuristics.enabled = cfg_.heuristics;
        if (cfg_.identifier_keywords)
            deps.heuristics.identifier_keywords = *cfg_.identifier_keywords;
        deps.provider = provider_.get();
        deps.similarity = cfg_.similarity == "dot" ? SimilarityKind::Dot
                                                   : SimilarityKind::Cosine;
        return deps;
    }

private:
    AppConfig cfg_;
    std::optional<KnowledgeGraph> graph_;
    std::unique_ptr<EmbeddingProvider> provider_;
    AliasMap aliases_;
};

} // namespace kgnav
