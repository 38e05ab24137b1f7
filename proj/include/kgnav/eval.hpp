#pragma once

// Benchmark evaluation: dataset loading, set-based precision/recall/F1,
// the error taxonomy and the full evaluation loop over the pipeline.
//
// Conventions, stated once so every consumer agrees:
//   - set_f1 on two empty sets is (1,1,1): abstaining on an unanswerable
//     question is a correct prediction.
//   - an empty prediction against non-empty gold (or vice versa) is (0,0,0).
//   - pipeline errors score as an empty prediction; they are recorded per
//     question but never raised out of evaluate().
//   - macro scores are arithmetic means of per-question F1 values.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgnav/errors.hpp"
#include "kgnav/fsutil.hpp"
#include "kgnav/pipeline.hpp"
#include "kgnav/rdf.hpp"

namespace kgnav {

struct QuestionRecord {
    std::string id;
    std::string question;
    std::optional<std::string> paraphrase;  // carried, not evaluated
    std::optional<std::vector<Iri>> gold_entities;
    std::vector<std::string> gold_answers;
};

struct PRF {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    friend bool operator==(const PRF&, const PRF&) = default;
};

enum class ErrorClass {
    Correct,
    WrongEntityRightAnswer,
    RightEntityWrongAnswer,
    BothWrong,
};

inline std::string_view to_string(ErrorClass c) {
    switch (c) {
        case ErrorClass::Correct: return "Correct";
        case ErrorClass::WrongEntityRightAnswer: return "WrongEntityRightAnswer";
        case ErrorClass::RightEntityWrongAnswer: return "RightEntityWrongAnswer";
        case ErrorClass::BothWrong: return "BothWrong";
    }
    return "?";
}

inline PRF set_f1(const std::set<std::string>& predicted,
                  const std::set<std::string>& gold) {
    if (predicted.empty() && gold.empty()) return PRF{1.0, 1.0, 1.0};
    std::size_t common = 0;
    for (const auto& p : predicted)
        if (gold.contains(p)) ++common;
    PRF out;
    out.precision = predicted.empty()
                        ? 0.0
                        : static_cast<double>(common) / static_cast<double>(predicted.size());
    out.recall = gold.empty()
                     ? 0.0
                     : static_cast<double>(common) / static_cast<double>(gold.size());
    out.f1 = (out.precision + out.recall) == 0.0
                 ? 0.0
                 : 2.0 * out.precision * out.recall / (out.precision + out.recall);
    return out;
}

inline ErrorClass classify_error(bool el_correct, double qa_f1) {
    if (el_correct) {
        return qa_f1 == 1.0 ? ErrorClass::Correct : ErrorClass::RightEntityWrongAnswer;
    }
    return qa_f1 == 1.0 ? ErrorClass::WrongEntityRightAnswer : ErrorClass::BothWrong;
}

// Parses {"questions":[{"id","question","paraphrase"?,"entities"?,"answers"}]}.
inline std::vector<QuestionRecord> load_dataset_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("questions") ||
        !doc["questions"].is_array())
        throw FormatError("dataset missing questions array");

    std::vector<QuestionRecord> records;
    std::set<std::string> ids;
    for (const auto& q : doc["questions"]) {
        if (!q.is_object() || !q.contains("id") || !q["id"].is_string() ||
            !q.contains("question") || !q["question"].is_string())
            throw FormatError("question record missing id or question");
        QuestionRecord rec;
        rec.id = q["id"].get<std::string>();
        rec.question = q["question"].get<std::string>();
        if (!ids.insert(rec.id).second)
            throw DuplicateIdError("duplicate question id: " + rec.id);
        if (q.contains("paraphrase")) {
            if (!q["paraphrase"].is_string())
                throw FormatError("paraphrase must be a string: " + rec.id);
            rec.paraphrase = q["paraphrase"].get<std::string>();
        }
        if (q.contains("entities")) {
            if (!q["entities"].is_array())
                throw FormatError("entities must be an array: " + rec.id);
            std::vector<Iri> entities;
            for (const auto& e : q["entities"]) {
                if (!e.is_string() || !is_valid_iri(e.get<std::string>()))
                    throw FormatError("bad entity IRI in record: " + rec.id);
                entities.push_back(Iri{e.get<std::string>()});
            }
            rec.gold_entities = std::move(entities);
        }
        if (!q.contains("answers") || !q["answers"].is_array())
            throw FormatError("question record missing answers array: " + rec.id);
        for (const auto& a : q["answers"]) {
            if (!a.is_string()) throw FormatError("answer must be a string: " + rec.id);
            rec.gold_answers.push_back(a.get<std::string>());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

inline std::vector<QuestionRecord> load_dataset(const std::string& path) {
    return load_dataset_text(read_file(path));
}

struct QuestionResult {
    std::string id;
    PRF qa;
    std::optional<PRF> el;  // absent when the record has no gold entities
    ErrorClass error_class = ErrorClass::Correct;
    std::string predicted_entity;            // empty when linking failed
    std::vector<std::string> predicted_answers;
    std::optional<std::string> pipeline_error;  // error type name, when any
};

// Scoring-relevant configuration, echoed into every report. Transport detail
// (endpoints, stub vs in-process) deliberately stays out so offline and
// stub-backed remote runs over the same data produce identical reports.
struct ConfigEcho {
    bool heuristics_enabled = true;
    std::vector<std::string> identifier_keywords;
    std::string similarity;
    std::size_t embedder_dimension = 0;
    bool gold_entities = false;

    friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct EvalReport {
    std::vector<QuestionResult> per_question;  // dataset order, ids unique
    double macro_f1_qa = 0.0;
    double macro_f1_el = 0.0;
    std::map<ErrorClass, std::size_t> class_counts;
    ConfigEcho config_echo;
};

// Runs the pipeline over every record. With use_gold_entities, records that
// carry gold entities are answered with the linking step overridden by their
// first gold IRI. Per-question pipeline failures become empty predictions.
inline EvalReport evaluate(const std::vector<QuestionRecord>& dataset,
                           const PipelineDeps& deps, bool use_gold_entities = false) {
    EvalReport report;
    report.config_echo.heuristics_enabled = deps.heuristics.enabled;
    report.config_echo.identifier_keywords = deps.heuristics.identifier_keywords;
    report.config_echo.similarity =
        deps.similarity == SimilarityKind::Cosine ? "cosine" : "dot";
    report.config_echo.embedder_dimension = deps.provider ? deps.provider->dimension() : 0;
    report.config_echo.gold_entities = use_gold_entities;
    for (auto c : {ErrorClass::Correct, ErrorClass::WrongEntityRightAnswer,
                   ErrorClass::RightEntityWrongAnswer, ErrorClass::BothWrong})
        report.class_counts[c] = 0;

    double sum_qa = 0.0, sum_el = 0.0;
    std::size_t el_count = 0;

    for (const auto& rec : dataset) {
        QuestionResult res;
        res.id = rec.id;

        PipelineDeps question_deps = deps;
        if (use_gold_entities && rec.gold_entities && !rec.gold_entities->empty())
            question_deps.gold_entity_override = rec.gold_entities->front();

        try {
            AnswerSet ans = answer(rec.question, question_deps);
            res.predicted_entity = ans.entity.iri.value;
            for (const auto& term : ans.answers)
                res.predicted_answers.push_back(answer_string(term));
        } catch (const NoEntityError&) {
            res.pipeline_error = "NoEntityError";
        } catch (const EmptyCandidatesError& e) {
            res.pipeline_error = "EmptyCandidatesError";
            res.predicted_entity = e.entity_iri();
        } catch (const Error& e) {
            // transport/protocol/format failures score as empty predictions
            res.pipeline_error = std::string("PipelineError: ") + e.what();
        }

        const std::set<std::string> predicted(res.predicted_answers.begin(),
                                              res.predicted_answers.end());
        const std::set<std::string> gold(rec.gold_answers.begin(),
                                         rec.gold_answers.end());
        res.qa = set_f1(predicted, gold);

        bool el_correct = true;
        if (rec.gold_entities) {
            std::set<std::string> gold_iris;
            for (const auto& e : *rec.gold_entities) gold_iris.insert(e.value);
            std::set<std::string> predicted_iri;
            if (!res.predicted_entity.empty()) predicted_iri.insert(res.predicted_entity);
            res.el = set_f1(predicted_iri, gold_iris);
            el_correct = !res.predicted_entity.empty() &&
                         gold_iris.contains(res.predicted_entity);
            sum_el += res.el->f1;
            ++el_count;
        }
        res.error_class = classify_error(el_correct, res.qa.f1);

        sum_qa += res.qa.f1;
        ++report.class_counts[res.error_class];
        report.per_question.push_back(std::move(res));
    }

    report.macro_f1_qa =
        dataset.empty() ? 0.0 : sum_qa / static_cast<double>(dataset.size());
    report.macro_f1_el = el_count == 0 ? 0.0 : sum_el / static_cast<double>(el_count);
    return report;
}

// ---------------------------------------------------------------------------
// Report serialization. Key order is fixed and no timestamps are embedded, so
// two identical evaluations serialize byte-identically.

inline nlohmann::ordered_json report_to_json(const EvalReport& report) {
    nlohmann::ordered_json doc;
    doc["config"] = {
        {"heuristics", report.config_echo.heuristics_enabled},
        {"identifier_keywords", report.config_echo.identifier_keywords},
        {"similarity", report.config_echo.similarity},
        {"embedder_dimension", report.config_echo.embedder_dimension},
        {"gold_entities", report.config_echo.gold_entities},
    };
    doc["macro_f1_qa"] = report.macro_f1_qa;
    doc["macro_f1_el"] = report.macro_f1_el;
    nlohmann::ordered_json counts;
    for (const auto& [cls, count] : report.class_counts)
        counts[std::string(to_string(cls))] = count;
    doc["class_counts"] = std::move(counts);
    nlohmann::ordered_json questions;
    for (const auto& q : report.per_question) {
        nlohmann::ordered_json entry;
        entry["qa"] = {{"precision", q.qa.precision},
                       {"recall", q.qa.recall},
                       {"f1", q.qa.f1}};
        if (q.el)
            entry["el"] = {{"precision", q.el->precision},
                           {"recall", q.el->recall},
                           {"f1", q.el->f1}};
        else
            entry["el"] = nullptr;
        entry["class"] = std::string(to_string(q.error_class));
        entry["predicted_entity"] = q.predicted_entity;
        entry["predicted_answers"] = q.predicted_answers;
        entry["error"] = q.pipeline_error ? nlohmann::ordered_json(*q.pipeline_error)
                                          : nlohmann::ordered_json(nullptr);
        questions[q.id] = std::move(entry);
    }
    doc["questions"] = std::move(questions);
    return doc;
}

inline std::string report_to_text(const EvalReport& report) {
    char buf[256];
    std::string out;
    out += "id        qa_f1    el_f1    class\n";
    for (const auto& q : report.per_question) {
        char el_col[16];
        if (q.el)
            std::snprintf(el_col, sizeof el_col, "%.4f", q.el->f1);
        else
            std::snprintf(el_col, sizeof el_col, "-     ");
        std::snprintf(buf, sizeof buf, "%-9s %.4f   %s   %s\n", q.id.c_str(),
                      q.qa.f1, el_col, std::string(to_string(q.error_class)).c_str());
        out += buf;
    }
    out += "\n";
    for (const auto& [cls, count] : report.class_counts) {
        std::snprintf(buf, sizeof buf, "%-24s %zu\n",
                      std::string(to_string(cls)).c_str(), count);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "\nmacro F1 (QA): %.4f\nmacro F1 (EL): %.4f\n",
                  report.macro_f1_qa, report.macro_f1_el);
    out += buf;
    return out;
}

} // namespace kgnav
