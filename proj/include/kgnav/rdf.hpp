#pragma once

// RDF domain types, an N-Triples subset parser and an in-memory triple index
// with one-hop relation extraction.
//
// The parser covers the subset needed for fixture corpora: IRIs without
// IRIREF escapes, blank nodes, plain/lang-tagged/typed literals with the
// escape sequences \" \\ \n \t. Lines are independent; '#' starts a comment.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "kgnav/errors.hpp"
#include "kgnav/text.hpp"

namespace kgnav {

inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";

struct Iri {
    std::string value;

    friend bool operator==(const Iri&, const Iri&) = default;
    friend auto operator<=>(const Iri&, const Iri&) = default;
};

// Absolute IRI: non-empty, has a scheme separator, no whitespace.
inline bool is_valid_iri(std::string_view s) {
    if (s.empty()) return false;
    if (s.find(':') == std::string_view::npos) return false;
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
    return true;
}

struct Literal {
    std::string lexical;
    std::optional<std::string> lang;      // never set together with datatype
    std::optional<Iri> datatype;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct BlankNode {
    std::string label;  // non-empty, [A-Za-z0-9_]+

    friend bool operator==(const BlankNode&, const BlankNode&) = default;
};

using Term = std::variant<Iri, Literal, BlankNode>;
using SubjectTerm = std::variant<Iri, BlankNode>;

struct Triple {
    SubjectTerm subject;
    Iri predicate;
    Term object;

    friend bool operator==(const Triple&, const Triple&) = default;
};

inline std::string escape_literal(std::string_view lexical) {
    std::string out;
    out.reserve(lexical.size());
    for (char c : lexical) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// Canonical N-Triples rendering; also the ordering and dedup key for terms.
inline std::string render_term(const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t)) return "<" + iri->value + ">";
    if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label;
    const auto& lit = std::get<Literal>(t);
    std::string out = "\"" + escape_literal(lit.lexical) + "\"";
    if (lit.lang) out += "@" + *lit.lang;
    else if (lit.datatype) out += "^^<" + lit.datatype->value + ">";
    return out;
}

inline Term subject_to_term(const SubjectTerm& s) {
    if (const auto* iri = std::get_if<Iri>(&s)) return *iri;
    return std::get<BlankNode>(s);
}

inline std::string render_subject(const SubjectTerm& s) {
    return render_term(subject_to_term(s));
}

// Plain-text answer rendering used when comparing against gold answers:
// IRIs by their full string, literals by lexical form (tags dropped).
inline std::string answer_string(const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t)) return iri->value;
    if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label;
    return std::get<Literal>(t).lexical;
}

enum class Direction { Outgoing, Incoming };

inline std::string_view to_string(Direction d) {
    return d == Direction::Outgoing ? "outgoing" : "incoming";
}

// A directed, labelled one-hop relation attached to the focus entity.
struct CandidatePair {
    Direction direction;
    Iri predicate;
    std::optional<std::string> predicate_label;
    Term neighbor;
    std::optional<std::string> neighbor_label;

    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

struct KnowledgeGraph {
    std::vector<Triple> triples;
    // Keys are canonical term renderings; values index into triples.
    std::unordered_map<std::string, std::vector<std::size_t>> index_s;
    std::unordered_map<std::string, std::vector<std::size_t>> index_p;
    std::unordered_map<std::string, std::vector<std::size_t>> index_o;
    // IRI -> label lexical form, from rdfs:label triples with a literal
    // object. First label in triple order wins. Blank nodes are not indexed.
    std::unordered_map<std::string, std::string> label_index;
};

// ---------------------------------------------------------------------------
// N-Triples subset parser

namespace ntriples_detail {

struct Cursor {
    std::string_view line;
    std::size_t pos = 0;
    std::size_t lineno = 1;

    bool eol() const { return pos >= line.size(); }
    char peek() const { return line[pos]; }

    [[noreturn]] void fail(const std::string& reason) const {
        throw ParseError(lineno, reason);
    }

    void skip_ws() {
        while (!eol() && (peek() == ' ' || peek() == '\t')) ++pos;
    }

    void require_ws() {
        if (eol() || (peek() != ' ' && peek() != '\t'))
            fail("expected whitespace between terms");
        skip_ws();
    }

    Iri parse_iri() {
        // caller checked '<'
        ++pos;
        const auto end = line.find('>', pos);
        if (end == std::string_view::npos) fail("unterminated IRI");
        std::string value(line.substr(pos, end - pos));
        pos = end + 1;
        if (!is_valid_iri(value) || value.find('<') != std::string::npos ||
            value.find('"') != std::string::npos)
            fail("invalid IRI <" + value + ">");
        return Iri{std::move(value)};
    }

    BlankNode parse_bnode() {
        pos += 2;  // "_:"
        std::string label;
        while (!eol()) {
            const char c = peek();
            if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                (c >= '0' && c <= '9') || c == '_') {
                label.push_back(c);
                ++pos;
            } else {
                break;
            }
        }
        if (label.empty()) fail("empty blank node label");
        return BlankNode{std::move(label)};
    }

    Literal parse_literal() {
        ++pos;  // opening quote
        std::string lexical;
        for (;;) {
            if (eol()) fail("unterminated string literal");
            const char c = line[pos++];
            if (c == '"') break;
            if (c == '\\') {
                if (eol()) fail("dangling escape");
                const char e = line[pos++];
                switch (e) {
                    case '"': lexical.push_back('"'); break;
                    case '\\': lexical.push_back('\\'); break;
                    case 'n': lexical.push_back('\n'); break;
                    case 't': lexical.push_back('\t'); break;
                    default: fail(std::string("unsupported escape \\") + e);
                }
            } else {
                lexical.push_back(c);
            }
        }
        Literal lit{std::move(lexical), std::nullopt, std::nullopt};
        if (!eol() && peek() == '@') {
            ++pos;
            std::string tag;
            while (!eol()) {
                const char c = peek();
                if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '-') {
                    tag.push_back(c);
                    ++pos;
                } else {
                    break;
                }
            }
            if (tag.empty()) fail("empty language tag");
            lit.lang = std::move(tag);
        } else if (pos + 1 < line.size() && line[pos] == '^' && line[pos + 1] == '^') {
            pos += 2;
            if (eol() || peek() != '<') fail("expected <IRI> after ^^");
            lit.datatype = parse_iri();
        }
        return lit;
    }

    Term parse_object() {
        if (eol()) fail("missing object term");
        const char c = peek();
        if (c == '<') return parse_iri();
        if (c == '"') return parse_literal();
        if (c == '_' && pos + 1 < line.size() && line[pos + 1] == ':')
            return parse_bnode();
        fail("expected IRI, blank node or literal as object");
    }
};

} // namespace ntriples_detail

// Parses the whole document or throws ParseError; no partial results.
inline std::vector<Triple> parse_ntriples(std::string_view text) {
    std::vector<Triple> triples;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++lineno;
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start == text.size()) break;
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        ntriples_detail::Cursor cur{line, 0, lineno};
        cur.skip_ws();
        if (cur.eol() || cur.peek() == '#') continue;

        SubjectTerm subject;
        if (cur.peek() == '<') {
            subject = cur.parse_iri();
        } else if (cur.peek() == '_' && cur.pos + 1 < line.size() &&
                   line[cur.pos + 1] == ':') {
            subject = cur.parse_bnode();
        } else {
            cur.fail("expected IRI or blank node as subject");
        }
        cur.require_ws();
        if (cur.eol() || cur.peek() != '<') cur.fail("expected IRI as predicate");
        Iri predicate = cur.parse_iri();
        cur.require_ws();
        Term object = cur.parse_object();
        cur.skip_ws();
        if (cur.eol() || cur.peek() != '.') cur.fail("expected terminating '.'");
        ++cur.pos;
        cur.skip_ws();
        if (!cur.eol()) cur.fail("trailing characters after '.'");

        triples.push_back(Triple{std::move(subject), std::move(predicate),
                                 std::move(object)});
    }
    return triples;
}

// Round-trips through parse_ntriples.
inline std::string serialize_ntriples(const std::vector<Triple>& triples) {
    std::string out;
    for (const auto& t : triples) {
        out += render_subject(t.subject);
        out += " <" + t.predicate.value + "> ";
        out += render_term(t.object);
        out += " .\n";
    }
    return out;
}

// Builds all indexes; triple order is preserved and duplicates are retained.
inline KnowledgeGraph index_triples(std::vector<Triple> triples) {
    KnowledgeGraph g;
    g.triples = std::move(triples);
    for (std::size_t i = 0; i < g.triples.size(); ++i) {
        const Triple& t = g.triples[i];
        g.index_s[render_subject(t.subject)].push_back(i);
        g.index_p[t.predicate.value].push_back(i);
        g.index_o[render_term(t.object)].push_back(i);
        if (t.predicate.value == kRdfsLabel) {
            const auto* lit = std::get_if<Literal>(&t.object);
            const auto* subj = std::get_if<Iri>(&t.subject);
            if (lit && subj) g.label_index.emplace(subj->value, lit->lexical);
        }
    }
    return g;
}

inline std::optional<std::string> label_of(const KnowledgeGraph& g,
                                           std::string_view iri) {
    auto it = g.label_index.find(std::string(iri));
    if (it == g.label_index.end()) return std::nullopt;
    return it->second;
}

// Dedups and orders candidate pairs: Outgoing before Incoming, then by
// (predicate IRI, neighbor rendering). Shared by the offline and the remote
// one-hop paths so both honor the same contract.
inline std::vector<CandidatePair> normalize_pairs(std::vector<CandidatePair> pairs) {
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const CandidatePair& a, const CandidatePair& b) {
                         if (a.direction != b.direction)
                             return a.direction == Direction::Outgoing;
                         if (a.predicate.value != b.predicate.value)
                             return a.predicate.value < b.predicate.value;
                         return render_term(a.neighbor) < render_term(b.neighbor);
                     });
    std::vector<CandidatePair> out;
    for (auto& p : pairs) {
        if (!out.empty() && out.back().direction == p.direction &&
            out.back().predicate == p.predicate &&
            render_term(out.back().neighbor) == render_term(p.neighbor))
            continue;
        out.push_back(std::move(p));
    }
    return out;
}

// One-hop relations of `entity`: the deduplicated union of outgoing triples
// (entity as subject) and incoming triples (entity as object), with labels
// attached from the label index. rdfs:label edges are metadata, not
// relations, and are excluded.
inline std::vector<CandidatePair> one_hop(const KnowledgeGraph& g, const Iri& entity) {
    std::vector<CandidatePair> pairs;
    const std::string key = "<" + entity.value + ">";

    auto neighbor_label = [&](const Term& n) -> std::optional<std::string> {
        if (const auto* iri = std::get_if<Iri>(&n)) return label_of(g, iri->value);
        return std::nullopt;
    };

    if (auto it = g.index_s.find(key); it != g.index_s.end()) {
        for (std::size_t i : it->second) {
            const Triple& t = g.triples[i];
            if (t.predicate.value == kRdfsLabel) continue;
            pairs.push_back(CandidatePair{Direction::Outgoing, t.predicate,
                                          label_of(g, t.predicate.value), t.object,
                                          neighbor_label(t.object)});
        }
    }
    if (auto it = g.index_o.find(key); it != g.index_o.end()) {
        for (std::size_t i : it->second) {
            const Triple& t = g.triples[i];
            if (t.predicate.value == kRdfsLabel) continue;
            Term neighbor = subject_to_term(t.subject);
            auto label = neighbor_label(neighbor);
            pairs.push_back(CandidatePair{Direction::Incoming, t.predicate,
                                          label_of(g, t.predicate.value),
                                          std::move(neighbor), std::move(label)});
        }
    }
    return normalize_pairs(std::move(pairs));
}

} // namespace kgnav
