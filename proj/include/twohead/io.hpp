// Document formats. Automata and grammars are stored as JSON with
// order-insensitive keys; read1/read2 are one-character strings or null
// (null = lambda). Canonical serialization sorts states, final states and
// transitions by (from, read1, read2, to) with null before any letter.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "twohead/analyze.hpp"
#include "twohead/automaton.hpp"
#include "twohead/grammar.hpp"
#include "twohead/oracle.hpp"
#include "twohead/simulate.hpp"

namespace twohead {

namespace detail {

inline nlohmann::json parse_document(const std::string& text, const char* what) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw ParseError(std::string("not a valid ") + what + " document");
    return doc;
}

inline std::string require_string(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_string())
        throw ParseError(std::string("missing or non-string field: ") + key);
    return doc[key].get<std::string>();
}

inline std::vector<std::string> require_string_array(const nlohmann::json& doc,
                                                     const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw ParseError(std::string("missing or non-array field: ") + key);
    std::vector<std::string> out;
    for (const auto& item : doc[key]) {
        if (!item.is_string())
            throw ParseError(std::string("non-string entry in: ") + key);
        out.push_back(item.get<std::string>());
    }
    return out;
}

inline std::vector<Letter> parse_letters(const nlohmann::json& doc, const char* key) {
    std::vector<Letter> letters;
    for (const std::string& s : require_string_array(doc, key)) {
        if (s.size() != 1)
            throw ParseError(std::string(key) + " entries must be single characters");
        letters.push_back(s[0]);
    }
    return letters;
}

inline std::optional<Letter> parse_read_part(const nlohmann::json& value, const char* key) {
    if (value.is_null())
        return std::nullopt;
    if (!value.is_string() || value.get<std::string>().size() != 1)
        throw ParseError(std::string(key) + " must be a one-character string or null");
    return value.get<std::string>()[0];
}

inline nlohmann::json read_part_json(const std::optional<Letter>& part) {
    return part ? nlohmann::json(std::string(1, *part)) : nlohmann::json(nullptr);
}

}  // namespace detail

inline Automaton parse_automaton(const std::string& text) {
    nlohmann::json doc = detail::parse_document(text, "automaton");

    std::vector<std::string> states = detail::require_string_array(doc, "states");
    std::vector<Letter> alphabet = detail::parse_letters(doc, "alphabet");
    std::string initial = detail::require_string(doc, "initial");
    std::vector<std::string> finals = detail::require_string_array(doc, "final");

    if (!doc.contains("transitions") || !doc["transitions"].is_array())
        throw ParseError("missing or non-array field: transitions");
    std::vector<Transition> transitions;
    for (const auto& entry : doc["transitions"]) {
        if (!entry.is_object())
            throw ParseError("transition entries must be objects");
        Transition t;
        t.from = detail::require_string(entry, "from");
        t.to = detail::require_string(entry, "to");
        if (!entry.contains("read1") || !entry.contains("read2"))
            throw ParseError("transitions need read1 and read2");
        t.read.first = detail::parse_read_part(entry["read1"], "read1");
        t.read.second = detail::parse_read_part(entry["read2"], "read2");
        transitions.push_back(std::move(t));
    }
    return Automaton(std::move(states), std::move(alphabet), std::move(initial),
                     std::move(finals), std::move(transitions));
}

inline nlohmann::json to_json(const Automaton& A) {
    nlohmann::json doc;
    doc["states"] = A.sorted_states();
    nlohmann::json alphabet = nlohmann::json::array();
    for (Letter a : A.alphabet())
        alphabet.push_back(std::string(1, a));
    doc["alphabet"] = alphabet;
    doc["initial"] = A.initial();
    doc["final"] = A.finals();
    nlohmann::json transitions = nlohmann::json::array();
    for (const Transition& t : A.transitions()) {
        nlohmann::json entry;
        entry["from"] = t.from;
        entry["read1"] = detail::read_part_json(t.read.first);
        entry["read2"] = detail::read_part_json(t.read.second);
        entry["to"] = t.to;
        transitions.push_back(entry);
    }
    doc["transitions"] = transitions;
    return doc;
}

inline std::string serialize(const Automaton& A) { return to_json(A).dump(2) + "\n"; }

inline Grammar parse_grammar(const std::string& text) {
    nlohmann::json doc = detail::parse_document(text, "grammar");

    std::vector<std::string> nonterminals = detail::require_string_array(doc, "nonterminals");
    std::vector<Letter> terminals = detail::parse_letters(doc, "terminals");
    std::string start = detail::require_string(doc, "start");

    if (!doc.contains("rules") || !doc["rules"].is_array())
        throw ParseError("missing or non-array field: rules");
    std::vector<Rule> rules;
    for (const auto& entry : doc["rules"]) {
        if (!entry.is_object())
            throw ParseError("rule entries must be objects");
        Rule r;
        r.lhs = detail::require_string(entry, "lhs");
        if (entry.value("lambda", false)) {
            rules.push_back(std::move(r));
            continue;
        }
        std::string first = detail::require_string(entry, "first");
        if (first.size() != 1)
            throw ParseError("rule field 'first' must be a single terminal character");
        RuleBody body;
        body.first = first[0];
        body.next = detail::require_string(entry, "next");
        body.suffix = entry.contains("suffix") ? detail::require_string(entry, "suffix") : "";
        r.body = std::move(body);
        rules.push_back(std::move(r));
    }
    return Grammar(std::move(nonterminals), std::move(terminals), std::move(start),
                   std::move(rules));
}

inline nlohmann::json to_json(const Grammar& G) {
    nlohmann::json doc;
    std::vector<std::string> nts = G.nonterminals();
    std::sort(nts.begin(), nts.end());
    doc["nonterminals"] = nts;
    nlohmann::json terminals = nlohmann::json::array();
    for (Letter a : G.terminals())
        terminals.push_back(std::string(1, a));
    doc["terminals"] = terminals;
    doc["start"] = G.start();
    nlohmann::json rules = nlohmann::json::array();
    for (const Rule& r : G.rules()) {
        nlohmann::json entry;
        entry["lhs"] = r.lhs;
        if (!r.body) {
            entry["lambda"] = true;
        } else {
            entry["first"] = std::string(1, r.body->first);
            entry["next"] = r.body->next;
            entry["suffix"] = r.body->suffix;
        }
        rules.push_back(entry);
    }
    doc["rules"] = rules;
    return doc;
}

inline std::string serialize(const Grammar& G) { return to_json(G).dump(2) + "\n"; }

inline nlohmann::json to_json(const PropertyReport& report) {
    nlohmann::json doc;
    doc["property"] = report.property;
    doc["verdict"] = to_string(report.verdict);
    nlohmann::json witnesses = nlohmann::json::array();
    for (const Witness& w : report.witnesses)
        witnesses.push_back({{"kind", w.kind}, {"detail", w.detail}});
    doc["witnesses"] = witnesses;
    doc["notes"] = report.notes;
    return doc;
}

inline nlohmann::json to_json(const Automaton& A, std::string_view word, const Trace& trace) {
    nlohmann::json doc;
    doc["verdict"] = to_string(trace.verdict);
    nlohmann::json steps = nlohmann::json::array();
    for (const TraceStep& s : trace.steps) {
        nlohmann::json entry;
        entry["state"] = A.states()[static_cast<size_t>(s.config.state)];
        entry["consumed-left"] = std::string(word.substr(0, static_cast<size_t>(s.config.left)));
        entry["window"] = std::string(word.substr(
            static_cast<size_t>(s.config.left),
            static_cast<size_t>(s.config.right - s.config.left)));
        entry["consumed-right"] = std::string(word.substr(static_cast<size_t>(s.config.right)));
        if (s.transition) {
            const ReadPair& read = A.transition(*s.transition).read;
            entry["read1"] = detail::read_part_json(read.first);
            entry["read2"] = detail::read_part_json(read.second);
        }
        steps.push_back(entry);
    }
    doc["steps"] = steps;
    return doc;
}

inline nlohmann::json to_json(const SearchReport& report) {
    nlohmann::json doc;
    doc["target"] = report.target;
    doc["state-bound"] = report.state_bound;
    doc["word-bound"] = report.word_bound;
    doc["filters"] = report.filters;
    doc["machines-examined"] = report.machines_examined;
    doc["outcome"] =
        report.outcome == SearchReport::Outcome::exhausted ? "exhausted" : "candidates";
    nlohmann::json candidates = nlohmann::json::array();
    for (const Automaton& A : report.candidates)
        candidates.push_back(to_json(A));
    doc["candidates"] = candidates;
    return doc;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path);
    out << content;
}

inline Automaton load_automaton(const std::string& path) {
    return parse_automaton(read_file(path));
}

inline Grammar load_grammar(const std::string& path) {
    return parse_grammar(read_file(path));
}

}  // namespace twohead
