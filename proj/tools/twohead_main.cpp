// Command-line front end. Exit codes double as verdicts so shell harnesses
// can drive the toolkit without parsing output:
//   0 success / accept / property holds
//   1 reject / property fails / precondition not met
//   2 usage error
//   3 invalid input file
//   4 resource budget exceeded

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twohead/analyze.hpp"
#include "twohead/automaton.hpp"
#include "twohead/corpus.hpp"
#include "twohead/grammar.hpp"
#include "twohead/io.hpp"
#include "twohead/oracle.hpp"
#include "twohead/simulate.hpp"
#include "twohead/transform.hpp"

namespace {

using namespace twohead;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitBudget = 4;

// The empty word is shell-hostile; accept the two-character literal "" and
// an --empty flag.
std::string decode_word(const std::string& arg, bool empty_flag) {
    if (empty_flag || arg == "\"\"")
        return "";
    return arg;
}

bool is_doc(const std::string& format) { return format == "doc"; }

void emit(const std::string& format, const nlohmann::json& doc, const std::string& text) {
    if (is_doc(format))
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

// A comparison side is a builtin predicate, an automaton document or a
// grammar document (recognized by its "rules" key; grammars are
// materialized up to the comparison bound). The returned view owns the
// loaded machine.
LanguageRef resolve_language(const std::string& source, int grammar_bound) {
    if (source.rfind("builtin:", 0) == 0)
        return make_language(builtin(source.substr(8)).predicate);
    std::string text = read_file(source);
    nlohmann::json probe = nlohmann::json::parse(text, nullptr, false);
    if (probe.is_object() && probe.contains("rules"))
        return make_language(parse_grammar(text), grammar_bound, source);
    auto machine = std::make_shared<Automaton>(parse_automaton(text));
    return LanguageRef{source, machine->alphabet(),
                       [machine](std::string_view w) { return accepts(*machine, w); }};
}

std::uint64_t default_machine_budget() {
    if (const char* env = std::getenv("TWOHEAD_MAX_MACHINES"); env && *env)
        return std::strtoull(env, nullptr, 10);
    return SearchBudget{}.max_machines;
}

int cmd_run(const std::string& file, const std::string& word_arg, bool empty_flag,
            bool trace, const std::string& format) {
    Automaton A = load_automaton(file);
    std::string word = decode_word(word_arg, empty_flag);
    if (trace) {
        Trace t = run_deterministic(A, word);
        emit(format, to_json(A, word, t), render_trace(A, word, t));
        return t.verdict == TraceVerdict::accepted ? kExitAccept : kExitReject;
    }
    bool ok = accepts(A, word);
    nlohmann::json doc{{"word", word}, {"verdict", ok ? "accepted" : "rejected"}};
    emit(format, doc, std::string(ok ? "accepted" : "rejected") + "\n");
    return ok ? kExitAccept : kExitReject;
}

int cmd_check(const std::string& file, const std::string& property, int oracle_bound,
              bool reachable_mode, const std::string& format) {
    Automaton A = load_automaton(file);

    auto classification_text = [&](const StateClassification& c) {
        std::string out = to_text(c.report);
        for (const auto& [name, cls] : c.classes)
            out += "  " + name + ": " + to_string(cls) + "\n";
        return out;
    };
    auto classification_json = [&](const StateClassification& c) {
        nlohmann::json doc = to_json(c.report);
        nlohmann::json classes;
        for (const auto& [name, cls] : c.classes)
            classes[name] = to_string(cls);
        doc["classes"] = classes;
        return doc;
    };

    if (property.empty()) {
        std::string text;
        nlohmann::json doc;
        for (const PropertyReport& r :
             {check_deterministic(A), check_backward_deterministic(A), check_reversible(A),
              check_one_limited(A), check_complete(A)}) {
            text += to_text(r);
            doc[r.property] = to_json(r);
        }
        StateClassification cls = classify_states(A);
        text += classification_text(cls);
        doc["state-classification"] = classification_json(cls);
        GraphAnalysis graph = graph_analysis(A);
        text += to_text(graph.report);
        doc["strongly-connected"] = to_json(graph.report);
        emit(format, doc, text);
        return kExitAccept;
    }

    PropertyReport report;
    nlohmann::json doc;
    std::string text;
    if (property == "det")
        report = check_deterministic(A);
    else if (property == "rev")
        report = check_reversible(A);
    else if (property == "1lim")
        report = check_one_limited(A);
    else if (property == "complete")
        report = check_complete(A);
    else if (property == "det-oracle")
        report = semantic_determinism_oracle(A, oracle_bound);
    else if (property == "bwd-oracle")
        report = semantic_backward_oracle(
            A, oracle_bound,
            reachable_mode ? BackwardMode::reachable : BackwardMode::unrestricted);
    else if (property == "classify") {
        StateClassification cls = classify_states(A);
        emit(format, classification_json(cls), classification_text(cls));
        return cls.report.ok() ? kExitAccept : kExitReject;
    } else if (property == "graph") {
        GraphAnalysis graph = graph_analysis(A);
        emit(format, to_json(graph.report), to_text(graph.report));
        return graph.report.ok() ? kExitAccept : kExitReject;
    } else {
        throw CLI::ValidationError(
            "--property",
            "expected one of det|rev|1lim|complete|classify|graph|det-oracle|bwd-oracle");
    }
    emit(format, to_json(report), to_text(report));
    return report.ok() ? kExitAccept : kExitReject;
}

int cmd_enum(const std::string& file, int max_len, const std::string& format) {
    Automaton A = load_automaton(file);
    std::vector<std::string> words = enumerate_language(A, max_len);
    nlohmann::json doc{{"max-len", max_len}, {"words", words}};
    std::string text;
    for (const std::string& w : words)
        text += to_string(std::string_view(w)) + "\n";
    emit(format, doc, text);
    return kExitAccept;
}

int cmd_compare(const std::string& left, const std::string& right, int max_len,
                const std::string& format) {
    LanguageRef x = resolve_language(left, max_len);
    LanguageRef y = resolve_language(right, max_len);
    PropertyReport report = language_equal(x, y, max_len);
    emit(format, to_json(report), to_text(report));
    return report.ok() ? kExitAccept : kExitReject;
}

int cmd_transform(const std::string& which, const std::string& file,
                  const std::string& out_path) {
    Automaton A = load_automaton(file);
    std::string note;
    Automaton result = [&] {
        if (which == "reverse")
            return reverse(A);
        if (which == "complement")
            return complement_complete(A);
        if (check_reversible(A).ok())
            note = "input is reversible; lambda-pair elimination leaves it unchanged\n";
        return eliminate_lambda_pairs(A);
    }();
    if (out_path.empty())
        std::cout << serialize(result);
    else
        write_file(out_path, serialize(result));
    std::cout << note;
    return kExitAccept;
}

int cmd_grammar_check(const std::string& file, const std::string& format) {
    Grammar G = load_grammar(file);
    PropertyReport report = check_ldlg(G);
    emit(format, to_json(report), to_text(report));
    return report.ok() ? kExitAccept : kExitReject;
}

int cmd_grammar_generate(const std::string& file, int max_len, const std::string& format) {
    Grammar G = load_grammar(file);
    std::vector<std::string> words = generate(G, max_len);
    nlohmann::json doc{{"max-len", max_len}, {"words", words}};
    std::string text;
    for (const std::string& w : words)
        text += to_string(std::string_view(w)) + "\n";
    emit(format, doc, text);
    return kExitAccept;
}

int cmd_grammar_compile(const std::string& file, const std::string& out_path) {
    Grammar G = load_grammar(file);
    Automaton A = grammar_to_automaton(G);
    if (out_path.empty())
        std::cout << serialize(A);
    else
        write_file(out_path, serialize(A));
    return kExitAccept;
}

int cmd_search(const std::string& target, int states, int max_len,
               const std::vector<std::string>& filter_names, std::uint64_t max_machines,
               long max_millis, const std::string& format) {
    if (target.rfind("builtin:", 0) != 0)
        throw CLI::ValidationError("--target", "expected builtin:NAME");
    CorpusEntry entry = builtin(target.substr(8));

    FilterSet filters;
    for (const std::string& f : filter_names) {
        if (f == "det" || f == "deterministic")
            filters.deterministic = true;
        else if (f == "rev" || f == "reversible")
            filters.reversible = true;
        else if (f == "1lim" || f == "one-limited")
            filters.one_limited = true;
        else if (f == "complete")
            filters.complete = true;
        else
            throw CLI::ValidationError("--filter", "unknown filter: " + f);
    }

    SearchBudget budget;
    budget.max_machines = max_machines;
    budget.max_time = std::chrono::milliseconds(max_millis);
    SearchReport report = search_automata(entry.predicate, states, max_len, filters, budget);

    std::string text = to_text(report);
    for (const Automaton& c : report.candidates)
        text += serialize(c);
    emit(format, to_json(report), text);
    return kExitAccept;
}

int cmd_corpus_list() {
    for (const std::string& name : corpus_names())
        std::cout << name << "\n";
    return kExitAccept;
}

int cmd_corpus_show(const std::string& name, const std::string& format) {
    CorpusEntry entry = builtin(name);
    nlohmann::json profile;
    std::string text = "name: " + entry.name + "\nlanguage: " + entry.predicate.name +
                       "\nnote: " + entry.note + "\nprofile:\n";
    for (const auto& [property, expected] : entry.profile) {
        profile[property] = expected;
        text += "  " + property + ": " + (expected ? "true" : "false") + "\n";
    }
    nlohmann::json doc{{"name", entry.name},
                       {"language", entry.predicate.name},
                       {"note", entry.note},
                       {"profile", profile}};
    if (entry.automaton) {
        doc["automaton"] = to_json(*entry.automaton);
        text += serialize(*entry.automaton);
    }
    if (entry.grammar) {
        doc["grammar"] = to_json(*entry.grammar);
        text += serialize(*entry.grammar);
    }
    emit(format, doc, text);
    return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for reversible 2-head finite automata"};
    app.require_subcommand(1);

    std::string file, word, out_path, target, property, name;
    std::string format = "text";
    bool trace = false, empty_flag = false, reachable_mode = false;
    int max_len = 8, states = 2;
    std::uint64_t max_machines = default_machine_budget();
    long max_millis = 0;
    std::vector<std::string> filter_names;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or doc")
            ->check(CLI::IsMember({"text", "doc"}));
    };

    CLI::App* run = app.add_subcommand("run", "run an automaton on a word");
    run->add_option("file", file)->required();
    run->add_option("word", word, "input word; \"\" or --empty for the empty word");
    run->add_flag("--trace", trace, "print the deterministic computation");
    run->add_flag("--empty", empty_flag, "use the empty input word");
    add_format(run);

    CLI::App* check = app.add_subcommand("check", "run structural property checkers");
    check->add_option("file", file)->required();
    check->add_option("--property", property,
                      "det|rev|1lim|complete|classify|graph|det-oracle|bwd-oracle");
    check->add_option("--max-len", max_len, "word bound for the *-oracle properties")
        ->default_val(6);
    check->add_flag("--reachable", reachable_mode,
                    "bwd-oracle: count only predecessors reachable on the same input");
    add_format(check);

    CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate the accepted words");
    enum_cmd->add_option("file", file)->required();
    enum_cmd->add_option("--max-len", max_len, "length bound")->required();
    add_format(enum_cmd);

    CLI::App* compare = app.add_subcommand("compare", "bounded language comparison");
    compare->add_option("left", file)->required();
    compare->add_option("right", word, "file or builtin:NAME")->required();
    compare->add_option("--max-len", max_len, "length bound")->required();
    add_format(compare);

    CLI::App* rev_cmd = app.add_subcommand("reverse", "head-interchange reversal");
    rev_cmd->add_option("file", file)->required();
    rev_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* comp_cmd =
        app.add_subcommand("complement", "complement a complete reversible automaton");
    comp_cmd->add_option("file", file)->required();
    comp_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* elim_cmd =
        app.add_subcommand("elim-lambda", "remove (lambda,lambda) transitions");
    elim_cmd->add_option("file", file)->required();
    elim_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* grammar = app.add_subcommand("grammar", "left deterministic linear grammars");
    grammar->require_subcommand(1);
    CLI::App* gcheck = grammar->add_subcommand("check", "verify left determinism");
    gcheck->add_option("file", file)->required();
    add_format(gcheck);
    CLI::App* ggen = grammar->add_subcommand("generate", "enumerate derivable words");
    ggen->add_option("file", file)->required();
    ggen->add_option("--max-len", max_len, "length bound")->required();
    add_format(ggen);
    CLI::App* gcompile = grammar->add_subcommand("compile", "compile to a 2-head automaton");
    gcompile->add_option("file", file)->required();
    gcompile->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* search = app.add_subcommand("search", "exhaustive small-automaton search");
    search->add_option("--target", target, "builtin:NAME")->required();
    search->add_option("--states", states, "state bound")->required();
    search->add_option("--max-len", max_len, "word bound")->required();
    search->add_option("--filter", filter_names, "det,rev,1lim,complete")->delimiter(',');
    search->add_option("--max-machines", max_machines,
                       "machine budget (default $TWOHEAD_MAX_MACHINES)");
    search->add_option("--max-millis", max_millis, "wall-time budget hint");
    add_format(search);

    CLI::App* corpus = app.add_subcommand("corpus", "built-in witness languages");
    corpus->require_subcommand(1);
    corpus->add_subcommand("list", "list entry names");
    CLI::App* show = corpus->add_subcommand("show", "print one entry");
    show->add_option("name", name)->required();
    add_format(show);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (run->parsed())
            return cmd_run(file, word, empty_flag, trace, format);
        if (check->parsed())
            return cmd_check(file, property, max_len, reachable_mode, format);
        if (enum_cmd->parsed())
            return cmd_enum(file, max_len, format);
        if (compare->parsed())
            return cmd_compare(file, word, max_len, format);
        if (rev_cmd->parsed())
            return cmd_transform("reverse", file, out_path);
        if (comp_cmd->parsed())
            return cmd_transform("complement", file, out_path);
        if (elim_cmd->parsed())
            return cmd_transform("elim-lambda", file, out_path);
        if (grammar->parsed()) {
            if (gcheck->parsed())
                return cmd_grammar_check(file, format);
            if (ggen->parsed())
                return cmd_grammar_generate(file, max_len, format);
            return cmd_grammar_compile(file, out_path);
        }
        if (search->parsed())
            return cmd_search(target, states, max_len, filter_names, max_machines,
                              max_millis, format);
        if (corpus->parsed())
            return corpus->get_subcommand("list")->parsed() ? cmd_corpus_list()
                                                            : cmd_corpus_show(name, format);
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceededError& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition not met (" << e.property() << "): " << e.what() << "\n";
        return kExitReject;
    } catch (const NondeterminismError& e) {
        std::cerr << e.what() << "\n";
        return kExitReject;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    }
}
