#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circpat/bijections.hpp"
#include "circpat/enumerate.hpp"
#include "circpat/formulas.hpp"
#include "circpat/verify.hpp"

/*
 * circpat: counts, listings and cross-checks for pattern avoidance in
 * circular permutations.
 *
 * Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
 * 3 refused resource bound, 4 I/O failure.
 */

namespace {

using circpat::BigInt;
using circpat::Bits;
using circpat::CircularPermutation;
using circpat::LinearWord;
using circpat::Pattern;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitRefused = 3;
constexpr int kExitIo = 4;

constexpr int kHardBruteCeiling = 11;

struct RefusedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration cost is (n-1)! words; past the cap we refuse instead of hanging.
void check_brute_bound(int n, int max_brute_n) {
    const int cap = std::min(max_brute_n, kHardBruteCeiling);
    if (n <= cap) return;
    std::ostringstream msg;
    msg << "refusing brute-force enumeration at n=" << n << " (cap " << cap << ")";
    if (n <= kHardBruteCeiling) {
        msg << "; raise --max-brute-n to allow up to " << kHardBruteCeiling;
    } else {
        msg << "; the hard ceiling is " << kHardBruteCeiling
            << ", use --method formula for larger n";
    }
    throw RefusedError(msg.str());
}

std::vector<Pattern> parse_pattern_list(const std::vector<std::string>& patterns,
                                        const std::string& joined) {
    std::vector<Pattern> out;
    for (const std::string& p : patterns) out.push_back(Pattern::from_string(p));
    if (!joined.empty()) {
        std::istringstream in(joined);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (!item.empty()) out.push_back(Pattern::from_string(item));
        }
    }
    if (out.empty()) throw std::invalid_argument("no pattern given");
    return out;
}

// ---------------------------------------------------------------- count ----

struct CountArgs {
    std::string pattern;
    int n = 0;
    std::string method = "formula";
    int max_brute_n = 9;
    int workers = 1;
};

int run_count(const CountArgs& args) {
    const Pattern p = Pattern::from_string(args.pattern);
    if (args.method == "formula") {
        std::cout << circpat::count_for_pattern(args.n, p).count << "\n";
        return kExitOk;
    }
    if (args.method == "recurrence") {
        std::cout << circpat::count_recurrence_for_pattern(args.n, p) << "\n";
        return kExitOk;
    }
    if (args.method == "brute") {
        check_brute_bound(args.n, args.max_brute_n);
        std::cout << circpat::count_avoiders(args.n, {p}, args.workers).count << "\n";
        return kExitOk;
    }
    if (args.method == "all") {
        const BigInt formula = circpat::count_for_pattern(args.n, p).count;
        const BigInt rec = circpat::count_recurrence_for_pattern(args.n, p);
        check_brute_bound(args.n, args.max_brute_n);
        const BigInt brute = circpat::count_avoiders(args.n, {p}, args.workers).count;
        std::cout << "formula " << formula << "\n";
        std::cout << "recurrence " << rec << "\n";
        std::cout << "brute " << brute << "\n";
        if (formula == rec && rec == brute) {
            std::cout << "match\n";
            return kExitOk;
        }
        std::cout << "MISMATCH\n";
        return kExitMismatch;
    }
    throw std::invalid_argument("unknown method '" + args.method + "'");
}

// ----------------------------------------------------------------- list ----

struct ListArgs {
    std::vector<std::string> patterns;
    std::string joined;
    int n = 0;
    int max_brute_n = 9;
};

int run_list(const ListArgs& args) {
    const auto ps = parse_pattern_list(args.patterns, args.joined);
    check_brute_bound(args.n, args.max_brute_n);
    for (const CircularPermutation& c : circpat::list_avoiders(args.n, ps)) {
        std::cout << c.str() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- table ----

struct TableArgs {
    std::string joined;
    std::vector<std::string> patterns;
    int n_max = 0;
    std::string format = "csv";
    std::string output;
    int max_brute_n = 9;
    int workers = 1;
};

struct TableRow {
    int n;
    std::string pattern;
    BigInt formula;
    std::optional<BigInt> brute;
    std::optional<bool> match;
};

int run_table(const TableArgs& args) {
    const auto ps = parse_pattern_list(args.patterns, args.joined);
    if (args.format != "csv" && args.format != "json" && args.format != "b-file") {
        throw std::invalid_argument("format must be csv, json or b-file");
    }
    if (args.format == "b-file" && ps.size() != 1) {
        throw std::invalid_argument("b-file output takes exactly one pattern");
    }
    if (args.n_max < 1) throw std::invalid_argument("--n-max must be positive");

    const int brute_cap = std::min(args.max_brute_n, kHardBruteCeiling);
    std::vector<TableRow> rows;
    for (const Pattern& p : ps) {
        for (int n = 1; n <= args.n_max; ++n) {
            TableRow row{n, p.str(), circpat::count_for_pattern(n, p).count, {}, {}};
            if (n <= brute_cap) {
                row.brute = circpat::count_avoiders(n, {p}, args.workers).count;
                row.match = (*row.brute == row.formula);
            }
            rows.push_back(std::move(row));
        }
    }

    std::ostringstream body;
    if (args.format == "csv") {
        body << "n,pattern,formula,brute,match\n";
        for (const TableRow& r : rows) {
            body << r.n << "," << r.pattern << "," << r.formula << ",";
            if (r.brute) body << *r.brute;
            body << ",";
            if (r.match) body << (*r.match ? "yes" : "no");
            body << "\n";
        }
    } else if (args.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const TableRow& r : rows) {
            nlohmann::ordered_json obj;
            obj["n"] = r.n;
            obj["pattern"] = r.pattern;
            obj["formula"] = r.formula.str();
            obj["brute"] = r.brute ? nlohmann::ordered_json(r.brute->str())
                                   : nlohmann::ordered_json(nullptr);
            obj["match"] = r.match ? nlohmann::ordered_json(*r.match)
                                   : nlohmann::ordered_json(nullptr);
            arr.push_back(std::move(obj));
        }
        body << arr.dump(2) << "\n";
    } else {  // b-file: "n count" per line, ascending from n=1
        for (const TableRow& r : rows) body << r.n << " " << r.formula << "\n";
    }

    bool mismatch = false;
    for (const TableRow& r : rows) {
        if (r.match && !*r.match) mismatch = true;
    }

    if (args.output.empty()) {
        std::cout << body.str();
        if (!std::cout) {
            std::cerr << "error: failed writing to standard output\n";
            return kExitIo;
        }
    } else {
        std::ofstream out(args.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << args.output << "' for writing\n";
            return kExitIo;
        }
        out << body.str();
        out.flush();
        if (!out) {
            std::cerr << "error: failed writing to '" << args.output << "'\n";
            return kExitIo;
        }
    }
    return mismatch ? kExitMismatch : kExitOk;
}

// --------------------------------------------------------------- verify ----

struct VerifyArgs {
    int n_max = 8;
    int max_brute_n = 9;
};

int run_verify(const VerifyArgs& args) {
    if (args.n_max < 1) throw std::invalid_argument("--n-max must be positive");
    check_brute_bound(args.n_max, args.max_brute_n);
    const auto results = circpat::verify_all(args.n_max);
    for (const auto& r : results) {
        std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.detail << ")\n";
    }
    if (circpat::all_pass(results)) {
        std::cout << "verify: all " << results.size() << " suites passed (n_max=" << args.n_max
                  << ")\n";
        return kExitOk;
    }
    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cout << "verify: " << failed << " suite(s) FAILED\n";
    return kExitMismatch;
}

// ------------------------------------------------------------- bijection ----

struct BijectionArgs {
    std::string family;
    std::string direction;
    std::string input;
};

int run_bijection(const BijectionArgs& args) {
    const bool forward = args.direction == "forward";
    if (!forward && args.direction != "inverse") {
        throw std::invalid_argument("direction must be forward or inverse");
    }
    const bool is_minmax = args.family == "minmax" || args.family == "prop1";
    const bool is_1342 = args.family == "1342" || args.family == "circ1342" ||
                         args.family == "thm2";
    if (!is_minmax && !is_1342) {
        throw std::invalid_argument("family must be minmax or 1342");
    }

    if (is_minmax) {
        if (forward) {
            const LinearWord w = circpat::minmax_bits_to_perm(circpat::parse_bits(args.input));
            std::cout << circpat::word_str(w) << "\n";
            const bool ok = !circpat::contains_linear(w, Pattern::from_string("213")) &&
                            !circpat::contains_linear(w, Pattern::from_string("231"));
            std::cout << "avoids 213 231: " << (ok ? "yes" : "NO") << "\n";
            return ok ? kExitOk : kExitMismatch;
        }
        const Bits bits = circpat::minmax_perm_to_bits(circpat::parse_word(args.input));
        std::cout << circpat::bits_str(bits) << "\n";
        return kExitOk;
    }

    if (forward) {
        const CircularPermutation c =
            circpat::code_to_avoider_1342(circpat::parse_bits(args.input));
        std::cout << c.str() << "\n";
        const bool ok = !circpat::contains_circular(c, Pattern::from_string("1342"));
        std::cout << "avoids 1342: " << (ok ? "yes" : "NO") << "\n";
        return ok ? kExitOk : kExitMismatch;
    }
    const CircularPermutation c = circpat::canonicalize(circpat::parse_word(args.input));
    std::cout << circpat::bits_str(circpat::avoider_1342_to_code(c)) << "\n";
    return kExitOk;
}

// -------------------------------------------------------------- classes ----

int run_classes(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("--k must lie in 1..6");
    const auto classes = circpat::pattern_classes(k);

    // Count unordered reversal pairs (a self-paired orbit counts once).
    int pairs = 0;
    for (const auto& cls : classes) {
        if (cls.representative.str() <= cls.reversal_partner_representative.str()) ++pairs;
    }
    std::cout << classes.size() << " rotation orbit" << (classes.size() == 1 ? "" : "s") << ", "
              << pairs << " reversal pair" << (pairs == 1 ? "" : "s") << "\n";
    for (const auto& cls : classes) {
        std::cout << "orbit " << cls.representative.str() << ":";
        for (const Pattern& p : cls.rotation_orbit) std::cout << " " << p.str();
        std::cout << "\n";
    }
    for (const auto& cls : classes) {
        if (cls.representative.str() <= cls.reversal_partner_representative.str()) {
            std::cout << "pair " << cls.representative.str() << " "
                      << cls.reversal_partner_representative.str() << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------- occurrences ----

int run_occurrences(const std::string& word_text, const std::string& pattern_text) {
    const CircularPermutation c = circpat::canonicalize(circpat::parse_word(word_text));
    const Pattern p = Pattern::from_string(pattern_text);
    std::cout << circpat::count_occurrences_circular(c, p) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern avoidance in circular permutations"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count avoiders of one pattern");
    count->add_option("--pattern", count_args.pattern, "pattern, e.g. 1324")->required();
    count->add_option("--n", count_args.n, "size of the circular permutations")->required();
    count->add_option("--method", count_args.method, "formula | recurrence | brute | all");
    count->add_option("--max-brute-n", count_args.max_brute_n, "largest n enumerated (cap 11)");
    count->add_option("--workers", count_args.workers, "threads for brute-force counting");

    ListArgs list_args;
    auto* list = app.add_subcommand("list", "list avoiders in lexicographic order");
    list->add_option("--pattern", list_args.patterns, "pattern (repeatable)");
    list->add_option("--patterns", list_args.joined, "comma-separated patterns");
    list->add_option("--n", list_args.n, "size of the circular permutations")->required();
    list->add_option("--max-brute-n", list_args.max_brute_n, "largest n enumerated (cap 11)");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "closed-form counts, optionally cross-checked");
    table->add_option("--patterns", table_args.joined, "comma-separated patterns");
    table->add_option("--pattern", table_args.patterns, "pattern (repeatable)");
    table->add_option("--n-max", table_args.n_max, "table rows run n = 1..n-max")->required();
    table->add_option("--format", table_args.format, "csv | json | b-file");
    table->add_option("--output", table_args.output, "write to a file instead of stdout");
    table->add_option("--max-brute-n", table_args.max_brute_n,
                      "largest n given a brute-force column (cap 11)");
    table->add_option("--workers", table_args.workers, "threads for brute-force counting");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run every formula/bijection cross-check");
    verify->add_option("--n-max", verify_args.n_max, "verify up to this n");
    verify->add_option("--max-brute-n", verify_args.max_brute_n, "enumeration cap (hard 11)");

    BijectionArgs bij_args;
    auto* bijection = app.add_subcommand("bijection", "apply an encoding map");
    bijection
        ->add_option("family", bij_args.family,
                     "minmax (bits to {213,231}-avoider; alias prop1) or "
                     "1342 (code word to 1342-avoider; alias thm2)")
        ->required();
    bijection->add_option("direction", bij_args.direction, "forward | inverse")->required();
    bijection->add_option("input", bij_args.input, "bit string (forward) or word (inverse)")
        ->required();

    int classes_k = 0;
    auto* classes = app.add_subcommand("classes", "rotation orbits and reversal pairs");
    classes->add_option("--k", classes_k, "pattern length (1..6)")->required();

    std::string occ_word, occ_pattern;
    auto* occurrences = app.add_subcommand("occurrences", "count occurrences in one word");
    occurrences->add_option("--word", occ_word, "arrangement of 1..n, e.g. \"5 6 4 2 3 1 7\"")
        ->required();
    occurrences->add_option("--pattern", occ_pattern, "pattern to count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (count->parsed()) return run_count(count_args);
        if (list->parsed()) return run_list(list_args);
        if (table->parsed()) return run_table(table_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (bijection->parsed()) return run_bijection(bij_args);
        if (classes->parsed()) return run_classes(classes_k);
        if (occurrences->parsed()) return run_occurrences(occ_word, occ_pattern);
    } catch (const RefusedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefused;
    } catch (const circpat::unsupported_pattern_error& e) {
        std::cerr << "error: unsupported pattern: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitInvalid;
}
