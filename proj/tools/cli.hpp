#pragma once

// The arcs command-line tool. run() is separate from main() so tests can
// drive it with in-memory streams.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 verification failure,
// 3 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include <pants/census.hpp>
#include <pants/families.hpp>
#include <pants/intersect.hpp>
#include <pants/lowlying.hpp>
#include <pants/tables.hpp>
#include <pants/word.hpp>

namespace pants::cli {

enum Exit : int { ok = 0, invalid_input = 1, verification_failed = 2, internal_error = 3 };

enum class Format { json, text, csv };

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Jobs from ARC_JOBS, else the logical processor count.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("ARC_JOBS"); env && *env) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (*end != '\0' || v == 0 || v > 1024) throw UsageError("ARC_JOBS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(std::vector<std::string> args);

private:
    void emit(const Json& j) {
        if (format_ == Format::json) {
            out_ << j.dump() << '\n';
            return;
        }
        for (const auto& [k, v] : j.items()) out_ << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }

    void require_format(std::initializer_list<Format> allowed, const char* cmd) const {
        for (Format f : allowed)
            if (f == format_) return;
        throw UsageError(std::string("output format not supported by ") + cmd);
    }

    int cmd_validate();
    int cmd_intersect();
    int cmd_enumerate();
    int cmd_census();
    int cmd_family();
    int cmd_witness();
    int cmd_spectrum();
    int cmd_cover();
    int cmd_tables();
    int cmd_cf();
    int cmd_fixtures();

    std::ostream& out_;
    std::ostream& err_;
    Format format_ = Format::json;

    std::string word_;
    bool trace_ = false;
    std::size_t length_ = 0;
    bool count_only_ = false;
    std::string histogram_file_;
    std::optional<unsigned> jobs_;
    std::string family_id_;
    std::uint64_t n_ = 0;
    std::optional<std::uint64_t> m_;
    bool verify_ = false;
    std::uint64_t number_ = 0;
    std::uint64_t max_ = 0;
    std::string quotients_;
    std::string file_;
};

inline int Runner::cmd_validate() {
    Json j;
    j["word"] = word_;
    try {
        const ArcWord w = ArcWord::parse(word_);
        const auto c = seam_counts(w);
        j["valid"] = true;
        j["word_length"] = w.word_length();
        j["alpha"] = c.alpha;
        j["beta"] = c.beta;
        j["positive"] = is_positive(w);
        emit(j);
        return ok;
    } catch (const WordError& e) {
        j["valid"] = false;
        j["error"] = to_string(e.kind());
        j["position"] = e.position();
        emit(j);
        err_ << e.what() << '\n';
        return invalid_input;
    }
}

inline int Runner::cmd_intersect() {
    const ArcWord w = ArcWord::parse(word_);
    const auto segs = segments(w);
    const PairGrid grid = trace(std::span<const Segment>(segs));
    const std::size_t i = self_intersection(w);
    if (format_ == Format::text) {
        out_ << "word: " << w.str() << "\ni: " << i << '\n';
        if (trace_) out_ << render_trace(segs, grid);
        return ok;
    }
    require_format({Format::json}, "intersect");
    Json j;
    j["word"] = w.str();
    j["i"] = i;
    if (trace_) {
        Json labels = Json::array(), cells = Json::array();
        for (const auto& s : segs) labels.push_back("w" + std::to_string(s.index) + "=" + s.label());
        for (std::size_t r = 1; r <= segs.size(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 1; c <= segs.size(); ++c)
                row.push_back(c > r ? std::string(1, cell_char(grid.at(r, c))) : std::string());
            cells.push_back(std::move(row));
        }
        j["trace"] = {{"labels", std::move(labels)}, {"cells", std::move(cells)}};
    }
    emit(j);
    return ok;
}

inline int Runner::cmd_enumerate() {
    if (length_ > 16) err_ << "advisory: word lengths above 16 have no published reference values\n";
    if (count_only_) {
        emit(Json{{"word_length", length_}, {"count", count_words(length_)}});
        return ok;
    }
    if (format_ == Format::json) {
        Json words = Json::array();
        enumerate_words(length_, [&](const ArcWord& w) { words.push_back(w.str()); });
        const auto count = words.size();
        emit(Json{{"word_length", length_}, {"count", count}, {"words", std::move(words)}});
    } else {
        if (format_ == Format::csv) out_ << "word\n";
        enumerate_words(length_, [&](const ArcWord& w) { out_ << w.str() << '\n'; });
    }
    return ok;
}

inline int Runner::cmd_census() {
    if (length_ > 16) err_ << "advisory: word lengths above 16 have no published reference values\n";
    const CensusReport r = census(length_, {jobs_.value_or(default_jobs()), std::nullopt});
    if (!histogram_file_.empty()) {
        std::ofstream f(histogram_file_);
        if (!(f << histogram_csv(r))) throw UsageError("cannot write " + histogram_file_);
    }
    switch (format_) {
        case Format::json: out_ << to_json(r).dump() << '\n'; break;
        case Format::csv: out_ << histogram_csv(r); break;
        case Format::text:
            out_ << "word_length: " << r.word_length << "\nword_count: " << r.word_count << "\nmin_i: " << r.min_i
                 << "\nmax_i: " << r.max_i << "\n";
            for (const auto& [i, c] : r.histogram) out_ << "  i=" << i << ": " << c << '\n';
            break;
    }
    return ok;
}

inline int Runner::cmd_family() {
    const auto id = family_from_string(family_id_);
    if (!id) throw UsageError("unknown family \"" + family_id_ + "\"");
    const ArcWord w = family_word(*id, n_, m_);
    const std::uint64_t predicted = family_predicted_i(*id, n_, m_);
    Json j;
    j["family"] = to_string(*id);
    j["template"] = family_template(*id);
    j["n"] = n_;
    j["m"] = m_ ? Json(*m_) : Json(nullptr);
    j["word"] = w.str();
    j["predicted_i"] = predicted;
    try {
        j["cf"] = family_cf(*id, n_, m_).quotients();
    } catch (const Unsupported&) {
        j["cf"] = nullptr;
    }
    int code = ok;
    if (verify_) {
        const std::uint64_t got = self_intersection(w);
        j["i_computed"] = got;
        j["pass"] = got == predicted;
        if (got != predicted) {
            err_ << "FAIL " << w.str() << ": computed " << got << ", predicted " << predicted << '\n';
            code = verification_failed;
        }
    }
    emit(j);
    return code;
}

inline int Runner::cmd_witness() {
    const CoverWitness w = decompose(number_);
    const Json j = witness_json(w);
    emit(j);
    if (j["i_computed"].get<std::uint64_t>() != number_ || j["max_quotient"].get<std::uint64_t>() > 2) {
        err_ << "FAIL witness for " << number_ << '\n';
        return verification_failed;
    }
    return ok;
}

inline int Runner::cmd_spectrum() {
    const SpectrumReport r = spectrum_check(max_);
    Json mism = Json::array();
    for (const auto& m : r.mismatches)
        mism.push_back({{"N", m.N}, {"word", m.word}, {"expected", m.expected}, {"got", m.got},
                        {"max_quotient", m.max_quotient}});
    emit(Json{{"max_n", r.max_n}, {"checked", r.checked}, {"passed", r.ok()}, {"mismatches", std::move(mism)}});
    err_ << (r.ok() ? "PASS" : "FAIL") << " spectrum 0.." << max_ << ": " << r.mismatches.size() << " mismatches\n";
    return r.ok() ? ok : verification_failed;
}

inline int Runner::cmd_cover() {
    try {
        const CoverReport r = cover_check(max_);
        emit(Json{{"max_n", r.max_n}, {"checked", r.checked}, {"passed", r.ok()}, {"failures", r.failures}});
        err_ << (r.ok() ? "PASS" : "FAIL") << " cover 0.." << max_ << ": " << r.failures.size() << " failures\n";
        return r.ok() ? ok : verification_failed;
    } catch (const CoverGap& g) {
        emit(Json{{"max_n", max_}, {"passed", false}, {"gap", g.N}});
        err_ << "FAIL " << g.what() << '\n';
        return verification_failed;
    }
}

inline int Runner::cmd_tables() {
    if (!verify_) throw UsageError("tables: only --verify is supported");
    const TablesVerification v = verify_tables();
    Json mism = Json::array();
    for (const auto& m : v.mismatches)
        mism.push_back({{"pair", {m.pair.first, m.pair.second}}, {"expected", m.expected}, {"actual", m.actual}});
    emit(Json{{"reference_pairs", v.reference_pairs},
              {"generated_pairs", v.generated_pairs},
              {"passed", v.ok()},
              {"mismatches", std::move(mism)}});
    err_ << (v.ok() ? "PASS" : "FAIL") << " decidable tables: " << v.mismatches.size() << " mismatches\n";
    return v.ok() ? ok : verification_failed;
}

inline int Runner::cmd_cf() {
    std::vector<std::uint64_t> q;
    std::istringstream in(quotients_);
    for (std::string tok; std::getline(in, tok, ',');) {
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size() || tok[0] == '-') throw UsageError("bad quotient \"" + tok + "\"");
        q.push_back(v);
    }
    const ContinuedFraction cf(std::move(q));
    const Fraction f = cf_eval(cf);
    emit(Json{{"cf", cf.quotients()},
              {"b", f.b.str()},
              {"d", f.d.str()},
              {"max_quotient", max_partial_quotient(cf)},
              {"in_R2", in_R(cf, 2)}});
    return ok;
}

inline int Runner::cmd_fixtures() {
    std::ifstream in(file_);
    if (!in) throw UsageError("cannot open " + file_);
    const auto rows = parse_fixtures(in);
    Json failures = Json::array();
    for (const auto& r : rows) {
        try {
            const std::uint64_t got = self_intersection(ArcWord::parse(r.word));
            if (got != r.expected_i) failures.push_back({{"word", r.word}, {"expected", r.expected_i}, {"got", got}});
        } catch (const WordError& e) {
            failures.push_back({{"word", r.word}, {"expected", r.expected_i}, {"error", e.what()}});
        }
    }
    const bool pass = failures.empty();
    if (format_ == Format::csv) {
        out_ << "word,expected_i,got\n";
        for (const auto& f : failures)
            out_ << f["word"].get<std::string>() << ',' << f["expected"] << ',' << (f.contains("got") ? f["got"].dump() : "") << '\n';
    } else {
        emit(Json{{"file", file_},
                  {"rows", rows.size()},
                  {"passed", pass},
                  {"failed", failures.size()},
                  {"failures", std::move(failures)}});
    }
    err_ << (pass ? "PASS" : "FAIL") << " fixtures " << file_ << ": " << rows.size() << " rows\n";
    return pass ? ok : verification_failed;
}

inline int Runner::run(std::vector<std::string> args) {
    CLI::App app{"Self-intersection numbers of arcs on the pair of pants", "arcs"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();

    int (Runner::*action)() = nullptr;
    auto sub = [&](const char* name, const char* help, int (Runner::*fn)()) {
        auto* s = app.add_subcommand(name, help);
        s->callback([&action, fn] { action = fn; });
        return s;
    };

    auto* validate = sub("validate", "Check a word against the arc grammar", &Runner::cmd_validate);
    validate->add_option("word", word_)->required();

    auto* intersect = sub("intersect", "Self-intersection number of a word", &Runner::cmd_intersect);
    intersect->add_option("word", word_)->required();
    intersect->add_flag("--trace", trace_, "Include the per-pair grid");

    auto* enumerate = sub("enumerate", "List every word of a given length", &Runner::cmd_enumerate);
    enumerate->add_option("--length", length_, "Total letters, punctures included")->required()->check(CLI::Range(2, 64));
    enumerate->add_flag("--count-only", count_only_);

    auto* census_cmd = sub("census", "Self-intersection statistics over all words of a length", &Runner::cmd_census);
    census_cmd->add_option("--length", length_, "Total letters, punctures included")->required()->check(CLI::Range(2, 64));
    census_cmd->add_option("--histogram", histogram_file_, "Also write the i,count histogram to FILE");
    census_cmd->add_option("--jobs", jobs_, "Worker threads (default: ARC_JOBS or processor count)")->check(CLI::Range(1, 1024));

    auto* family = sub("family", "Word and predicted value for a closed-form family", &Runner::cmd_family);
    family->add_option("--id", family_id_, "F1..F4, Z1..Z5, Z3c, C2, C7")->required();
    family->add_option("--n", n_)->default_val(0);
    family->add_option("--m", m_);
    family->add_flag("--verify", verify_, "Compare against the computed value");

    auto* witness = sub("witness", "2-low-lying witness word for N", &Runner::cmd_witness);
    witness->add_option("N", number_)->required();

    auto* spectrum = sub("spectrum", "Check witnesses for every N up to --max", &Runner::cmd_spectrum);
    spectrum->add_option("--max", max_)->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1'000'000}));

    auto* cover = sub("cover", "Check the five-set cover of [0, --max]", &Runner::cmd_cover);
    cover->add_option("--max", max_)->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{100'000'000}));

    auto* tables = sub("tables", "Regenerate the decidable-pair tables", &Runner::cmd_tables);
    tables->add_flag("--verify", verify_, "Compare against the embedded transcription");

    auto* cf = sub("cf", "Evaluate a continued fraction a1,a2,...", &Runner::cmd_cf);
    cf->add_option("quotients", quotients_)->required();

    auto* fixtures = sub("fixtures", "Check a word,expected_i fixture file", &Runner::cmd_fixtures);
    fixtures->add_option("--file", file_)->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out_ << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out_ << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err_ << "error: " << e.what() << '\n';
        return invalid_input;
    }
    format_ = format == "text" ? Format::text : format == "csv" ? Format::csv : Format::json;

    try {
        return (this->*action)();
    } catch (const WordError& e) {
        err_ << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const UsageError& e) {
        err_ << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::invalid_argument& e) {
        err_ << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::runtime_error& e) {
        err_ << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::exception& e) {
        err_ << "internal error: " << e.what() << '\n';
        return internal_error;
    }
}

// argv[0] is skipped.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return Runner(out, err).run(std::move(args));
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    return Runner(out, err).run(std::move(args));
}

}  // namespace pants::cli
