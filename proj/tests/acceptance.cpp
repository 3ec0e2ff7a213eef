// Acceptance suite: one PASS/FAIL line per criterion with its time limit.
// Exits nonzero if any selected criterion fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include <pants/census.hpp>
#include <pants/families.hpp>
#include <pants/intersect.hpp>
#include <pants/lowlying.hpp>
#include <pants/tables.hpp>

#include "oracles.hpp"

using namespace pants;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_ms;
    std::function<Outcome()> check;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

template <typename F>
void for_words_up_to(std::size_t max_length, F f) {
    for (std::size_t wl = 2; wl <= max_length; ++wl) enumerate_words(wl, f);
}

Outcome worked_example() {
    const ArcWord w = ArcWord::parse("1BABA2");
    const std::size_t i = self_intersection(w);
    std::string golden = read_file(PANTS_GOLDEN_DIR "/1BABA2.txt");
    golden.erase(0, golden.find('\n') + 1);
    const bool grid = render_trace(w) == golden;
    return {i == 2 && grid, "i=" + std::to_string(i) + (grid ? ", grid matches" : ", grid differs")};
}

Outcome table_regeneration() {
    const auto v = verify_tables();
    return {v.ok(), std::to_string(v.reference_pairs) + " transcribed pairs, " + std::to_string(v.generated_pairs) +
                        " regenerated, " + std::to_string(v.mismatches.size()) + " mismatches"};
}

Outcome census_table(bool extended, unsigned jobs) {
    std::ifstream in(PANTS_DATA_DIR "/min_max_by_length.csv");
    const auto rows = parse_min_max(in);
    Outcome o;
    std::size_t checked = 0;
    for (const auto& row : rows) {
        if (row.word_length > (extended ? 16u : 12u)) continue;
        const auto r = census(row.word_length, {.jobs = jobs, .budget = {}});
        ++checked;
        if (r.min_i != row.min_i || r.max_i != row.max_i) {
            o.pass = false;
            o.detail += "length " + std::to_string(row.word_length) + " gives " + std::to_string(r.min_i) + "/" +
                        std::to_string(r.max_i) + "; ";
        }
    }
    o.detail += "lengths 2.." + std::string(extended ? "16" : "12") + ", " + std::to_string(checked) + " rows";
    return o;
}

Outcome closed_form_families() {
    Outcome o;
    std::size_t checked = 0;
    for (std::uint64_t n = 0; n <= 30; ++n) {
        for (FamilyId f : {FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4}) {
            const std::uint64_t got = self_intersection(family_word(f, n)), want = family_predicted_i(f, n);
            ++checked;
            if (got != want) {
                o.pass = false;
                o.detail += std::string(to_string(f)) + " n=" + std::to_string(n) + " gives " + std::to_string(got) + "; ";
            }
        }
        if (trace(family_word(FamilyId::F1, n)).count(CellState::counted_here) != n) {
            o.pass = false;
            o.detail += "F1 n=" + std::to_string(n) + " trace total differs; ";
        }
    }
    o.detail += std::to_string(checked) + " words, n=0..30";
    return o;
}

Outcome low_lying_families() {
    Outcome o;
    std::size_t checked = 0, failed = 0;
    std::string first;
    auto check = [&](FamilyId f, std::uint64_t n, std::optional<std::uint64_t> m) {
        const std::uint64_t got = self_intersection(family_word(f, n, m)), want = family_predicted_i(f, n, m);
        const bool cf_ok = max_partial_quotient(family_cf(f, n, m)) <= 2;
        ++checked;
        if (got != want || !cf_ok) {
            ++failed;
            if (first.empty())
                first = family_text(f, n, m) + " gives " + std::to_string(got) + ", published " + std::to_string(want);
        }
    };
    for (std::uint64_t n = 0; n <= 15; ++n) {
        for (std::uint64_t m = 1; m <= 15; ++m) {
            check(FamilyId::Z1, n, m);
            check(FamilyId::Z2, n, m);
        }
        for (FamilyId f : {FamilyId::Z3, FamilyId::Z4, FamilyId::Z5}) check(f, n, std::nullopt);
    }
    check(FamilyId::C2, 0, std::nullopt);
    check(FamilyId::C7, 0, std::nullopt);
    o.pass = failed == 0;
    o.detail = std::to_string(checked) + " words, " + std::to_string(failed) + " differ";
    if (!first.empty()) o.detail += " (first: " + first + ")";
    return o;
}

Outcome low_lying_fixtures() {
    std::ifstream in(PANTS_DATA_DIR "/low_lying_words.csv");
    const auto rows = parse_fixtures(in);
    Outcome o;
    std::size_t failed = 0;
    std::string list;
    for (const auto& r : rows) {
        const std::uint64_t got = self_intersection(ArcWord::parse(r.word));
        if (got != r.expected_i) {
            ++failed;
            list += " " + r.word + "(" + std::to_string(r.expected_i) + "->" + std::to_string(got) + ")";
        }
    }
    o.pass = failed == 0;
    o.detail = std::to_string(rows.size()) + " rows, " + std::to_string(failed) + " differ" + (failed ? ":" + list : "");
    return o;
}

Outcome spectrum() {
    const auto r = spectrum_check(1000);
    std::string detail = std::to_string(r.checked) + " values, " + std::to_string(r.mismatches.size()) + " mismatches";
    if (!r.ok()) detail += " (first N=" + std::to_string(r.mismatches.front().N) + ")";
    return {r.ok(), detail};
}

Outcome cover() {
    try {
        const auto r = cover_check(100000);
        std::string detail = std::to_string(r.checked) + " values, " + std::to_string(r.failures.size()) + " failures";
        if (!r.ok()) detail += " (first: " + r.failures.front() + ")";
        return {r.ok(), detail};
    } catch (const CoverGap& g) {
        return {false, g.what()};
    }
}

Outcome properties() {
    Outcome o;
    std::size_t words = 0;
    auto fail = [&](const std::string& what, const ArcWord& w) {
        if (o.pass) o.detail = what + " fails at " + w.str() + "; ";
        o.pass = false;
    };
    for_words_up_to(10, [&](const ArcWord& w) {
        ++words;
        const std::size_t i = self_intersection(w);
        if (self_intersection(inverse(w)) != i || self_intersection(relabel(w)) != i) fail("symmetry", w);
        const std::size_t L = w.seam_length();
        const std::size_t lower = L % 2 == 0 ? (L >= 2 ? L / 2 - 1 : 0) : (L - 1) / 2;
        if (i < lower || i > L * (L + 1) / 2) fail("length bounds", w);
        const auto c = seam_counts(w);
        if (is_positive(w) && i + 1 < std::max(c.alpha, c.beta)) fail("positive-word bound", w);
        const ArcWord p = positivize(w);
        if (p.word_length() != w.word_length() || seam_counts(p) != c || !is_positive(p) ||
            self_intersection(p) > i)
            fail("positivize", w);
        const auto segs = segments(w);
        const auto order = lexicographic_pairs(segs.size());
        std::vector<int> hits(segs.size() * segs.size(), 0);
        run_chains(std::span<const Segment>(segs), order, [&](const ChainResult& ch) {
            for (const auto& m : ch.members) ++hits[(m.i - 1) * segs.size() + (m.j - 1)];
        });
        for (const auto& pr : order)
            if (hits[(pr.i - 1) * segs.size() + (pr.j - 1)] != 1) {
                fail("chain partition", w);
                break;
            }
    });
    o.detail += std::to_string(words) + " words of length 2..10";
    return o;
}

Outcome geometric_oracle() {
    std::size_t pairs = 0, bad_pairs = 0, bad_sides = 0;
    for (const auto& x : segment_labels())
        for (const auto& y : segment_labels()) {
            const Segment s = segment_from_label(x), t = segment_from_label(y);
            const PairClass c = classify_decidable(s, t);
            if (c == PairClass::undecidable) continue;
            ++pairs;
            bad_pairs += c != oracle::classify(s.from, s.to, t.from, t.to);
        }
    std::mt19937 rng(1729);
    std::uniform_int_distribution<int> pick(0, 7);
    for (int k = 0; k < 1000; ++k) {
        const Item shared = edge_item(static_cast<Seam>(pick(rng) % 4));
        const Polarity pol = pick(rng) % 2 ? Polarity::into : Polarity::out_of;
        Item a, b;
        do a = static_cast<Item>(pick(rng)); while (a == shared);
        do b = static_cast<Item>(pick(rng)); while (b == shared || b == a);
        bad_sides += side_at_divergence(shared, pol, a, b) != oracle::side(shared, pol, a, b);
    }
    return {bad_pairs == 0 && bad_sides == 0, std::to_string(pairs) + " decidable pairs (" + std::to_string(bad_pairs) +
                                                  " disagree), 1000 divergences (" + std::to_string(bad_sides) +
                                                  " disagree)"};
}

Outcome determinism() {
    const std::string one = to_json(census(10, {.jobs = 1, .budget = {}})).dump();
    const std::string eight = to_json(census(10, {.jobs = 8, .budget = {}})).dump();
    return {one == eight, std::to_string(one.size()) + "-byte report, " + (one == eight ? "identical" : "differs")};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    bool extended = false;
    std::vector<int> only;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_flag("--extended", extended, "Census word lengths 13..16 as well");
    app.add_option("--only", only, "Run only these criteria");
    app.add_option("--jobs", jobs, "Census worker threads")->check(CLI::Range(1, 1024));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "worked example 1BABA2", 1, worked_example},
        {2, "decidable-pair table regeneration", 1000, table_regeneration},
        {3, extended ? "census min/max, lengths 2-16" : "census min/max, lengths 2-12", extended ? 600000.0 : 60000.0,
         [&] { return census_table(extended, jobs); }},
        {4, "families F1-F4, n=0..30", 5000, closed_form_families},
        {5, "families Z1-Z5, C2, C7, n,m<=15", 30000, low_lying_families},
        {6, "low-lying word fixtures", 1000, low_lying_fixtures},
        {7, "spectrum 0..1000", 30000, spectrum},
        {8, "cover 0..100000", 10000, cover},
        {9, "exhaustive properties, length<=10", 120000, properties},
        {10, "geometric oracle", 1000, geometric_oracle},
        {11, "census determinism, 1 vs 8 workers", 60000, determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        const bool in_time = ms < c.limit_ms;
        const bool pass = o.pass && in_time;
        failed += !pass;
        char timing[96];
        std::snprintf(timing, sizeof timing, "%.3f ms, limit %.0f ms%s", ms, c.limit_ms, in_time ? "" : ", too slow");
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << "): " << o.detail
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
