#pragma once

// Exhaustive enumeration of arc words of a fixed length and the census of
// their self-intersection numbers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "families.hpp"
#include "intersect.hpp"
#include "planar.hpp"
#include "word.hpp"

namespace pants {

namespace detail {

// Letter order 1 < 2 < 3 < A < B < a < b, so a depth-first walk in these
// orders emits words in lexicographic order.
inline constexpr Puncture puncture_order[] = {Puncture::one, Puncture::two, Puncture::three};
inline constexpr Seam seam_order[] = {Seam::A, Seam::B, Seam::a, Seam::b};

// Extends xs[0..depth) to every valid completion of length xs.size(),
// calling f(start, xs, end). The prefix is assumed valid.
template <typename F>
void extend_words(Puncture start, std::vector<Seam>& xs, std::size_t depth, F& f) {
    const std::size_t L = xs.size();
    if (depth == L) {
        for (Puncture end : puncture_order) {
            if (L == 0 ? (start == end && start != Puncture::three) : !endpoint_allows(end, xs[L - 1]))
                continue;
            f(start, std::as_const(xs), end);
        }
        return;
    }
    for (Seam s : seam_order) {
        if (depth == 0 ? !endpoint_allows(start, s) : s == inverse(xs[depth - 1])) continue;
        xs[depth] = s;
        extend_words(start, xs, depth + 1, f);
    }
}

// Work unit for the parallel census: a start puncture and a seam prefix.
struct Prefix {
    Puncture start;
    std::vector<Seam> seams;
};

inline std::vector<Prefix> census_prefixes(std::size_t L, std::size_t depth) {
    std::vector<Prefix> out;
    depth = std::min(depth, L);
    for (Puncture start : puncture_order) {
        std::vector<Prefix> level{{start, {}}};
        for (std::size_t d = 0; d < depth; ++d) {
            std::vector<Prefix> next;
            for (const auto& p : level)
                for (Seam s : seam_order) {
                    if (d == 0 ? !endpoint_allows(start, s) : s == inverse(p.seams.back())) continue;
                    Prefix q = p;
                    q.seams.push_back(s);
                    next.push_back(std::move(q));
                }
            level = std::move(next);
        }
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace detail

// Calls f(const ArcWord&) for every valid word of the given total length,
// in lexicographic order.
template <typename F>
void enumerate_words(std::size_t word_length, F&& f) {
    if (word_length < 2) throw std::invalid_argument("enumerate_words: word length must be at least 2");
    std::vector<Seam> xs(word_length - 2);
    auto emit = [&](Puncture start, const std::vector<Seam>& seams, Puncture end) { f(ArcWord(start, seams, end)); };
    for (Puncture start : detail::puncture_order) detail::extend_words(start, xs, 0, emit);
}

inline std::uint64_t count_words(std::size_t word_length) {
    if (word_length < 2) throw std::invalid_argument("count_words: word length must be at least 2");
    std::uint64_t count = 0;
    std::vector<Seam> xs(word_length - 2);
    auto tally = [&](Puncture, const std::vector<Seam>&, Puncture) { ++count; };
    for (Puncture start : detail::puncture_order) detail::extend_words(start, xs, 0, tally);
    return count;
}

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CensusReport {
    std::size_t word_length = 0;
    std::uint64_t word_count = 0;
    std::uint64_t min_i = 0;
    std::uint64_t max_i = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

inline nlohmann::ordered_json to_json(const CensusReport& r) {
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [i, c] : r.histogram) hist[std::to_string(i)] = c;
    return {{"word_length", r.word_length},
            {"word_count", r.word_count},
            {"min_i", r.min_i},
            {"max_i", r.max_i},
            {"histogram", std::move(hist)}};
}

inline std::string histogram_csv(const CensusReport& r) {
    std::ostringstream os;
    os << "i,count\n";
    for (const auto& [i, c] : r.histogram) os << i << ',' << c << '\n';
    return os.str();
}

struct CensusOptions {
    unsigned jobs = 1;
    std::optional<std::chrono::steady_clock::duration> budget;
};

// Self-intersection statistics over every word of the given length. Work is
// split by seam prefix; per-prefix histograms are merged in prefix order, so
// the report does not depend on the number of jobs.
inline CensusReport census(std::size_t word_length, const CensusOptions& opt = {}) {
    if (word_length < 2) throw std::invalid_argument("census: word length must be at least 2");
    const std::size_t L = word_length - 2;
    const auto prefixes = detail::census_prefixes(L, 3);
    std::vector<std::vector<std::uint64_t>> partial(prefixes.size());

    const auto deadline = opt.budget ? std::optional(std::chrono::steady_clock::now() + *opt.budget) : std::nullopt;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> expired{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        std::vector<Seam> xs(L);
        std::vector<Segment> segs;
        segs.reserve(L + 1);
        PairMarks marks(L + 1);
        std::uint64_t since_check = 0;
        try {
            for (std::size_t t; !expired && (t = next.fetch_add(1)) < prefixes.size();) {
                auto& hist = partial[t];
                auto visit = [&](Puncture start, const std::vector<Seam>& seams, Puncture end) {
                    segments(start, seams, end, segs);
                    marks.reset(segs.size());
                    const std::size_t i = self_intersection(segs, marks);
                    if (hist.size() <= i) hist.resize(i + 1, 0);
                    ++hist[i];
                    if (deadline && ++since_check % 4096 == 0 && std::chrono::steady_clock::now() > *deadline)
                        expired = true;
                };
                const auto& p = prefixes[t];
                std::copy(p.seams.begin(), p.seams.end(), xs.begin());
                detail::extend_words(p.start, xs, p.seams.size(), visit);
                if (deadline && std::chrono::steady_clock::now() > *deadline) expired = true;
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            expired = true;
        }
    };

    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    if (expired) throw BudgetExceeded("census: time budget exhausted at word length " + std::to_string(word_length));

    CensusReport r;
    r.word_length = word_length;
    for (const auto& hist : partial)
        for (std::size_t i = 0; i < hist.size(); ++i)
            if (hist[i]) r.histogram[i] += hist[i];
    for (const auto& [i, c] : r.histogram) r.word_count += c;
    if (!r.histogram.empty()) {
        r.min_i = r.histogram.begin()->first;
        r.max_i = r.histogram.rbegin()->first;
    }
    return r;
}

// The expected maximum L^2/4 + L (L even) or (L^2 - 1)/4 + L (L odd).
constexpr std::uint64_t conjectured_max(std::size_t word_length) noexcept {
    const std::uint64_t L = word_length - 2;
    return L % 2 == 0 ? L * L / 4 + L : (L * L - 1) / 4 + L;
}

// The census maximum matches the formula and is attained by the extremal
// family of that length: 1(bA)^n3 for even L, 3(bA)^nb3 for odd L.
inline bool check_conjectured_max(const CensusReport& r) {
    const std::size_t L = r.word_length - 2;
    const std::uint64_t want = conjectured_max(r.word_length);
    const ArcWord w = L % 2 == 0 ? family_word(FamilyId::F2, L / 2) : family_word(FamilyId::F4, (L - 1) / 2);
    return r.max_i == want && self_intersection(w) == want;
}

inline bool check_conjectured_max(std::size_t word_length, const CensusOptions& opt = {}) {
    return check_conjectured_max(census(word_length, opt));
}

}  // namespace pants
