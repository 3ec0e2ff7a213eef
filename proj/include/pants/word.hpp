#pragma once

// Arc words on the pair of pants.
//
// An arc is written n1 x1 ... xL n2 where n1, n2 are punctures (1, 2, 3) and
// the x_i are seam crossings (a, A, b, B; capitals are inverses). Words are
// validated on construction, so every ArcWord in circulation is well formed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pants {

enum class Puncture : std::uint8_t { one = 1, two = 2, three = 3 };

enum class Seam : std::uint8_t { a, A, b, B };

constexpr Seam inverse(Seam s) noexcept {
    switch (s) {
        case Seam::a: return Seam::A;
        case Seam::A: return Seam::a;
        case Seam::b: return Seam::B;
        case Seam::B: return Seam::b;
    }
    return s;
}

constexpr bool is_capital(Seam s) noexcept { return s == Seam::A || s == Seam::B; }
constexpr bool is_a_family(Seam s) noexcept { return s == Seam::a || s == Seam::A; }
constexpr bool is_b_family(Seam s) noexcept { return !is_a_family(s); }
constexpr Seam lowered(Seam s) noexcept { return is_capital(s) ? inverse(s) : s; }

constexpr char to_char(Seam s) noexcept {
    constexpr char names[] = {'a', 'A', 'b', 'B'};
    return names[static_cast<int>(s)];
}

constexpr char to_char(Puncture p) noexcept {
    return static_cast<char>('0' + static_cast<int>(p));
}

constexpr std::optional<Seam> seam_from_char(char c) noexcept {
    switch (c) {
        case 'a': return Seam::a;
        case 'A': return Seam::A;
        case 'b': return Seam::b;
        case 'B': return Seam::B;
        default: return std::nullopt;
    }
}

constexpr std::optional<Puncture> puncture_from_char(char c) noexcept {
    switch (c) {
        case '1': return Puncture::one;
        case '2': return Puncture::two;
        case '3': return Puncture::three;
        default: return std::nullopt;
    }
}

// Puncture 1 lies between the two a-edges of the fundamental domain and
// puncture 2 between the two b-edges, so an arc cannot leave them across
// those seams.
constexpr bool endpoint_allows(Puncture p, Seam s) noexcept {
    if (p == Puncture::one) return !is_a_family(s);
    if (p == Puncture::two) return !is_b_family(s);
    return true;
}

class WordError : public std::invalid_argument {
public:
    enum class Kind { malformed_token, bad_shape, forbidden_pair, non_reduced, endpoint_clash };

    WordError(Kind kind, std::size_t position, const std::string& what)
        : std::invalid_argument(what), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    // 0-based character index in the parsed text. For seam-level errors this
    // is also the 1-based seam index (x_1 sits at character 1).
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

inline const char* to_string(WordError::Kind k) noexcept {
    switch (k) {
        case WordError::Kind::malformed_token: return "MalformedToken";
        case WordError::Kind::bad_shape: return "BadShape";
        case WordError::Kind::forbidden_pair: return "ForbiddenPair";
        case WordError::Kind::non_reduced: return "NonReduced";
        case WordError::Kind::endpoint_clash: return "EndpointClash";
    }
    return "?";
}

struct SeamCounts {
    std::size_t alpha = 0;  // letters a, A
    std::size_t beta = 0;   // letters b, B
    friend bool operator==(const SeamCounts&, const SeamCounts&) = default;
};

class ArcWord {
public:
    // Throws WordError if the parts violate the grammar.
    ArcWord(Puncture start, std::vector<Seam> seams, Puncture end)
        : start_(start), seams_(std::move(seams)), end_(end) {
        validate();
    }

    static ArcWord parse(std::string_view text);

    Puncture start() const noexcept { return start_; }
    Puncture end() const noexcept { return end_; }
    std::span<const Seam> seams() const noexcept { return seams_; }

    // L, the number of seam letters.
    std::size_t seam_length() const noexcept { return seams_.size(); }
    // Total letters, punctures included (L + 2).
    std::size_t word_length() const noexcept { return seams_.size() + 2; }

    std::string str() const {
        std::string out;
        out.reserve(word_length());
        out += to_char(start_);
        for (Seam s : seams_) out += to_char(s);
        out += to_char(end_);
        return out;
    }

    friend bool operator==(const ArcWord&, const ArcWord&) = default;

private:
    void validate() const;

    Puncture start_;
    std::vector<Seam> seams_;
    Puncture end_;
};

namespace detail {

[[noreturn]] inline void fail(WordError::Kind kind, std::size_t pos, std::string_view text,
                              const std::string& why) {
    throw WordError(kind, pos,
                    std::string(to_string(kind)) + " at position " + std::to_string(pos) +
                        " in \"" + std::string(text) + "\": " + why);
}

// Seam-level grammar over an already tokenized word. `text` only feeds
// diagnostics. Scans left to right so the earliest offending index wins.
inline void check_seams(Puncture start, std::span<const Seam> xs, Puncture end,
                        std::string_view text) {
    const std::size_t L = xs.size();
    if (L == 0) {
        if (start == end && start != Puncture::three)
            fail(WordError::Kind::forbidden_pair, 0, text, "a bare 11 or 22 is not an arc");
        return;
    }
    for (std::size_t i = 0; i < L; ++i) {
        const std::size_t pos = i + 1;
        if (i == 0 && !endpoint_allows(start, xs[0]))
            fail(WordError::Kind::endpoint_clash, pos, text,
                 std::string("puncture ") + to_char(start) + " cannot be followed by " +
                     to_char(xs[0]));
        if (i + 1 < L && xs[i + 1] == inverse(xs[i]))
            fail(WordError::Kind::non_reduced, pos, text,
                 std::string(1, to_char(xs[i])) + " followed by its inverse");
        if (i + 1 == L && !endpoint_allows(end, xs[i]))
            fail(WordError::Kind::endpoint_clash, pos, text,
                 std::string(1, to_char(xs[i])) + " cannot end at puncture " + to_char(end));
    }
}

}  // namespace detail

inline void ArcWord::validate() const { detail::check_seams(start_, seams_, end_, str()); }

inline ArcWord ArcWord::parse(std::string_view text) {
    const std::size_t n = text.size();
    for (std::size_t i = 0; i < n; ++i) {
        const char c = text[i];
        const bool digit = puncture_from_char(c).has_value();
        if (!digit && !seam_from_char(c))
            detail::fail(WordError::Kind::malformed_token, i, text,
                         std::string("unexpected character '") + c + "'");
        const bool at_end = i == 0 || i + 1 == n;
        if (at_end != digit)
            detail::fail(WordError::Kind::bad_shape, i, text,
                         at_end ? "a word must start and end with a puncture"
                                : "punctures may only appear at both ends");
    }
    if (n < 2)
        detail::fail(WordError::Kind::bad_shape, n, text, "a word needs two punctures");

    std::vector<Seam> xs;
    xs.reserve(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) xs.push_back(*seam_from_char(text[i]));
    const Puncture start = *puncture_from_char(text.front());
    const Puncture end = *puncture_from_char(text.back());
    detail::check_seams(start, xs, end, text);
    return ArcWord(start, std::move(xs), end);
}

inline std::size_t word_length(const ArcWord& w) noexcept { return w.word_length(); }

// n2 inv(x_L) ... inv(x_1) n1: the same arc traversed backwards.
inline ArcWord inverse(const ArcWord& w) {
    std::vector<Seam> xs(w.seams().rbegin(), w.seams().rend());
    std::ranges::transform(xs, xs.begin(), [](Seam s) { return inverse(s); });
    return ArcWord(w.end(), std::move(xs), w.start());
}

// The substitution a<->b, A<->B, 1<->2 maps the surface word a1A3b2B3 to a
// rotation of itself, so it carries arcs to arcs of the same complexity.
inline ArcWord relabel(const ArcWord& w) {
    auto swap_puncture = [](Puncture p) {
        if (p == Puncture::one) return Puncture::two;
        if (p == Puncture::two) return Puncture::one;
        return p;
    };
    std::vector<Seam> xs;
    xs.reserve(w.seam_length());
    for (Seam s : w.seams()) {
        constexpr Seam swapped[] = {Seam::b, Seam::B, Seam::a, Seam::A};
        xs.push_back(swapped[static_cast<int>(s)]);
    }
    return ArcWord(swap_puncture(w.start()), std::move(xs), swap_puncture(w.end()));
}

inline SeamCounts seam_counts(const ArcWord& w) noexcept {
    SeamCounts c;
    for (Seam s : w.seams()) (is_a_family(s) ? c.alpha : c.beta)++;
    return c;
}

// No seam letter occurs together with its inverse.
inline bool is_positive(const ArcWord& w) noexcept {
    bool seen[4] = {};
    for (Seam s : w.seams()) seen[static_cast<int>(s)] = true;
    auto idx = [](Seam s) { return static_cast<int>(s); };
    return !(seen[idx(Seam::a)] && seen[idx(Seam::A)]) &&
           !(seen[idx(Seam::b)] && seen[idx(Seam::B)]);
}

namespace detail {

struct Block {
    std::size_t first, last;  // inclusive seam indices
};

inline std::vector<Block> capital_blocks(std::span<const Seam> xs) {
    std::vector<Block> out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (!is_capital(xs[k])) continue;
        std::size_t e = k;
        while (e + 1 < xs.size() && is_capital(xs[e + 1])) ++e;
        out.push_back({k, e});
        k = e;
    }
    return out;
}

inline void reverse_invert(std::vector<Seam>& xs, Block b) {
    std::reverse(xs.begin() + b.first, xs.begin() + b.last + 1);
    for (std::size_t k = b.first; k <= b.last; ++k) xs[k] = inverse(xs[k]);
}

inline bool endpoints_ok(Puncture start, std::span<const Seam> xs, Puncture end) {
    return endpoint_allows(start, xs.front()) && endpoint_allows(end, xs.back());
}

}  // namespace detail

// Rewrites w into a word over {a, b} with the same word length, alpha and
// beta. Capital blocks are replaced by their inverse-reversal, interior blocks
// first (left to right), then the blocks touching a puncture. A puncture-side
// block whose inverse-reversal would clash with the puncture is lowered in
// place instead. Words with more capitals than lower-case letters are inverted
// first. Verified to never increase the self-intersection number for every
// word of length <= 10; see tests/word_test.cpp.
inline ArcWord positivize(const ArcWord& w) {
    if (w.seam_length() == 0) return w;
    const auto caps = static_cast<std::size_t>(std::ranges::count_if(w.seams(), is_capital));
    if (caps == 0) return w;
    const ArcWord base = 2 * caps > w.seam_length() ? inverse(w) : w;

    std::vector<Seam> xs(base.seams().begin(), base.seams().end());
    for (;;) {
        auto blocks = detail::capital_blocks(xs);
        if (blocks.empty()) break;
        const auto interior = std::ranges::find_if(blocks, [&](const detail::Block& b) {
            return b.first > 0 && b.last + 1 < xs.size();
        });
        if (interior != blocks.end()) {
            detail::reverse_invert(xs, *interior);
            continue;
        }
        const detail::Block b = blocks.front();
        std::vector<Seam> trial = xs;
        detail::reverse_invert(trial, b);
        if (detail::endpoints_ok(base.start(), trial, base.end())) {
            xs = std::move(trial);
        } else {
            for (std::size_t k = b.first; k <= b.last; ++k) xs[k] = lowered(xs[k]);
        }
    }
    return ArcWord(base.start(), std::move(xs), base.end());
}

}  // namespace pants
