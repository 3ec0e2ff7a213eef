#pragma once

// The planar model: the fundamental domain bounded by the surface word
// a1A3b2B3, the chords a lifted arc draws through each copy of it, and the
// decidable-pair classification of two chords.

#include <array>
#include <cstdint>
#include <istream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "word.hpp"

namespace pants {

// Positions on the boundary of the fundamental domain, in counterclockwise
// order. Corner 3 occurs twice: V3a between edges A and b, V3b between B and a.
enum class Item : std::uint8_t { a, V1, A, V3a, b, V2, B, V3b };

inline constexpr std::size_t boundary_size = 8;

constexpr std::array<Item, boundary_size> boundary_cycle() noexcept {
    return {Item::a, Item::V1, Item::A, Item::V3a, Item::b, Item::V2, Item::B, Item::V3b};
}

constexpr int cycle_position(Item x) noexcept { return static_cast<int>(x); }

constexpr Item cycle_successor(Item x) noexcept {
    return static_cast<Item>((cycle_position(x) + 1) % boundary_size);
}

constexpr bool is_edge(Item x) noexcept {
    return x == Item::a || x == Item::A || x == Item::b || x == Item::B;
}

constexpr Item edge_item(Seam s) noexcept {
    constexpr Item items[] = {Item::a, Item::A, Item::b, Item::B};
    return items[static_cast<int>(s)];
}

// The occurrence of corner 3 that is not an endpoint of edge e. A chord from
// corner 3 to e must use it; the other occurrence lies on e itself.
constexpr Item corner3_item(Seam e) noexcept {
    return (e == Seam::a || e == Seam::B) ? Item::V3a : Item::V3b;
}

constexpr Item corner_item(Puncture p, Seam edge) noexcept {
    if (p == Puncture::one) return Item::V1;
    if (p == Puncture::two) return Item::V2;
    return corner3_item(edge);
}

constexpr char label_char(Item x) noexcept {
    constexpr char names[] = {'a', '1', 'A', '3', 'b', '2', 'B', '3'};
    return names[cycle_position(x)];
}

inline std::string_view item_name(Item x) noexcept {
    constexpr std::string_view names[] = {"a", "V1", "A", "V3a", "b", "V2", "B", "V3b"};
    return names[cycle_position(x)];
}

// One crossing of a fundamental-domain copy by a lift. `index` is the
// 1-based position t of the segment along the word.
struct Segment {
    Item from;
    Item to;
    std::size_t index = 0;

    std::string label() const { return {label_char(from), label_char(to)}; }
};

// The L + 1 chords of a lift: corner n1 -> x1, then inv(x_{t-1}) -> x_t,
// then inv(x_L) -> corner n2. Fills `out`, reusing its storage.
inline void segments(Puncture start, std::span<const Seam> xs, Puncture end, std::vector<Segment>& out) {
    const std::size_t L = xs.size();
    out.clear();
    if (L == 0) {
        // Single chord; which corner-3 copy is used does not matter (no pairs).
        auto corner = [](Puncture p, Item three) {
            return p == Puncture::one ? Item::V1 : p == Puncture::two ? Item::V2 : three;
        };
        out.push_back({corner(start, Item::V3a), corner(end, Item::V3b), 1});
        return;
    }
    out.push_back({corner_item(start, xs[0]), edge_item(xs[0]), 1});
    for (std::size_t t = 1; t < L; ++t)
        out.push_back({edge_item(inverse(xs[t - 1])), edge_item(xs[t]), t + 1});
    const Seam entry = inverse(xs[L - 1]);
    out.push_back({edge_item(entry), corner_item(end, entry), L + 1});
}

inline std::vector<Segment> segments(const ArcWord& w) {
    std::vector<Segment> out;
    out.reserve(w.seam_length() + 1);
    segments(w.start(), w.seams(), w.end(), out);
    return out;
}

enum class PairClass { intersecting, non_intersecting, undecidable };

inline const char* to_string(PairClass c) noexcept {
    switch (c) {
        case PairClass::intersecting: return "INTERSECTING";
        case PairClass::non_intersecting: return "NONINTERSECTING";
        case PairClass::undecidable: return "UNDECIDABLE";
    }
    return "?";
}

// Strictly inside the counterclockwise arc from `lo` to `hi`.
constexpr bool strictly_between(Item lo, Item hi, Item x) noexcept {
    const int n = static_cast<int>(boundary_size);
    const int dx = (cycle_position(x) - cycle_position(lo) + n) % n;
    const int dh = (cycle_position(hi) - cycle_position(lo) + n) % n;
    return dx > 0 && dx < dh;
}

constexpr PairClass classify_decidable(const Segment& s, const Segment& t) noexcept {
    const Item se[] = {s.from, s.to};
    const Item te[] = {t.from, t.to};
    bool shared_vertex = false;
    for (Item x : se)
        for (Item y : te)
            if (x == y) {
                if (is_edge(x)) return PairClass::undecidable;
                shared_vertex = true;
            }
    if (shared_vertex) return PairClass::non_intersecting;
    const bool in_from = strictly_between(s.from, s.to, t.from);
    const bool in_to = strictly_between(s.from, s.to, t.to);
    return in_from != in_to ? PairClass::intersecting : PairClass::non_intersecting;
}

// Parses a two-character chord label such as "1B", "bA" or "a3".
inline Segment segment_from_label(std::string_view label) {
    if (label.size() != 2) throw std::invalid_argument("segment label must have two characters");
    const auto p0 = puncture_from_char(label[0]);
    const auto p1 = puncture_from_char(label[1]);
    const auto s0 = seam_from_char(label[0]);
    const auto s1 = seam_from_char(label[1]);
    if ((!p0 && !s0) || (!p1 && !s1) || (p0 && p1))
        throw std::invalid_argument("bad segment label \"" + std::string(label) + "\"");
    if (p0) return {corner_item(*p0, *s1), edge_item(*s1), 0};
    if (p1) return {edge_item(*s0), corner_item(*p1, *s0), 0};
    if (*s0 == *s1) throw std::invalid_argument("segment endpoints must differ");
    return {edge_item(*s0), edge_item(*s1), 0};
}

// Every chord label that occurs in some valid word with L >= 1: the twelve
// edge-to-edge chords plus the eight chords at each end of a lift.
inline std::vector<std::string> segment_labels() {
    std::vector<std::string> out;
    constexpr Seam all[] = {Seam::a, Seam::A, Seam::b, Seam::B};
    constexpr Puncture ps[] = {Puncture::one, Puncture::two, Puncture::three};
    for (Seam e : all)
        for (Seam f : all)
            if (e != f) out.push_back({to_char(e), to_char(f)});
    for (Puncture p : ps)
        for (Seam e : all)
            if (endpoint_allows(p, e)) {
                out.push_back({to_char(p), to_char(e)});
                out.push_back({to_char(e), to_char(p)});
            }
    return out;
}

using LabelPair = std::pair<std::string, std::string>;

struct DecidableTables {
    std::set<LabelPair> intersecting;
    std::set<LabelPair> non_intersecting;
    friend bool operator==(const DecidableTables&, const DecidableTables&) = default;
};

inline DecidableTables regenerate_tables() {
    DecidableTables out;
    const auto labels = segment_labels();
    for (const auto& x : labels)
        for (const auto& y : labels) {
            const auto c = classify_decidable(segment_from_label(x), segment_from_label(y));
            if (c == PairClass::intersecting) out.intersecting.emplace(x, y);
            if (c == PairClass::non_intersecting) out.non_intersecting.emplace(x, y);
        }
    return out;
}

// Reads "w_i w_j CLASS" lines; '#' starts a comment line.
inline DecidableTables parse_tables(std::istream& in) {
    DecidableTables out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string x, y, cls;
        if (!(fields >> x >> y >> cls))
            throw std::runtime_error("decidable pairs line " + std::to_string(lineno) + ": expected three fields");
        if (cls == "INTERSECTING")
            out.intersecting.emplace(x, y);
        else if (cls == "NONINTERSECTING")
            out.non_intersecting.emplace(x, y);
        else
            throw std::runtime_error("decidable pairs line " + std::to_string(lineno) + ": unknown class " + cls);
    }
    return out;
}

struct TableMismatch {
    LabelPair pair;
    std::string expected;  // class in the reference table, or "absent"
    std::string actual;    // class from the chord model, or "absent"
};

inline std::vector<TableMismatch> compare_tables(const DecidableTables& reference,
                                                 const DecidableTables& generated) {
    auto cls = [](const DecidableTables& t, const LabelPair& p) -> std::string {
        if (t.intersecting.contains(p)) return "INTERSECTING";
        if (t.non_intersecting.contains(p)) return "NONINTERSECTING";
        return "absent";
    };
    std::set<LabelPair> all;
    for (const auto* t : {&reference, &generated}) {
        all.insert(t->intersecting.begin(), t->intersecting.end());
        all.insert(t->non_intersecting.begin(), t->non_intersecting.end());
    }
    std::vector<TableMismatch> out;
    for (const auto& p : all) {
        auto e = cls(reference, p), a = cls(generated, p);
        if (e != a) out.push_back({p, std::move(e), std::move(a)});
    }
    return out;
}

}  // namespace pants
