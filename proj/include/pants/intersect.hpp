#pragma once

// Self-intersection numbers of arcs by chain resolution.
//
// Every unordered pair of segments of a lift is either decidable inside one
// copy of the fundamental domain, or the two strands run together across a
// shared edge. In the second case the pair is extended forwards and backwards
// along both strands until they separate; all pairs visited form one chain,
// and the chain contributes a crossing iff the strands leave on opposite sides
// at its two ends. Each pair belongs to exactly one chain, so a full run does
// O(L^2) work.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar.hpp"
#include "word.hpp"

namespace pants {

enum class Side { left, right };
enum class Polarity {
    into,    // both strands end on the shared edge
    out_of,  // both strands start on the shared edge
};

// Which side strand j leaves on, relative to strand i, once the two strands
// part after running along `shared`. Positions are counted around the
// boundary starting just after the shared edge.
inline Side side_at_divergence(Item shared, Polarity polarity, Item item_i, Item item_j) {
    if (item_i == item_j) throw std::invalid_argument("side_at_divergence: strands do not diverge");
    if (item_i == shared || item_j == shared)
        throw std::invalid_argument("side_at_divergence: item coincides with the shared edge");
    const int n = static_cast<int>(boundary_size);
    auto pos = [&](Item x) { return (cycle_position(x) - cycle_position(shared) + n) % n; };
    const bool j_after_i = pos(item_j) > pos(item_i);
    const bool left = polarity == Polarity::out_of ? j_after_i : !j_after_i;
    return left ? Side::left : Side::right;
}

// Unordered pair of 1-based segment indices, stored with i < j.
struct SegmentPair {
    std::size_t i = 0;
    std::size_t j = 0;

    static SegmentPair of(std::size_t x, std::size_t y) noexcept {
        return x < y ? SegmentPair{x, y} : SegmentPair{y, x};
    }
    friend bool operator==(const SegmentPair&, const SegmentPair&) = default;
    friend auto operator<=>(const SegmentPair&, const SegmentPair&) = default;
};

enum class ChainMode { singleton, parallel, anti_parallel };

struct ChainResult {
    std::vector<SegmentPair> members;  // seed first
    ChainMode mode = ChainMode::singleton;
    int decision = 0;                  // 0 or 1
    SegmentPair terminal;              // where a crossing is recorded
    std::size_t steps = 0;             // extension steps taken
};

namespace detail {

// A strand walks the lift either along its orientation (+1) or against it.
inline Item head(const Segment& s, int dir) noexcept { return dir > 0 ? s.to : s.from; }
inline Item tail(const Segment& s, int dir) noexcept { return dir > 0 ? s.from : s.to; }

struct ChainSummary {
    ChainMode mode = ChainMode::singleton;
    int decision = 0;
    SegmentPair terminal;
    std::size_t steps = 0;
};

// Walks the chain through (i, j), 1-based, calling on_member for the seed and
// every pair reached. Shared by the collecting and the counting entry points.
template <typename OnMember>
ChainSummary walk_chain(std::span<const Segment> segs, std::size_t i, std::size_t j, OnMember&& on_member) {
    const auto n = static_cast<std::ptrdiff_t>(segs.size());
    if (i == j || i < 1 || j < 1 || static_cast<std::ptrdiff_t>(std::max(i, j)) > n)
        throw std::out_of_range("resolve_chain: bad segment pair");

    ChainSummary out;
    out.terminal = SegmentPair::of(i, j);
    on_member(out.terminal);
    const Segment& si = segs[i - 1];
    const Segment& sj = segs[j - 1];
    const PairClass cls = classify_decidable(si, sj);
    if (cls != PairClass::undecidable) {
        out.decision = cls == PairClass::intersecting ? 1 : 0;
        return out;
    }

    const bool parallel = (si.to == sj.to && is_edge(si.to)) || (si.from == sj.from && is_edge(si.from));
    out.mode = parallel ? ChainMode::parallel : ChainMode::anti_parallel;
    const int dq = parallel ? 1 : -1;

    auto reach = [&](std::ptrdiff_t p, std::ptrdiff_t q) {
        if (p < 0 || q < 0 || p >= n || q >= n) throw std::logic_error("resolve_chain: alignment overrun");
        // Reaching (m, m) would need x_m = inv(x_m) or a non-reduced word.
        if (p == q) throw std::logic_error("resolve_chain: strand aligned with itself");
        const auto pair = SegmentPair::of(static_cast<std::size_t>(p) + 1, static_cast<std::size_t>(q) + 1);
        if (pair.i > out.terminal.i) out.terminal = pair;
        on_member(pair);
        ++out.steps;
    };

    // Forward: follow strand i along its orientation until the heads part.
    std::ptrdiff_t p = static_cast<std::ptrdiff_t>(i) - 1, q = static_cast<std::ptrdiff_t>(j) - 1;
    while (is_edge(head(segs[p], 1)) && head(segs[p], 1) == head(segs[q], dq)) {
        p += 1;
        q += dq;
        reach(p, q);
    }
    const Item fwd_shared = tail(segs[p], 1), fwd_p = head(segs[p], 1), fwd_q = head(segs[q], dq);

    p = static_cast<std::ptrdiff_t>(i) - 1;
    q = static_cast<std::ptrdiff_t>(j) - 1;
    while (is_edge(tail(segs[p], 1)) && tail(segs[p], 1) == tail(segs[q], dq)) {
        p -= 1;
        q -= dq;
        reach(p, q);
    }
    const Item bwd_shared = head(segs[p], 1), bwd_p = tail(segs[p], 1), bwd_q = tail(segs[q], dq);

    // Strands reaching the same corner can be pulled apart at the puncture.
    if (fwd_p == fwd_q || bwd_p == bwd_q) {
        out.decision = 0;
    } else {
        const Side leaving = side_at_divergence(fwd_shared, Polarity::out_of, fwd_p, fwd_q);
        const Side arriving = side_at_divergence(bwd_shared, Polarity::into, bwd_p, bwd_q);
        out.decision = leaving != arriving ? 1 : 0;
    }
    return out;
}

}  // namespace detail

// Resolves the chain through pair (i, j) of 1-based segment indices.
inline ChainResult resolve_chain(std::span<const Segment> segs, std::size_t i, std::size_t j) {
    ChainResult out;
    const auto s = detail::walk_chain(segs, i, j, [&](SegmentPair m) { out.members.push_back(m); });
    out.mode = s.mode;
    out.decision = s.decision;
    out.terminal = s.terminal;
    out.steps = s.steps;
    return out;
}

inline ChainResult resolve_chain(const ArcWord& w, std::size_t i, std::size_t j) {
    const auto segs = segments(w);
    return resolve_chain(segs, i, j);
}

// Upper-triangular bookkeeping of which pairs a run has already claimed.
class PairMarks {
public:
    explicit PairMarks(std::size_t n) : n_(n), marks_(n * n, 0) {}
    void reset(std::size_t n) {
        n_ = n;
        marks_.assign(n * n, 0);
    }
    bool test(SegmentPair p) const { return marks_[(p.i - 1) * n_ + (p.j - 1)] != 0; }
    void set(SegmentPair p) { marks_[(p.i - 1) * n_ + (p.j - 1)] = 1; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> marks_;
};

struct IntersectionRun {
    std::size_t count = 0;
    std::size_t chains = 0;
    std::size_t steps = 0;  // total extension steps across all chains
};

// Seeds chains in the given order, skipping claimed pairs. The count does
// not depend on the order.
template <typename Visitor>
IntersectionRun run_chains(std::span<const Segment> segs, std::span<const SegmentPair> order, Visitor&& visit) {
    IntersectionRun run;
    PairMarks marks(segs.size());
    for (const SegmentPair seed : order) {
        if (marks.test(seed)) continue;
        ChainResult chain = resolve_chain(segs, seed.i, seed.j);
        for (const auto& m : chain.members) marks.set(m);
        run.count += static_cast<std::size_t>(chain.decision);
        run.steps += chain.steps;
        ++run.chains;
        visit(chain);
    }
    return run;
}

inline std::vector<SegmentPair> lexicographic_pairs(std::size_t n) {
    std::vector<SegmentPair> out;
    out.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

inline IntersectionRun run_intersection(std::span<const Segment> segs) {
    const auto order = lexicographic_pairs(segs.size());
    return run_chains(segs, order, [](const ChainResult&) {});
}

// Counting entry point; the caller may reuse `marks` across words of the
// same segment count.
inline std::size_t self_intersection(std::span<const Segment> segs, PairMarks& marks) {
    const std::size_t n = segs.size();
    std::size_t count = 0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (marks.test({i, j})) continue;
            count += static_cast<std::size_t>(
                detail::walk_chain(segs, i, j, [&](SegmentPair m) { marks.set(m); }).decision);
        }
    return count;
}

inline std::size_t self_intersection(std::span<const Segment> segs) {
    if (segs.size() < 2) return 0;
    PairMarks marks(segs.size());
    return self_intersection(segs, marks);
}

inline std::size_t self_intersection(const ArcWord& w) {
    if (w.seam_length() == 0) return 0;
    const auto segs = segments(w);
    return self_intersection(std::span<const Segment>(segs));
}

enum class CellState : std::uint8_t { unvisited, chain_member, counted_here, zero };

class PairGrid {
public:
    explicit PairGrid(std::size_t n) : n_(n), cells_(n * n, CellState::unvisited) {}

    std::size_t size() const noexcept { return n_; }
    CellState at(std::size_t i, std::size_t j) const { return cells_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, CellState s) { cells_[index(i, j)] = s; }

    std::size_t count(CellState s) const {
        std::size_t c = 0;
        for (std::size_t i = 1; i <= n_; ++i)
            for (std::size_t j = i + 1; j <= n_; ++j) c += at(i, j) == s;
        return c;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i < 1 || j <= i || j > n_) throw std::out_of_range("PairGrid: need 1 <= i < j <= size");
        return (i - 1) * n_ + (j - 1);
    }

    std::size_t n_;
    std::vector<CellState> cells_;
};

inline PairGrid trace(std::span<const Segment> segs) {
    PairGrid grid(segs.size());
    const auto order = lexicographic_pairs(segs.size());
    run_chains(segs, order, [&](const ChainResult& chain) {
        for (const auto& m : chain.members) grid.set(m.i, m.j, CellState::chain_member);
        grid.set(chain.terminal.i, chain.terminal.j,
                 chain.decision == 1 ? CellState::counted_here : CellState::zero);
    });
    return grid;
}

inline PairGrid trace(const ArcWord& w) {
    const auto segs = segments(w);
    return trace(std::span<const Segment>(segs));
}

inline char cell_char(CellState s) noexcept {
    switch (s) {
        case CellState::chain_member: return 'X';
        case CellState::counted_here: return '1';
        case CellState::zero: return '0';
        case CellState::unvisited: return '?';
    }
    return '?';
}

// Text grid: a header row and column of "w1=1B" labels, "0", "1" or "X" above
// the diagonal, blank elsewhere. Columns are padded to the widest label and
// trailing blanks are trimmed.
inline std::string render_trace(std::span<const Segment> segs, const PairGrid& grid) {
    const std::size_t n = segs.size();
    std::vector<std::string> labels;
    std::size_t width = 0;
    for (const auto& s : segs) {
        labels.push_back("w" + std::to_string(s.index) + "=" + s.label());
        width = std::max(width, labels.back().size());
    }
    auto pad = [&](std::string s) {
        s.resize(width, ' ');
        return s;
    };
    auto emit = [](std::ostringstream& os, std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    };
    std::ostringstream os;
    std::string header = pad("");
    for (const auto& l : labels) header += " " + pad(l);
    emit(os, header);
    for (std::size_t i = 1; i <= n; ++i) {
        std::string row = pad(labels[i - 1]);
        for (std::size_t j = 1; j <= n; ++j)
            row += " " + pad(j > i ? std::string(1, cell_char(grid.at(i, j))) : std::string());
        emit(os, row);
    }
    return os.str();
}

inline std::string render_trace(const ArcWord& w) {
    const auto segs = segments(w);
    return render_trace(segs, trace(std::span<const Segment>(segs)));
}

}  // namespace pants
