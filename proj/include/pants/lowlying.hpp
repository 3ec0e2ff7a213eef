#pragma once

// Continued fractions with bounded partial quotients, the five-set cover of
// the naturals, and constructive 2-low-lying witnesses for every
// self-intersection value.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "families.hpp"
#include "intersect.hpp"
#include "word.hpp"

namespace pants {

using BigInt = boost::multiprecision::cpp_int;

// [a1, ..., ak] = 1 / (a1 + 1 / (a2 + ... + 1 / ak)), every a_i >= 1.
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<std::uint64_t> quotients) : q_(std::move(quotients)) {
        if (q_.empty()) throw std::invalid_argument("continued fraction needs at least one quotient");
        if (std::ranges::find(q_, 0u) != q_.end())
            throw std::invalid_argument("continued fraction quotients must be positive");
    }

    const std::vector<std::uint64_t>& quotients() const noexcept { return q_; }
    std::size_t size() const noexcept { return q_.size(); }

    std::string str() const {
        std::string out = "[";
        for (std::size_t k = 0; k < q_.size(); ++k) out += (k ? "," : "") + std::to_string(q_[k]);
        return out + "]";
    }

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<std::uint64_t> q_;
};

// b/d in lowest terms.
struct Fraction {
    BigInt b;
    BigInt d;

    std::string str() const { return b.str() + "/" + d.str(); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

inline Fraction cf_eval(const ContinuedFraction& cf) {
    const auto& a = cf.quotients();
    // Evaluate from the innermost level outwards: x = num / den.
    BigInt num = 1, den = a.back();
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
        BigInt next_den = BigInt(*it) * den + num;
        num = std::move(den);
        den = std::move(next_den);
    }
    const BigInt g = boost::multiprecision::gcd(num, den);
    return {num / g, den / g};
}

inline std::uint64_t max_partial_quotient(const ContinuedFraction& cf) {
    return *std::ranges::max_element(cf.quotients());
}

inline bool in_R(const ContinuedFraction& cf, std::uint64_t bound) {
    const Fraction f = cf_eval(cf);
    return f.b > 0 && f.b < f.d && boost::multiprecision::gcd(f.b, f.d) == 1 && max_partial_quotient(cf) <= bound;
}

struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Continued fraction of the endpoint b/d attached to each low-lying family.
inline ContinuedFraction family_cf(FamilyId f, std::uint64_t n = 0, std::optional<std::uint64_t> m = std::nullopt) {
    detail::check_family_params(f, n, m);
    std::vector<std::uint64_t> q;
    auto twos = [&](std::uint64_t k) { q.insert(q.end(), k, 2); };
    auto put = [&](std::initializer_list<std::uint64_t> xs) { q.insert(q.end(), xs); };
    switch (f) {
        case FamilyId::Z1: twos(2 * n), put({1, 2, 1, 1}), twos(2 * *m - 1), put({1}); break;
        case FamilyId::Z2: twos(2 * n), put({1, 1}), twos(2 * *m - 1), put({1}); break;
        case FamilyId::Z3: put({2, 1, 1, 1, 1, 2, 1, 1, 1, 1}), twos(2 * n), put({1}); break;
        case FamilyId::Z3c: twos(2 * n + 4), put({1, 1, 2}); break;
        case FamilyId::Z4: twos(2 * n), put({1, 1}); break;
        case FamilyId::Z5: twos(2 * n), put({1, 1, 1}); break;
        case FamilyId::C2: put({2, 1, 1}); break;
        case FamilyId::C7: put({2, 2, 1, 1, 1, 1}); break;
        default: throw Unsupported("no continued fraction is attached to family " + std::string(to_string(f)));
    }
    return ContinuedFraction(std::move(q));
}

inline std::uint64_t isqrt(std::uint64_t x) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

struct CoverWitness {
    std::uint64_t N = 0;
    FamilyId family = FamilyId::C2;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> m;

    ArcWord word() const { return family_word(family, n, m); }
    ContinuedFraction cf() const { return family_cf(family, n, m); }
};

// Inverts the cover: every N >= 12 is j^2 + i0 for a unique j >= 4 with
// -j <= i0 <= j - 1, and each range of i0 is owned by one family. The
// i0 = -2 branch uses Z3c.
inline CoverWitness decompose(std::uint64_t N) {
    using F = FamilyId;
    switch (N) {
        case 0: return {N, F::Z4, 0, {}};
        case 1: return {N, F::Z5, 0, {}};
        case 2: return {N, F::C2, 0, {}};
        case 3: return {N, F::Z2, 0, 1};
        case 4: return {N, F::Z4, 1, {}};
        case 5: return {N, F::Z5, 1, {}};
        case 6: return {N, F::Z1, 0, 1};
        case 7: return {N, F::C7, 0, {}};
        case 8: return {N, F::Z2, 0, 2};
        case 9: return {N, F::Z2, 1, 1};
        case 10: return {N, F::Z4, 2, {}};
        case 11: return {N, F::Z5, 2, {}};
        default: break;
    }
    // j^2 - j <= N <= j^2 + j - 1: take r = isqrt(N) and check r, r + 1.
    std::uint64_t j = isqrt(N);
    if (N > j * j + j - 1) ++j;
    const auto jj = static_cast<std::int64_t>(j);
    const std::int64_t i0 = static_cast<std::int64_t>(N) - jj * jj;
    auto u = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };
    if (i0 == jj - 1) return {N, F::Z5, j - 1, {}};
    if (i0 == jj - 2) return {N, F::Z4, j - 1, {}};
    if (i0 >= -1) return {N, F::Z2, u(i0 + 1), u(jj - i0 - 2)};
    if (i0 == -2) return {N, F::Z3c, j - 4, {}};
    return {N, F::Z1, u(-i0 - 3), u(jj + i0 + 1)};
}

inline nlohmann::ordered_json witness_json(const CoverWitness& w) {
    const ArcWord word = w.word();
    const ContinuedFraction cf = w.cf();
    nlohmann::ordered_json j;
    j["N"] = w.N;
    j["family"] = to_string(w.family);
    j["n"] = w.n;
    j["m"] = w.m ? nlohmann::ordered_json(*w.m) : nlohmann::ordered_json(nullptr);
    j["word"] = word.str();
    j["i_computed"] = self_intersection(word);
    j["cf"] = cf.quotients();
    j["max_quotient"] = max_partial_quotient(cf);
    return j;
}

enum class CoverSet { A1, A2, A3, A4, A5 };

inline constexpr CoverSet all_cover_sets[] = {CoverSet::A1, CoverSet::A2, CoverSet::A3, CoverSet::A4, CoverSet::A5};

inline std::string to_string(CoverSet s) { return "A" + std::to_string(static_cast<int>(s) + 1); }

struct SetMember {
    std::uint64_t n = 0;
    std::optional<std::uint64_t> m;
    friend bool operator==(const SetMember&, const SetMember&) = default;
};

// Membership by solving the defining closed form for the parameters.
//   A1 = {(m+n+1)^2 + 2m + n : m >= 1}   A2 = {(m+n)^2 + 2m + 3n : m >= 1}
//   A3 = {(n+4)^2 - 2}   A4 = {n(n+3)}   A5 = {n(n+3) + 1}
inline std::optional<SetMember> set_membership(CoverSet set, std::uint64_t N) {
    switch (set) {
        case CoverSet::A1:
            // With s = m + n + 1: N = s^2 + s - 1 + m, so m = N - s^2 - s + 1.
            for (std::uint64_t s = 2; s * s + s <= N; ++s) {
                const auto m = static_cast<std::int64_t>(N) - static_cast<std::int64_t>(s * s + s) + 1;
                if (m >= 1 && static_cast<std::uint64_t>(m) <= s - 1) return SetMember{s - 1 - static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m)};
            }
            return std::nullopt;
        case CoverSet::A2:
            // With s = m + n: N = s^2 + 3s - m, so m = s^2 + 3s - N.
            for (std::uint64_t s = 1; s * s + 2 * s <= N; ++s) {
                const auto m = static_cast<std::int64_t>(s * s + 3 * s) - static_cast<std::int64_t>(N);
                if (m >= 1 && static_cast<std::uint64_t>(m) <= s) return SetMember{s - static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m)};
            }
            return std::nullopt;
        case CoverSet::A3: {
            const std::uint64_t r = isqrt(N + 2);
            if (r >= 4 && r * r == N + 2) return SetMember{r - 4, {}};
            return std::nullopt;
        }
        case CoverSet::A4:
        case CoverSet::A5: {
            if (set == CoverSet::A5 && N == 0) return std::nullopt;
            const std::uint64_t v = set == CoverSet::A4 ? N : N - 1;
            // n(n+3) = v  <=>  (2n+3)^2 = 4v + 9.
            const std::uint64_t r = isqrt(4 * v + 9);
            if (r * r == 4 * v + 9 && r >= 3 && r % 2 == 1) return SetMember{(r - 3) / 2, {}};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

inline std::uint64_t set_value(CoverSet set, const SetMember& p) {
    const std::uint64_t n = p.n, m = p.m.value_or(0);
    switch (set) {
        case CoverSet::A1: return (m + n + 1) * (m + n + 1) + 2 * m + n;
        case CoverSet::A2: return (m + n) * (m + n) + 2 * m + 3 * n;
        case CoverSet::A3: return (n + 4) * (n + 4) - 2;
        case CoverSet::A4: return n * (n + 3);
        case CoverSet::A5: return n * (n + 3) + 1;
    }
    return 0;
}

struct CoverGap : std::runtime_error {
    explicit CoverGap(std::uint64_t n) : std::runtime_error("no cover set contains " + std::to_string(n)), N(n) {}
    std::uint64_t N;
};

struct CoverReport {
    std::uint64_t max_n = 0;
    std::uint64_t checked = 0;
    std::vector<std::string> failures;  // identity or witness disagreements

    bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

// Marks every value <= limit produced by `gen(emit)`.
template <typename Gen>
std::vector<bool> value_set(std::uint64_t limit, Gen gen) {
    std::vector<bool> out(limit + 1, false);
    gen([&](std::uint64_t v) {
        if (v <= limit) out[v] = true;
    });
    return out;
}

// Quadratic in s = m + n: loops stop once the smallest value in a shell
// passes the limit.
inline std::vector<std::vector<bool>> cover_forms(CoverSet set, std::uint64_t limit) {
    using V = std::vector<bool>;
    auto defining = [&] {
        return value_set(limit, [&](auto emit) {
            switch (set) {
                case CoverSet::A1:
                case CoverSet::A2:
                    for (std::uint64_t s = 1;; ++s) {
                        bool any = false;
                        for (std::uint64_t m = 1; m <= s; ++m) {
                            const std::uint64_t v = set_value(set, {s - m, m});
                            any |= v <= limit;
                            emit(v);
                        }
                        if (!any) break;
                    }
                    break;
                default:
                    for (std::uint64_t n = 0; set_value(set, {n, {}}) <= limit; ++n) emit(set_value(set, {n, {}}));
            }
        });
    };
    auto reparameterized = [&] {
        return value_set(limit, [&](auto emit) {
            switch (set) {
                case CoverSet::A1:
                case CoverSet::A2:
                    for (std::uint64_t s = 1;; ++s) {
                        bool any = false;
                        for (std::uint64_t m = 1; m <= s; ++m) {
                            const std::uint64_t n = s - m;
                            const std::uint64_t v = set == CoverSet::A1 ? (m + n + 2) * (m + n + 2) - (n + 3)
                                                                       : (m + n + 1) * (m + n + 1) + n - 1;
                            any |= v <= limit;
                            emit(v);
                        }
                        if (!any) break;
                    }
                    break;
                case CoverSet::A3:
                    for (std::uint64_t n = 0; (n + 4) * (n + 4) - 2 <= limit; ++n) emit((n + 4) * (n + 4) - 2);
                    break;
                case CoverSet::A4:
                case CoverSet::A5: {
                    const std::uint64_t c = set == CoverSet::A4 ? 2 : 1;
                    for (std::uint64_t n = 0; (n + 1) * (n + 1) + (n + 1) - c <= limit; ++n)
                        emit((n + 1) * (n + 1) + (n + 1) - c);
                    break;
                }
            }
        });
    };
    // Union over j >= 4 of {j^2 + i} for the set's range of i, plus the
    // finitely many small members.
    auto intervals = [&] {
        return value_set(limit, [&](auto emit) {
            std::vector<std::uint64_t> extra;
            switch (set) {
                case CoverSet::A1: extra = {6}; break;
                case CoverSet::A2: extra = {3, 8, 9}; break;
                case CoverSet::A3: break;
                case CoverSet::A4: extra = {0, 4, 10}; break;
                case CoverSet::A5: extra = {1, 5, 11}; break;
            }
            for (auto v : extra) emit(v);
            for (std::int64_t j = 4; j * j - j <= static_cast<std::int64_t>(limit); ++j) {
                std::int64_t lo = 0, hi = -1;
                switch (set) {
                    case CoverSet::A1: lo = -j, hi = -3; break;
                    case CoverSet::A2: lo = -1, hi = j - 3; break;
                    case CoverSet::A3: lo = hi = -2; break;
                    case CoverSet::A4: lo = hi = j - 2; break;
                    case CoverSet::A5: lo = hi = j - 1; break;
                }
                for (std::int64_t i = lo; i <= hi; ++i) emit(static_cast<std::uint64_t>(j * j + i));
            }
        });
    };
    return std::vector<V>{defining(), reparameterized(), intervals()};
}

}  // namespace detail

// Checks that [0, max_n] is covered by {2, 7} and the five sets, that the
// defining, reparameterized and interval forms of each set agree there, that
// set_membership solves each form correctly, and that decompose hits N.
inline CoverReport cover_check(std::uint64_t max_n) {
    CoverReport r;
    r.max_n = max_n;
    std::vector<std::vector<bool>> defining;
    for (CoverSet set : all_cover_sets) {
        const auto forms = detail::cover_forms(set, max_n);
        static constexpr const char* names[] = {"defining", "reparameterized", "interval"};
        for (std::size_t k = 1; k < forms.size(); ++k)
            if (forms[k] != forms[0]) {
                std::uint64_t at = 0;
                while (forms[k][at] == forms[0][at]) ++at;
                r.failures.push_back(to_string(set) + ": " + names[k] + " form disagrees with defining form at " +
                                     std::to_string(at));
            }
        defining.push_back(forms[0]);
    }
    for (std::uint64_t N = 0; N <= max_n; ++N) {
        bool covered = N == 2 || N == 7;
        for (std::size_t k = 0; k < std::size(all_cover_sets); ++k) {
            const CoverSet set = all_cover_sets[k];
            const auto member = set_membership(set, N);
            if (member.has_value() != defining[k][N])
                r.failures.push_back(to_string(set) + ": membership of " + std::to_string(N) + " disagrees");
            else if (member && set_value(set, *member) != N)
                r.failures.push_back(to_string(set) + ": parameters for " + std::to_string(N) + " are wrong");
            covered |= member.has_value();
        }
        if (!covered) throw CoverGap(N);
        const CoverWitness w = decompose(N);
        if (family_predicted_i(w.family, w.n, w.m) != N)
            r.failures.push_back("decompose(" + std::to_string(N) + ") predicts " +
                                 std::to_string(family_predicted_i(w.family, w.n, w.m)));
        ++r.checked;
    }
    return r;
}

struct SpectrumMismatch {
    std::uint64_t N = 0;
    std::string word;
    std::uint64_t expected = 0;
    std::uint64_t got = 0;
    std::uint64_t max_quotient = 0;
};

struct SpectrumReport {
    std::uint64_t max_n = 0;
    std::uint64_t checked = 0;
    std::vector<SpectrumMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

// For every N <= max_n the witness word has self-intersection N and its
// continued fraction has partial quotients at most 2.
inline SpectrumReport spectrum_check(std::uint64_t max_n) {
    SpectrumReport r;
    r.max_n = max_n;
    for (std::uint64_t N = 0; N <= max_n; ++N) {
        const CoverWitness w = decompose(N);
        const ArcWord word = w.word();
        const std::uint64_t got = self_intersection(word);
        const std::uint64_t q = max_partial_quotient(w.cf());
        if (got != N || q > 2) r.mismatches.push_back({N, word.str(), N, got, q});
        ++r.checked;
    }
    return r;
}

struct LowLyingVerdict {
    bool low_lying = true;
    // True when the answer rests on rules beyond the two explicit k = 4
    // conditions: other k, or an alternation mixing letter cases.
    bool extrapolated = false;
};

namespace detail {

// Longest run of one letter, and longest stretches alternating between one
// fixed letter of each seam family, split by whether the two letters share
// their case.
struct PatternStats {
    std::size_t run = 0;
    std::size_t alt_same_case = 0;
    std::size_t alt_mixed_case = 0;
};

inline PatternStats pattern_stats(std::span<const Seam> xs) {
    PatternStats st;
    std::size_t run = 0, alt = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        run = k > 0 && xs[k] == xs[k - 1] ? run + 1 : 1;
        st.run = std::max(st.run, run);
        if (k == 0 || is_a_family(xs[k]) == is_a_family(xs[k - 1]))
            alt = 1;
        else if (k >= 2 && xs[k] == xs[k - 2])
            ++alt;
        else
            alt = 2;
        if (alt >= 2) {
            const bool same_case = is_capital(xs[k]) == is_capital(xs[k - 1]);
            auto& slot = same_case ? st.alt_same_case : st.alt_mixed_case;
            slot = std::max(slot, alt);
        }
    }
    return st;
}

}  // namespace detail

// Word-level k-low-lying test. For k = 4 the two explicit conditions: no
// four equal letters in a row and no eight-letter alternation abab... or
// ABAB... (either starting letter). Mixed-case alternations such as bAbAbAbA
// are also rejected, flagged as extrapolated. For other k: no run of k equal
// letters and no two-letter alternation of length 2k, always extrapolated.
inline LowLyingVerdict pattern_low_lying(const ArcWord& w, std::size_t k) {
    if (k < 2) throw std::invalid_argument("pattern_low_lying: k must be at least 2");
    const auto st = detail::pattern_stats(w.seams());
    LowLyingVerdict v;
    v.extrapolated = k != 4;
    if (st.run >= k || st.alt_same_case >= 2 * k) {
        v.low_lying = false;
    } else if (st.alt_mixed_case >= 2 * k) {
        v.low_lying = false;
        v.extrapolated = true;
    }
    return v;
}

}  // namespace pants
