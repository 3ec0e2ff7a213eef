#pragma once

// Closed-form arc families: word templates and their predicted
// self-intersection numbers.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "word.hpp"

namespace pants {

// F1..F4 are the extremal families; Z1..Z5, C2 and C7 are the low-lying
// families of the cover. Z3c is the replacement used for the N = j^2 - 2
// branch, since Z3 itself evaluates to (n + 4)^2.
enum class FamilyId { F1, F2, F3, F4, Z1, Z2, Z3, Z3c, Z4, Z5, C2, C7 };

inline constexpr std::array<FamilyId, 12> all_families = {
    FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4, FamilyId::Z1, FamilyId::Z2,
    FamilyId::Z3, FamilyId::Z3c, FamilyId::Z4, FamilyId::Z5, FamilyId::C2, FamilyId::C7};

struct BadParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::string_view to_string(FamilyId f) noexcept {
    constexpr std::string_view names[] = {"F1", "F2", "F3", "F4", "Z1", "Z2",
                                          "Z3", "Z3c", "Z4", "Z5", "C2", "C7"};
    return names[static_cast<int>(f)];
}

inline std::optional<FamilyId> family_from_string(std::string_view s) noexcept {
    for (FamilyId f : all_families)
        if (to_string(f) == s) return f;
    return std::nullopt;
}

enum class Arity { none, n, n_m };

constexpr Arity family_arity(FamilyId f) noexcept {
    switch (f) {
        case FamilyId::C2:
        case FamilyId::C7: return Arity::none;
        case FamilyId::Z1:
        case FamilyId::Z2: return Arity::n_m;
        default: return Arity::n;
    }
}

// Human-readable template, e.g. "1(bA)^n(baa)^m2".
inline std::string_view family_template(FamilyId f) noexcept {
    constexpr std::string_view t[] = {
        "1(BA)^n2",     "1(bA)^n3",           "1(BA)^nB1",     "3(bA)^nb3",
        "1(bA)^nbab(ABA)^m2", "1(bA)^n(baa)^m2", "1bABabaBA(bA)^n3", "1(bA)^(n+2)ba3",
        "1(bA)^nb1",    "1(bA)^nba2",         "1bA2",          "1bAba3"};
    return t[static_cast<int>(f)];
}

namespace detail {

inline void check_family_params(FamilyId f, std::uint64_t n, std::optional<std::uint64_t> m) {
    const Arity a = family_arity(f);
    const std::string name(to_string(f));
    if (a == Arity::n_m && (!m || *m < 1)) throw BadParams(name + " needs m >= 1");
    if (a != Arity::n_m && m) throw BadParams(name + " takes no m");
    if (a == Arity::none && n != 0) throw BadParams(name + " takes no n");
    // Words past this size are far beyond anything the quadratic algorithm
    // is asked to handle, and the closed forms would overflow.
    if (n > 1'000'000 || m.value_or(0) > 1'000'000) throw BadParams(name + ": parameter too large");
}

inline std::string repeat(std::string_view s, std::uint64_t k) {
    std::string out;
    out.reserve(s.size() * k);
    for (std::uint64_t i = 0; i < k; ++i) out += s;
    return out;
}

}  // namespace detail

inline std::string family_text(FamilyId f, std::uint64_t n, std::optional<std::uint64_t> m = std::nullopt) {
    detail::check_family_params(f, n, m);
    using detail::repeat;
    switch (f) {
        case FamilyId::F1: return "1" + repeat("BA", n) + "2";
        case FamilyId::F2: return "1" + repeat("bA", n) + "3";
        case FamilyId::F3: return "1" + repeat("BA", n) + "B1";
        case FamilyId::F4: return "3" + repeat("bA", n) + "b3";
        case FamilyId::Z1: return "1" + repeat("bA", n) + "bab" + repeat("ABA", *m) + "2";
        case FamilyId::Z2: return "1" + repeat("bA", n) + repeat("baa", *m) + "2";
        case FamilyId::Z3: return "1bABabaBA" + repeat("bA", n) + "3";
        case FamilyId::Z3c: return "1" + repeat("bA", n + 2) + "ba3";
        case FamilyId::Z4: return "1" + repeat("bA", n) + "b1";
        case FamilyId::Z5: return "1" + repeat("bA", n) + "ba2";
        case FamilyId::C2: return "1bA2";
        case FamilyId::C7: return "1bAba3";
    }
    throw std::logic_error("family_text: unknown family");
}

inline ArcWord family_word(FamilyId f, std::uint64_t n, std::optional<std::uint64_t> m = std::nullopt) {
    return ArcWord::parse(family_text(f, n, m));
}

inline std::uint64_t family_predicted_i(FamilyId f, std::uint64_t n,
                                        std::optional<std::uint64_t> m = std::nullopt) {
    detail::check_family_params(f, n, m);
    const std::uint64_t mm = m.value_or(0);
    switch (f) {
        case FamilyId::F1: return n;
        case FamilyId::F2: return n * n + 2 * n;
        case FamilyId::F3: return n;
        case FamilyId::F4: return n * n + 3 * n + 1;
        case FamilyId::Z1: return (mm + n + 1) * (mm + n + 1) + 2 * mm + n;
        case FamilyId::Z2: return (mm + n) * (mm + n) + 2 * mm + 3 * n;
        case FamilyId::Z3: return (n + 4) * (n + 4) - 2;
        case FamilyId::Z3c: return (n + 4) * (n + 4) - 2;
        case FamilyId::Z4: return n * (n + 3);
        case FamilyId::Z5: return n * (n + 3) + 1;
        case FamilyId::C2: return 2;
        case FamilyId::C7: return 7;
    }
    throw std::logic_error("family_predicted_i: unknown family");
}

}  // namespace pants
