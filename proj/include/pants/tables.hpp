#pragma once

// Reference data: the transcribed decidable-pair tables (embedded at build
// time from data/decidable_pairs.txt) and readers for the CSV fixtures.

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pants/decidable_pairs_data.hpp"
#include "planar.hpp"

namespace pants {

inline DecidableTables embedded_tables() {
    std::istringstream in{std::string(detail::decidable_pairs_text)};
    return parse_tables(in);
}

struct TablesVerification {
    std::size_t reference_pairs = 0;
    std::size_t generated_pairs = 0;
    std::vector<TableMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

// Chord-model classification against the transcription, both directions.
inline TablesVerification verify_tables(const DecidableTables& reference = embedded_tables()) {
    const DecidableTables generated = regenerate_tables();
    return {reference.intersecting.size() + reference.non_intersecting.size(),
            generated.intersecting.size() + generated.non_intersecting.size(), compare_tables(reference, generated)};
}

namespace detail {

// Non-comment, non-blank lines split on commas; the first such line must
// equal `header`.
inline std::vector<std::vector<std::string>> read_csv(std::istream& in, const std::string& header) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool seen_header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            if (line != header) throw std::runtime_error("expected header \"" + header + "\", got \"" + line + "\"");
            seen_header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream ls(line);
        for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
        fields.push_back(std::to_string(lineno));
        rows.push_back(std::move(fields));
    }
    if (!seen_header) throw std::runtime_error("missing header \"" + header + "\"");
    return rows;
}

inline std::uint64_t to_u64(const std::string& s, std::size_t lineno) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size() || s[0] == '-')
        throw std::runtime_error("line " + std::to_string(lineno) + ": bad number \"" + s + "\"");
    return v;
}

}  // namespace detail

struct FixtureRow {
    std::string word;
    std::uint64_t expected_i = 0;
    std::size_t line = 0;
};

// "word,expected_i" rows. Words are kept as text so a malformed one is
// reported by the caller against its row.
inline std::vector<FixtureRow> parse_fixtures(std::istream& in) {
    std::vector<FixtureRow> out;
    for (const auto& f : detail::read_csv(in, "word,expected_i")) {
        const std::size_t lineno = std::stoul(f.back());
        if (f.size() != 3) throw std::runtime_error("line " + std::to_string(lineno) + ": expected two fields");
        out.push_back({f[0], detail::to_u64(f[1], lineno), lineno});
    }
    return out;
}

struct MinMaxRow {
    std::size_t word_length = 0;
    std::uint64_t min_i = 0;
    std::uint64_t max_i = 0;
};

inline std::vector<MinMaxRow> parse_min_max(std::istream& in) {
    std::vector<MinMaxRow> out;
    for (const auto& f : detail::read_csv(in, "word_length,min_i,max_i")) {
        const std::size_t lineno = std::stoul(f.back());
        if (f.size() != 4) throw std::runtime_error("line " + std::to_string(lineno) + ": expected three fields");
        out.push_back({static_cast<std::size_t>(detail::to_u64(f[0], lineno)), detail::to_u64(f[1], lineno),
                       detail::to_u64(f[2], lineno)});
    }
    return out;
}

}  // namespace pants
