#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "khovanov/laurent.hpp"

namespace kh {

/// Planar diagram code. Each crossing lists its four edge labels
/// counterclockwise, starting from the incoming under-strand. Labels run
/// 1..2n and each appears exactly twice.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  friend bool operator==(const PdCode&, const PdCode&) = default;
};

/// Braid word on `strands` strands; letter +i is σ_i, −i is σ_i⁻¹.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct KnotRecord {
  std::string name;
  std::optional<PdCode> pd;
  std::optional<BraidWord> braid;
  std::optional<double> volume;
  std::optional<LaurentPoly> alexander;
  std::optional<int> signature;
  /// Whether the knot type is alternating, when the table says so.
  std::optional<bool> alternating;
};

/// `X[a,b,c,d]` atoms joined by `;`. Whitespace-only input is the
/// 0-crossing unknot diagram.
PdCode parse_pd(std::string_view text);
std::string render_pd(const PdCode& pd);

/// Optional header `s=<k>:` followed by whitespace-separated nonzero integers.
BraidWord parse_braid(std::string_view text);
std::string render_braid(const BraidWord& braid);

/// Parses one JSON-lines record. `line_number` is only used in messages.
KnotRecord parse_knot_record(std::string_view json_line, std::size_t line_number = 0);

/// Loads a JSON-lines knot table. Blank lines are skipped; names must be unique.
std::vector<KnotRecord> load_knot_table(const std::filesystem::path& path);
std::vector<KnotRecord> parse_knot_table(std::string_view contents);

}  // namespace kh
