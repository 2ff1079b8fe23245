#pragma once

// Rate/gain tables and verification certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toricqc/interleave.hpp"
#include "toricqc/intlat.hpp"
#include "toricqc/toric.hpp"

namespace toricqc::report {

using intlat::Int;

inline constexpr const char* kVersion = "0.1.0";

struct Rational {
  Int num = 0;
  Int den = 1;
  static Rational reduced(Int num, Int den);
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Exact decimal mantissa * 10^-scale.
struct Decimal {
  Int mantissa = 0;
  int scale = 0;
  /// Plain rendering, trailing fractional zeros trimmed.
  std::string to_string() const;
  friend bool operator==(const Decimal&, const Decimal&) = default;
};

/// Rounds a non-negative rational half-to-even to `digits` significant digits.
Decimal round_significant(const Rational& value, int digits);

Decimal multiply(const Decimal& d, Int factor);

struct RateGain {
  Rational rate;       // k / n
  Rational gain;       // k (t+1) / n
  Decimal rate_printed;
  Decimal gain_printed;  // rate_printed * (t+1), the printed-table convention
  Int t = 0;
};

RateGain rate_gain(const toric::CodeParams& p, int significant_digits = 4);

struct TableRow {
  int table = 0;  // 1: toric codes, 2: interleaved codes
  std::string code;
  int q = 0;
  toric::CodeParams params;
  int significant_digits = 4;
  RateGain values;
};

std::vector<TableRow> published_tables();

enum class TableFormat { markdown, csv, json_lines };

/// Throws Error(invalid_argument) on an unknown format name.
TableFormat parse_table_format(std::string_view name);
std::string emit_tables(TableFormat format);
std::string emit_tables(const std::vector<TableRow>& rows, TableFormat format);

/// Flat, serialization-level view of a row.
struct TableRecord {
  int table = 0;
  std::string code;
  int q = 0;
  Int n = 0;
  Int k = 0;
  Int t = 0;
  Rational rate;
  Rational gain;
  std::string rate_printed;
  std::string gain_printed;
  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

TableRecord to_record(const TableRow& row);
std::vector<TableRecord> parse_tables_csv(std::string_view text);
std::vector<TableRecord> parse_tables_json_lines(std::string_view text);

struct VerificationCertificate {
  std::string claim;
  int q = 0;
  int n = 0;
  std::string mode;
  std::optional<std::uint64_t> seed;
  bool passed = false;
  std::vector<std::pair<std::string, Int>> counts;
  std::vector<std::pair<std::string, std::string>> notes;
  std::string version = kVersion;
  std::string timestamp;

  /// One JSON object. `with_timestamp = false` gives the reproducible part.
  std::string to_json(bool with_timestamp = true) const;
};

std::string utc_timestamp();

VerificationCertificate certify_chain(int q);
VerificationCertificate certify_tiling(const lee::LeeCode& code);
VerificationCertificate certify_min_distance(const lee::LeeCode& code);
VerificationCertificate certify_stabilizers(int q, int n);
VerificationCertificate certify_bursts(const lee::LeeCode& code, const interleave::BurstMode& mode, unsigned threads = 0);

}  // namespace toricqc::report
