#include "toricqc/report.hpp"

#include <ctime>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "toricqc/error.hpp"
#include "toricqc/lee.hpp"

namespace toricqc::report {

using json = nlohmann::ordered_json;
using Wide = __int128;

Rational Rational::reduced(Int num, Int den) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

namespace {

Wide pow10(int e) {
  Wide r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

std::string Decimal::to_string() const {
  const bool negative = mantissa < 0;
  Int m = negative ? -mantissa : mantissa;
  std::string out;
  if (scale <= 0) {
    out = std::to_string(m) + std::string(static_cast<std::size_t>(m == 0 ? 0 : -scale), '0');
  } else {
    std::string digits = std::to_string(m);
    if (digits.size() <= static_cast<std::size_t>(scale)) digits.insert(0, static_cast<std::size_t>(scale) - digits.size() + 1, '0');
    std::string whole = digits.substr(0, digits.size() - static_cast<std::size_t>(scale));
    std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(scale));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = frac.empty() ? whole : whole + "." + frac;
  }
  return negative && m != 0 ? "-" + out : out;
}

Decimal round_significant(const Rational& value, int digits) {
  if (digits < 1 || digits > 18) throw Error(ErrorKind::invalid_argument, "significant digits must be in [1,18]");
  if (value.num < 0 || value.den <= 0) throw Error(ErrorKind::invalid_argument, "rounding expects a non-negative rational");
  if (value.num == 0) return {0, 0};

  const Wide lo = pow10(digits - 1), hi = pow10(digits);
  // Pick scale so that lo <= num*10^scale/den < hi.
  int scale = 0;
  auto fraction = [&](int s, Wide& a, Wide& b) {
    a = value.num;
    b = value.den;
    if (s >= 0) a *= pow10(s);
    else b *= pow10(-s);
  };
  Wide a, b;
  fraction(scale, a, b);
  while (a < lo * b) fraction(++scale, a, b);
  while (a >= hi * b) fraction(--scale, a, b);

  Wide whole = a / b;
  const Wide rem = a % b;
  if (2 * rem > b || (2 * rem == b && whole % 2 != 0)) ++whole;
  if (whole == hi) {
    whole /= 10;
    --scale;
  }
  return {static_cast<Int>(whole), scale};
}

Decimal multiply(const Decimal& d, Int factor) { return {detail::checked_mul(d.mantissa, factor), d.scale}; }

RateGain rate_gain(const toric::CodeParams& p, int significant_digits) {
  if (p.length < 1 || p.dimension < 1 || p.t < 0) throw Error(ErrorKind::invalid_argument, "invalid code parameters");
  RateGain rg;
  rg.t = p.t;
  rg.rate = Rational::reduced(p.dimension, p.length);
  rg.gain = Rational::reduced(detail::checked_mul(p.dimension, p.t + 1), p.length);
  rg.rate_printed = round_significant(rg.rate, significant_digits);
  rg.gain_printed = multiply(rg.rate_printed, p.t + 1);
  return rg;
}

std::vector<TableRow> published_tables() {
  auto row = [](int table, std::string code, int q, toric::CodeParams params, int digits) {
    TableRow r{table, std::move(code), q, std::move(params), digits, {}};
    r.values = rate_gain(r.params, digits);
    return r;
  };
  return {
      row(1, "[[3q³,3,t=3]]", 7, toric::literature_params(7, 3), 3),
      row(1, "[[6q⁴,6,t=40]]", 9, toric::literature_params(9, 4), 3),
      row(1, "[[3q=21,k=3,t=1]]", 7, toric::new_code_params(7, 3), 4),
      row(1, "[[6q=54,k=6,t=1]]", 9, toric::new_code_params(9, 4), 4),
      row(2, "[[3q³,3q²,tᵢ=q]]", 7, interleave::interleaved_params(7, 3), 4),
      row(2, "[[6q⁴,6q³,tᵢ=q]]", 9, interleave::interleaved_params(9, 4), 4),
  };
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  if (name == "csv") return TableFormat::csv;
  if (name == "json-lines" || name == "jsonl") return TableFormat::json_lines;
  throw Error(ErrorKind::invalid_argument, "unknown table format: " + std::string(name));
}

TableRecord to_record(const TableRow& row) {
  return {row.table,
          row.code,
          row.q,
          row.params.length,
          row.params.dimension,
          row.params.t,
          row.values.rate,
          row.values.gain,
          row.values.rate_printed.to_string(),
          row.values.gain_printed.to_string()};
}

namespace {

std::string rational_string(const Rational& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

constexpr const char* kCsvHeader = "table,code,q,n,k,t,rate_num,rate_den,gain_num,gain_den,rate,gain";

std::string emit_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  const char* titles[] = {"", "Table 1. Code rate and coding gain of the three- and four-dimensional toric quantum codes",
                          "Table 2. Code rate and coding gain of the interleaved (burst-error-correcting) codes"};
  for (int table = 1; table <= 2; ++table) {
    if (table == 2) os << '\n';
    os << "### " << titles[table] << "\n\n";
    os << "| Code | R | G (as printed; unit label ambiguous) | R exact | G exact |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      if (r.table != table) continue;
      os << "| " << r.code << " (q=" << r.q << ") | " << r.values.rate_printed.to_string() << " | "
         << r.values.gain_printed.to_string() << " | " << rational_string(r.values.rate) << " | "
         << rational_string(r.values.gain) << " |\n";
    }
  }
  return os.str();
}

std::string emit_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << "\r\n";
  for (const auto& row : rows) {
    const TableRecord r = to_record(row);
    os << r.table << ',' << csv_field(r.code) << ',' << r.q << ',' << r.n << ',' << r.k << ',' << r.t << ','
       << r.rate.num << ',' << r.rate.den << ',' << r.gain.num << ',' << r.gain.den << ',' << r.rate_printed << ','
       << r.gain_printed << "\r\n";
  }
  return os.str();
}

json record_json(const TableRecord& r) {
  return json{{"table", r.table},
              {"code", r.code},
              {"q", r.q},
              {"n", r.n},
              {"k", r.k},
              {"t", r.t},
              {"rate", {{"num", r.rate.num}, {"den", r.rate.den}, {"printed", r.rate_printed}}},
              {"gain", {{"num", r.gain.num}, {"den", r.gain.den}, {"printed", r.gain_printed}}}};
}

std::string emit_json_lines(const std::vector<TableRow>& rows) {
  std::string out;
  for (const auto& row : rows) out += record_json(to_record(row)).dump() + "\n";
  return out;
}

// RFC 4180 records; CRLF or LF line endings.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        fields.push_back(std::move(field));
        records.push_back(std::move(fields));
      }
      fields.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw Error(ErrorKind::invalid_argument, "unterminated quoted CSV field");
  if (any || !field.empty()) {
    fields.push_back(std::move(field));
    records.push_back(std::move(fields));
  }
  return records;
}

Int parse_int(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw Error(ErrorKind::invalid_argument, "malformed integer: " + s);
  return v;
}

}  // namespace

std::string emit_tables(const std::vector<TableRow>& rows, TableFormat format) {
  switch (format) {
    case TableFormat::markdown: return emit_markdown(rows);
    case TableFormat::csv: return emit_csv(rows);
    case TableFormat::json_lines: return emit_json_lines(rows);
  }
  throw Error(ErrorKind::invalid_argument, "unknown table format");
}

std::string emit_tables(TableFormat format) { return emit_tables(published_tables(), format); }

std::vector<TableRecord> parse_tables_csv(std::string_view text) {
  const auto records = parse_csv(text);
  if (records.empty()) throw Error(ErrorKind::invalid_argument, "missing CSV header");
  std::vector<TableRecord> out;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    if (f.size() != 12) throw Error(ErrorKind::invalid_argument, "CSV row must have 12 fields");
    out.push_back({static_cast<int>(parse_int(f[0])), f[1], static_cast<int>(parse_int(f[2])), parse_int(f[3]),
                   parse_int(f[4]), parse_int(f[5]), {parse_int(f[6]), parse_int(f[7])},
                   {parse_int(f[8]), parse_int(f[9])}, f[10], f[11]});
  }
  return out;
}

std::vector<TableRecord> parse_tables_json_lines(std::string_view text) {
  std::vector<TableRecord> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    out.push_back({j.at("table").get<int>(), j.at("code").get<std::string>(), j.at("q").get<int>(),
                   j.at("n").get<Int>(), j.at("k").get<Int>(), j.at("t").get<Int>(),
                   {j.at("rate").at("num").get<Int>(), j.at("rate").at("den").get<Int>()},
                   {j.at("gain").at("num").get<Int>(), j.at("gain").at("den").get<Int>()},
                   j.at("rate").at("printed").get<std::string>(), j.at("gain").at("printed").get<std::string>()});
  }
  return out;
}

std::string VerificationCertificate::to_json(bool with_timestamp) const {
  json j;
  j["claim"] = claim;
  j["inputs"] = {{"q", q}, {"n", n}, {"mode", mode}};
  if (seed) j["inputs"]["seed"] = *seed;
  json result = {{"status", passed ? "pass" : "fail"}};
  for (const auto& [key, value] : counts) result[key] = value;
  j["result"] = result;
  if (!notes.empty()) {
    json nj = json::object();
    for (const auto& [key, value] : notes) nj[key] = value;
    j["notes"] = nj;
  }
  j["version"] = version;
  if (with_timestamp) j["timestamp"] = timestamp;
  return j.dump();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

VerificationCertificate start(std::string claim, int q, int n, std::string mode) {
  VerificationCertificate c;
  c.claim = std::move(claim);
  c.q = q;
  c.n = n;
  c.mode = std::move(mode);
  c.timestamp = utc_timestamp();
  return c;
}

std::string vector_list(const std::vector<intlat::LatticeVector>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

}  // namespace

VerificationCertificate certify_chain(int q) {
  const int n = q == 7 ? 3 : q == 9 ? 4 : 0;
  if (n == 0) throw Error(ErrorKind::not_certified, "chain certificates exist for q in {7, 9}");
  const auto inst = lee::certified_instance(q, n);
  const intlat::ChainReport r = intlat::verify_chain(inst.scaling, q);
  auto c = start("lattice-chain", q, n, "exact");
  c.counts = {{"det_abs", r.det_abs}, {"index_ZA", r.index_ZA}, {"inclusion_holds", r.inclusion_holds ? 1 : 0},
              {"strict", r.strict ? 1 : 0}};
  if (r.index_AqZ) c.counts.emplace_back("index_AqZ", *r.index_AqZ);
  std::ostringstream m;
  m << r.matrix;
  c.notes = {{"matrix", m.str()}};
  c.passed = r.inclusion_holds && r.strict && r.index_AqZ &&
             r.det_abs * *r.index_AqZ == detail::checked_pow(q, n);
  return c;
}

VerificationCertificate certify_tiling(const lee::LeeCode& code) {
  auto c = start("lee-tiling", code.q(), code.n(), "exhaustive");
  Int once = 0, uncovered = 0, overlapped = 0;
  for (int cov : code.coverage()) {
    if (cov == 1) ++once;
    else if (cov == 0) ++uncovered;
    else ++overlapped;
  }
  const Int points = code.torus().volume();
  c.counts = {{"codewords", static_cast<Int>(code.size())}, {"points", points}, {"covered_once", once},
              {"uncovered", uncovered}, {"overlapped", overlapped}};
  c.notes = {{"generators", vector_list(code.generators())}};
  c.passed = lee::tiling_check(code) && static_cast<Int>(code.size()) * (2 * code.n() + 1) == points;
  return c;
}

VerificationCertificate certify_min_distance(const lee::LeeCode& code) {
  auto c = start("mannheim-min-distance", code.q(), code.n(), "exhaustive");
  const Int d = lee::minimum_distance(code);
  c.counts = {{"codewords", static_cast<Int>(code.size())}, {"min_distance", d}};
  c.notes = {{"generators", vector_list(code.generators())}, {"criterion", "min_distance >= 3 (single-error-correcting)"}};
  c.passed = d >= 3;
  return c;
}

VerificationCertificate certify_stabilizers(int q, int n) {
  const toric::CommutationReport r = toric::commutation_report(q, n);
  auto c = start("stabilizer-commutation", q, n, "exhaustive");
  c.counts = {{"x_stabilizers", r.x_count}, {"z_stabilizers", r.z_count}, {"overlapping_pairs", r.overlapping_pairs},
              {"odd_pairs", r.odd_pairs}, {"max_overlap", r.max_overlap}};
  c.passed = r.passed;
  return c;
}

VerificationCertificate certify_bursts(const lee::LeeCode& code, const interleave::BurstMode& mode, unsigned threads) {
  const bool sampled = mode.kind == interleave::BurstMode::Kind::sampled;
  auto c = start("burst-correction", code.q(), code.n(), sampled ? "sampled" : "exhaustive");
  if (sampled) c.seed = mode.seed;
  if (!lee::tiling_check(code)) {
    c.notes = {{"generators", vector_list(code.generators())}, {"reason", "code does not tile; no interleaver exists"}};
    c.passed = false;
    return c;
  }
  const auto map = interleave::build_interleaver(code);
  const interleave::BurstSummary s = interleave::verify_burst_correction(map, mode, threads);
  c.counts = {{"bursts_checked", s.total_checked}, {"exhaustive", s.exhaustive}, {"sampled", s.sampled},
              {"extremal", s.extremal}, {"failures", s.failures}, {"max_block_errors", s.max_block_count}};
  if (sampled) c.notes.emplace_back("rng", s.rng_algorithm);
  if (lee::is_certified(code.q(), code.n())) {
    const auto p = interleave::interleaved_params(code.q(), code.n());
    c.counts.emplace_back("interleaved_n", p.length);
    c.counts.emplace_back("interleaved_k", p.dimension);
    c.counts.emplace_back("t_i", p.t);
  }
  c.passed = s.passed() && s.max_block_count == 1;
  return c;
}

}  // namespace toricqc::report
