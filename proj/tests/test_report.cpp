#include "json.hpp"

#include "doctest.h"
#include "toricqc/error.hpp"
#include "toricqc/report.hpp"

using namespace toricqc;
using namespace toricqc::report;

TEST_SUITE("report") {
  TEST_CASE("rationals reduce") {
    CHECK(Rational::reduced(3, 21) == Rational{1, 7});
    CHECK(Rational::reduced(4374, 39366) == Rational{1, 9});
    CHECK(Rational::reduced(0, 5) == Rational{0, 1});
  }

  TEST_CASE("decimal rendering") {
    CHECK(Decimal{1429, 4}.to_string() == "0.1429");
    CHECK(Decimal{292, 5}.to_string() == "0.00292");
    CHECK(Decimal{11110, 4}.to_string() == "1.111");
    CHECK(Decimal{5, -2}.to_string() == "500");
    CHECK(Decimal{0, 0}.to_string() == "0");
    CHECK(Decimal{-25, 1}.to_string() == "-2.5");
  }

  TEST_CASE("significant-digit rounding is half-even") {
    CHECK(round_significant({1, 7}, 4).to_string() == "0.1429");
    CHECK(round_significant({1, 343}, 3).to_string() == "0.00292");
    CHECK(round_significant({1, 6561}, 3).to_string() == "0.000152");
    CHECK(round_significant({1, 9}, 4).to_string() == "0.1111");
    // Exact ties.
    CHECK(round_significant({125, 1000}, 2).to_string() == "0.12");
    CHECK(round_significant({135, 1000}, 2).to_string() == "0.14");
    CHECK(round_significant({25, 1}, 1).to_string() == "20");
    CHECK(round_significant({35, 1}, 1).to_string() == "40");
    // Carry into a new digit.
    CHECK(round_significant({9999, 10000}, 3).to_string() == "1");
    CHECK(round_significant({0, 1}, 3).to_string() == "0");
    CHECK_THROWS_AS(round_significant({1, 3}, 0), Error);
    CHECK_THROWS_AS(round_significant({-1, 3}, 3), Error);
  }

  TEST_CASE("rate and gain values") {
    const auto a = rate_gain(toric::new_code_params(7, 3));
    CHECK(a.rate == Rational{1, 7});
    CHECK(a.gain == Rational{2, 7});
    CHECK(a.rate_printed.to_string() == "0.1429");
    CHECK(a.gain_printed.to_string() == "0.2858");

    const auto b = rate_gain(toric::literature_params(7, 3), 3);
    CHECK(b.rate == Rational{1, 343});
    CHECK(b.gain == Rational{4, 343});
    CHECK(b.rate_printed.to_string() == "0.00292");
    CHECK(b.gain_printed.to_string() == "0.01168");
    // The printed gain differs from the exact value in the last place.
    CHECK(round_significant(b.gain, 4).to_string() == "0.01166");

    const auto c = rate_gain(interleave::interleaved_params(9, 4));
    CHECK(c.rate_printed.to_string() == "0.1111");
    CHECK(c.gain_printed.to_string() == "1.111");
    CHECK(c.gain == Rational{10, 9});

    const auto d = rate_gain(interleave::interleaved_params(7, 3));
    CHECK(d.gain_printed.to_string() == "1.1432");
  }

  TEST_CASE("the two tables") {
    const auto rows = published_tables();
    REQUIRE(rows.size() == 6);
    const char* rate[] = {"0.00292", "0.000152", "0.1429", "0.1111", "0.1429", "0.1111"};
    const char* gain[] = {"0.01168", "0.006232", "0.2858", "0.2222", "1.1432", "1.111"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].values.rate_printed.to_string() == rate[i]);
      CHECK(rows[i].values.gain_printed.to_string() == gain[i]);
    }
    const std::string md = emit_tables(TableFormat::markdown);
    CHECK(md.find("[[6q⁴,6,t=40]] (q=9) | 0.000152 | 0.006232") != std::string::npos);
    CHECK(md.find("[[3q³,3,t=3]] (q=7) | 0.00292 | 0.01168 | 1/343 | 4/343") != std::string::npos);
  }

  TEST_CASE("format names") {
    CHECK(parse_table_format("markdown") == TableFormat::markdown);
    CHECK(parse_table_format("md") == TableFormat::markdown);
    CHECK(parse_table_format("csv") == TableFormat::csv);
    CHECK(parse_table_format("json-lines") == TableFormat::json_lines);
    CHECK(parse_table_format("jsonl") == TableFormat::json_lines);
    try {
      parse_table_format("yaml");
      FAIL("expected invalid_argument");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_argument);
    }
  }

  TEST_CASE("csv and json lines round trip") {
    std::vector<TableRecord> expected;
    for (const auto& r : published_tables()) expected.push_back(to_record(r));

    const std::string csv = emit_tables(TableFormat::csv);
    CHECK(csv.rfind("table,code,q,n,k,t,rate_num,rate_den,gain_num,gain_den,rate,gain\r\n", 0) == 0);
    const auto from_csv = parse_tables_csv(csv);
    CHECK(from_csv.size() == 6);
    CHECK(from_csv == expected);

    const std::string jl = emit_tables(TableFormat::json_lines);
    const auto from_jl = parse_tables_json_lines(jl);
    CHECK(from_jl == expected);
    std::size_t lines = 0;
    for (char ch : jl) lines += ch == '\n';
    CHECK(lines == 6);
    CHECK(nlohmann::json::parse(jl.substr(0, jl.find('\n')))["rate"]["printed"] == "0.00292");
  }

  TEST_CASE("csv quoting survives awkward labels") {
    auto rows = published_tables();
    rows[0].code = "a,\"b\"";
    const auto back = parse_tables_csv(emit_tables(rows, TableFormat::csv));
    CHECK(back[0].code == "a,\"b\"");
    CHECK_THROWS_AS(parse_tables_csv("table,code\r\n1,\"open"), Error);
  }

  TEST_CASE("certificates") {
    const auto c7 = certify_chain(7);
    CHECK(c7.passed);
    CHECK(c7.to_json(false) == certify_chain(7).to_json(false));
    const auto j = nlohmann::json::parse(c7.to_json());
    CHECK(j["version"] == kVersion);
    CHECK(j["result"]["status"] == "pass");
    CHECK(j.contains("timestamp"));
    CHECK_FALSE(nlohmann::json::parse(c7.to_json(false)).contains("timestamp"));
    CHECK_THROWS_AS(certify_chain(5), Error);

    CHECK(certify_tiling(lee::certified_code(9, 4)).passed);
    CHECK_FALSE(certify_tiling(lee::enumerate_codewords({{1, 1, 0}, {0, 1, 1}}, 7, 3)).passed);
    CHECK(certify_min_distance(lee::certified_code(7, 3)).passed);
    CHECK(certify_stabilizers(7, 3).passed);

    const auto bursts = certify_bursts(lee::certified_code(9, 4), interleave::BurstMode::sampled(500, 3), 1);
    CHECK(bursts.passed);
    REQUIRE(bursts.seed.has_value());
    CHECK(*bursts.seed == 3);
    CHECK(bursts.to_json(false) ==
          certify_bursts(lee::certified_code(9, 4), interleave::BurstMode::sampled(500, 3), 1).to_json(false));
    CHECK_FALSE(certify_bursts(lee::enumerate_codewords({{1, 1, 0}, {0, 1, 1}}, 7, 3),
                               interleave::BurstMode::sampled(10, 1), 1)
                    .passed);
  }
}
