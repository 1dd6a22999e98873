#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "generators.hpp"
#include "qsl/report.hpp"

using namespace qsl;

TEST_CASE("record construction", "[report]") {
  const ResultRecord r = make_record(decompose(BoardSize{6}));
  CHECK(r.n == 6);
  CHECK(r.total == 4);
  REQUIRE(r.classes.has_value());
  CHECK(r.classes->f_r2_only == 4);
  CHECK(r.classes->c_r2_only == 1);
  CHECK(r.mod2 == 0);
  CHECK(r.mod4 == 0);
  CHECK_FALSE(r.reference_only);

  const ResultRecord t = total_record(1, 1);
  CHECK(t.mod2 == 1);
  CHECK(t.mod4 == 1);
  CHECK(reference_record(27, kQueens27Record).reference_only);
}

TEST_CASE("validation rejects arithmetic nonsense", "[report]") {
  ResultRecord good = make_record(decompose(BoardSize{6}));
  CHECK_NOTHROW(validate(good));

  ResultRecord bad = good;
  bad.total = 5;
  CHECK_THROWS_AS(validate(bad), validation_error);

  bad = good;
  bad.mod4 = 2;
  CHECK_THROWS_AS(validate(bad), validation_error);

  bad = good;
  bad.classes->c_r2_only = 2;
  CHECK_THROWS_AS(validate(bad), validation_error);

  bad = good;
  bad.per_ell.push_back({3, 4, 2});
  CHECK_THROWS_AS(validate(bad), validation_error);

  bad = good;
  bad.n = 0;
  CHECK_THROWS_AS(validate(bad), validation_error);

  SECTION("emit refuses invalid records") {
    ResultRecord broken = good;
    broken.total = 7;
    CHECK_THROWS_AS(emit({broken}, Format::csv), validation_error);
  }
}

TEST_CASE("csv emission", "[report]") {
  const std::vector<ResultRecord> records = {make_record(decompose(BoardSize{5})),
                                             make_record(decompose(BoardSize{6})),
                                             total_record(3, 0)};
  const std::string expected =
      "n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n"
      "5,10,2,0,8,1,0,1,0,2\n"
      "6,4,0,4,0,0,1,0,0,0\n"
      "3,0,,,,,,,0,0\n";
  CHECK(emit(records, Format::csv) == expected);
  CHECK(parse(expected, Format::csv) == records);
  CHECK(emit({}, Format::csv) == "n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n");
}

TEST_CASE("table emission", "[report]") {
  const std::vector<ResultRecord> records = {make_record(decompose(BoardSize{6})),
                                             total_record(3, 0)};
  const std::string table = emit(records, Format::table);
  CHECK(table.find("n  total") == 0);
  CHECK(parse(table, Format::table) == records);
  CHECK(parse(emit({}, Format::table), Format::table).empty());

  SECTION("no line carries trailing spaces") {
    for (std::size_t pos = table.find('\n'); pos != std::string::npos && pos > 0;
         pos = table.find('\n', pos + 1)) {
      CHECK(table[pos - 1] != ' ');
    }
  }
}

TEST_CASE("json carries counts as decimal strings", "[report]") {
  const std::string text = emit({reference_record(27, kQueens27Record)}, Format::json);
  CHECK(text.find("\"234907967154122528\"") != std::string::npos);
  const ordered_json doc = ordered_json::parse(text);
  REQUIRE(doc.is_array());
  CHECK(doc[0]["total"].is_string());
  CHECK(doc[0]["n"] == 27);
  CHECK(doc[0]["reference_only"] == true);

  SECTION("numeric counts are accepted on input") {
    const auto records =
        parse(R"([{"n": 6, "total": 4, "mod2": 0, "mod4": 0}])", Format::json);
    REQUIRE(records.size() == 1);
    CHECK(records[0].total == 4);
  }

  SECTION("unknown fields are ignored") {
    const auto records = parse(
        R"([{"n": 6, "total": "4", "mod2": 0, "mod4": 0, "comment": "extra"}])", Format::json);
    CHECK(records[0].n == 6);
  }
}

TEST_CASE("parse failures carry context", "[report]") {
  CHECK_THROWS_AS(parse("{", Format::json), parse_error);
  CHECK_THROWS_AS(parse("[1, 2]", Format::json), parse_error);
  CHECK_THROWS_AS(parse(R"([{"n": 6}])", Format::json), parse_error);
  CHECK_THROWS_AS(parse("not,a,header\n", Format::csv), parse_error);
  CHECK_THROWS_AS(
      parse("n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n6,4,0\n", Format::csv),
      parse_error);
  CHECK_THROWS_AS(
      parse("n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n6,x,,,,,,,0,0\n",
            Format::csv),
      parse_error);
  // Partially filled class columns are ambiguous, not tolerated.
  CHECK_THROWS_AS(
      parse("n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n6,4,0,4,,,1,,0,0\n",
            Format::csv),
      parse_error);
  // Arithmetic inconsistencies surface as validation errors instead.
  CHECK_THROWS_AS(
      parse("n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n6,5,0,4,0,0,1,0,1,1\n",
            Format::csv),
      validation_error);

  SECTION("line numbers") {
    try {
      parse("n,total,f_r,f_r2_only,f_e,c_r,c_r2_only,c_e,mod2,mod4\n6,4,,,,,,,0,0\n6,zz,,,,,,,0,0\n",
            Format::csv);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.line() == 3);
    }
  }
}

TEST_CASE("round-trips", "[report]") {
  SECTION("json keeps full records") {
    for (int trial = 0; trial < 200; ++trial) {
      const std::vector<ResultRecord> records = {gen::record(), gen::record()};
      REQUIRE(parse(emit(records, Format::json), Format::json) == records);
    }
  }

  SECTION("csv and table keep the scalar columns") {
    for (int trial = 0; trial < 200; ++trial) {
      const std::vector<ResultRecord> records = {gen::scalar_record(), gen::scalar_record()};
      REQUIRE(parse(emit(records, Format::csv), Format::csv) == records);
      REQUIRE(parse(emit(records, Format::table), Format::table) == records);
    }
  }

  SECTION("emission is deterministic") {
    const std::vector<ResultRecord> records = {gen::record(), gen::record(), gen::record()};
    for (Format f : {Format::json, Format::csv, Format::table}) {
      CHECK(emit(records, f) == emit(records, f));
    }
  }
}

TEST_CASE("reference tables", "[report]") {
  const ReferenceTable builtin = builtin_reference_table();
  CHECK(builtin.entries.at(1) == 1);
  CHECK(builtin.entries.at(6) == 4);
  CHECK(builtin.entries.at(10) == 724);
  CHECK(builtin.entries.at(27) == kQueens27Record);
  CHECK(builtin.entries.size() == 11);
  CHECK_FALSE(builtin.source.empty());

  SECTION("parsing") {
    const ReferenceTable table = parse_reference_table(
        "# source: hand-checked values\n"
        "n,expected_total\n"
        "6,4\n"
        "7,40\n");
    CHECK(table.source == "hand-checked values");
    CHECK(table.entries == std::map<int, std::uint64_t>{{6, 4}, {7, 40}});
    CHECK(parse_reference_table("6,4\n").entries.at(6) == 4);
    CHECK_THROWS_AS(parse_reference_table("6,4\n6,5\n"), parse_error);
    CHECK_THROWS_AS(parse_reference_table("6\n"), parse_error);
    CHECK_THROWS_AS(parse_reference_table("zero,4\n"), parse_error);
    CHECK_THROWS_AS(parse_reference_table("0,4\n"), parse_error);
  }

  SECTION("emission round-trips") {
    const ReferenceTable back = parse_reference_table(emit_reference_table(builtin));
    CHECK(back.entries == builtin.entries);
    CHECK(back.source == builtin.source);
  }
}

TEST_CASE("cross-checking against references", "[report]") {
  const ReferenceTable builtin = builtin_reference_table();
  std::vector<ResultRecord> records;
  for (int n = 4; n <= 6; ++n) {
    records.push_back(total_record(n, count_solutions(BoardSize{n})));
  }
  CHECK(cross_check(records, builtin).empty());

  SECTION("mismatches are reported with both values") {
    records[2].total = 5;
    records[2].mod2 = 1;
    records[2].mod4 = 1;
    const std::vector<Discrepancy> found = cross_check(records, builtin);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == Discrepancy{6, 5, 4});
  }

  SECTION("reference-only records and uncovered sizes are skipped") {
    ReferenceTable table;
    table.entries[27] = 1;  // deliberately wrong
    const std::vector<ResultRecord> refs = {reference_record(27, kQueens27Record),
                                            total_record(11, 2680)};
    CHECK(cross_check(refs, table).empty());
  }
}

TEST_CASE("verdict and border-report emission", "[report]") {
  const std::vector<Verdict> verdicts = {{"mod2", 6, true, false, "Q(6)=4"},
                                         {"mod4_excluded", 4, true, true, "Q(4)=2"},
                                         {"fr_mod4", 6, false, false, "|F_r|(6)=0"}};
  CHECK(emit_verdicts(verdicts, Format::csv) ==
        "n,name,pass\n6,mod2,1\n4,mod4_excluded,1\n6,fr_mod4,0\n");
  const ordered_json doc = ordered_json::parse(emit_verdicts(verdicts, Format::json));
  REQUIRE(doc.size() == 3);
  CHECK(doc[1]["excluded_case"] == true);
  CHECK_FALSE(doc[0].contains("excluded_case"));
  const std::string table = emit_verdicts(verdicts, Format::table);
  CHECK(table.find("FAIL") != std::string::npos);
  CHECK(table.find(" \n") == std::string::npos);

  const BorderReport report = verify_pairing(BoardSize{12}, 5);
  const std::string csv = emit_border_reports({report}, Format::csv);
  CHECK(csv == "n,ell,completions,complements,mirror_partner,pairing_ok\n12,5,4,4,4,1\n");
  const ordered_json jreport = ordered_json::parse(emit_border_reports({report}, Format::json));
  CHECK(jreport[0]["pairing_ok"] == true);
  CHECK(jreport[0]["completions"] == "4");
}
