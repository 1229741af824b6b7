#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "rcaspace/ingest.hpp"

using namespace rcaspace;

namespace {

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST(ParseProductionCsv, BuildsDenseTableInFirstAppearanceOrder) {
  const auto t = parse_production_csv("country,field,value\nA,Mth,10\nA,Chm,0\nB,Mth,5\n", IndexKind::documents);
  EXPECT_EQ(t.countries, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(t.fields, (std::vector<std::string>{"Mth", "Chm"}));
  ASSERT_EQ(t.values.rows(), 2u);
  ASSERT_EQ(t.values.cols(), 2u);
  EXPECT_EQ(t.values(0, 0), 10.0);
  EXPECT_EQ(t.values(0, 1), 0.0);
  EXPECT_EQ(t.values(1, 0), 5.0);
  EXPECT_EQ(t.values(1, 1), 0.0);
  EXPECT_EQ(t.index_kind, IndexKind::documents);
}

TEST(ParseProductionCsv, HeaderOnlyIsAnError) {
  EXPECT_EQ(error_of([] { parse_production_csv("country,field,value\n", IndexKind::documents); }), "no data rows");
}

TEST(ParseProductionCsv, NegativeValueReportsLine) {
  EXPECT_EQ(error_of([] { parse_production_csv("country,field,value\nA,Mth,-3\n", IndexKind::documents); }),
            "negative value at line 2");
}

TEST(ParseProductionCsv, ErrorPathsCarryLineNumbers) {
  auto err = [](const char* text) { return error_of([&] { parse_production_csv(text, IndexKind::citations); }); };
  EXPECT_EQ(err("country,field,value\nA,Mth,1\nB,Mth,abc\n"), "non-numeric value \"abc\" at line 3");
  EXPECT_EQ(err("country,field,value\nA,Mth,1\nA,Mth,2\n"), "duplicate cell (A, Mth) at line 3");
  EXPECT_EQ(err("country,field,value\nA,Mth\n"), "malformed CSV at line 2: expected 3 fields, found 2");
  EXPECT_EQ(err("country,field,value\nA,Mth,inf\n"), "non-finite value at line 2");
  EXPECT_EQ(err("country,field,value\n\"A,Mth,1\n"), "malformed CSV at line 2: unterminated quoted field");
  EXPECT_EQ(err("country,field,value\nA,Mth,\n"), "non-numeric value \"\" at line 2");
  EXPECT_EQ(err("country,value\nA,1\n"), "bad header at line 1: expected country,field,value");
  EXPECT_EQ(err(""), "missing header: expected country,field,value");
  EXPECT_EQ(err("country,field,value\n,Mth,1\n"), "empty country name at line 2");
  EXPECT_EQ(err("country,field,value\nA\xC3,Mth,1\n"), "invalid UTF-8 at line 2");
}

TEST(ParseProductionCsv, OptionalIndexColumnIsChecked) {
  const auto ok = parse_production_csv("country,field,value,index\nA,Mth,1,citations\n", IndexKind::citations);
  EXPECT_EQ(ok.values(0, 0), 1.0);
  EXPECT_EQ(error_of([] {
              parse_production_csv("country,field,value,index\nA,Mth,1,patents\n", IndexKind::citations);
            }),
            "unknown index kind \"patents\" at line 2");
  EXPECT_EQ(error_of([] {
              parse_production_csv("country,field,value,index\nA,Mth,1,documents\n", IndexKind::citations);
            }),
            "index kind mismatch at line 2: expected citations");
}

TEST(ParseProductionCsv, QuotedFieldsCrlfAndBom) {
  const std::string text =
      "\xEF\xBB\xBF" "country,field,value\r\n"
      "\"Korea, Republic of\",\"Economics, Econometrics and Finance\",12.5\r\n"
      "\r\n"
      "\"Say \"\"Hi\"\"\",Mth,3\r\n";
  const auto t = parse_production_csv(text, IndexKind::documents);
  EXPECT_EQ(t.countries, (std::vector<std::string>{"Korea, Republic of", "Say \"Hi\""}));
  EXPECT_EQ(t.fields[0], "Economics, Econometrics and Finance");
  EXPECT_EQ(t.values(0, 0), 12.5);
  EXPECT_EQ(t.values(1, 1), 3.0);
}

TEST(ParseProductionCsv, NamesAreTrimmedAndNfcNormalized) {
  // "Réunion" with a precomposed e-acute and with e + combining acute.
  const std::string text =
      "country,field,value\n"
      "  R\xC3\xA9union ,Mth,1\n"
      "Re\xCC\x81union,Chm,2\n";
  const auto t = parse_production_csv(text, IndexKind::documents);
  ASSERT_EQ(t.countries.size(), 1u);
  EXPECT_EQ(t.countries[0], "R\xC3\xA9union");
  EXPECT_EQ(t.values(0, 1), 2.0);
}

TEST(ParseProductionCsv, UnicodeDuplicateIsDetectedAfterNormalization) {
  const std::string text =
      "country,field,value\n"
      "R\xC3\xA9union,Mth,1\n"
      "Re\xCC\x81union,Mth,2\n";
  EXPECT_EQ(error_of([&] { parse_production_csv(text, IndexKind::documents); }),
            "duplicate cell (R\xC3\xA9union, Mth) at line 3");
}

TEST(ParseProductionCsv, StreamOverload) {
  std::istringstream in("country,field,value\nA,Mth,4\n");
  EXPECT_EQ(parse_production_csv(in, IndexKind::h_index).values(0, 0), 4.0);
}

TEST(ParseWideCsv, ConvertsToTheSameLongTable) {
  const auto wide = parse_wide_csv("country,Mth,Chm\nA,10,0\nB,5,\n", IndexKind::documents);
  const auto lng = parse_production_csv("country,field,value\nA,Mth,10\nA,Chm,0\nB,Mth,5\n", IndexKind::documents);
  EXPECT_EQ(wide, lng);
  EXPECT_EQ(error_of([] { parse_wide_csv("country,Mth\n", IndexKind::documents); }), "no data rows");
  EXPECT_EQ(error_of([] { parse_wide_csv("country,Mth\nA,-1\n", IndexKind::documents); }), "negative value at line 2");
}

TEST(IngestProperties, SerializeParseRoundTripIsIdentityOnCanonicalForm) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> real(0.0, 1e6);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = testgen::integer_table(rng, 1 + trial % 7, 1 + trial % 5, 1000);
    for (auto& v : t.values.data()) v = trial % 2 ? real(rng) : v;  // exercise non-integers too
    t.countries.back() = "Name, with \"quotes\"";
    const auto first = parse_production_csv(serialize_production_csv(t), t.index_kind);
    const auto second = parse_production_csv(serialize_production_csv(first), t.index_kind);
    EXPECT_EQ(first, t);
    EXPECT_EQ(second, first);
  }
}

TEST(LabelRegistry, BuiltinHasAllTwentySevenFields) {
  const auto& reg = LabelRegistry::builtin();
  EXPECT_EQ(reg.size(), 27u);
  EXPECT_EQ(reg.label_for("Computer Science"), "CmpScn");
  EXPECT_EQ(reg.label_for("Decision Sciences"), "DcsSci");
  EXPECT_EQ(reg.label_for("Medicine"), "Mdc");
  EXPECT_EQ(reg.full_name_for("Phr-Txc-Phr"), "Pharmacology, Toxicology and Pharmaceutics");
  EXPECT_FALSE(reg.label_for("Alchemy").has_value());
}

TEST(LabelRegistry, RejectsDuplicates) {
  EXPECT_THROW(LabelRegistry({{"Mathematics", "Mth"}, {"Maths", "Mth"}}), DataError);
  EXPECT_THROW(LabelRegistry({{"Mathematics", "Mth"}, {"Mathematics", "M"}}), DataError);
}

TEST(ResolveLabels, MapsFullNamesAndWarnsOnUnknown) {
  const auto t = parse_production_csv(
      "country,field,value\nA,Computer Science,1\nA,Decision Sciences,2\nA,Alchemy,3\nA,Mth,4\n",
      IndexKind::documents);
  std::vector<std::string> warnings;
  const auto r = resolve_labels(t, LabelRegistry::builtin(), warnings);
  EXPECT_EQ(r.fields, (std::vector<std::string>{"CmpScn", "DcsSci", "Alchemy", "Mth"}));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("Alchemy"), std::string::npos);
}

TEST(ResolveLabels, CollidingNamesAreMergedWithWarning) {
  const auto t = parse_production_csv("country,field,value\nA,Mathematics,1\nA,Mth,2\nB,Mth,5\n", IndexKind::documents);
  std::vector<std::string> warnings;
  const auto r = resolve_labels(t, LabelRegistry::builtin(), warnings);
  EXPECT_EQ(r.fields, (std::vector<std::string>{"Mth"}));
  EXPECT_EQ(r.values(0, 0), 3.0);
  EXPECT_EQ(r.values(1, 0), 5.0);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_EQ(r.grand_total(), t.grand_total());
}

TEST(ValidateAlignment, UnionOfCountriesAndFieldsSorted) {
  const auto a = parse_production_csv("country,field,value\nB,Mth,1\nA,Chm,2\n", IndexKind::documents);
  const auto b = parse_production_csv("country,field,value\nC,Mth,3\nB,Phy,4\n", IndexKind::citations);
  const auto out = validate_alignment({a, b});
  ASSERT_EQ(out.size(), 2u);
  for (const auto& t : out) {
    EXPECT_EQ(t.countries, (std::vector<std::string>{"A", "B", "C"}));
    EXPECT_EQ(t.fields, (std::vector<std::string>{"Chm", "Mth", "Phy"}));
  }
  EXPECT_EQ(out[0].index_kind, IndexKind::documents);
  EXPECT_EQ(out[0].values(0, 0), 2.0);
  EXPECT_EQ(out[0].values(1, 1), 1.0);
  EXPECT_EQ(out[0].values(2, 1), 0.0);
  EXPECT_EQ(out[1].values(2, 1), 3.0);
  EXPECT_EQ(out[1].values(1, 2), 4.0);
}

TEST(ValidateAlignment, SingleTableIsSortedAndIdenticalTablesStayIdentical) {
  const auto a = parse_production_csv("country,field,value\nB,Mth,1\nA,Chm,2\n", IndexKind::documents);
  const auto one = validate_alignment({a});
  EXPECT_EQ(one[0].countries, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(one[0].fields, (std::vector<std::string>{"Chm", "Mth"}));
  const auto two = validate_alignment({a, a});
  EXPECT_EQ(two[0], two[1]);
}

TEST(IngestProperties, AlignmentIsIdempotentAndPreservesTotals) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testgen::integer_table(rng, 3 + trial % 4, 2 + trial % 3, 50);
    auto b = testgen::integer_table(rng, 2 + trial % 5, 4, 50);
    std::reverse(b.countries.begin(), b.countries.end());
    b.fields[0] = "Extra";
    const auto once = validate_alignment({a, b});
    const auto twice = validate_alignment(once);
    EXPECT_EQ(once, twice);
    EXPECT_EQ(once[0].grand_total(), a.grand_total());
    EXPECT_EQ(once[1].grand_total(), b.grand_total());
    EXPECT_EQ(resolve_labels(a, LabelRegistry::builtin()).grand_total(), a.grand_total());
  }
}

TEST(Manifest, ParsesAndResolvesRelativePaths) {
  const auto m = parse_manifest(
      R"({"dataset_name":"bibliometrics","period":"2001-2005","tables":[{"index":"documents","path":"docs.csv"},{"index":"h_index","path":"/abs/h.csv"}]})",
      "/data/run");
  EXPECT_EQ(m.dataset_name, "bibliometrics");
  EXPECT_EQ(m.period, "2001-2005");
  ASSERT_EQ(m.tables.size(), 2u);
  EXPECT_EQ(m.tables[0].index_kind, IndexKind::documents);
  EXPECT_EQ(m.tables[0].resolved, std::filesystem::path("/data/run/docs.csv"));
  EXPECT_EQ(m.tables[1].resolved, std::filesystem::path("/abs/h.csv"));
}

TEST(Manifest, Errors) {
  EXPECT_THROW(parse_manifest("{", "."), DataError);
  EXPECT_THROW(parse_manifest(R"({"dataset_name":"x","period":"p","tables":[]})", "."), DataError);
  EXPECT_EQ(error_of([] {
              parse_manifest(R"({"dataset_name":"x","period":"p","tables":[{"index":"patents","path":"a"}]})", ".");
            }),
            "unknown index kind \"patents\" in manifest");
  EXPECT_THROW(load_manifest("/nonexistent/manifest.json"), IoError);
}

TEST(IndexKind, ExactlyFiveKinds) {
  EXPECT_EQ(all_index_kinds.size(), 5u);
  for (auto k : all_index_kinds) EXPECT_EQ(parse_index_kind(to_string(k)), k);
  EXPECT_THROW(parse_index_kind("Documents"), DataError);
}
