#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../tools/app.hpp"

namespace fs = std::filesystem;
using rcaspace::tools::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("rcaspace_cli_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

const char* kDocuments =
    "country,field,value\n"
    "Alpha,Mathematics,10\nAlpha,Physics and Astronomy,30\nAlpha,Chemistry,5\n"
    "Beta,Mathematics,20\nBeta,Physics and Astronomy,10\nBeta,Chemistry,15\n"
    "Gamma,Mathematics,1\nGamma,Physics and Astronomy,2\nGamma,Chemistry,40\n";

const char* kCitations =
    "country,field,value\n"
    "Alpha,Mathematics,100\nAlpha,Physics and Astronomy,500\nAlpha,Chemistry,20\n"
    "Beta,Mathematics,250\nBeta,Physics and Astronomy,90\nBeta,Chemistry,100\n"
    "Gamma,Mathematics,3\nGamma,Physics and Astronomy,10\nGamma,Chemistry,600\n";

const char* kHIndex =
    "country,field,value\n"
    "Alpha,Mathematics,12\nAlpha,Physics and Astronomy,20\nAlpha,Chemistry,4\n"
    "Beta,Mathematics,15\nBeta,Physics and Astronomy,9\nBeta,Chemistry,11\n"
    "Gamma,Mathematics,1\nGamma,Physics and Astronomy,3\nGamma,Chemistry,25\n";

std::string manifest(const std::vector<std::pair<std::string, std::string>>& tables) {
  std::string s = R"({"dataset_name":"test","period":"2000-2001","tables":[)";
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (k) s += ",";
    s += R"({"index":")" + tables[k].first + R"(","path":")" + tables[k].second + R"("})";
  }
  return s + "]}";
}

fs::path three_index_dataset(const TempDir& dir) {
  dir.write("documents.csv", kDocuments);
  dir.write("citations.csv", kCitations);
  dir.write("h_index.csv", kHIndex);
  return dir.write("manifest.json", manifest({{"documents", "documents.csv"},
                                              {"citations", "citations.csv"},
                                              {"h_index", "h_index.csv"}}));
}

std::map<std::string, std::string> tree_contents(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root))
    if (entry.is_regular_file()) files[fs::relative(entry.path(), root).generic_string()] = slurp(entry.path());
  return files;
}

} // namespace

TEST(Cli, RcaWritesCsvsAndSummary) {
  TempDir dir;
  dir.write("documents.csv", kDocuments);
  const auto m = dir.write("manifest.json", manifest({{"documents", "documents.csv"}}));
  const auto out = dir.path() / "out";
  const auto r = invoke({"rca", "--manifest", m.string(), "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(out / "rca_documents.csv"));
  EXPECT_TRUE(fs::exists(out / "advantage_documents.csv"));
  ASSERT_TRUE(fs::exists(out / "rca_summary.json"));
  const auto doc = nlohmann::json::parse(slurp(out / "rca_summary.json"));
  EXPECT_EQ(doc.at("dataset").at("countries"), 3);
  EXPECT_FALSE(doc.contains("generated_at_unix"));
  const auto rca = slurp(out / "rca_documents.csv");
  // Alpha / Physics: (30/45) / (42/133).
  EXPECT_NE(rca.find("Alpha,Phy-Ast,2.1111111111111"), std::string::npos) << rca;
}

TEST(Cli, MissingInputIsIoError) {
  TempDir dir;
  const auto m = dir.write("manifest.json", manifest({{"documents", "nope.csv"}}));
  const auto r = invoke({"rca", "--manifest", m.string(), "--out", (dir.path() / "o").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("file not found"), std::string::npos) << r.err;
}

TEST(Cli, AllZeroTableIsDataError) {
  TempDir dir;
  dir.write("zero.csv", "country,field,value\nA,Mathematics,0\nB,Chemistry,0\n");
  const auto m = dir.write("manifest.json", manifest({{"documents", "zero.csv"}}));
  const auto r = invoke({"rca", "--manifest", m.string(), "--out", (dir.path() / "o").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("empty production"), std::string::npos) << r.err;
}

TEST(Cli, MalformedRowsAreDataErrors) {
  TempDir dir;
  dir.write("bad.csv", "country,field,value\nA,Mathematics,-4\n");
  const auto m = dir.write("manifest.json", manifest({{"documents", "bad.csv"}}));
  const auto r = invoke({"rca", "--manifest", m.string(), "--out", (dir.path() / "o").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("negative value at line 2"), std::string::npos) << r.err;
}

TEST(Cli, SingleCountryCountryNetworkHasNoEdges) {
  TempDir dir;
  const auto in = dir.write("one.csv", "country,field,value\nSolo,Mathematics,3\nSolo,Chemistry,4\n");
  const auto out = dir.path() / "o";
  const auto r = invoke({"network", "--input", in.string(), "--index", "documents", "--mode", "countries",
                         "--format", "json", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(slurp(out / "network_countries_documents.json"));
  EXPECT_EQ(doc.at("nodes").size(), 1u);
  EXPECT_TRUE(doc.at("edges").empty());
}

TEST(Cli, UsageErrors) {
  TempDir dir;
  const auto m = three_index_dataset(dir);
  const auto out = (dir.path() / "o").string();
  EXPECT_EQ(invoke({"proximity", "--manifest", m.string(), "--mode", "regions", "--out", out}).code, 64);
  EXPECT_EQ(invoke({"rca", "--manifest", m.string(), "--bogus", "--out", out}).code, 64);
  EXPECT_EQ(invoke({"rca", "--manifest", m.string()}).code, 64);
  EXPECT_EQ(invoke({"network", "--manifest", m.string(), "--threshold", "1.5", "--out", out}).code, 64);
  EXPECT_EQ(invoke({"network", "--manifest", m.string(), "--format", "pdf", "--out", out}).code, 64);
  EXPECT_EQ(invoke({"stats", "--manifest", m.string(), "--quartile-rule", "type11", "--out", out}).code, 64);
  EXPECT_EQ(invoke({"rca", "--manifest", m.string(), "--index", "patents", "--out", out}).code, 64);
  EXPECT_EQ(invoke({}).code, 64);
}

TEST(Cli, VersionAndHelp) {
  const auto v = invoke({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(RCASPACE_VERSION), std::string::npos);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, ThreeIndexReport) {
  TempDir dir;
  const auto m = three_index_dataset(dir);
  const auto out = dir.path() / "o";
  const auto r = invoke({"report", "--manifest", m.string(), "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(slurp(out / "report.json"));
  EXPECT_EQ(doc.at("summaries").size(), 3u);
  ASSERT_EQ(doc.at("correlations").size(), 3u);
  for (const auto& c : doc.at("correlations")) {
    EXPECT_EQ(c.at("full_grid").at("cells"), 9);
    EXPECT_FALSE(c.contains("joint_cells"));
  }
  for (const char* f : {"report.txt", "proximity_fields_h_index.csv", "proximity_countries_citations.csv",
                        "network_fields_documents.svg", "network_fields_documents.graphml"})
    EXPECT_TRUE(fs::exists(out / f)) << f;
}

TEST(Cli, SingleIndexStatsHasNoCorrelations) {
  TempDir dir;
  const auto m = three_index_dataset(dir);
  const auto out = dir.path() / "o";
  const auto r = invoke({"stats", "--manifest", m.string(), "--index", "citations", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(slurp(out / "stats.json"));
  EXPECT_EQ(doc.at("summaries").size(), 1u);
  EXPECT_TRUE(doc.at("correlations").empty());
  EXPECT_NE(r.out.find("3rd Qu."), std::string::npos);
}

TEST(Cli, JointCellsFlagAddsJointCorrelations) {
  TempDir dir;
  dir.write("documents.csv", kDocuments);
  // Gamma has no citations at all: its cells are undefined for that index only.
  dir.write("citations.csv",
            "country,field,value\nAlpha,Mathematics,100\nAlpha,Chemistry,20\nBeta,Mathematics,250\n"
            "Beta,Physics and Astronomy,90\nGamma,Chemistry,0\n");
  const auto m =
      dir.write("manifest.json", manifest({{"documents", "documents.csv"}, {"citations", "citations.csv"}}));
  const auto out = dir.path() / "o";
  const auto r = invoke({"stats", "--manifest", m.string(), "--joint-cells", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(slurp(out / "stats.json"));
  ASSERT_EQ(doc.at("correlations").size(), 1u);
  EXPECT_EQ(doc.at("correlations")[0].at("joint_cells").at("cells"), 6);
  EXPECT_NE(r.err.find("undefined"), std::string::npos) << r.err;
}

TEST(Cli, TimestampIsOptIn) {
  TempDir dir;
  const auto in = dir.write("d.csv", kDocuments);
  const auto out = dir.path() / "o";
  ASSERT_EQ(invoke({"rca", "--input", in.string(), "--index", "documents", "--timestamp", "--out", out.string()}).code,
            0);
  EXPECT_TRUE(nlohmann::json::parse(slurp(out / "rca_summary.json")).contains("generated_at_unix"));
}

TEST(Cli, InputNeedsExactlyOneIndex) {
  TempDir dir;
  const auto in = dir.write("d.csv", kDocuments);
  const auto out = (dir.path() / "o").string();
  EXPECT_EQ(invoke({"rca", "--input", in.string(), "--out", out}).code, 64);
  EXPECT_EQ(invoke({"rca", "--input", in.string(), "--index", "documents", "--index", "citations", "--out", out}).code,
            64);
}

TEST(Cli, DemoIsDeterministic) {
  TempDir dir;
  const auto a = dir.path() / "a", b = dir.path() / "b";
  ASSERT_EQ(invoke({"demo", "--out", a.string()}).code, 0);
  ASSERT_EQ(invoke({"demo", "--out", b.string()}).code, 0);
  const auto ta = tree_contents(a), tb = tree_contents(b);
  EXPECT_GT(ta.size(), 20u);
  EXPECT_EQ(ta, tb);
}

TEST(Cli, StandaloneBinaryRuns) {
  TempDir dir;
  const auto log = dir.path() / "log.txt";
  const std::string cmd = std::string("\"") + RCASPACE_CLI_PATH + "\" --version > \"" + log.string() + "\"";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_NE(slurp(log).find(RCASPACE_VERSION), std::string::npos);
}
