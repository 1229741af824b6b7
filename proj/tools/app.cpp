#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "demo_data.hpp"
#include "digest.hpp"
#include "rcaspace/rcaspace.hpp"

namespace rcaspace::tools {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kToolName = "rcaspace";
constexpr const char* kToolVersion = RCASPACE_VERSION;

struct RunConfig {
  std::string command;
  std::string manifest;  // as given
  std::string input;     // single long/wide CSV, alternative to a manifest
  bool wide = false;
  std::vector<std::string> index_names;
  std::string out;
  double threshold = 0.4;
  std::vector<std::string> format_names;
  std::string quartile_rule = "linear";
  bool joint_cells = false;
  bool timestamp = false;
  std::string mode = "fields";

  // Resolved before the pipeline starts.
  fs::path manifest_path;
  fs::path input_path;
  fs::path out_dir;
  std::vector<IndexKind> indexes;
  std::vector<ExportFormat> formats;
  std::ostream* diag = nullptr;
  QuartileRule rule = QuartileRule::linear;
  ProximityMode proximity_mode = ProximityMode::fields;
};

struct InputRecord {
  IndexKind kind;
  std::string path;  // display form
  std::string sha256;
};

struct Dataset {
  std::string name;
  std::string period;
  std::string source;  // manifest or input path, display form
  std::vector<InputRecord> inputs;
  std::vector<IndexAnalysis> analyses;  // aligned, in manifest order
  std::vector<std::string> warnings;
};

/// Output files are written to a sibling temp file and renamed into place.
class OutputTree {
public:
  explicit OutputTree(fs::path root) : root_(std::move(root)) {}

  void write(const std::string& name, const std::string& content) {
    const fs::path target = root_ / name;
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + target.parent_path().string());
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot write " + tmp.string());
      out << content;
      out.close();
      if (!out) throw IoError("cannot write " + tmp.string());
    }
    fs::rename(tmp, target, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + " to " + target.string());
    written_.push_back(name);
  }

  const std::vector<std::string>& written() const noexcept { return written_; }
  const fs::path& root() const noexcept { return root_; }

private:
  fs::path root_;
  std::vector<std::string> written_;
};

/// Relative to `base` when `p` lies below it, otherwise `fallback`.
std::string display_path(const fs::path& p, const fs::path& base, const std::string& fallback) {
  const fs::path rel = p.lexically_relative(base);
  if (!rel.empty() && *rel.begin() != "..") return rel.generic_string();
  return fallback;
}

void resolve(RunConfig& cfg) {
  if (cfg.out.empty()) throw UsageError("--out is required");
  cfg.out_dir = fs::absolute(cfg.out).lexically_normal();

  if (cfg.command != "demo") {
    if (cfg.manifest.empty() == cfg.input.empty())
      throw UsageError("exactly one of --manifest or --input is required");
    if (!cfg.manifest.empty()) cfg.manifest_path = fs::absolute(cfg.manifest).lexically_normal();
    if (!cfg.input.empty()) {
      cfg.input_path = fs::absolute(cfg.input).lexically_normal();
      if (cfg.index_names.size() != 1) throw UsageError("--input needs exactly one --index");
    }
  }

  std::set<IndexKind> seen;
  for (const auto& name : cfg.index_names) {
    const auto kind = try_parse_index_kind(name);
    if (!kind) throw UsageError("unknown index kind \"" + name + "\"");
    if (seen.insert(*kind).second) cfg.indexes.push_back(*kind);
  }
  if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0)) throw UsageError("--threshold must lie in [0, 1]");
  for (const auto& name : cfg.format_names) {
    const auto fmt = parse_export_format(name);
    if (std::find(cfg.formats.begin(), cfg.formats.end(), fmt) == cfg.formats.end()) cfg.formats.push_back(fmt);
  }
  cfg.rule = parse_quartile_rule(cfg.quartile_rule);
  cfg.proximity_mode = parse_proximity_mode(cfg.mode);
}

ProductionTable load_table(const std::string& text, const fs::path& path, IndexKind kind, bool wide) {
  try {
    return wide ? parse_wide_csv(text, kind) : parse_production_csv(text, kind);
  } catch (const DataError& e) {
    throw DataError(path.filename().string() + ": " + e.what());
  }
}

Dataset load_dataset(const RunConfig& cfg) {
  Dataset ds;
  std::vector<std::pair<IndexKind, fs::path>> sources;

  if (!cfg.manifest_path.empty()) {
    const Manifest manifest = load_manifest(cfg.manifest_path);
    ds.name = manifest.dataset_name;
    ds.period = manifest.period;
    ds.source = display_path(cfg.manifest_path, cfg.out_dir, cfg.manifest);
    for (const auto& t : manifest.tables) {
      if (!cfg.indexes.empty() &&
          std::find(cfg.indexes.begin(), cfg.indexes.end(), t.index_kind) == cfg.indexes.end())
        continue;
      sources.emplace_back(t.index_kind, t.resolved);
      ds.inputs.push_back({t.index_kind, t.path, {}});
    }
    for (IndexKind kind : cfg.indexes) {
      const bool listed = std::any_of(manifest.tables.begin(), manifest.tables.end(),
                                      [&](const ManifestTable& t) { return t.index_kind == kind; });
      if (!listed) throw DataError("index \"" + std::string(to_string(kind)) + "\" is not listed in the manifest");
    }
  } else {
    ds.name = cfg.input_path.stem().string();
    ds.period = "";
    ds.source = display_path(cfg.input_path, cfg.out_dir, cfg.input);
    sources.emplace_back(cfg.indexes.front(), cfg.input_path);
    ds.inputs.push_back({cfg.indexes.front(), cfg.input, {}});
  }

  std::vector<ProductionTable> tables;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const std::string text = read_file(sources[k].second);
    ds.inputs[k].sha256 = sha256_hex(text);
    tables.push_back(load_table(text, sources[k].second, sources[k].first, cfg.wide));
  }

  for (auto& t : tables) {
    std::vector<std::string> warnings;
    t = resolve_labels(t, LabelRegistry::builtin(), warnings);
    for (auto& w : warnings) ds.warnings.push_back(std::string(to_string(t.index_kind)) + ": " + w);
  }
  auto aligned = validate_alignment(tables);

  // Independent index kinds are analysed concurrently; results keep manifest order.
  std::vector<std::future<IndexAnalysis>> jobs;
  for (auto& t : aligned) {
    const std::string kind(to_string(t.index_kind));
    jobs.push_back(std::async(std::launch::async, [table = std::move(t), kind]() mutable {
      try {
        return analyze(std::move(table));
      } catch (const DataError& e) {
        throw DataError(kind + ": " + e.what());
      }
    }));
  }
  for (auto& job : jobs) ds.analyses.push_back(job.get());

  for (const auto& a : ds.analyses) {
    if (const auto n = a.rca.undefined_count())
      ds.warnings.push_back(std::string(to_string(a.table.index_kind)) + ": " + std::to_string(n) +
                            " RCA cells undefined (zero country or field total)");
  }
  if (cfg.diag)
    for (const auto& w : ds.warnings) *cfg.diag << "warning: " << w << "\n";
  return ds;
}

// ---------------------------------------------------------------------------
// JSON fragments

ojson tool_json() {
  ojson j;
  j["name"] = kToolName;
  j["version"] = kToolVersion;
  return j;
}

ojson config_json(const RunConfig& cfg) {
  ojson j;
  j["command"] = cfg.command;
  auto indexes = ojson::array();
  for (auto k : cfg.indexes) indexes.push_back(std::string(to_string(k)));
  j["indexes"] = indexes;
  j["threshold"] = cfg.threshold;
  auto formats = ojson::array();
  for (auto f : cfg.formats) formats.push_back(std::string(to_string(f)));
  j["formats"] = formats;
  j["quartile_rule"] = std::string(to_string(cfg.rule));
  j["joint_cells"] = cfg.joint_cells;
  j["mode"] = std::string(to_string(cfg.proximity_mode));
  return j;
}

ojson dataset_json(const Dataset& ds) {
  ojson j;
  j["name"] = ds.name;
  j["period"] = ds.period;
  j["source"] = ds.source;
  auto inputs = ojson::array();
  for (std::size_t k = 0; k < ds.inputs.size(); ++k) {
    ojson in;
    in["index"] = std::string(to_string(ds.inputs[k].kind));
    in["path"] = ds.inputs[k].path;
    in["sha256"] = ds.inputs[k].sha256;
    inputs.push_back(in);
  }
  j["inputs"] = inputs;
  if (!ds.analyses.empty()) {
    j["countries"] = ds.analyses.front().table.countries.size();
    j["fields"] = ds.analyses.front().table.fields.size();
  }
  auto totals = ojson::object();
  for (const auto& a : ds.analyses) totals[std::string(to_string(a.table.index_kind))] = a.table.grand_total();
  j["totals"] = totals;
  return j;
}

ojson preamble(const RunConfig& cfg, const Dataset& ds) {
  ojson j;
  j["tool"] = tool_json();
  if (cfg.timestamp) {
    const auto now = std::chrono::system_clock::now();
    j["generated_at_unix"] = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  }
  j["config"] = config_json(cfg);
  j["dataset"] = dataset_json(ds);
  return j;
}

ojson diversity_json(const Dataset& ds) {
  auto rows = ojson::array();
  if (ds.analyses.empty()) return rows;
  const auto& countries = ds.analyses.front().diversity.countries;
  for (std::size_t c = 0; c < countries.size(); ++c) {
    ojson row;
    row["country"] = countries[c];
    for (const auto& a : ds.analyses) row[std::string(to_string(a.table.index_kind))] = a.diversity.counts[c];
    rows.push_back(row);
  }
  return rows;
}

ojson ubiquity_json(const Dataset& ds) {
  auto rows = ojson::array();
  if (ds.analyses.empty()) return rows;
  const auto& fields = ds.analyses.front().ubiquity.fields;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    ojson row;
    row["field"] = fields[f];
    for (const auto& a : ds.analyses) row[std::string(to_string(a.table.index_kind))] = a.ubiquity.counts[f];
    rows.push_back(row);
  }
  return rows;
}

struct StatsBlock {
  std::vector<NamedSummary> summaries;
  struct Pair {
    std::string a, b;
    std::optional<Correlation> full;
    std::optional<Correlation> joint;
    std::string note;
  };
  std::vector<Pair> pairs;
};

StatsBlock compute_stats(const Dataset& ds, const RunConfig& cfg) {
  StatsBlock block;
  for (const auto& a : ds.analyses) {
    const auto values = a.rca.defined_values();
    if (values.empty()) continue;
    block.summaries.push_back({std::string(to_string(a.table.index_kind)), summarize(values, cfg.rule)});
  }
  std::vector<const RcaMatrix*> all;
  for (const auto& a : ds.analyses) all.push_back(&a.rca);
  const auto joint = joint_defined(all);

  for (std::size_t i = 0; i < ds.analyses.size(); ++i)
    for (std::size_t j = i + 1; j < ds.analyses.size(); ++j) {
      StatsBlock::Pair p;
      p.a = std::string(to_string(ds.analyses[i].table.index_kind));
      p.b = std::string(to_string(ds.analyses[j].table.index_kind));
      try {
        p.full = correlate(ds.analyses[i].rca, ds.analyses[j].rca);
      } catch (const DataError& e) {
        p.note = e.what();
      }
      if (cfg.joint_cells) {
        try {
          p.joint = correlate(ds.analyses[i].rca, ds.analyses[j].rca, &joint);
        } catch (const DataError& e) {
          if (p.note.empty()) p.note = e.what();
        }
      }
      block.pairs.push_back(std::move(p));
    }
  return block;
}

ojson correlation_json(const std::optional<Correlation>& c) {
  if (!c) return nullptr;
  ojson j;
  j["r"] = c->r;
  j["cells"] = c->cells;
  return j;
}

void add_stats_json(ojson& doc, const StatsBlock& block, const RunConfig& cfg) {
  auto summaries = ojson::array();
  for (const auto& s : block.summaries) {
    ojson j;
    j["index"] = s.name;
    const ojson stats = summary_to_json(s.summary);
    for (const auto& [key, value] : stats.items()) j[key] = value;
    j["skew"] = std::string(to_string(classify_skew(s.summary)));
    summaries.push_back(j);
  }
  doc["summaries"] = summaries;
  doc["skewness"] = skewness_report(block.summaries);
  auto pairs = ojson::array();
  for (const auto& p : block.pairs) {
    ojson j;
    j["a"] = p.a;
    j["b"] = p.b;
    j["full_grid"] = correlation_json(p.full);
    if (cfg.joint_cells) j["joint_cells"] = correlation_json(p.joint);
    if (!p.note.empty()) j["note"] = p.note;
    pairs.push_back(j);
  }
  doc["correlations"] = pairs;
}

std::string stats_text(const StatsBlock& block, const RunConfig& cfg) {
  std::string out = "RCA distribution (quartile rule: " + std::string(to_string(cfg.rule)) + ")\n";
  out += summary_table_text(block.summaries);
  out += "\nSkewness\n";
  for (const auto& s : block.summaries)
    out += "  " + s.name + ": " + std::string(to_string(classify_skew(s.summary))) +
           " (quartile skew " + format_fixed(s.summary.quartile_skew(), 3) + ", IQR " +
           format_fixed(s.summary.q3 - s.summary.q1, 3) + ")\n";
  out += "\nPearson correlations\n";
  if (block.pairs.empty()) out += "  (single index, none)\n";
  for (const auto& p : block.pairs) {
    out += "  " + p.a + " ~ " + p.b + ":";
    if (p.full) out += " r = " + format_fixed(p.full->r, 3) + " over " + std::to_string(p.full->cells) + " cells";
    if (p.joint)
      out += "; jointly defined r = " + format_fixed(p.joint->r, 3) + " over " +
             std::to_string(p.joint->cells) + " cells";
    if (!p.note.empty()) out += " (" + p.note + ")";
    out += '\n';
  }
  return out;
}

std::string table_text(const std::string& key_name, const ojson& rows, const Dataset& ds) {
  std::size_t width = key_name.size();
  for (const auto& r : rows) width = std::max(width, r.at(key_name).get<std::string>().size());
  auto pad_right = [](std::string s, std::size_t w) { return s.size() < w ? s + std::string(w - s.size(), ' ') : s; };
  auto pad_left = [](std::string s, std::size_t w) { return s.size() < w ? std::string(w - s.size(), ' ') + s : s; };
  std::string out = pad_right(key_name, width);
  for (const auto& a : ds.analyses) out += "  " + pad_left(std::string(to_string(a.table.index_kind)), 14);
  out += '\n';
  for (const auto& r : rows) {
    out += pad_right(r.at(key_name).get<std::string>(), width);
    for (const auto& a : ds.analyses)
      out += "  " + pad_left(std::to_string(r.at(std::string(to_string(a.table.index_kind))).get<std::size_t>()), 14);
    out += '\n';
  }
  return out;
}

ojson warnings_json(const Dataset& ds) {
  auto w = ojson::array();
  for (const auto& s : ds.warnings) w.push_back(s);
  return w;
}

// ---------------------------------------------------------------------------
// Matrix writers

std::string rca_csv(const RcaMatrix& rca) {
  std::string out = "country,field,value\n";
  for (std::size_t c = 0; c < rca.countries.size(); ++c)
    for (std::size_t f = 0; f < rca.fields.size(); ++f)
      if (rca.defined(c, f))
        out += csv::join_row({rca.countries[c], rca.fields[f], format_double(rca.values(c, f))});
  return out;
}

std::string advantage_csv(const AdvantageMatrix& adv) {
  std::string out = "country,field,value\n";
  for (std::size_t c = 0; c < adv.countries.size(); ++c)
    for (std::size_t f = 0; f < adv.fields.size(); ++f)
      out += csv::join_row({adv.countries[c], adv.fields[f], adv.m(c, f) ? "1" : "0"});
  return out;
}

ProximityNetwork build_network(const IndexAnalysis& a, ProximityMode mode) {
  return mode == ProximityMode::fields ? field_proximity(a.advantage, a.table)
                                       : country_proximity(a.advantage, a.table);
}

std::string network_stem(ProximityMode mode, IndexKind kind) {
  return "network_" + std::string(to_string(mode)) + "_" + std::string(to_string(kind));
}

void write_rca_outputs(OutputTree& tree, const Dataset& ds) {
  for (const auto& a : ds.analyses) {
    const std::string k(to_string(a.table.index_kind));
    tree.write("rca_" + k + ".csv", rca_csv(a.rca));
    tree.write("advantage_" + k + ".csv", advantage_csv(a.advantage));
  }
}

void write_proximity_csvs(OutputTree& tree, const Dataset& ds, ProximityMode mode) {
  for (const auto& a : ds.analyses)
    tree.write("proximity_" + std::string(to_string(mode)) + "_" + std::string(to_string(a.table.index_kind)) + ".csv",
               serialize_proximity_csv(build_network(a, mode)));
}

void write_networks(OutputTree& tree, const Dataset& ds, const RunConfig& cfg, ProximityMode mode,
                    const std::vector<ExportFormat>& formats) {
  LayoutOptions options;
  options.threshold = cfg.threshold;
  for (const auto& a : ds.analyses) {
    const auto layout = make_layout(build_network(a, mode), options);
    for (auto f : formats)
      tree.write(network_stem(mode, a.table.index_kind) + "." + std::string(to_string(f)), emit(layout, f));
  }
}

ojson outputs_json(const OutputTree& tree) {
  auto arr = ojson::array();
  for (const auto& p : tree.written()) arr.push_back(p);
  return arr;
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_rca(const RunConfig& cfg, std::ostream& out) {
  const Dataset ds = load_dataset(cfg);
  OutputTree tree(cfg.out_dir);
  write_rca_outputs(tree, ds);
  ojson doc = preamble(cfg, ds);
  auto per_index = ojson::array();
  for (const auto& a : ds.analyses) {
    ojson j;
    j["index"] = std::string(to_string(a.table.index_kind));
    j["undefined_cells"] = a.rca.undefined_count();
    std::size_t ones = 0;
    for (auto v : a.advantage.m.data()) ones += v;
    j["advantage_cells"] = ones;
    per_index.push_back(j);
  }
  doc["indexes"] = per_index;
  doc["diversity"] = diversity_json(ds);
  doc["ubiquity"] = ubiquity_json(ds);
  doc["outputs"] = outputs_json(tree);
  doc["warnings"] = warnings_json(ds);
  tree.write("rca_summary.json", doc.dump(2) + "\n");
  out << "wrote " << tree.written().size() << " files to " << cfg.out_dir.string() << "\n";
}

void cmd_proximity(const RunConfig& cfg, std::ostream& out) {
  const Dataset ds = load_dataset(cfg);
  OutputTree tree(cfg.out_dir);
  write_proximity_csvs(tree, ds, cfg.proximity_mode);
  write_networks(tree, ds, cfg, cfg.proximity_mode, cfg.formats);
  out << "wrote " << tree.written().size() << " files to " << cfg.out_dir.string() << "\n";
}

void cmd_network(const RunConfig& cfg, std::ostream& out) {
  const Dataset ds = load_dataset(cfg);
  OutputTree tree(cfg.out_dir);
  const std::vector<ExportFormat> formats =
      cfg.formats.empty() ? std::vector<ExportFormat>{ExportFormat::json, ExportFormat::svg} : cfg.formats;
  write_networks(tree, ds, cfg, cfg.proximity_mode, formats);
  out << "wrote " << tree.written().size() << " files to " << cfg.out_dir.string() << "\n";
}

void cmd_stats(const RunConfig& cfg, std::ostream& out) {
  const Dataset ds = load_dataset(cfg);
  OutputTree tree(cfg.out_dir);
  const StatsBlock block = compute_stats(ds, cfg);
  ojson doc = preamble(cfg, ds);
  add_stats_json(doc, block, cfg);
  doc["warnings"] = warnings_json(ds);
  const std::string text = stats_text(block, cfg);
  tree.write("stats.json", doc.dump(2) + "\n");
  tree.write("stats.txt", text);
  out << text;
}

void cmd_report(const RunConfig& cfg, std::ostream& out) {
  const Dataset ds = load_dataset(cfg);
  OutputTree tree(cfg.out_dir);
  write_rca_outputs(tree, ds);
  write_proximity_csvs(tree, ds, ProximityMode::fields);
  write_proximity_csvs(tree, ds, ProximityMode::countries);
  const std::vector<ExportFormat> formats =
      cfg.formats.empty() ? std::vector<ExportFormat>(all_export_formats.begin(), all_export_formats.end())
                          : cfg.formats;
  write_networks(tree, ds, cfg, ProximityMode::fields, formats);

  const StatsBlock block = compute_stats(ds, cfg);
  ojson doc = preamble(cfg, ds);
  add_stats_json(doc, block, cfg);
  doc["diversity"] = diversity_json(ds);
  doc["ubiquity"] = ubiquity_json(ds);
  doc["exports"] = outputs_json(tree);
  doc["warnings"] = warnings_json(ds);

  std::string text = std::string(kToolName) + " " + kToolVersion + " report\n";
  text += "dataset: " + ds.name + (ds.period.empty() ? "" : " (" + ds.period + ")") + "\n";
  if (!ds.analyses.empty())
    text += "grid: " + std::to_string(ds.analyses.front().table.countries.size()) + " countries x " +
            std::to_string(ds.analyses.front().table.fields.size()) + " fields\n";
  text += "\n" + stats_text(block, cfg);
  text += "\nUbiquity (countries with RCA >= 1)\n" + table_text("field", doc["ubiquity"], ds);
  text += "\nDiversity (fields with RCA >= 1)\n" + table_text("country", doc["diversity"], ds);
  if (!ds.warnings.empty()) {
    text += "\nWarnings\n";
    for (const auto& w : ds.warnings) text += "  " + w + "\n";
  }

  tree.write("report.json", doc.dump(2) + "\n");
  tree.write("report.txt", text);
  out << "wrote " << tree.written().size() << " files to " << cfg.out_dir.string() << "\n";
}

void cmd_demo(RunConfig cfg, std::ostream& out) {
  OutputTree data(cfg.out_dir / "demo_data");
  for (const auto& f : demo_dataset()) data.write(f.name, f.content);
  cfg.manifest_path = cfg.out_dir / "demo_data" / "manifest.json";
  cfg.manifest = "demo_data/manifest.json";
  cfg.input_path.clear();
  cmd_report(cfg, out);
}

void add_common_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--manifest", cfg.manifest, "Dataset manifest (JSON)");
  sub.add_option("--input", cfg.input, "Single production CSV (needs one --index)");
  sub.add_flag("--wide", cfg.wide, "Treat --input and manifest tables as wide matrices");
  sub.add_option("--index", cfg.index_names, "Index kind to analyse (repeatable)");
  sub.add_option("--out", cfg.out, "Output directory");
  sub.add_option("--threshold", cfg.threshold, "Backbone weight threshold in [0,1]");
  sub.add_option("--format", cfg.format_names, "Network format: dot|graphml|json|csv|svg (repeatable)");
  sub.add_option("--quartile-rule", cfg.quartile_rule, "Quantile definition (linear, hazen, type1..type9, ...)");
  sub.add_flag("--joint-cells", cfg.joint_cells, "Also correlate over cells defined in every index");
  sub.add_flag("--timestamp", cfg.timestamp, "Embed the generation time in reports");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Revealed comparative advantage analysis of scientific production", kToolName};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print the tool version");

  RunConfig cfg;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"rca", "Write RCA and advantage matrices"},
      {"proximity", "Write proximity matrices and networks"},
      {"stats", "Summarise RCA distributions and correlations"},
      {"network", "Write backbone network files"},
      {"report", "Run the full pipeline and write a report"},
      {"demo", "Materialise the bundled demo dataset and report on it"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_options(*sub, cfg);
    if (std::string(name) == "proximity" || std::string(name) == "network")
      sub->add_option("--mode", cfg.mode, "fields or countries");
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (show_version) {
    out << kToolName << " " << kToolVersion << "\n";
    return exit_ok;
  }
  CLI::App* chosen = nullptr;
  for (CLI::App* sub : subs)
    if (sub->parsed()) chosen = sub;
  if (!chosen) {
    err << app.help();
    return exit_usage;
  }
  cfg.command = chosen->get_name();
  cfg.diag = &err;

  try {
    resolve(cfg);
    if (cfg.command == "rca") cmd_rca(cfg, out);
    else if (cfg.command == "proximity") cmd_proximity(cfg, out);
    else if (cfg.command == "stats") cmd_stats(cfg, out);
    else if (cfg.command == "network") cmd_network(cfg, out);
    else if (cfg.command == "report") cmd_report(cfg, out);
    else cmd_demo(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::io: return exit_io;
      case ErrorKind::data: return exit_data;
      case ErrorKind::usage: return exit_usage;
    }
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  }
  return exit_ok;
}

} // namespace rcaspace::tools
