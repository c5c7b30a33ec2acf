#include "mmcwpa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "mmcwpa/corpusgen.hpp"
#include "mmcwpa/format.hpp"
#include "mmcwpa/ranking.hpp"
#include "mmcwpa/reference_table.hpp"
#include "mmcwpa/utf8.hpp"
#include "mmcwpa/window.hpp"

namespace mmcwpa::cli {

namespace {

/// Usage and I/O problems detected after parsing; mapped to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One JSON object on one line. Scores are spliced in as raw 4-decimal
/// numbers so both encodings print the same digits.
class JsonLine {
 public:
  JsonLine& str(std::string_view key, std::string_view value) {
    return raw(key, nlohmann::json(std::string(value)).dump());
  }
  JsonLine& num(std::string_view key, std::uint64_t value) { return raw(key, std::to_string(value)); }
  JsonLine& score(std::string_view key, double value) { return raw(key, format_score(value)); }
  JsonLine& raw(std::string_view key, std::string_view json_text) {
    body_ += body_.empty() ? "{" : ",";
    body_ += nlohmann::json(std::string(key)).dump();
    body_ += ':';
    body_ += json_text;
    return *this;
  }
  std::string done() const { return body_.empty() ? "{}" : body_ + "}"; }

 private:
  std::string body_;
};

std::vector<std::string> read_records(const std::string& path, std::istream& in) {
  std::unique_ptr<std::ifstream> file;
  std::istream* source = &in;
  if (path != "-") {
    file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw UsageError("cannot open '" + path + "'");
    source = file.get();
  }
  std::vector<std::string> records;
  std::string line;
  while (std::getline(*source, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    records.push_back(line);
  }
  return records;
}

Mode to_mode(const std::string& text) {
  // Already restricted by CLI::IsMember.
  return *parse_mode(text);
}

std::string trace_tsv(const WindowMatch& m) {
  std::ostringstream line;
  line << "match\t" << m.length << '\t' << m.x_subfield << '\t' << m.x_offset << '\t' << m.y_subfield
       << '\t' << m.y_offset << '\t' << m.x_origin << '\t' << m.y_origin << '\t' << m.ssnc_contribution();
  return line.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Field similarity by contracting window pattern matching", "mmcwpa"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  app.add_flag("--json", json, "Emit JSON lines instead of TSV");

  const std::vector<std::string> mode_names{"mmcwpa", "mcwpa-legacy", "levenshtein"};
  std::string mode_text = "mmcwpa";
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_text, "mmcwpa | mcwpa-legacy | levenshtein")
        ->check(CLI::IsMember(mode_names))
        ->capture_default_str();
  };

  auto* compare = app.add_subcommand("compare", "Score two fields");
  std::string a, b;
  bool trace = false;
  compare->add_option("a", a, "First field (patterns are drawn from it)")->required();
  compare->add_option("b", b, "Second field")->required();
  compare->add_flag("--trace", trace, "List every matched window");
  add_mode(compare);

  auto* table = app.add_subcommand("table", "Check the built-in reference score table");
  add_mode(table);

  auto* rank_cmd = app.add_subcommand("rank", "Rank candidate lines against a query");
  std::string query, candidates_path;
  std::optional<std::size_t> top;
  rank_cmd->add_option("--query", query, "Query field")->required();
  rank_cmd->add_option("--candidates", candidates_path, "File with one candidate per line, - for stdin")
      ->required();
  rank_cmd->add_option("--top", top, "Keep only the best K")->check(CLI::PositiveNumber);
  add_mode(rank_cmd);

  auto* dedup = app.add_subcommand("dedup", "List record pairs at or above a similarity threshold");
  std::string input_path;
  double threshold = 0.9;
  dedup->add_option("--input", input_path, "File with one record per line, - for stdin")->required();
  dedup->add_option("--threshold", threshold, "Minimum score")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_mode(dedup);

  auto* gen = app.add_subcommand("gen", "Generate weighted random strings");
  std::string weights_path;
  std::size_t length = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  gen->add_option("--weights", weights_path, "TOKEN<TAB>WEIGHT file")->required();
  gen->add_option("--length", length, "Units per string")->required();
  gen->add_option("--count", count, "Number of strings")->capture_default_str();
  gen->add_option("--seed", seed, "Generator seed")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Mean comparison time for random fields of each length");
  std::vector<std::size_t> n_values{50, 100, 200};
  std::size_t trials = 3;
  bench->add_option("--n", n_values, "Field lengths")->delimiter(',')->capture_default_str();
  bench->add_option("--trials", trials, "Pairs per length")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--seed", seed, "Generator seed")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Mode mode = to_mode(mode_text);

    if (compare->parsed()) {
      const Field x = make_field(a);
      const Field y = make_field(b);
      const auto result = similarity(x, y, mode);
      if (json) {
        JsonLine line;
        line.str("x", a).str("y", b).str("mode", mode_name(mode)).score("score", result.score);
        if (trace) {
          if (mode == Mode::levenshtein) {
            line.num("distance", result.edit_distance);
          } else {
            line.num("ssnc", result.ssnc);
            std::string items = "[";
            for (const auto& m : result.trace) {
              if (items.size() > 1) items += ',';
              items += JsonLine{}
                           .num("length", m.length)
                           .num("x_subfield", m.x_subfield)
                           .num("x_offset", m.x_offset)
                           .num("y_subfield", m.y_subfield)
                           .num("y_offset", m.y_offset)
                           .num("x_pos", m.x_origin)
                           .num("y_pos", m.y_origin)
                           .num("contribution", m.ssnc_contribution())
                           .done();
            }
            line.raw("trace", items + "]");
          }
        }
        out << line.done() << '\n';
      } else {
        out << format_score(result.score) << '\n';
        if (trace) {
          if (mode == Mode::levenshtein) {
            out << "distance\t" << result.edit_distance << '\n';
          } else {
            out << "ssnc\t" << result.ssnc << '\n';
            for (const auto& m : result.trace) out << trace_tsv(m) << '\n';
          }
        }
      }
      return kExitOk;
    }

    if (table->parsed()) {
      const auto reports = check_reference_table(mode);
      std::size_t pass = 0, known = 0, fail = 0;
      for (const auto& r : reports) {
        (r.status == RowStatus::pass ? pass : r.status == RowStatus::known_diff ? known : fail)++;
        if (json) {
          JsonLine line;
          line.str("fx", r.row->fx)
              .str("fy", r.row->fy)
              .score("expected", r.row->expected)
              .score("computed", r.computed)
              .str("status", status_name(r.status));
          if (r.row->known_diff) line.score("algorithmic", *r.row->known_diff);
          out << line.done() << '\n';
        } else {
          out << r.row->fx << '\t' << r.row->fy << '\t' << format_score(r.row->expected) << '\t'
              << format_score(r.computed) << '\t' << status_name(r.status);
          if (r.row->known_diff) out << '\t' << format_score(*r.row->known_diff);
          out << '\n';
        }
      }
      err << pass << " PASS, " << known << " KNOWN-DIFF, " << fail << " FAIL (" << mode_name(mode)
          << ")\n";
      return fail == 0 ? kExitOk : kExitCheckFailed;
    }

    if (rank_cmd->parsed()) {
      const auto records = read_records(candidates_path, in);
      for (const auto& c : rank(query, records, mode, top)) {
        if (json) {
          out << JsonLine{}.num("rank", c.rank).num("index", c.index).score("score", c.score).str("text", c.text).done()
              << '\n';
        } else {
          out << c.rank << '\t' << c.index << '\t' << format_score(c.score) << '\t' << c.text << '\n';
        }
      }
      return kExitOk;
    }

    if (dedup->parsed()) {
      const auto records = read_records(input_path, in);
      for (const auto& p : dedup_pairs(records, mode, threshold)) {
        if (json) {
          out << JsonLine{}.num("i", p.i).num("j", p.j).score("score", p.score).done() << '\n';
        } else {
          out << p.i << '\t' << p.j << '\t' << format_score(p.score) << '\n';
        }
      }
      return kExitOk;
    }

    if (gen->parsed()) {
      std::ifstream file(weights_path, std::ios::binary);
      if (!file) throw UsageError("cannot open '" + weights_path + "'");
      CorpusGenerator generator(WeightTable::parse(file), seed);
      for (std::size_t k = 0; k < count; ++k) {
        const auto text = generator.next(length);
        if (json) {
          out << JsonLine{}.num("index", k).str("text", text).done() << '\n';
        } else {
          out << text << '\n';
        }
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      for (const auto& row : time_compare(n_values, trials, seed)) {
        char seconds[32];
        std::snprintf(seconds, sizeof seconds, "%.6e", row.mean_seconds);
        if (json) {
          out << JsonLine{}.num("n", row.n).raw("mean_seconds", seconds).done() << '\n';
        } else {
          out << row.n << '\t' << seconds << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const WeightTableError& e) {
    err << "mmcwpa: " << weights_path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "mmcwpa: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mmcwpa::cli
