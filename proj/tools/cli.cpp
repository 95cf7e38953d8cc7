#include "cli.hpp"

#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "evsym/identity_engine.hpp"
#include "evsym/kostka_cache.hpp"
#include "evsym/report_format.hpp"

namespace evsym::cli {

namespace {

enum class Format { Text, Json, Csv };

struct GlobalOptions {
  std::string format = "text";
  bool json = false;
  bool csv = false;
  unsigned threads = 0;
  std::string cache_dir;
  int max_degree = Limits{}.max_degree;

  Format resolved() const {
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

int parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used == text.size() && value >= 1) return value;
  } catch (const std::exception&) {
  }
  throw ContractViolation(what + " expects a positive integer, got '" + text + "'");
}

std::vector<Partition> expand_item(const std::string& item, int degree, const Limits& limits) {
  auto colon = item.find(':');
  std::string name = colon == std::string::npos ? item : item.substr(0, colon);
  std::string arg = colon == std::string::npos ? std::string() : item.substr(colon + 1);
  if (item == "all") return partitions_of(degree, limits);
  if (colon == std::string::npos) {
    Partition p = parse_partition(item);
    if (p.degree() != degree) {
      throw ContractViolation(fmt::format("partition {} is not of degree {}", to_string(p), degree));
    }
    return {p};
  }
  if (name == "ev") {
    Partition lambda = parse_partition(arg);
    if (2 * lambda.degree() != degree) {
      throw ContractViolation(fmt::format("ev:{} has degree {}, not {}", arg, 2 * lambda.degree(), degree));
    }
    std::vector<Partition> out;
    for (const EvEntry& e : ev_multiset(lambda).entries) out.push_back(e.partition);
    return out;
  }
  if (name == "even-rows") return restricted_even_rows(degree, parse_count(arg, "even-rows"), limits);
  if (name == "even-cols") return restricted_even_cols(degree, parse_count(arg, "even-cols"), limits);
  throw ContractViolation("unknown partition family '" + name + "'");
}

}  // namespace

std::vector<Partition> parse_family_spec(const std::string& spec, int degree, const Limits& limits) {
  std::vector<std::string> items;
  if (spec.find(';') != std::string::npos) {
    for (auto& item : split(spec, ';')) {
      if (!item.empty()) items.push_back(item);
    }
  } else {
    bool extendable = false;  // the last item accepts further bare parts
    for (const auto& token : split(spec, ',')) {
      const bool starts_family = token == "all" || token.find(':') != std::string::npos;
      if (starts_family) {
        items.push_back(token);
        extendable = token.rfind("ev:", 0) == 0;
      } else if (extendable) {
        items.back() += "," + token;
      } else {
        items.push_back(token);
        extendable = true;
      }
    }
  }
  if (items.empty()) throw ContractViolation("empty partition list");
  std::vector<Partition> out;
  for (const auto& item : items) {
    auto part = expand_item(item, degree, limits);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

std::optional<CharacterBackend> parse_backend(const std::string& method) {
  if (method == "schur") return CharacterBackend::Schur;
  if (method == "mn") return CharacterBackend::Mn;
  return std::nullopt;
}

std::string sign_text(int sign) { return sign > 0 ? "+1" : "-1"; }

class Commands {
 public:
  Commands(const GlobalOptions& global, std::ostream& out) : global_(global), out_(out) {}

  Limits limits() const { return Limits{global_.max_degree}; }

  EngineOptions engine_options() const {
    EngineOptions options;
    options.limits = limits();
    options.threads = global_.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : global_.threads;
    if (!global_.cache_dir.empty()) {
      options.cache_dir = global_.cache_dir;
    } else {
      options.cache_dir = cache_dir_from_env();
    }
    return options;
  }

  int partitions(int n, std::optional<int> even_rows, std::optional<int> even_cols) {
    if (n < 0) throw ContractViolation("partitions: n must be nonnegative");
    std::vector<Partition> family;
    std::string kind = "all";
    std::optional<int> bound;
    if (even_rows) {
      family = restricted_even_rows(n, *even_rows, limits());
      kind = "even-rows";
      bound = even_rows;
    } else if (even_cols) {
      family = restricted_even_cols(n, *even_cols, limits());
      kind = "even-cols";
      bound = even_cols;
    } else {
      family = partitions_of(n, limits());
    }
    switch (global_.resolved()) {
      case Format::Json: {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& p : family) parts.push_back(partition_json(p));
        nlohmann::json doc = {{"schema_version", kSchemaVersion}, {"n", n}, {"family", kind}};
        doc["N"] = bound ? nlohmann::json(*bound) : nlohmann::json(nullptr);
        doc["partitions"] = std::move(parts);
        doc["count"] = family.size();
        out_ << doc.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out_ << "partition\n";
        for (const auto& p : family) out_ << '"' << to_string(p) << "\"\n";
        break;
      case Format::Text:
        for (const auto& p : family) out_ << to_string(p) << '\n';
        out_ << "count: " << family.size() << '\n';
        break;
    }
    return kOk;
  }

  int ev(const Partition& lambda) {
    limits().check_degree(2 * lambda.degree(), "ev");
    EvMultiset ev = ev_multiset(lambda);
    switch (global_.resolved()) {
      case Format::Json:
        out_ << ev_json(ev).dump(2) << '\n';
        break;
      case Format::Csv:
        out_ << "partition,multiplicity,sign\n";
        for (const auto& e : ev.entries) {
          out_ << fmt::format("\"{}\",{},{}\n", to_string(e.partition), e.multiplicity, e.sign());
        }
        break;
      case Format::Text: {
        std::vector<std::string> labels;
        std::vector<std::vector<std::string>> cells;
        for (const auto& e : ev.entries) {
          labels.push_back(to_exponent_string(e.partition));
          cells.push_back({std::to_string(e.multiplicity), sign_text(e.sign())});
        }
        out_ << fmt::format("Ev({}): {} distinct entries\n", to_exponent_string(lambda), ev.entries.size());
        out_ << render_grid("partition", {"multiplicity", "sign"}, labels, cells);
        out_ << "total multiplicity: " << ev.total_multiplicity() << '\n';
        break;
      }
    }
    return kOk;
  }

  int theorem(const Partition& lambda) {
    IdentityEngine engine(engine_options());
    TheoremReport report = engine.verify_theorem(lambda);
    switch (global_.resolved()) {
      case Format::Json:
        out_ << theorem_json(report).dump(2) << '\n';
        break;
      case Format::Csv:
        out_ << "side,partition,coefficient\n";
        for (const auto& [side, f] : {std::pair{"lhs", &report.lhs}, std::pair{"rhs", &report.rhs}}) {
          for (const auto& [tau, c] : f->terms()) out_ << fmt::format("{},\"{}\",{}\n", side, to_string(tau), c.get_str());
        }
        break;
      case Format::Text:
        out_ << "lambda = " << to_string(lambda) << '\n';
        out_ << "lhs = " << to_text(report.lhs) << '\n';
        out_ << "rhs = " << to_text(report.rhs) << '\n';
        out_ << "max part in support: " << report.max_part_in_support << '\n';
        out_ << (report.equal ? "EQUAL" : "UNEQUAL") << '\n';
        break;
    }
    return report.equal ? kOk : kFailure;
  }

  int character(const Partition& mu, const Partition& lambda, const std::string& method) {
    if (mu.degree() != lambda.degree()) {
      throw ContractViolation(fmt::format("character: |{}| = {} but |{}| = {}", to_string(mu), mu.degree(),
                                          to_string(lambda), lambda.degree()));
    }
    EngineOptions options = engine_options();
    options.cross_check_modulus = 0;
    IdentityEngine engine(options);
    std::vector<std::pair<std::string, BigInt>> values;
    if (method == "schur" || method == "both") values.emplace_back("schur", engine.character(mu, lambda, CharacterBackend::Schur));
    if (method == "mn" || method == "both") values.emplace_back("mn", engine.character(mu, lambda, CharacterBackend::Mn));
    const bool agree = values.front().second == values.back().second;

    switch (global_.resolved()) {
      case Format::Json: {
        nlohmann::json doc = {{"schema_version", kSchemaVersion}, {"mu", partition_json(mu)}, {"lambda", partition_json(lambda)}};
        for (const auto& [name, v] : values) doc[name] = integer_json(v);
        doc["agree"] = agree;
        out_ << doc.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out_ << "method,value\n";
        for (const auto& [name, v] : values) out_ << name << ',' << v.get_str() << '\n';
        break;
      case Format::Text:
        if (values.size() == 1) {
          out_ << values.front().second.get_str() << '\n';
        } else {
          for (const auto& [name, v] : values) out_ << name << ": " << v.get_str() << '\n';
          out_ << (agree ? "AGREE" : "DISAGREE") << '\n';
        }
        break;
    }
    return agree ? kOk : kCrossCheck;
  }

  int conjecture(const Partition& lambda, std::optional<int> N) {
    IdentityEngine engine(engine_options());
    std::vector<ConjectureReport> reports;
    if (N) {
      reports.push_back(engine.conjecture_report(lambda, *N));
    } else {
      reports = engine.conjecture_sweep(lambda);
    }
    switch (global_.resolved()) {
      case Format::Json:
        if (reports.size() == 1 && N) {
          out_ << conjecture_json(reports.front()).dump(2) << '\n';
        } else {
          nlohmann::json list = nlohmann::json::array();
          for (const auto& r : reports) list.push_back(conjecture_json(r));
          nlohmann::json doc = {{"schema_version", kSchemaVersion}, {"lambda", partition_json(lambda)}, {"reports", list}};
          out_ << doc.dump(2) << '\n';
        }
        break;
      case Format::Csv:
        out_ << conjecture_csv(reports);
        break;
      case Format::Text: {
        const EvMultiset ev = ev_multiset(lambda);
        auto characters = [&](const std::vector<RowSum>& rows) {
          std::vector<std::vector<BigInt>> chars;
          for (const RowSum& row : rows) {
            std::vector<BigInt> line;
            for (const EvEntry& e : ev.entries) line.push_back(engine.character(row.mu, e.partition));
            chars.push_back(std::move(line));
          }
          return chars;
        };
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (i > 0) out_ << '\n';
          out_ << render_conjecture_text(reports[i], ev, characters(reports[i].lhs_rows), characters(reports[i].rhs_rows));
        }
        break;
      }
    }
    return kOk;
  }

  int chartable(int degree, const std::string& rows_spec, const std::string& cols_spec, const std::string& method) {
    if (degree < 0) throw ContractViolation("chartable: degree must be nonnegative");
    limits().check_degree(degree, "chartable");
    auto rows = parse_family_spec(rows_spec, degree, limits());
    auto cols = parse_family_spec(cols_spec, degree, limits());
    IdentityEngine engine(engine_options());
    auto table = engine.character_table_slice(degree, rows, cols, parse_backend(method));
    switch (global_.resolved()) {
      case Format::Json: {
        nlohmann::json r = nlohmann::json::array(), c = nlohmann::json::array(), v = nlohmann::json::array();
        for (const auto& p : rows) r.push_back(partition_json(p));
        for (const auto& p : cols) c.push_back(partition_json(p));
        for (const auto& line : table) {
          nlohmann::json l = nlohmann::json::array();
          for (const auto& x : line) l.push_back(integer_json(x));
          v.push_back(std::move(l));
        }
        out_ << nlohmann::json{{"schema_version", kSchemaVersion}, {"degree", degree}, {"rows", r}, {"cols", c}, {"values", v}}.dump(2)
             << '\n';
        break;
      }
      case Format::Csv:
        out_ << "mu";
        for (const auto& p : cols) out_ << ",\"" << to_string(p) << '"';
        out_ << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
          out_ << '"' << to_string(rows[i]) << '"';
          for (const auto& x : table[i]) out_ << ',' << x.get_str();
          out_ << '\n';
        }
        break;
      case Format::Text: {
        std::vector<std::string> col_labels, row_labels;
        std::vector<std::vector<std::string>> cells;
        for (const auto& p : cols) col_labels.push_back(to_bracket_string(p));
        for (std::size_t i = 0; i < rows.size(); ++i) {
          row_labels.push_back("s" + to_bracket_string(rows[i]));
          std::vector<std::string> line;
          for (const auto& x : table[i]) line.push_back(x.get_str());
          cells.push_back(std::move(line));
        }
        out_ << render_grid("", col_labels, row_labels, cells);
        break;
      }
    }
    return kOk;
  }

  int corollary(const Partition& lambda) {
    IdentityEngine engine(engine_options());
    limits().check_degree(2 * lambda.degree(), "corollary");
    auto checked = engine.verify_corollary(lambda);
    switch (global_.resolved()) {
      case Format::Json: {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : checked) rows.push_back({{"mu", partition_json(r.mu)}, {"sum", integer_json(r.sum)}});
        out_ << nlohmann::json{{"schema_version", kSchemaVersion}, {"lambda", partition_json(lambda)}, {"checked", rows}}.dump(2)
             << '\n';
        break;
      }
      case Format::Csv:
        out_ << "mu,row_sum\n";
        for (const auto& r : checked) out_ << '"' << to_string(r.mu) << "\"," << r.sum.get_str() << '\n';
        break;
      case Format::Text:
        for (const auto& r : checked) out_ << "s" << to_bracket_string(r.mu) << "  " << r.sum.get_str() << '\n';
        out_ << fmt::format("{} shapes with first part > {}: all row sums zero\n", checked.size(), lambda.degree());
        break;
    }
    return kOk;
  }

  int kostka(int n) {
    if (n < 0) throw ContractViolation("kostka: degree must be nonnegative");
    EngineOptions options = engine_options();
    KostkaSystem system = build_kostka_system(n, KostkaBuildOptions{options.limits, options.threads, options.cache_dir});
    switch (global_.resolved()) {
      case Format::Json:
        out_ << kostka_system_to_json(system).dump() << '\n';
        break;
      case Format::Csv:
        out_ << "matrix,row,col,value\n";
        for (const auto& [name, m] : {std::pair{"K", &system.kostka_matrix()}, std::pair{"K_inv", &system.inverse_matrix()}}) {
          for (std::size_t i = 0; i < m->size; ++i) {
            for (const auto& [j, v] : m->rows[i]) {
              out_ << fmt::format("{},\"{}\",\"{}\",{}\n", name, to_string(system.order()[i]), to_string(system.order()[j]), v.get_str());
            }
          }
        }
        break;
      case Format::Text: {
        std::vector<std::string> labels;
        for (const auto& p : system.order()) labels.push_back(to_exponent_string(p));
        for (const auto& [name, m] : {std::pair{"K", &system.kostka_matrix()}, std::pair{"K_inv", &system.inverse_matrix()}}) {
          std::vector<std::vector<std::string>> cells;
          for (std::size_t i = 0; i < m->size; ++i) {
            std::vector<std::string> line;
            for (std::size_t j = 0; j < m->size; ++j) line.push_back(m->at(i, j).get_str());
            cells.push_back(std::move(line));
          }
          out_ << render_grid(name, labels, labels, cells) << '\n';
        }
        out_ << "K * K_inv = I: " << (system.inverse_is_exact() ? "yes" : "NO") << '\n';
        break;
      }
    }
    return kOk;
  }

 private:
  const GlobalOptions& global_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ev(λ) symmetric-function identities and symmetric-group character sums", "evsym"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  auto* format_opt = app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  auto* json_flag = app.add_flag("--json", global.json, "Shorthand for --format json");
  auto* csv_flag = app.add_flag("--csv", global.csv, "Shorthand for --format csv");
  json_flag->excludes(csv_flag)->excludes(format_opt);
  csv_flag->excludes(format_opt);
  app.add_option("--threads", global.threads, "Worker threads (0: all cores)");
  app.add_option("--cache-dir", global.cache_dir, std::string("Kostka cache directory (default: $") + kCacheDirEnv + ")");
  app.add_option("--max-degree", global.max_degree, "Degree guard")->check(CLI::NonNegativeNumber);

  std::string lambda_text, mu_text, method = "schur", rows_spec, cols_spec;
  int n = 0;
  std::optional<int> even_rows, even_cols, conj_n;

  auto* partitions_cmd = app.add_subcommand("partitions", "List partitions of n, optionally restricted");
  partitions_cmd->add_option("n", n)->required();
  auto* rows_opt = partitions_cmd->add_option("--even-rows", even_rows, "At most N parts, all even")->check(CLI::PositiveNumber);
  auto* cols_opt = partitions_cmd->add_option("--even-cols", even_cols, "At most N parts, even column lengths")->check(CLI::PositiveNumber);
  rows_opt->excludes(cols_opt);

  auto* ev_cmd = app.add_subcommand("ev", "Print Ev(λ) with multiplicities and signs");
  ev_cmd->add_option("lambda", lambda_text)->required();

  auto* theorem_cmd = app.add_subcommand("theorem", "Compare the alternating Ev power-sum expansion with 2^r ∏ m_{λ_i λ_i}");
  theorem_cmd->add_option("lambda", lambda_text)->required();

  auto* character_cmd = app.add_subcommand("character", "Character value χ^μ_λ");
  character_cmd->add_option("mu", mu_text)->required();
  character_cmd->add_option("lambda", lambda_text)->required();
  character_cmd->add_option("--method", method)->check(CLI::IsMember({"schur", "mn", "both"}));

  auto* conjecture_cmd = app.add_subcommand("conjecture", "Both sides of the Ev character-sum conjecture");
  conjecture_cmd->add_option("lambda", lambda_text)->required();
  auto* n_opt = conjecture_cmd->add_option("--N", conj_n, "Single N")->check(CLI::PositiveNumber);
  bool all_n = false;
  auto* all_opt = conjecture_cmd->add_flag("--all-N", all_n, "Sweep N until both families saturate (default)");
  n_opt->excludes(all_opt);

  auto* chartable_cmd = app.add_subcommand("chartable", "Slice of the character table of the symmetric group");
  chartable_cmd->add_option("n", n)->required();
  chartable_cmd->add_option("--rows", rows_spec, "Row shapes")->required();
  chartable_cmd->add_option("--cols", cols_spec, "Column cycle types")->required();
  chartable_cmd->add_option("--method", method)->check(CLI::IsMember({"schur", "mn"}));

  auto* corollary_cmd = app.add_subcommand("corollary", "Check the signed row sums vanish when μ_1 > |λ|");
  corollary_cmd->add_option("lambda", lambda_text)->required();

  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka matrix and its inverse for one degree");
  kostka_cmd->add_option("n", n)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e_stream;
    const int code = app.exit(e, o, e_stream);
    out << o.str();
    err << e_stream.str();
    return code == 0 ? kOk : kUsage;
  }

  Commands commands(global, out);
  try {
    if (*partitions_cmd) return commands.partitions(n, even_rows, even_cols);
    if (*ev_cmd) return commands.ev(parse_partition(lambda_text));
    if (*theorem_cmd) return commands.theorem(parse_partition(lambda_text));
    if (*character_cmd) return commands.character(parse_partition(mu_text), parse_partition(lambda_text), method);
    if (*conjecture_cmd) return commands.conjecture(parse_partition(lambda_text), conj_n);
    if (*chartable_cmd) return commands.chartable(n, rows_spec, cols_spec, method);
    if (*corollary_cmd) return commands.corollary(parse_partition(lambda_text));
    if (*kostka_cmd) return commands.kostka(n);
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const CrossCheckFailure& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kCrossCheck;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace evsym::cli
