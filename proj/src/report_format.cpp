#include "evsym/report_format.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace evsym {

nlohmann::json integer_json(const BigInt& value) {
  if (mpz_fits_slong_p(value.get_mpz_t())) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

BigInt integer_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) {
    return BigInt(std::to_string(value.get<std::int64_t>()));
  }
  BigInt out;
  if (!value.is_string() || out.set_str(value.get<std::string>(), 10) != 0) {
    throw ContractViolation("expected an integer, got " + value.dump());
  }
  return out;
}

nlohmann::json partition_json(const Partition& p) { return p.part_vector(); }

Partition partition_from_json(const nlohmann::json& doc) {
  try {
    return Partition(doc.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("bad partition JSON: ") + e.what());
  }
}

nlohmann::json expansion_json(const MonomialExpansion& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms()) {
    out.push_back({{"partition", partition_json(lambda)}, {"coefficient", integer_json(c)}});
  }
  return out;
}

MonomialExpansion expansion_from_json(const nlohmann::json& doc, int degree) {
  MonomialExpansion f(degree);
  for (const auto& term : doc) f.add_term(partition_from_json(term.at("partition")), integer_from_json(term.at("coefficient")));
  return f;
}

nlohmann::json ev_json(const EvMultiset& ev) {
  nlohmann::json entries = nlohmann::json::array();
  for (const EvEntry& e : ev.entries) {
    entries.push_back({{"partition", partition_json(e.partition)},
                       {"multiplicity", e.multiplicity},
                       {"sign", e.sign()}});
  }
  return {{"schema_version", kSchemaVersion},
          {"lambda", partition_json(ev.source)},
          {"entries", std::move(entries)},
          {"total_multiplicity", ev.total_multiplicity()}};
}

nlohmann::json theorem_json(const TheoremReport& report) {
  return {{"schema_version", kSchemaVersion},
          {"lambda", partition_json(report.lambda)},
          {"lhs", expansion_json(report.lhs)},
          {"rhs", expansion_json(report.rhs)},
          {"equal", report.equal},
          {"max_part_in_support", report.max_part_in_support}};
}

namespace {

nlohmann::json rows_json(const std::vector<RowSum>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const RowSum& row : rows) out.push_back({{"mu", partition_json(row.mu)}, {"sum", integer_json(row.sum)}});
  return out;
}

std::vector<RowSum> rows_from_json(const nlohmann::json& doc) {
  std::vector<RowSum> out;
  for (const auto& row : doc) out.push_back({partition_from_json(row.at("mu")), integer_from_json(row.at("sum"))});
  return out;
}

}  // namespace

nlohmann::json conjecture_json(const ConjectureReport& report) {
  return {{"schema_version", kSchemaVersion},
          {"lambda", partition_json(report.lambda)},
          {"N", report.N},
          {"lhs", integer_json(report.lhs)},
          {"rhs", integer_json(report.rhs)},
          {"equal", report.equal},
          {"lhs_rows", rows_json(report.lhs_rows)},
          {"rhs_rows", rows_json(report.rhs_rows)}};
}

ConjectureReport conjecture_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw ContractViolation("unsupported conjecture report schema version");
    }
    ConjectureReport r;
    r.lambda = partition_from_json(doc.at("lambda"));
    r.N = doc.at("N").get<int>();
    r.lhs = integer_from_json(doc.at("lhs"));
    r.rhs = integer_from_json(doc.at("rhs"));
    r.equal = doc.at("equal").get<bool>();
    r.lhs_rows = rows_from_json(doc.at("lhs_rows"));
    r.rhs_rows = rows_from_json(doc.at("rhs_rows"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("bad conjecture report JSON: ") + e.what());
  }
}

std::string conjecture_csv(const std::vector<ConjectureReport>& reports) {
  std::string out = "N,side,mu,row_sum\n";
  for (const ConjectureReport& r : reports) {
    for (const RowSum& row : r.lhs_rows) out += fmt::format("{},lhs,\"{}\",{}\n", r.N, to_string(row.mu), row.sum.get_str());
    for (const RowSum& row : r.rhs_rows) out += fmt::format("{},rhs,\"{}\",{}\n", r.N, to_string(row.mu), row.sum.get_str());
  }
  return out;
}

std::string render_grid(const std::string& corner, const std::vector<std::string>& col_labels,
                        const std::vector<std::string>& row_labels,
                        const std::vector<std::vector<std::string>>& cells) {
  std::size_t label_width = corner.size();
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths;
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    std::size_t w = col_labels[j].size();
    for (const auto& row : cells) w = std::max(w, row.at(j).size());
    widths.push_back(w);
  }
  std::string out = fmt::format("{:<{}}", corner, label_width);
  for (std::size_t j = 0; j < col_labels.size(); ++j) out += fmt::format("  {:>{}}", col_labels[j], widths[j]);
  out += '\n';
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    out += fmt::format("{:<{}}", row_labels[i], label_width);
    for (std::size_t j = 0; j < col_labels.size(); ++j) out += fmt::format("  {:>{}}", cells[i][j], widths[j]);
    out += '\n';
  }
  return out;
}

namespace {

std::string weighted_cell(std::int64_t weight, const BigInt& chi) {
  if (weight == 1) return chi.get_str();
  return fmt::format("{}*{}", weight, chi.get_str());
}

std::string render_side(const std::string& title, const std::vector<RowSum>& rows, const EvMultiset& ev,
                        const std::vector<std::vector<BigInt>>& chars, bool signed_weights, const BigInt& total) {
  std::vector<std::string> cols;
  for (const EvEntry& e : ev.entries) cols.push_back(to_bracket_string(e.partition));
  cols.emplace_back("Row Sum");
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    labels.push_back("s" + to_bracket_string(rows[i].mu));
    std::vector<std::string> line;
    for (std::size_t j = 0; j < ev.entries.size(); ++j) {
      auto weight = static_cast<std::int64_t>(ev.entries[j].multiplicity);
      if (signed_weights) weight *= ev.entries[j].sign();
      line.push_back(weighted_cell(weight, chars.at(i).at(j)));
    }
    line.push_back(rows[i].sum.get_str());
    cells.push_back(std::move(line));
  }
  std::string out = title + '\n';
  out += rows.empty() ? std::string("(no shapes)\n") : render_grid("", cols, labels, cells);
  out += fmt::format("total: {}\n", total.get_str());
  return out;
}

}  // namespace

std::string render_conjecture_text(const ConjectureReport& report, const EvMultiset& ev,
                                   const std::vector<std::vector<BigInt>>& lhs_chars,
                                   const std::vector<std::vector<BigInt>>& rhs_chars) {
  const int m = 2 * report.lambda.degree();
  std::string out = fmt::format("lambda = {}  N = {}  degree = {}\n\n", to_exponent_string(report.lambda), report.N, m);
  out += render_side(fmt::format("LHS: signed sum over even-row shapes, at most {} rows", 2 * report.N + 1),
                     report.lhs_rows, ev, lhs_chars, true, report.lhs);
  out += '\n';
  out += render_side(fmt::format("RHS: sum over even-column shapes, at most {} rows", 2 * report.N),
                     report.rhs_rows, ev, rhs_chars, false, report.rhs);
  out += fmt::format("\nlhs = {}  rhs = {}  {}\n", report.lhs.get_str(), report.rhs.get_str(),
                     report.equal ? "EQUAL" : "UNEQUAL");
  return out;
}

}  // namespace evsym
