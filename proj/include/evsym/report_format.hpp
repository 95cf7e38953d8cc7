#ifndef EVSYM_REPORT_FORMAT_HPP
#define EVSYM_REPORT_FORMAT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "evsym/identity_engine.hpp"
#include "evsym/monomial.hpp"
#include "evsym/partition.hpp"

namespace evsym {

inline constexpr int kSchemaVersion = 1;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings so no precision is lost.
nlohmann::json integer_json(const BigInt& value);
BigInt integer_from_json(const nlohmann::json& value);

nlohmann::json partition_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& doc);

/// [{"partition": [...], "coefficient": c}, ...] in the text-form term order.
nlohmann::json expansion_json(const MonomialExpansion& f);
MonomialExpansion expansion_from_json(const nlohmann::json& doc, int degree);

nlohmann::json ev_json(const EvMultiset& ev);
nlohmann::json theorem_json(const TheoremReport& report);

/// {lambda, N, lhs, rhs, equal, lhs_rows: [{mu, sum}], rhs_rows: [{mu, sum}]}
nlohmann::json conjecture_json(const ConjectureReport& report);
ConjectureReport conjecture_from_json(const nlohmann::json& doc);

/// Header "N,side,mu,row_sum", one line per μ of every report.
std::string conjecture_csv(const std::vector<ConjectureReport>& reports);

/// Right-aligned plain-text grid; `corner` heads the label column.
std::string render_grid(const std::string& corner, const std::vector<std::string>& col_labels,
                        const std::vector<std::string>& row_labels,
                        const std::vector<std::vector<std::string>>& cells);

/// Per-row breakdown in the style of a signed/weighted partial character
/// table: one column per Ev(λ) entry showing weight*χ, then the row sum.
/// `lhs_chars[i][j]` is χ of lhs row i at Ev entry j, likewise for rhs.
std::string render_conjecture_text(const ConjectureReport& report, const EvMultiset& ev,
                                   const std::vector<std::vector<BigInt>>& lhs_chars,
                                   const std::vector<std::vector<BigInt>>& rhs_chars);

}  // namespace evsym

#endif  // EVSYM_REPORT_FORMAT_HPP
