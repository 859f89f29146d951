#include "pfaff/table.hpp"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pfaff/lyubeznik.hpp"

namespace pfaff {

std::int64_t LyubeznikTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void validate_table(const LyubeznikTable& t) {
  for (const auto& [ij, lambda] : t.entries) {
    const auto [i, j] = ij;
    const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (lambda <= 0) throw VerificationError("nonpositive lambda at " + where, i, j);
    if (i < 0 || i > j || j > t.dim) {
      throw VerificationError("entry " + where + " outside 0 <= i <= j <= dim=" + std::to_string(t.dim), i, j);
    }
  }
  if (t.at(t.dim, t.dim) != 1) {
    throw VerificationError("lambda_{dim,dim} != 1 at dim=" + std::to_string(t.dim), t.dim, t.dim);
  }
}

void require_equal(const BiLaurentPoly& closed, const BiLaurentPoly& composed, const std::string& context) {
  if (closed == composed) return;
  const BiLaurentPoly diff = closed - composed;
  const auto& [e, c] = *diff.terms().begin();
  throw VerificationError(context + ": closed and composed forms differ at q^" + std::to_string(e.q) + " w^" +
                              std::to_string(e.w) + " (closed " + std::to_string(closed.coeff(e.q, e.w)) +
                              ", composed " + std::to_string(composed.coeff(e.q, e.w)) + ")",
                          e.q, e.w);
}

LyubeznikTable build_table_from(int n, int k, const GeneratingFunction& closed, const GeneratingFunction& composed) {
  const BiLaurentPoly L = closed(n, k);
  require_equal(L, composed(n, k), "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")");

  LyubeznikTable t;
  t.n = n;
  t.k = k;
  t.dim = pfaffian_dim(n, k);
  t.ambient = ambient_dim(n);
  for (const auto& [e, c] : L.terms()) t.entries.emplace(std::pair{e.q, e.w}, c);
  validate_table(t);
  return t;
}

LyubeznikTable build_table(int n, int k) { return build_table_from(n, k, L_closed, L_composed); }

std::string emit_json(const LyubeznikTable& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["dim"] = t.dim;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [ij, lambda] : t.entries) {
    j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"lambda", lambda}});
  }
  return j.dump();
}

std::string emit_csv(const LyubeznikTable& t) {
  std::ostringstream os;
  os << "i,j,lambda\n";
  for (const auto& [ij, lambda] : t.entries) os << ij.first << "," << ij.second << "," << lambda << "\n";
  return os.str();
}

std::string emit_latex(const LyubeznikTable& t) {
  std::set<int> rows;
  std::set<int> cols;
  for (const auto& [ij, lambda] : t.entries) {
    rows.insert(ij.first);
    cols.insert(ij.second);
  }

  std::ostringstream os;
  os << "\\begin{tabular}{c|" << std::string(cols.size(), 'c') << "}\n";
  os << "$i \\backslash j$";
  for (int j : cols) os << " & " << j;
  os << " \\\\\n\\hline\n";
  for (int i : rows) {
    os << i;
    for (int j : cols) os << " & " << t.at(i, j);
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string emit(const LyubeznikTable& t, TableFormat format) {
  switch (format) {
    case TableFormat::Json:
      return emit_json(t) + "\n";
    case TableFormat::Csv:
      return emit_csv(t);
    case TableFormat::Latex:
      return emit_latex(t);
  }
  return {};
}

}  // namespace pfaff
