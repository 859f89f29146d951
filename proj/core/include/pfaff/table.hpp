#ifndef PFAFF_TABLE_HPP
#define PFAFF_TABLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "pfaff/poly.hpp"

namespace pfaff {

/// The nonzero Lyubeznik numbers lambda_{i,j}(R^k) of a Pfaffian ring.
struct LyubeznikTable {
  int n = 0;
  int k = 0;
  int dim = 0;      // k(2n-2k-1)
  int ambient = 0;  // C(n,2)
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t at(int i, int j) const;
};

/// Raised when a computed table or generating function fails a check. Holds
/// the offending (i, j) position.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, int i, int j) : std::runtime_error(what), i_(i), j_(j) {}
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

using GeneratingFunction = std::function<BiLaurentPoly(int n, int k)>;

/// Checks lambda > 0, 0 <= i <= j <= dim and lambda_{dim,dim} = 1.
/// Throws VerificationError at the first violation.
void validate_table(const LyubeznikTable& table);

/// Builds the table from L_closed and refuses (VerificationError) if it
/// differs from L_composed anywhere or violates the table invariants.
LyubeznikTable build_table(int n, int k);

/// build_table with injectable generating functions.
LyubeznikTable build_table_from(int n, int k, const GeneratingFunction& closed, const GeneratingFunction& composed);

/// Throws VerificationError at the first (i, j) where the two differ.
void require_equal(const BiLaurentPoly& closed, const BiLaurentPoly& composed, const std::string& context);

enum class TableFormat { Json, Csv, Latex };

/// {"n":..,"k":..,"dim":..,"entries":[{"i":..,"j":..,"lambda":..}, ...]}
std::string emit_json(const LyubeznikTable& table);
/// Header "i,j,lambda", one row per nonzero entry sorted by (i, j).
std::string emit_csv(const LyubeznikTable& table);
/// tabular environment with rows i and columns j; all-zero rows and columns
/// are omitted.
std::string emit_latex(const LyubeznikTable& table);
std::string emit(const LyubeznikTable& table, TableFormat format);

}  // namespace pfaff

#endif  // PFAFF_TABLE_HPP
