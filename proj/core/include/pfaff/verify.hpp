#ifndef PFAFF_VERIFY_HPP
#define PFAFF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pfaff/lyubeznik.hpp"
#include "pfaff/table.hpp"

namespace pfaff {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::int64_t checked = 0;
  std::string detail;  // first counterexample when the suite fails
  double seconds = 0.0;
};

struct VerifyOptions {
  int n_max = 13;
  int jobs = 1;
  GeneratingFunction closed = L_closed;
  GeneratingFunction composed = L_composed;
};

struct VerifyReport {
  int n_max = 0;
  std::vector<SuiteResult> suites;

  bool pass() const noexcept;
  std::string to_text() const;
};

// Individual property suites. Each stops at its first failure and reports it
// in SuiteResult::detail; exceptions thrown by the code under test are caught
// and reported the same way.
SuiteResult check_two_path(int n_max, const GeneratingFunction& closed, const GeneratingFunction& composed);
SuiteResult check_tables(int n_max, const GeneratingFunction& closed, const GeneratingFunction& composed);
SuiteResult check_gaussian(int a_max);
SuiteResult check_kgroup(int m_max);
SuiteResult check_origin(int m_max);
SuiteResult check_ext(int m_max);
SuiteResult check_zsets(int m_max, int e_max);
SuiteResult check_pushforward(int m_max);
SuiteResult check_characters(int m_max, int bound);

/// Runs every suite: the two generating-function routes and table invariants
/// for 2 <= n <= n_max, and the partition, K-group, origin, Ext, Bott and
/// character suites at their fixed ranges. Suites run on up to `jobs`
/// threads; the report order does not depend on scheduling.
VerifyReport verify_all(const VerifyOptions& options);
VerifyReport verify_all(int n_max);

}  // namespace pfaff

#endif  // PFAFF_VERIFY_HPP
