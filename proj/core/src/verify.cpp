#include "pfaff/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "pfaff/characters.hpp"
#include "pfaff/ext_mult.hpp"
#include "pfaff/kgroup.hpp"
#include "pfaff/origin.hpp"
#include "pfaff/partitions.hpp"
#include "pfaff/weights.hpp"

namespace pfaff {

namespace {

// Thrown inside a suite body to stop at the first counterexample.
struct SuiteFailure {
  std::string detail;
};

std::string tag(const char* name, std::initializer_list<std::pair<const char*, int>> args) {
  std::ostringstream os;
  os << name << "(";
  bool first = true;
  for (const auto& [k, v] : args) {
    if (!first) os << ",";
    first = false;
    os << k << "=" << v;
  }
  os << ")";
  return os.str();
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw SuiteFailure{what};
}

void expect_eq(const BiLaurentPoly& lhs, const BiLaurentPoly& rhs, const std::string& what) {
  if (lhs != rhs) throw SuiteFailure{what + ": " + lhs.to_string() + " != " + rhs.to_string()};
}

SuiteResult run_suite(const std::string& name, const std::function<void(std::int64_t&)>& body) {
  SuiteResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r.checked);
  } catch (const SuiteFailure& f) {
    r.pass = false;
    r.detail = f.detail;
  } catch (const VerificationError& e) {
    r.pass = false;
    r.detail = std::string(e.what()) + " [i=" + std::to_string(e.i()) + ", j=" + std::to_string(e.j()) + "]";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

BiLaurentPoly one_minus_q(int e) { return BiLaurentPoly(1) - BiLaurentPoly::q_power(e); }

}  // namespace

bool VerifyReport::pass() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& s : suites) {
    os << (s.pass ? "PASS " : "FAIL ") << s.name << " checked=" << s.checked;
    if (!s.pass) os << " : " << s.detail;
    os << "\n";
  }
  os << (pass() ? "all suites passed" : "verification FAILED") << " (n_max=" << n_max << ")\n";
  return os.str();
}

SuiteResult check_two_path(int n_max, const GeneratingFunction& closed, const GeneratingFunction& composed) {
  return run_suite("two_path", [&](std::int64_t& checked) {
    for (int n = 2; n <= n_max; ++n) {
      for (int k = 0; valid_rank(n, k); ++k) {
        require_equal(closed(n, k), composed(n, k), tag("L", {{"n", n}, {"k", k}}));
        ++checked;
      }
    }
  });
}

SuiteResult check_tables(int n_max, const GeneratingFunction& closed, const GeneratingFunction& composed) {
  return run_suite("tables", [&](std::int64_t& checked) {
    for (int n = 2; n <= n_max; ++n) {
      for (int k = 0; valid_rank(n, k); ++k) {
        const LyubeznikTable t = build_table_from(n, k, closed, composed);
        const std::string where = tag("table", {{"n", n}, {"k", k}});
        if (k == 0) {
          expect(t.entries.size() == 1 && t.at(0, 0) == 1, where + ": the origin must give lambda_{0,0}=1 only");
        }
        if (n % 2 == 0 && k == n / 2 - 1) {
          expect(t.entries.size() == 1 && t.at(t.dim, t.dim) == 1,
                 where + ": a hypersurface must give lambda_{dim,dim}=1 only");
        }
        ++checked;
      }
    }
  });
}

SuiteResult check_gaussian(int a_max) {
  return run_suite("partitions", [&](std::int64_t& checked) {
    for (int a = 0; a <= a_max; ++a) {
      for (int b = 0; b <= a; ++b) {
        const BiLaurentPoly g = gaussian_binomial(a, b);
        const std::string where = tag("gaussian", {{"a", a}, {"b", b}});
        expect_eq(g, gaussian_binomial_oracle(a, b), where + " vs box enumeration");
        expect_eq(g, gaussian_binomial(a, a - b), where + " symmetry");
        expect_eq(reverse(g, b * (a - b)), g, where + " palindromy");
        expect(coeff(g, 0) == 1 && max_q_degree(g) == b * (a - b), where + " degree");
        if (b > 0 && b < a) {
          expect_eq(g, gaussian_binomial(a - 1, b - 1) + shift(gaussian_binomial(a - 1, b), b), where + " Pascal");
        }
        BiLaurentPoly lhs = g;
        BiLaurentPoly rhs(1);
        for (int i = 1; i <= b; ++i) lhs *= one_minus_q(i);
        for (int i = 0; i < b; ++i) rhs *= one_minus_q(a - i);
        expect_eq(lhs, rhs, where + " product formula");
        ++checked;
      }
    }
    for (int c = 0; c <= 6; ++c) {
      for (int d = 0; d <= 6; ++d) {
        std::int64_t count = 0;
        std::set<std::vector<int>> seen;
        for_each_in_box(c, d, [&](const Partition& x) {
          ++count;
          expect(x.length() == c && (c == 0 || (x[0] <= d)), "box partition out of range: " + x.to_string());
          expect(seen.insert(x.profile()).second, "box partition repeated: " + x.to_string());
        });
        expect(count == binomial(c + d, d), tag("box", {{"c", c}, {"d", d}}) + " count");
        ++checked;
      }
    }
  });
}

SuiteResult check_kgroup(int m_max) {
  return run_suite("kgroup", [&](std::int64_t& checked) {
    for (int m = 1; m <= m_max; ++m) {
      const int d_even = static_cast<int>(binomial(2 * m, 2));
      for (int k = 0; k <= m - 1; ++k) {
        const std::string where = tag("class", {{"m", m}, {"k", k}});
        const KClass cq = localcoh_class_even_Q(m, k);
        for (const auto& c : cq.coeffs()) expect(has_nonnegative_coefficients(c), where + " negative coefficient");
        expect(d_to_q(q_to_d(cq)) == cq, where + " basis change round trip");
        if (k <= m - 2) {
          expect(q_to_d(cq) == localcoh_class_even_D(m, k), where + " Q to D decomposition");
          expect(reverse_class(cq, d_even) == localcoh_class_even_Q_reversed(m, k), where + " reversed form");
        }
        const KClass odd = localcoh_class_odd_D_reversed(m, k);
        for (const auto& c : odd.coeffs()) {
          expect(has_nonnegative_coefficients(c), where + " negative odd coefficient");
          if (!c.is_zero()) {
            expect(min_q_degree(c) >= 0 && max_q_degree(c) <= binomial(2 * m + 1, 2), where + " odd degree range");
          }
        }
        ++checked;
      }
    }
  });
}

SuiteResult check_origin(int m_max) {
  return run_suite("origin_localcoh", [&](std::int64_t& checked) {
    const BiLaurentPoly q = BiLaurentPoly::q_power(1);
    for (int m = 1; m <= m_max; ++m) {
      const int d_even = static_cast<int>(binomial(2 * m, 2));
      const int d_odd = static_cast<int>(binomial(2 * m + 1, 2));
      for (int p = 0; p <= m - 1; ++p) {
        const std::string where = tag("h0_Q", {{"m", m}, {"p", p}});
        expect_eq(q * h0_Q(m, p), h0_pf_pole(m, m - p - 1), where + " splice");
        ++checked;
      }
      for (int s = 1; s <= m - 1; ++s) {
        const std::string where = tag("h0_D_even", {{"m", m}, {"s", s}});
        expect_eq(h0_D_even(m, s), h0_pf_pole(m, m - s) + shift(h0_pf_pole(m, m - s - 1), -1), where + " splice");
        expect_eq(h0_D_even(m, s),
                  shift(substitute_power(gaussian_binomial(m - 1, s - 1), 4), s * (2 * s - 1)) +
                      shift(substitute_power(gaussian_binomial(m - 1, s), 4), s * (2 * s + 3)),
                  where + " Pascal collapse");
        ++checked;
      }
      auto range = [&](const BiLaurentPoly& f, int d, bool vanishes_at_top, const std::string& where) {
        expect(!f.is_zero() && has_nonnegative_coefficients(f), where + " must be nonzero and nonnegative");
        expect(min_q_degree(f) >= 0 && max_q_degree(f) <= d, where + " degree outside [0,d]");
        if (vanishes_at_top) expect(coeff(f, d) == 0, where + " nonzero at q^d");
        ++checked;
      };
      for (int k = 0; k <= m - 1; ++k) range(h0_pf_pole(m, k), d_even, k >= 1, tag("h0_pf_pole", {{"m", m}, {"k", k}}));
      for (int s = 0; s <= m; ++s) range(h0_D_even(m, s), d_even, s < m, tag("h0_D_even", {{"m", m}, {"s", s}}));
      for (int p = 0; p <= m; ++p) range(h0_D_odd(m, p), d_odd, p < m, tag("h0_D_odd", {{"m", m}, {"p", p}}));
    }
  });
}

SuiteResult check_ext(int m_max) {
  return run_suite("ext_mult", [&](std::int64_t& checked) {
    for (int m = 1; m <= m_max; ++m) {
      for (int a = 1; a <= m; ++a) {
        for (int b : {2 * a - 1, 2 * a, 2 * a + 3}) {
          const std::string where = tag("ext", {{"m", m}, {"a", a}, {"b", b}});
          expect_eq(ext_series_enum(m, a, b), ext_series_closed(m, a, b), where);
          ++checked;
        }
      }
    }
  });
}

SuiteResult check_zsets(int m_max, int e_max) {
  return run_suite("zsets", [&](std::int64_t& checked) {
    for (int m = 1; m <= m_max; ++m) {
      const ZPair sentinel(Partition::zero(m), m - 1);
      for (int k = 1; k <= m - 1; ++k) {
        for (int e = 0; e <= e_max; ++e) {
          const std::string where = tag("zset", {{"m", m}, {"k", k}, {"e", e}});
          const ZSet rect = zset_rectangle(m, m - k, e);
          const ZSet thick_next = zset_thickened(m, m - k + 1, e);
          for (const ZPair& z : rect) {
            expect(!thick_next.contains(z), where + " rectangle meets thickened set at p=" + std::to_string(z.p) +
                                                " x=" + z.x.to_string());
          }
          const ZSet thick = zset_thickened(m, m - k, e);
          expect(thick.contains(sentinel), where + " sentinel missing");
          const ZSet rect_next = zset_rectangle(m, m - k, e + 1);
          for (const ZPair& z : thick) {
            if (z == sentinel) continue;
            expect(rect_next.contains(z) && rect.contains(z),
                   where + " thickened pair p=" + std::to_string(z.p) + " x=" + z.x.to_string() +
                       " outside the rectangle");
          }
          ++checked;
        }
      }
    }
  });
}

SuiteResult check_pushforward(int m_max) {
  return run_suite("weights_bott", [&](std::int64_t& checked) {
    for (int m = 1; m <= m_max; ++m) {
      for (int p = 0; p <= m; ++p) {
        const PushforwardReport r = verify_pushforward(m, p, 2 * m + 6);
        expect(r.pass, tag("pushforward", {{"m", m}, {"p", p}}) + ": " + r.failure);
        checked += r.checked;
      }
    }
  });
}

SuiteResult check_characters(int m_max, int bound) {
  return run_suite("characters", [&](std::int64_t& checked) {
    for (int m = 1; m <= m_max; ++m) {
      const int n = 2 * m;
      for (int k = 0; k <= m - 1; ++k) {
        const LimitReport r = verify_limitpfaff(m, k, bound);
        expect(r.pass, tag("limit", {{"m", m}, {"k", k}}) + ": " + r.failure);
        checked += r.checked;
      }
      // <Pf^{-2k}> grows with k and its layers are the simples D_s.
      for (const DominantWeight& mu : enumerate_paired(m, bound)) {
        int simple_count = 0;
        for (int s = 0; s <= m; ++s) simple_count += contains(CharSpec(n, SimpleD{s}), mu) ? 1 : 0;
        expect(simple_count == 1, "mu=" + mu.to_string() + " lies in " + std::to_string(simple_count) + " simples");
        for (int k = 0; k <= m - 1; ++k) {
          const bool here = contains(CharSpec(n, PfPole{k}), mu);
          const bool layer = contains(CharSpec(n, SimpleD{m - k}), mu);
          const bool below = k > 0 && contains(CharSpec(n, PfPole{k - 1}), mu);
          expect(here == (layer || below), "mu=" + mu.to_string() + " breaks the filtration at k=" + std::to_string(k));
        }
        ++checked;
      }
    }
  });
}

VerifyReport verify_all(const VerifyOptions& o) {
  const std::vector<std::function<SuiteResult()>> tasks = {
      [&] { return check_two_path(o.n_max, o.closed, o.composed); },
      [&] { return check_tables(o.n_max, o.closed, o.composed); },
      [] { return check_gaussian(14); },
      [] { return check_kgroup(10); },
      [] { return check_origin(10); },
      [] { return check_ext(7); },
      [] { return check_zsets(5, 4); },
      [] { return check_pushforward(4); },
      [] { return check_characters(3, 6); },
  };

  VerifyReport report;
  report.n_max = o.n_max;
  report.suites.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) report.suites[i] = tasks[i]();
  };
  const int jobs = std::clamp(o.jobs, 1, static_cast<int>(tasks.size()));
  std::vector<std::jthread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return report;
}

VerifyReport verify_all(int n_max) {
  VerifyOptions o;
  o.n_max = n_max;
  return verify_all(o);
}

}  // namespace pfaff
