#include "pfaff/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pfaff {

DominantWeight::DominantWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_dominant(entries_)) throw std::invalid_argument("weight entries must be weakly decreasing");
}

bool DominantWeight::is_dominant(std::span<const int> entries) noexcept {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i] > entries[i - 1]) return false;
  }
  return true;
}

int DominantWeight::size() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string DominantWeight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i];
  }
  os << ")";
  return os.str();
}

bool dominates(const DominantWeight& a, const DominantWeight& b) {
  if (a.length() != b.length()) throw std::invalid_argument("dominates: length mismatch");
  for (int i = 0; i < a.length(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

DominantWeight dual(const DominantWeight& lambda) {
  std::vector<int> out(lambda.entries().rbegin(), lambda.entries().rend());
  for (int& v : out) v = -v;
  return DominantWeight(std::move(out));
}

bool is_paired(std::span<const int> entries) noexcept {
  for (std::size_t i = 0; i + 1 < entries.size(); i += 2) {
    if (entries[i] != entries[i + 1]) return false;
  }
  return true;
}

BottResult bott(std::span<const int> gamma) {
  const int n = static_cast<int>(gamma.size());
  std::vector<int> shifted(gamma.begin(), gamma.end());
  for (int i = 0; i < n; ++i) shifted[i] = checked::add_exp(shifted[i], n - 1 - i);

  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (shifted[i] == shifted[j]) return std::nullopt;
      if (shifted[i] < shifted[j]) ++inversions;
    }
  }

  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  for (int i = 0; i < n; ++i) shifted[i] -= n - 1 - i;
  return BottCohomology{inversions, DominantWeight(std::move(shifted))};
}

namespace {

// 1-based entry access to match the indexing of the defining conditions.
int at1(const DominantWeight& w, int i) { return w[i - 1]; }

void require_s(int s, int n) {
  if (n < 1) throw std::invalid_argument("weight length must be positive");
  if (s < 0 || s > n / 2) {
    throw std::invalid_argument("s must satisfy 0 <= s <= n/2, got s=" + std::to_string(s));
  }
}

struct Block {
  int width;
  int lo;
  int hi;
};

// Nonincreasing sequences of block values, each block repeated `width` times.
void enumerate_blocks(const std::vector<Block>& blocks, std::size_t idx, int cap,
                      std::vector<int>& out, const std::function<void(const std::vector<int>&)>& visit) {
  if (idx == blocks.size()) {
    visit(out);
    return;
  }
  const Block& b = blocks[idx];
  for (int v = std::min(cap, b.hi); v >= b.lo; --v) {
    for (int r = 0; r < b.width; ++r) out.push_back(v);
    enumerate_blocks(blocks, idx + 1, v, out, visit);
    out.resize(out.size() - b.width);
  }
}

}  // namespace

bool in_B(const DominantWeight& lambda, int s) {
  const int n = lambda.length();
  require_s(s, n);
  const int m = n / 2;
  if (n % 2 == 0) {
    if (!is_paired(lambda.entries())) return false;
    if (s >= 1 && at1(lambda, 2 * s) < 2 * s - 1) return false;
    if (2 * s + 1 <= n && at1(lambda, 2 * s + 1) > 2 * s) return false;
    return true;
  }
  if (at1(lambda, 2 * s + 1) != 2 * s) return false;
  for (int i = 1; i <= s; ++i) {
    if (at1(lambda, 2 * i - 1) != at1(lambda, 2 * i)) return false;
  }
  for (int i = s + 1; i <= m; ++i) {
    if (at1(lambda, 2 * i) != at1(lambda, 2 * i + 1)) return false;
  }
  return true;
}

std::vector<DominantWeight> enumerate_B(int s, int n, int bound) {
  require_s(s, n);
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  const int m = n / 2;

  std::vector<Block> blocks;
  if (n % 2 == 0) {
    for (int i = 1; i <= m; ++i) {
      Block b{2, -bound, bound};
      if (i == s) b.lo = std::max(b.lo, 2 * s - 1);
      if (i == s + 1) b.hi = std::min(b.hi, 2 * s);
      blocks.push_back(b);
    }
  } else {
    for (int i = 1; i <= s; ++i) blocks.push_back({2, -bound, bound});
    blocks.push_back({1, 2 * s, 2 * s});
    for (int i = s + 1; i <= m; ++i) blocks.push_back({2, -bound, bound});
    if (2 * s > bound) return {};
  }

  std::vector<DominantWeight> out;
  std::vector<int> scratch;
  enumerate_blocks(blocks, 0, bound, scratch, [&](const std::vector<int>& entries) {
    DominantWeight w(entries);
    if (!in_B(w, s)) throw std::logic_error("enumerate_B produced a weight outside B: " + w.to_string());
    out.push_back(std::move(w));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DominantWeight> enumerate_paired(int m, int bound) {
  if (m < 0 || bound < 0) throw std::invalid_argument("enumerate_paired: negative argument");
  std::vector<Block> blocks(m, Block{2, -bound, bound});
  std::vector<DominantWeight> out;
  std::vector<int> scratch;
  enumerate_blocks(blocks, 0, bound, scratch,
                   [&](const std::vector<int>& entries) { out.emplace_back(entries); });
  std::sort(out.begin(), out.end());
  return out;
}

PushforwardReport verify_pushforward(int m, int p, int bound) {
  if (m < 1 || p < 0 || p > m) throw std::invalid_argument("verify_pushforward requires 0 <= p <= m, m >= 1");
  if (bound < 2 * m) throw std::invalid_argument("verify_pushforward requires bound >= 2m");

  PushforwardReport report{m, p, bound, 0, 0, 0, true, {}};
  const int s = m - p;
  const int expected_degree = 2 * m - 2 * p;
  auto fail = [&](const std::string& why) {
    report.pass = false;
    report.failure = why;
    return report;
  };

  std::set<DominantWeight> images;
  for (const DominantWeight& lambda : enumerate_B(s, 2 * m, bound)) {
    ++report.checked;
    const DominantWeight lambda_star = dual(lambda);
    std::vector<int> gamma(lambda_star.entries().begin(), lambda_star.entries().end());
    gamma.push_back(0);
    const BottResult r = bott(gamma);
    if (!r) {
      ++report.zero;
      continue;
    }
    ++report.nonzero;
    if (r->degree != expected_degree) {
      return fail("lambda=" + lambda.to_string() + " lands in degree " + std::to_string(r->degree) +
                  ", expected " + std::to_string(expected_degree));
    }
    DominantWeight image = dual(r->weight);
    if (!in_B(image, s)) {
      return fail("lambda=" + lambda.to_string() + " maps to " + image.to_string() + " outside B(" +
                  std::to_string(s) + "," + std::to_string(2 * m + 1) + ")");
    }
    if (!images.insert(image).second) {
      return fail("lambda=" + lambda.to_string() + " collides at image " + image.to_string());
    }
  }

  for (const DominantWeight& target : enumerate_B(s, 2 * m + 1, bound - 1)) {
    if (!images.contains(target)) {
      return fail("target " + target.to_string() + " in B(" + std::to_string(s) + "," +
                  std::to_string(2 * m + 1) + ") has no preimage");
    }
  }
  return report;
}

}  // namespace pfaff
