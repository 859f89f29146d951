#include "pfaff/partitions.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pfaff {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::with_length(int length) const {
  if (length < 0) throw std::invalid_argument("negative partition length");
  std::vector<int> out(parts_);
  if (static_cast<int>(out.size()) > length) {
    for (std::size_t i = length; i < out.size(); ++i) {
      if (out[i] != 0) throw std::invalid_argument("partition does not fit in requested length");
    }
  }
  out.resize(length, 0);
  return Partition(std::move(out));
}

Partition Partition::rectangle(int a, int b, int length) {
  if (a < 0 || b < 0 || a > length) throw std::invalid_argument("invalid rectangle");
  std::vector<int> parts(length, 0);
  for (int i = 0; i < a; ++i) parts[i] = b;
  return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int i) const noexcept {
  return (i >= 0 && i < length()) ? parts_[i] : 0;
}

std::vector<int> Partition::profile() const {
  std::vector<int> p(parts_);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

namespace {

void box_recurse(std::vector<int>& parts, std::size_t pos, int cap,
                 const std::function<void(const Partition&)>& visit) {
  if (pos == parts.size()) {
    visit(Partition(parts));
    return;
  }
  for (int v = cap; v >= 0; --v) {
    parts[pos] = v;
    box_recurse(parts, pos + 1, v, visit);
  }
  parts[pos] = 0;
}

}  // namespace

void for_each_in_box(int c, int d, const std::function<void(const Partition&)>& visit) {
  if (c < 0 || d < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  std::vector<int> parts(c, 0);
  box_recurse(parts, 0, d, visit);
}

std::vector<Partition> enumerate_box(int c, int d) {
  std::vector<Partition> out;
  for_each_in_box(c, d, [&](const Partition& p) { out.push_back(p); });
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) throw std::invalid_argument("dominates: length mismatch");
  for (int i = 0; i < a.length(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

Partition double_columns(const Partition& z) {
  std::vector<int> out;
  out.reserve(2 * z.length());
  for (int v : z.parts()) {
    out.push_back(v);
    out.push_back(v);
  }
  return Partition(std::move(out));
}

Partition conjugate(const Partition& z) {
  const int cols = z[0];
  std::vector<int> out(cols, 0);
  for (int j = 0; j < cols; ++j) {
    int count = 0;
    for (int v : z.parts()) {
      if (v > j) ++count;
    }
    out[j] = count;
  }
  return Partition(std::move(out));
}

namespace {

void require_binomial_args(int a, int b) {
  if (b < 0 || a < b) {
    throw std::invalid_argument("gaussian binomial requires a >= b >= 0, got a=" +
                                std::to_string(a) + " b=" + std::to_string(b));
  }
}

}  // namespace

BiLaurentPoly gaussian_binomial(int a, int b) {
  require_binomial_args(a, b);
  if (b == 0 || b == a) return BiLaurentPoly(1);

  thread_local std::map<std::pair<int, int>, BiLaurentPoly> memo;
  if (auto it = memo.find({a, b}); it != memo.end()) return it->second;

  // [a,b] = q^{a-b} [a-1,b-1] + [a-1,b]
  BiLaurentPoly result = shift(gaussian_binomial(a - 1, b - 1), a - b) + gaussian_binomial(a - 1, b);
  memo.emplace(std::pair{a, b}, result);
  return result;
}

BiLaurentPoly gaussian_binomial_oracle(int a, int b) {
  require_binomial_args(a, b);
  BiLaurentPoly sum;
  for_each_in_box(a - b, b, [&](const Partition& x) { sum.add_term(1, x.size()); });
  return sum;
}

std::int64_t binomial(int a, int b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (int i = 1; i <= b; ++i) {
    // r * (a - b + i) is divisible by i after the multiplication.
    r = checked::mul(r, a - b + i) / i;
  }
  return r;
}

}  // namespace pfaff
