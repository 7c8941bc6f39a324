#include "symdisc/strata.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "symdisc/closed_form.hpp"
#include "symdisc/errors.hpp"

namespace symdisc {

MultiplicityVector::MultiplicityVector(std::vector<int> counts)
    : n_(0), w_(std::move(counts)) {
  if (w_.empty()) throw OutOfRangeError("MultiplicityVector: empty");
  long total = 0;
  for (size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] < 0) throw OutOfRangeError("MultiplicityVector: negative count");
    total += static_cast<long>(i + 1) * w_[i];
  }
  if (total != static_cast<long>(w_.size())) {
    throw OutOfRangeError(
        "MultiplicityVector: weighted sum " + std::to_string(total) +
        " does not match length " + std::to_string(w_.size()));
  }
  n_ = static_cast<int>(w_.size());
}

MultiplicityVector MultiplicityVector::all_simple(int n) {
  std::vector<int> w(static_cast<size_t>(n), 0);
  w[0] = n;
  return MultiplicityVector(std::move(w));
}

MultiplicityVector MultiplicityVector::one_pair(int n) {
  if (n < 2) throw OutOfRangeError("one_pair: n must be >= 2");
  std::vector<int> w(static_cast<size_t>(n), 0);
  w[0] = n - 2;
  w[1] = 1;
  return MultiplicityVector(std::move(w));
}

int MultiplicityVector::group_count() const {
  return std::accumulate(w_.begin(), w_.end(), 0);
}

std::string MultiplicityVector::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + ")";
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw OutOfRangeError("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e < 0 || e >= n || seen[static_cast<size_t>(e)]) {
        throw OutOfRangeError("SetPartition: invalid or repeated element");
      }
      seen[static_cast<size_t>(e)] = true;
      ++covered;
    }
  }
  if (covered != n) throw OutOfRangeError("SetPartition: does not cover set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

int SetPartition::block_of(int e) const {
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), e)) {
      return static_cast<int>(i);
    }
  }
  throw OutOfRangeError("block_of: element out of range");
}

MultiplicityVector SetPartition::type() const {
  std::vector<int> w(static_cast<size_t>(n_), 0);
  for (const auto& b : blocks_) ++w[b.size() - 1];
  return MultiplicityVector(std::move(w));
}

std::string SetPartition::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    s += "{";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(b[i] + 1);
    }
    s += "}";
  }
  return s;
}

std::vector<MultiplicityVector> enumerate_multiplicity_vectors(
    int n, bool proper_only) {
  if (n < 1) throw OutOfRangeError("enumerate_multiplicity_vectors: n < 1");
  // integer partitions of n as descending part lists
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  std::function<void(int, int)> gen = [&](int remaining, int max_part) {
    if (remaining == 0) {
      parts.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      gen(remaining - p, p);
      cur.pop_back();
    }
  };
  gen(n, n);
  std::sort(parts.begin(), parts.end());
  std::vector<MultiplicityVector> out;
  for (const auto& p : parts) {
    std::vector<int> w(static_cast<size_t>(n), 0);
    for (int part : p) ++w[static_cast<size_t>(part) - 1];
    MultiplicityVector mv(std::move(w));
    if (proper_only && !mv.is_proper()) continue;
    out.push_back(std::move(mv));
  }
  return out;
}

int stratum_codim(const MultiplicityVector& w) {
  int c = 0;
  for (int i = 1; i <= w.n(); ++i) {
    c += (i - 1) * (i + 2) / 2 * w.entry(i);
  }
  return c;
}

mpz_class count_planes(const MultiplicityVector& w) {
  mpz_class den = 1;
  for (int i = 1; i <= w.n(); ++i) {
    const int wi = w.entry(i);
    if (wi == 0) continue;
    mpz_class fi = factorial(i);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), fi.get_mpz_t(), static_cast<unsigned long>(wi));
    den *= p * factorial(wi);
  }
  return factorial(w.n()) / den;
}

mpz_class eddeg(const MultiplicityVector& w) { return count_planes(w); }

mpz_class bell_number(int n) {
  if (n < 0) throw OutOfRangeError("bell_number: n < 0");
  // Bell triangle
  std::vector<mpz_class> row = {1};
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(static_cast<size_t>(i) + 1);
    next[0] = row.back();
    for (size_t j = 1; j < next.size(); ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row.front();
}

std::vector<SetPartition> enumerate_partitions_of_type(
    const MultiplicityVector& w) {
  const int n = w.n();
  std::vector<SetPartition> out;
  // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<int> a(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(static_cast<size_t>(maxv) + 1);
      for (int e = 0; e < n; ++e) {
        blocks[static_cast<size_t>(a[static_cast<size_t>(e)])].push_back(e);
      }
      SetPartition sp(n, std::move(blocks));
      if (sp.type() == w) out.push_back(std::move(sp));
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[static_cast<size_t>(i)] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  if (n > 0) {
    a[0] = 0;
    rec(1, 0);
  }
  return out;
}

SetPartition detect_multiplicities(std::span<const double> sorted_desc,
                                   double tol) {
  const int n = static_cast<int>(sorted_desc.size());
  if (n < 1) throw OutOfRangeError("detect_multiplicities: empty input");
  if (tol < 0) {
    double amax = 0.0;
    for (double x : sorted_desc) amax = std::max(amax, std::fabs(x));
    tol = 1e-8 * (1.0 + amax);
  }
  std::vector<std::vector<int>> blocks;
  blocks.push_back({0});
  for (int i = 1; i < n; ++i) {
    if (sorted_desc[static_cast<size_t>(i) - 1] -
            sorted_desc[static_cast<size_t>(i)] <=
        tol) {
      blocks.back().push_back(i);
    } else {
      blocks.push_back({i});
    }
  }
  return SetPartition(n, std::move(blocks));
}

}  // namespace symdisc
