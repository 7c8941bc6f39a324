#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

namespace symdisc {

/// Multiplicity pattern of an n x n symmetric spectrum: w[i] (1-indexed via
/// entry(i)) counts eigenvalue groups of size i, so sum_i i * w[i] = n.
/// The pattern is "proper" when w[1] < n, i.e. at least one repetition.
class MultiplicityVector {
 public:
  /// counts[i-1] = number of groups of size i; must satisfy the weighted sum
  /// constraint, otherwise OutOfRangeError.
  explicit MultiplicityVector(std::vector<int> counts);

  /// Pattern with w[1] = n (all eigenvalues simple).
  static MultiplicityVector all_simple(int n);

  /// Pattern for the generic repeated-eigenvalue case: one double group,
  /// n - 2 simple ones.
  static MultiplicityVector one_pair(int n);

  int n() const { return n_; }
  /// Number of groups of size i, 1 <= i <= n.
  int entry(int i) const { return w_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& counts() const { return w_; }
  /// Total number of groups (distinct eigenvalues).
  int group_count() const;
  bool is_proper() const { return entry(1) < n_; }

  friend bool operator==(const MultiplicityVector& a,
                         const MultiplicityVector& b) {
    return a.w_ == b.w_;
  }

  std::string to_string() const;  // e.g. "(2,1,0,0)"

 private:
  int n_;
  std::vector<int> w_;
};

/// Partition of the index set {0, ..., n-1} into disjoint nonempty blocks.
/// Canonical form: each block sorted ascending, blocks ordered by their
/// smallest element.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Index of the block containing element e.
  int block_of(int e) const;

  MultiplicityVector type() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

  std::string to_string() const;  // e.g. "{1,2}{3}" (1-based display)

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// All multiplicity patterns for dimension n, ordered by their descending
/// part lists (so for n = 4: (2,1,0,0), (0,2,0,0), (1,0,1,0), (0,0,0,1)
/// after the all-simple pattern is dropped).  With proper_only = false the
/// all-simple pattern is included first.
std::vector<MultiplicityVector> enumerate_multiplicity_vectors(
    int n, bool proper_only = true);

/// Codimension of the stratum with pattern w inside the space of symmetric
/// matrices: sum_i (i-1)(i+2)/2 * w[i].
int stratum_codim(const MultiplicityVector& w);

/// Number of set partitions of {1..n} with pattern w:
/// n! / prod_i ( (i!)^w[i] * w[i]! ).
mpz_class count_planes(const MultiplicityVector& w);

/// Euclidean distance degree of the stratum closure: the number of critical
/// points of a generic distance function, which equals count_planes(w).
mpz_class eddeg(const MultiplicityVector& w);

/// Bell number B(n): total number of set partitions of an n-element set.
mpz_class bell_number(int n);

/// All set partitions of {0..n-1} whose block sizes realize w, in canonical
/// form, ordered lexicographically by restricted growth string.
std::vector<SetPartition> enumerate_partitions_of_type(
    const MultiplicityVector& w);

/// Groups indices of a descending-sorted eigenvalue list into blocks of
/// near-equal values: consecutive values join the same block when their gap
/// is <= tol.  Default tol is 1e-8 * (1 + max|value|).
SetPartition detect_multiplicities(std::span<const double> sorted_desc,
                                   double tol = -1.0);

}  // namespace symdisc
