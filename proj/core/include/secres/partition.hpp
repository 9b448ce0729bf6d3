#pragma once

// Weakly decreasing integer sequences (possibly with negative parts) and
// multi-partitions indexing Schur modules of GL(A_1) x ... x GL(A_n).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace secres {

using BigInt = mpz_class;

/// Thrown for malformed partitions, out-of-range arguments and similar
/// contract violations anywhere in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weakly decreasing sequence of integers.
///
/// Storage is canonical: trailing zeros are dropped, so (3,1,0,0) and (3,1)
/// compare equal. Operations that depend on an ambient dimension take it as an
/// explicit argument and zero-pad internally. Negative parts are allowed
/// (contragredient weights), in which case the explicit zeros in front of a
/// negative tail are of course kept.
class Partition {
 public:
  using Part = std::int64_t;

  Partition() = default;
  Partition(std::initializer_list<Part> parts);
  explicit Partition(std::vector<Part> parts);

  /// (value, value, ..., value) with `count` parts.
  static Partition rectangle(Part value, std::size_t count);

  [[nodiscard]] std::span<const Part> parts() const { return parts_; }
  /// Number of stored parts (trailing zeros dropped).
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  /// i-th part, 0-based; zero beyond the stored length.
  [[nodiscard]] Part operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  [[nodiscard]] Part first() const { return (*this)[0]; }

  /// True when every part is >= 0, i.e. an honest Young diagram.
  [[nodiscard]] bool is_polynomial() const;

  /// Exactly n parts, zero padded. Throws if more than n parts are stored.
  [[nodiscard]] std::vector<Part> padded(std::size_t n) const;

  /// Adds c to each of the first n parts (determinant twist on C^n).
  [[nodiscard]] Partition twisted(Part c, std::size_t n) const;

  [[nodiscard]] std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

 private:
  void canonicalize();
  std::vector<Part> parts_;
};

/// Transposed diagram. Throws on negative parts.
Partition conjugate(const Partition& p);

/// Sum of parts.
Partition::Part boxes(const Partition& p);

/// mu_i <= lambda_i for every i.
bool contains(const Partition& lambda, const Partition& mu);

/// Zero-pad to n, negate, reverse: the contragredient weight on C^n.
Partition dual_partition(const Partition& p, std::size_t n);

/// dim S_p C^n (0 when the module vanishes because p has more than n rows).
/// Parts may be negative; the value is invariant under determinant twists.
BigInt schur_dim(const Partition& p, std::size_t n);

/// All partitions of t, in reverse lexicographic order ((t) first).
std::vector<Partition> partitions_of(int t);
/// Partitions of t with at most max_rows rows and first part at most max_cols.
std::vector<Partition> partitions_in_box(int t, std::size_t max_rows, Partition::Part max_cols);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

/// One partition per tensor factor.
class MultiPartition {
 public:
  MultiPartition() = default;
  MultiPartition(std::initializer_list<Partition> factors) : factors_(factors) {}
  explicit MultiPartition(std::vector<Partition> factors) : factors_(std::move(factors)) {}

  [[nodiscard]] std::size_t size() const { return factors_.size(); }
  [[nodiscard]] const Partition& operator[](std::size_t j) const { return factors_.at(j); }
  [[nodiscard]] Partition& operator[](std::size_t j) { return factors_.at(j); }
  [[nodiscard]] const std::vector<Partition>& factors() const { return factors_; }

  /// Box count shared by all factors, or throws if the counts differ.
  [[nodiscard]] Partition::Part common_boxes() const;
  [[nodiscard]] bool has_equal_boxes() const;

  /// Product of schur_dim(factor_j, dims_j).
  [[nodiscard]] BigInt dimension(std::span<const int> dims) const;

  [[nodiscard]] std::string to_string() const;
  static MultiPartition parse(std::string_view text);

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend std::strong_ordering operator<=>(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> factors_;
};

}  // namespace secres
