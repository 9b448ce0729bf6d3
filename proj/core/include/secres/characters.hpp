#pragma once

// Symmetric-group characters, Littlewood-Richardson and Kronecker
// coefficients, and plethysm-free decompositions of S_lambda(V_1 x ... x V_k).

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "secres/partition.hpp"

namespace secres {

/// Multiplicities of irreducible GL(V_1) x ... x GL(V_k) modules.
/// Absent keys have multiplicity zero; stored multiplicities are >= 1.
using Decomposition = std::map<MultiPartition, BigInt>;

/// Multiplicities of irreducible GL(V) modules.
using SchurSum = std::map<Partition, BigInt>;

/// chi^lambda(mu) by the Murnaghan-Nakayama rule.
/// Throws when |lambda| != |mu| or either argument is not a partition.
std::int64_t mn_character(const Partition& lambda, const Partition& cycle_type);

/// Full character table of S_t. Rows are irreducibles, columns conjugacy
/// classes; both indexed by partitions_of(t).
class CharacterTable {
 public:
  explicit CharacterTable(int t);

  [[nodiscard]] int size() const { return t_; }
  [[nodiscard]] const std::vector<Partition>& labels() const { return labels_; }
  [[nodiscard]] std::size_t index(const Partition& p) const;
  [[nodiscard]] std::int64_t value(std::size_t irrep, std::size_t cls) const { return values_[irrep][cls]; }
  [[nodiscard]] const BigInt& class_size(std::size_t cls) const { return class_sizes_[cls]; }
  [[nodiscard]] const BigInt& order() const { return order_; }

  /// Kronecker coefficient from the stored table.
  [[nodiscard]] BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) const;

 private:
  int t_;
  std::vector<Partition> labels_;
  std::map<Partition, std::size_t> index_;
  std::vector<BigInt> class_sizes_;
  std::vector<std::vector<std::int64_t>> values_;
  BigInt order_;
};

/// Memoized table for S_t. Concurrent first requests for the same t observe a
/// single computation; the returned reference stays valid for the program.
const CharacterTable& character_table(int t);

/// Size of the conjugacy class of cycle type mu in S_|mu|.
BigInt class_size(const Partition& cycle_type);

/// S_lambda V (x) S_mu V = sum_nu c^nu_{lambda mu} S_nu V, keeping only nu
/// with at most max_rows rows. Negative parts are allowed when max_rows is
/// finite; they are handled by a determinant shift.
SchurSum lr_product(const Partition& lambda, const Partition& mu, std::size_t max_rows);

/// Littlewood-Richardson coefficient c^nu_{lambda mu}.
BigInt lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Kronecker coefficient g(lambda, mu, nu); zero on size mismatch.
BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

/// S_lambda(V_1 x ... x V_k) with dim V_j = dims[j]. Terms needing more rows
/// than dims[j] in factor j are dropped.
Decomposition schur_of_tensor(const Partition& lambda, std::span<const int> dims);

/// Exterior power Lambda^t(V_1 x ... x V_k); empty when t is out of range.
Decomposition ext_power_tensor(int t, std::span<const int> dims);

/// sum over terms of mult * prod_j schur_dim.
BigInt decomposition_dimension(const Decomposition& d, std::span<const int> dims);

}  // namespace secres
