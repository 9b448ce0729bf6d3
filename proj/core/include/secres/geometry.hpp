#pragma once

// Subspace-variety configurations over B = prod_j Gr(r_j, A_j*), the bundles
// eta = R_1 (x) ... (x) R_n and xi = ker(A_1 (x) ... (x) A_n -> R_1* (x) ... (x) R_n*),
// fiber modules M = (x)_j S_{pi^j} R_j* and the closed formulas built on them.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "secres/bott.hpp"
#include "secres/characters.hpp"
#include "secres/partition.hpp"

namespace secres {

class SubspaceConfig {
 public:
  SubspaceConfig() = default;
  SubspaceConfig(std::vector<int> a, std::vector<int> r);
  /// r = a: the whole space.
  static SubspaceConfig full(std::vector<int> a);

  [[nodiscard]] std::size_t size() const { return a_.size(); }
  [[nodiscard]] const std::vector<int>& a() const { return a_; }
  [[nodiscard]] const std::vector<int>& r() const { return r_; }
  [[nodiscard]] GrassmannianFactor factor(std::size_t j) const { return {r_[j], a_[j]}; }
  [[nodiscard]] bool is_full(std::size_t j) const { return r_[j] == a_[j]; }
  [[nodiscard]] std::vector<std::size_t> non_full() const;

  [[nodiscard]] std::int64_t ambient_dim() const;  ///< prod a
  [[nodiscard]] std::int64_t fiber_dim() const;    ///< prod r
  [[nodiscard]] std::int64_t a_hat(std::size_t j) const;
  [[nodiscard]] std::int64_t r_hat(std::size_t j) const;
  [[nodiscard]] std::int64_t rank_xi() const { return ambient_dim() - fiber_dim(); }
  [[nodiscard]] std::int64_t dim_base() const;
  [[nodiscard]] std::int64_t codim() const { return rank_xi() - dim_base(); }

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const SubspaceConfig&, const SubspaceConfig&) = default;

 private:
  std::vector<int> a_;
  std::vector<int> r_;
};

/// (x)_j S_{pi^j} R_j* (x) (det A_j)^{twist_j}. For a full factor R_j* = A_j.
/// `degree` is the internal degree of the generator; it defaults to the
/// common box count and is carried through unchanged by dualization.
struct FiberModule {
  std::vector<Partition> parts;
  std::vector<Partition::Part> twists;
  std::int64_t degree = 0;

  FiberModule() = default;
  FiberModule(std::vector<Partition> p, std::vector<Partition::Part> tw, std::int64_t deg);
  /// Untwisted module from a multi-partition with equal box counts.
  explicit FiberModule(const MultiPartition& m);
  static FiberModule unit(std::size_t n);

  /// Throws unless each part fits its R_j*.
  void validate(const SubspaceConfig& config) const;
  /// Folds twists of full factors into their partitions.
  [[nodiscard]] FiberModule normalized(const SubspaceConfig& config) const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const FiberModule&, const FiberModule&) = default;
};

/// r_1...r_n + sum_j r_j (a_j - r_j).
std::int64_t sub_dimension(const SubspaceConfig& config);

/// sum_j r_j (a_j - r_j) + dim Y.
std::int64_t orbit_dimension(const SubspaceConfig& config, std::int64_t dim_y);

/// Lambda^{rank xi} xi* = (x)_j S_{(r_hat_j)^{r_j}} R_j* (x) (det A_j)^{-a_hat_j}.
FiberModule xi_top_exterior(const SubspaceConfig& config);

/// M^v = M* (x) K_B (x) Lambda^top xi*, written on the R_j* blocks as
/// r_hat_j - a_j - reverse(pi^j) with twist r_j - a_hat_j - tau_j.
FiberModule module_dual(const FiberModule& m, const SubspaceConfig& config);

/// Closed form of the last term of weyman_complex(M) under the smallness
/// hypothesis 0 <= pi^j_1 <= r_hat_j - r_j on non-full factors.
MultiPartition mcm_last_module(const FiberModule& m, const SubspaceConfig& config);

/// Per-factor bound: max over terms of (a_hat_j - r_j) on non-full factors and
/// a_hat_j - r_hat_j + pi^j_1 on full ones.
std::vector<std::int64_t> smallness_bound(const SubspaceConfig& config, std::span<const MultiPartition> terms);

/// Every factor's first part is at most the bound.
bool is_small(std::span<const MultiPartition> terms, std::span<const std::int64_t> bounds);

/// Lambda^{r_j+1} A_j (x) Lambda^{r_j+1}(prod_{i != j} A_i) over all j with r_j < a_j.
/// A module reached from several flattenings keeps the largest multiplicity
/// (for two factors both flattenings give the same minors).
Decomposition sub_ideal_generators(const SubspaceConfig& config);

/// Reinterprets a term over larger ambient factors; throws if a part cannot fit.
MultiPartition inherit(const MultiPartition& term, const SubspaceConfig& from, const SubspaceConfig& to);

/// Affine dimension of sigma_k of the Segre product of P^{a_j - 1}, by the
/// expected-dimension count min(k (sum (a_j - 1) + 1), prod a_j).
std::int64_t expected_secant_dimension(int k, std::span<const int> a);

}  // namespace secres
