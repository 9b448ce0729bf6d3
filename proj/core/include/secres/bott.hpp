#pragma once

// Borel-Weil-Bott on Grassmannians Gr(r, A*) and their products.
//
// Weight convention. On Gr(r, A*) with tautological 0 -> R -> A* -> Q -> 0,
// the irreducible bundle S_pi R* (x) S_lambda Q* is encoded by the length-a
// sequence alpha = (pi_1..pi_r | lambda_1..lambda_{a-r}). With this
// orientation H^0(S_pi R*) = S_pi A for a partition pi (Borel-Weil), and the
// reduced weight [alpha_1 - alpha_2, ..., alpha_{a-1} - alpha_a] is the
// w(pi|lambda) used by the reflection walk.

#include <optional>
#include <span>
#include <vector>

#include "secres/partition.hpp"

namespace secres {

struct GrassmannianFactor {
  int r = 0;  ///< rank of R
  int a = 0;  ///< ambient dimension

  GrassmannianFactor() = default;
  GrassmannianFactor(int rank, int ambient);
  [[nodiscard]] int dimension() const { return r * (a - r); }
  [[nodiscard]] bool trivial() const { return r == 0 || r == a; }
};

/// Concatenated R*-block and Q*-block weight of an irreducible bundle.
class BundleWeight {
 public:
  BundleWeight(const Partition& r_block, const Partition& q_block, const GrassmannianFactor& factor);
  /// From an explicit length-a sequence; each block must be weakly decreasing.
  BundleWeight(std::vector<Partition::Part> alpha, const GrassmannianFactor& factor);

  [[nodiscard]] std::span<const Partition::Part> alpha() const { return alpha_; }
  [[nodiscard]] const GrassmannianFactor& factor() const { return factor_; }
  [[nodiscard]] Partition r_block() const;
  [[nodiscard]] Partition q_block() const;
  [[nodiscard]] std::vector<Partition::Part> reduced() const;

 private:
  std::vector<Partition::Part> alpha_;
  GrassmannianFactor factor_;
};

/// Either zero (singular weight) or a single nonzero degree.
struct CohomologyResult {
  bool zero = true;
  int degree = 0;
  Partition module;  ///< length <= a, over A
  [[nodiscard]] static CohomologyResult vanishing() { return {}; }
  friend bool operator==(const CohomologyResult&, const CohomologyResult&) = default;
};

/// Linear action of the i-th simple reflection (1-based, 1 <= i <= a-1) on a
/// reduced weight of length a-1.
std::vector<Partition::Part> simple_reflection(int i, std::span<const Partition::Part> w);

/// Affine action s.w = s(w + rho) - rho with rho = [1,...,1].
std::vector<Partition::Part> affine_reflection(int i, std::span<const Partition::Part> w);

/// Sort-based Bott: beta = alpha + (a-1,...,0); repeated entry -> zero;
/// otherwise degree = #inversions, module = sort(beta) - delta.
CohomologyResult bott_cohomology(const BundleWeight& weight);

/// Independent route: walks affine simple reflections on the reduced weight
/// until it is dominant or hits a zero in w + rho.
CohomologyResult bott_cohomology_by_reflections(const BundleWeight& weight);

/// Kunneth over a product of Grassmannians. Factors with r = 0 or r = a
/// contribute in degree 0.
struct ProductCohomology {
  bool zero = true;
  int degree = 0;
  MultiPartition module;
};
ProductCohomology product_cohomology(std::span<const BundleWeight> weights);

/// pi_r >= r - a guarantees S_pi R* has no higher cohomology.
bool is_acyclic_by_criterion(const Partition& pi, const GrassmannianFactor& factor);

/// Canonical bundle of Gr(r, A*) in the weight convention above:
/// ((r-a)^r | r^(a-r)).
BundleWeight canonical_weight(const GrassmannianFactor& factor);

/// Serre dual weight: contragredient of each block, tensored with K.
BundleWeight serre_dual_weight(const BundleWeight& weight);

}  // namespace secres
