#pragma once

// Weyman's geometric-technique complex F(M)_i = sum_d H^d(B, Lambda^{i+d} xi (x) M),
// the iterated mapping cone lift, and the invariants read off a resolution.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "secres/geometry.hpp"

namespace secres {

struct GradedSchurTerm {
  MultiPartition module;
  BigInt multiplicity = 1;
  int homological_degree = 0;
  std::int64_t internal_degree = 0;
  friend bool operator==(const GradedSchurTerm&, const GradedSchurTerm&) = default;
};

class EquivariantResolution {
 public:
  EquivariantResolution() = default;
  explicit EquivariantResolution(SubspaceConfig config) : config_(std::move(config)) {}
  /// Free module of rank one in degree 0 over the ring of config.
  static EquivariantResolution unit(const SubspaceConfig& config);
  /// Takes slices as given; slice i must hold the terms of degree i.
  static EquivariantResolution from_slices(SubspaceConfig config, std::vector<std::vector<GradedSchurTerm>> slices);

  [[nodiscard]] const SubspaceConfig& config() const { return config_; }
  void set_config(SubspaceConfig c) { config_ = std::move(c); }
  [[nodiscard]] const std::vector<std::vector<GradedSchurTerm>>& slices() const { return slices_; }
  /// Largest homological degree with a nonempty slice, -1 when empty.
  [[nodiscard]] int length() const;
  [[nodiscard]] std::size_t term_count() const;
  [[nodiscard]] std::vector<MultiPartition> modules() const;

  /// Adds (merging with an identical module and degree already present).
  void add(const GradedSchurTerm& term);
  /// Sorts each slice by (internal degree, module) and drops empty tail slices.
  void canonicalize();
  /// Equal box counts, weakly decreasing parts, rows fit, degree = boxes.
  void validate() const;

  friend bool operator==(const EquivariantResolution&, const EquivariantResolution&) = default;

 private:
  SubspaceConfig config_;
  std::vector<std::vector<GradedSchurTerm>> slices_;
};

/// Exact mode: at most one factor with r_j < a_j. Terms land at homological
/// degree i = t - d for t = 0..rank xi; a nonzero term at i < 0 throws.
/// With min_degree > 0 only slices i >= min_degree are produced (exactly).
/// Several non-full factors: exact in the first, then one mapping-cone pass
/// per remaining factor (a resolution, not necessarily minimal).
EquivariantResolution weyman_complex(const FiberModule& m, const SubspaceConfig& config, int min_degree = 0);

/// Modules H^0(B, M^v)* computed from Bott alone, with twists applied.
std::vector<MultiPartition> dual_top_modules(const FiberModule& m, const SubspaceConfig& config);

enum class LiftStrategy { Stepwise, OneShot };

struct LiftOptions {
  LiftStrategy strategy = LiftStrategy::Stepwise;
  unsigned threads = 0;  ///< 0: hardware concurrency
  /// Keep only total degrees >= min_degree in the final pass. Those slices are
  /// exact; lower ones are omitted.
  int min_degree = 0;
};

struct LiftStep {
  SubspaceConfig config;
  std::size_t terms = 0;
  int length = 0;
  bool small = true;  ///< every fiber term met the bound r_hat_j - r_j
};

struct LiftResult {
  EquivariantResolution resolution;
  std::vector<LiftStep> steps;
};

/// Iterated mapping cone of E over the ambient dimensions E.config().a()
/// to `target`. Stepwise raises one dimension by one per pass; one-shot
/// raises each differing factor in a single pass.
LiftResult lift_resolution(const EquivariantResolution& e, const std::vector<int>& target, const LiftOptions& opts = {});

/// One mapping-cone pass over `config`, whose ranks are the fiber dimensions.
EquivariantResolution lift_once(const EquivariantResolution& e, const SubspaceConfig& config, unsigned threads = 0,
                                int min_degree = 0);

/// Heuristic: removes equal (module, internal degree) pairs in adjacent
/// homological degrees. Not a proof of minimality.
EquivariantResolution cancel_adjacent(const EquivariantResolution& r);

/// Betti numbers keyed by (row = internal - homological, column = homological).
class BettiTable {
 public:
  explicit BettiTable(const EquivariantResolution& r);

  [[nodiscard]] const std::map<std::pair<std::int64_t, int>, BigInt>& entries() const { return entries_; }
  [[nodiscard]] BigInt at(std::int64_t row, int col) const;
  [[nodiscard]] std::vector<BigInt> totals() const;
  /// Macaulay2-style layout with a total line and '.' for zero.
  [[nodiscard]] std::string render() const;

 private:
  std::map<std::pair<std::int64_t, int>, BigInt> entries_;
  int columns_ = 0;
};

/// Coefficients of sum (-1)^i mult dim q^deg, keyed by exponent; zeros removed.
using Polynomial = std::map<std::int64_t, BigInt>;
Polynomial hilbert_numerator(const EquivariantResolution& r);
Polynomial poly_multiply(const Polynomial& x, const Polynomial& y);
std::string poly_to_string(const Polynomial& p);

struct AcmReport {
  int length = 0;            ///< uncancelled, an upper bound on projective dimension
  int cancelled_length = 0;  ///< after the heuristic pass
  std::int64_t codim = 0;
  bool acm = false;          ///< length == codim, which proves it
};
AcmReport acm_check(const EquivariantResolution& r, std::int64_t codim);

struct AgReport {
  bool ag = false;
  std::int64_t top_boxes = 0;
  std::int64_t socle_degree = 0;
  BigInt top_dimension = 0;
};
/// Top slice a single term of total dimension 1; socle = boxes - codim + 1.
AgReport ag_check(const EquivariantResolution& r, std::int64_t codim);

}  // namespace secres
