#include "secres/bott.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace secres {

using Part = Partition::Part;

GrassmannianFactor::GrassmannianFactor(int rank, int ambient) : r(rank), a(ambient) {
  if (rank < 0 || ambient < 0 || rank > ambient) {
    throw Error("invalid Grassmannian Gr(" + std::to_string(rank) + ", " + std::to_string(ambient) + ")");
  }
}

BundleWeight::BundleWeight(const Partition& r_block, const Partition& q_block, const GrassmannianFactor& factor)
    : factor_(factor) {
  alpha_ = r_block.padded(static_cast<std::size_t>(factor.r));
  auto q = q_block.padded(static_cast<std::size_t>(factor.a - factor.r));
  alpha_.insert(alpha_.end(), q.begin(), q.end());
}

BundleWeight::BundleWeight(std::vector<Part> alpha, const GrassmannianFactor& factor)
    : alpha_(std::move(alpha)), factor_(factor) {
  if (alpha_.size() != static_cast<std::size_t>(factor.a)) throw Error("weight length must equal a");
  for (std::size_t i = 1; i < alpha_.size(); ++i) {
    if (i == static_cast<std::size_t>(factor.r)) continue;
    if (alpha_[i - 1] < alpha_[i]) throw Error("bundle weight blocks must be weakly decreasing");
  }
}

Partition BundleWeight::r_block() const {
  return Partition(std::vector<Part>(alpha_.begin(), alpha_.begin() + factor_.r));
}

Partition BundleWeight::q_block() const {
  return Partition(std::vector<Part>(alpha_.begin() + factor_.r, alpha_.end()));
}

std::vector<Part> BundleWeight::reduced() const {
  std::vector<Part> w;
  for (std::size_t i = 0; i + 1 < alpha_.size(); ++i) w.push_back(alpha_[i] - alpha_[i + 1]);
  return w;
}

std::vector<Part> simple_reflection(int i, std::span<const Part> w) {
  const int n = static_cast<int>(w.size());
  if (i < 1 || i > n) throw Error("simple reflection index " + std::to_string(i) + " out of range");
  std::vector<Part> out(w.begin(), w.end());
  const auto wi = w[i - 1];
  out[i - 1] = -wi;
  if (i - 2 >= 0) out[i - 2] += wi;
  if (i < n) out[i] += wi;
  return out;
}

std::vector<Part> affine_reflection(int i, std::span<const Part> w) {
  std::vector<Part> shifted(w.begin(), w.end());
  for (auto& x : shifted) x += 1;
  auto out = simple_reflection(i, shifted);
  for (auto& x : out) x -= 1;
  return out;
}

CohomologyResult bott_cohomology(const BundleWeight& weight) {
  const auto alpha = weight.alpha();
  const auto a = alpha.size();
  std::vector<Part> beta(a);
  for (std::size_t i = 0; i < a; ++i) beta[i] = alpha[i] + static_cast<Part>(a - 1 - i);
  int inversions = 0;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = i + 1; j < a; ++j) {
      if (beta[i] == beta[j]) return CohomologyResult::vanishing();
      if (beta[i] < beta[j]) ++inversions;
    }
  }
  std::sort(beta.begin(), beta.end(), std::greater<>());
  for (std::size_t i = 0; i < a; ++i) beta[i] -= static_cast<Part>(a - 1 - i);
  return {false, inversions, Partition(std::move(beta))};
}

CohomologyResult bott_cohomology_by_reflections(const BundleWeight& weight) {
  const auto alpha = weight.alpha();
  const auto a = static_cast<Part>(alpha.size());
  const Part total = std::accumulate(alpha.begin(), alpha.end(), Part{0});
  if (a <= 1) return {false, 0, Partition(std::vector<Part>(alpha.begin(), alpha.end()))};

  // Work with v = w + rho; the affine action is then the linear one.
  auto v = weight.reduced();
  for (auto& x : v) x += 1;
  int length = 0;
  while (true) {
    if (std::find(v.begin(), v.end(), 0) != v.end()) return CohomologyResult::vanishing();
    auto neg = std::find_if(v.begin(), v.end(), [](Part x) { return x < 0; });
    if (neg == v.end()) break;
    v = simple_reflection(static_cast<int>(neg - v.begin()) + 1, v);
    ++length;
  }
  // Recover the partition from its consecutive differences and total size.
  std::vector<Part> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] - 1;
  Part weighted = 0;
  for (std::size_t k = 0; k < w.size(); ++k) weighted += static_cast<Part>(k + 1) * w[k];
  if ((total - weighted) % a != 0) throw Error("reflection walk produced a non-integral weight");
  std::vector<Part> nu(static_cast<std::size_t>(a));
  nu.back() = (total - weighted) / a;
  for (auto i = static_cast<std::ptrdiff_t>(a) - 2; i >= 0; --i) nu[i] = nu[i + 1] + w[i];
  return {false, length, Partition(std::move(nu))};
}

ProductCohomology product_cohomology(std::span<const BundleWeight> weights) {
  ProductCohomology out;
  std::vector<Partition> modules;
  int degree = 0;
  for (const auto& w : weights) {
    auto h = bott_cohomology(w);
    if (h.zero) return {};
    degree += h.degree;
    modules.push_back(std::move(h.module));
  }
  out.zero = false;
  out.degree = degree;
  out.module = MultiPartition(std::move(modules));
  return out;
}

bool is_acyclic_by_criterion(const Partition& pi, const GrassmannianFactor& factor) {
  if (factor.r == 0) return true;
  const auto padded = pi.padded(static_cast<std::size_t>(factor.r));
  return padded.back() >= static_cast<Part>(factor.r - factor.a);
}

BundleWeight canonical_weight(const GrassmannianFactor& factor) {
  std::vector<Part> alpha(static_cast<std::size_t>(factor.a), factor.r);
  for (int i = 0; i < factor.r; ++i) alpha[static_cast<std::size_t>(i)] = factor.r - factor.a;
  return BundleWeight(std::move(alpha), factor);
}

BundleWeight serre_dual_weight(const BundleWeight& weight) {
  const auto& f = weight.factor();
  const auto r_dual = dual_partition(weight.r_block(), static_cast<std::size_t>(f.r));
  const auto q_dual = dual_partition(weight.q_block(), static_cast<std::size_t>(f.a - f.r));
  BundleWeight dual(r_dual, q_dual, f);
  auto k = canonical_weight(f);
  std::vector<Part> alpha(dual.alpha().begin(), dual.alpha().end());
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += k.alpha()[i];
  return BundleWeight(std::move(alpha), f);
}

}  // namespace secres
