#include "secres/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace secres {

using Part = Partition::Part;

namespace {

std::int64_t product_except(const std::vector<int>& v, std::size_t skip) {
  std::int64_t out = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != skip) out *= v[i];
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

SubspaceConfig::SubspaceConfig(std::vector<int> a, std::vector<int> r) : a_(std::move(a)), r_(std::move(r)) {
  if (a_.size() != r_.size()) throw Error("config needs one rank per factor");
  if (a_.empty()) throw Error("config needs at least one factor");
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (a_[j] < 1 || r_[j] < 0 || r_[j] > a_[j]) {
      throw Error("invalid factor " + std::to_string(j) + ": a=" + std::to_string(a_[j]) + " r=" + std::to_string(r_[j]));
    }
  }
}

SubspaceConfig SubspaceConfig::full(std::vector<int> a) {
  auto r = a;
  return {std::move(a), std::move(r)};
}

std::vector<std::size_t> SubspaceConfig::non_full() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (r_[j] < a_[j]) out.push_back(j);
  }
  return out;
}

std::int64_t SubspaceConfig::ambient_dim() const {
  return std::accumulate(a_.begin(), a_.end(), std::int64_t{1}, std::multiplies<>());
}

std::int64_t SubspaceConfig::fiber_dim() const {
  return std::accumulate(r_.begin(), r_.end(), std::int64_t{1}, std::multiplies<>());
}

std::int64_t SubspaceConfig::a_hat(std::size_t j) const { return product_except(a_, j); }

std::int64_t SubspaceConfig::r_hat(std::size_t j) const { return product_except(r_, j); }

std::int64_t SubspaceConfig::dim_base() const {
  std::int64_t out = 0;
  for (std::size_t j = 0; j < a_.size(); ++j) out += static_cast<std::int64_t>(r_[j]) * (a_[j] - r_[j]);
  return out;
}

std::string SubspaceConfig::to_string() const { return "a=(" + join(a_) + ") r=(" + join(r_) + ")"; }

FiberModule::FiberModule(std::vector<Partition> p, std::vector<Part> tw, std::int64_t deg)
    : parts(std::move(p)), twists(std::move(tw)), degree(deg) {
  if (parts.size() != twists.size()) throw Error("fiber module needs one twist per factor");
}

FiberModule::FiberModule(const MultiPartition& m)
    : parts(m.factors()), twists(m.size(), 0), degree(m.common_boxes()) {}

FiberModule FiberModule::unit(std::size_t n) { return {std::vector<Partition>(n), std::vector<Part>(n, 0), 0}; }

void FiberModule::validate(const SubspaceConfig& config) const {
  if (parts.size() != config.size()) throw Error("fiber module has the wrong number of factors");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].length() > static_cast<std::size_t>(config.r()[j])) {
      throw Error("factor " + std::to_string(j) + " of " + to_string() + " does not fit rank " +
                  std::to_string(config.r()[j]));
    }
  }
}

FiberModule FiberModule::normalized(const SubspaceConfig& config) const {
  validate(config);
  FiberModule out = *this;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (config.is_full(j) && twists[j] != 0) {
      out.parts[j] = parts[j].twisted(twists[j], static_cast<std::size_t>(config.a()[j]));
      out.twists[j] = 0;
    }
  }
  return out;
}

std::string FiberModule::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j) out += ';';
    out += parts[j].to_string();
    if (twists[j] != 0) out += "+det^" + std::to_string(twists[j]);
  }
  return out;
}

std::int64_t sub_dimension(const SubspaceConfig& config) { return config.fiber_dim() + config.dim_base(); }

std::int64_t orbit_dimension(const SubspaceConfig& config, std::int64_t dim_y) {
  if (dim_y < 0 || dim_y > config.fiber_dim()) throw Error("fiber variety dimension out of range");
  return config.dim_base() + dim_y;
}

FiberModule xi_top_exterior(const SubspaceConfig& config) {
  FiberModule out = FiberModule::unit(config.size());
  for (std::size_t j = 0; j < config.size(); ++j) {
    out.parts[j] = Partition::rectangle(config.r_hat(j), static_cast<std::size_t>(config.r()[j]));
    out.twists[j] = -config.a_hat(j);
  }
  out.degree = -config.rank_xi();
  return out;
}

FiberModule module_dual(const FiberModule& m, const SubspaceConfig& config) {
  m.validate(config);
  FiberModule out = m;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const auto r = static_cast<std::size_t>(config.r()[j]);
    auto v = dual_partition(m.parts[j], r).padded(r);
    for (auto& x : v) x += config.r_hat(j) - config.a()[j];
    out.parts[j] = Partition(std::move(v));
    out.twists[j] = config.r()[j] - config.a_hat(j) - m.twists[j];
  }
  return out;
}

MultiPartition mcm_last_module(const FiberModule& m, const SubspaceConfig& config) {
  m.validate(config);
  std::vector<Partition> out;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const auto a = config.a()[j];
    const auto r = config.r()[j];
    const auto ah = config.a_hat(j);
    const auto rh = config.r_hat(j);
    const auto tw = m.twists[j];
    const auto& pi = m.parts[j];
    if (r == a) {
      out.push_back(pi.twisted(ah - rh + tw, static_cast<std::size_t>(a)));
      continue;
    }
    if (!pi.is_polynomial() || pi.first() > rh - r) throw Error("smallness hypothesis fails; use weyman_complex");
    std::vector<Part> v(static_cast<std::size_t>(a - r), ah - r + tw);
    for (auto p : pi.padded(static_cast<std::size_t>(r))) v.push_back(ah + a - (rh + r) + p + tw);
    if (!std::is_sorted(v.rbegin(), v.rend())) {
      throw Error("closed form undefined: first part " + std::to_string(pi.first()) + " exceeds r_hat - a = " +
                  std::to_string(rh - a) + " on factor " + std::to_string(j) + ", the top term vanishes");
    }
    out.emplace_back(std::move(v));
  }
  return MultiPartition(std::move(out));
}

std::vector<std::int64_t> smallness_bound(const SubspaceConfig& config, std::span<const MultiPartition> terms) {
  std::vector<std::int64_t> out(config.size());
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (!config.is_full(j)) {
      out[j] = config.a_hat(j) - config.r()[j];
      continue;
    }
    Part top = 0;
    for (const auto& t : terms) top = std::max(top, t[j].first());
    out[j] = config.a_hat(j) - config.r_hat(j) + top;
  }
  return out;
}

bool is_small(std::span<const MultiPartition> terms, std::span<const std::int64_t> bounds) {
  for (const auto& t : terms) {
    if (t.size() != bounds.size()) throw Error("bounds do not match the number of factors");
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[j].first() > bounds[j]) return false;
    }
  }
  return true;
}

Decomposition sub_ideal_generators(const SubspaceConfig& config) {
  Decomposition out;
  const auto n = config.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (config.is_full(j)) continue;
    const int k = config.r()[j] + 1;
    std::vector<int> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) rest.push_back(config.a()[i]);
    }
    const Partition column(std::vector<Part>(static_cast<std::size_t>(k), 1));
    const auto rest_terms = rest.empty() ? Decomposition{{MultiPartition{}, 1}} : ext_power_tensor(k, rest);
    for (const auto& [mp, mult] : rest_terms) {
      std::vector<Partition> f;
      for (std::size_t i = 0, q = 0; i < n; ++i) f.push_back(i == j ? column : mp[q++]);
      auto& slot = out[MultiPartition(std::move(f))];
      slot = std::max(slot, mult);
    }
  }
  return out;
}

MultiPartition inherit(const MultiPartition& term, const SubspaceConfig& from, const SubspaceConfig& to) {
  if (term.size() != from.size() || from.size() != to.size()) throw Error("inherit: factor count mismatch");
  for (std::size_t j = 0; j < term.size(); ++j) {
    if (to.a()[j] < from.a()[j]) throw Error("inherit: target factor " + std::to_string(j) + " is smaller");
    if (term[j].length() > static_cast<std::size_t>(to.a()[j])) {
      throw Error("inherit: " + term[j].to_string() + " has more rows than the target factor");
    }
  }
  return term;
}

std::int64_t expected_secant_dimension(int k, std::span<const int> a) {
  std::int64_t s = 1;
  std::int64_t prod = 1;
  for (int x : a) {
    s += x - 1;
    prod *= x;
  }
  return std::min<std::int64_t>(k * s, prod);
}

}  // namespace secres
