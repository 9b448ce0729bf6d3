#include "secres/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

namespace secres {

namespace {

using Part = Partition::Part;

// Beta-set (first-column hook lengths) of a partition, strictly decreasing.
std::vector<Part> beta_set(const Partition& p) {
  const auto len = p.length();
  std::vector<Part> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = p[i] + static_cast<Part>(len - 1 - i);
  return beta;
}

Partition from_beta(std::vector<Part> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const auto len = beta.size();
  std::vector<Part> parts(len);
  for (std::size_t i = 0; i < len; ++i) parts[i] = beta[i] - static_cast<Part>(len - 1 - i);
  return Partition(std::move(parts));
}

class MnEvaluator {
 public:
  // chi^lambda at the class whose cycle lengths are cycles[pos..].
  std::int64_t eval(const Partition& lambda, std::span<const Part> cycles) {
    if (cycles.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, std::vector<Part>(cycles.begin(), cycles.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Part h = cycles.front();
    const auto rest = cycles.subspan(1);
    auto beta = beta_set(lambda);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const Part target = beta[i] - h;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      // Leg length = number of beads strictly between target and beta[i].
      int between = 0;
      for (auto b : beta) {
        if (b > target && b < beta[i]) ++between;
      }
      auto moved = beta;
      moved[i] = target;
      const auto value = eval(from_beta(std::move(moved)), rest);
      total += (between % 2 == 0) ? value : -value;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<Partition, std::vector<Part>>, std::int64_t> memo_;
};

void check_partition(const Partition& p, const char* what) {
  if (!p.is_polynomial()) throw Error(std::string(what) + " must have non-negative parts");
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& cycle_type) {
  check_partition(lambda, "lambda");
  check_partition(cycle_type, "cycle type");
  if (boxes(lambda) != boxes(cycle_type)) {
    throw Error("mn_character: |lambda| != |mu| for " + lambda.to_string() + ", " + cycle_type.to_string());
  }
  MnEvaluator ev;
  return ev.eval(lambda, cycle_type.parts());
}

BigInt class_size(const Partition& cycle_type) {
  // t! / z_mu with z_mu = prod_k k^{m_k} m_k!.
  const auto t = boxes(cycle_type);
  BigInt z = 1;
  std::map<Part, Part> mult;
  for (auto c : cycle_type.parts()) ++mult[c];
  for (auto [k, m] : mult) {
    BigInt kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    z *= kp * factorial(m);
  }
  return factorial(t) / z;
}

CharacterTable::CharacterTable(int t) : t_(t), labels_(partitions_of(t)), order_(factorial(t)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
  class_sizes_.reserve(labels_.size());
  for (const auto& c : labels_) class_sizes_.push_back(secres::class_size(c));
  MnEvaluator ev;
  values_.assign(labels_.size(), std::vector<std::int64_t>(labels_.size()));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t c = 0; c < labels_.size(); ++c) values_[i][c] = ev.eval(labels_[i], labels_[c].parts());
  }
}

std::size_t CharacterTable::index(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw Error("not a partition of " + std::to_string(t_) + ": " + p.to_string());
  return it->second;
}

BigInt CharacterTable::kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) const {
  const auto a = index(lambda), b = index(mu), c = index(nu);
  BigInt sum = 0;
  BigInt term;
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    const auto prod = values_[a][k] * values_[b][k];
    if (prod == 0 || values_[c][k] == 0) continue;
    term = class_sizes_[k];
    term *= static_cast<long>(prod);
    term *= static_cast<long>(values_[c][k]);
    sum += term;
  }
  return sum / order_;
}

const CharacterTable& character_table(int t) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<std::once_flag>> flags;
  static std::map<int, std::unique_ptr<CharacterTable>> tables;
  std::shared_ptr<std::once_flag> flag;
  {
    std::lock_guard lock(mutex);
    auto& f = flags[t];
    if (!f) f = std::make_shared<std::once_flag>();
    flag = f;
  }
  std::call_once(*flag, [t] {
    auto table = std::make_unique<CharacterTable>(t);
    std::lock_guard lock(mutex);
    tables[t] = std::move(table);
  });
  std::lock_guard lock(mutex);
  return *tables.at(t);
}

BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const auto t = boxes(lambda);
  if (boxes(mu) != t || boxes(nu) != t) return 0;
  if (!lambda.is_polynomial() || !mu.is_polynomial() || !nu.is_polynomial()) return 0;
  return character_table(static_cast<int>(t)).kronecker(lambda, mu, nu);
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson products by LR-tableau enumeration.

namespace {

struct LrEnumerator {
  const std::vector<Part>& mu;
  std::size_t rows;
  std::vector<Part> shape;
  std::vector<std::vector<Part>> count;  // count[label][row]
  SchurSum& out;

  void label(std::size_t i) {
    if (i == mu.size()) {
      out[Partition(shape)] += 1;
      return;
    }
    const auto base = shape;
    row(i, 0, mu[i], base, 0, 0);
  }

  // prev_prefix: number of label i-1 entries in rows < r.
  void row(std::size_t i, std::size_t r, Part remaining, const std::vector<Part>& base, Part placed,
           Part prev_prefix) {
    if (remaining == 0) {
      label(i + 1);
      return;
    }
    if (r >= rows) return;
    Part cap = remaining;
    if (r > 0) cap = std::min(cap, base[r - 1] - base[r]);
    if (i > 0) cap = std::min(cap, prev_prefix - placed);
    const Part next_prev = prev_prefix + (i > 0 ? count[i - 1][r] : 0);
    for (Part x = cap; x >= 0; --x) {
      shape[r] = base[r] + x;
      count[i][r] = x;
      row(i, r + 1, remaining - x, base, placed + x, next_prev);
    }
    shape[r] = base[r];
    count[i][r] = 0;
  }
};

SchurSum lr_product_polynomial(const Partition& lambda, const Partition& mu, std::size_t max_rows) {
  SchurSum out;
  const auto rows = std::min(max_rows, lambda.length() + mu.length());
  if (lambda.length() > max_rows || mu.length() > max_rows) return out;
  std::vector<Part> mu_parts(mu.parts().begin(), mu.parts().end());
  LrEnumerator e{mu_parts, rows, lambda.padded(rows),
                 std::vector<std::vector<Part>>(mu_parts.size(), std::vector<Part>(rows, 0)), out};
  e.label(0);
  return out;
}

struct LrKey {
  Partition lambda, mu;
  std::size_t rows;
  friend bool operator<(const LrKey& a, const LrKey& b) {
    return std::tie(a.rows, a.lambda, a.mu) < std::tie(b.rows, b.lambda, b.mu);
  }
};

}  // namespace

SchurSum lr_product(const Partition& lambda, const Partition& mu, std::size_t max_rows) {
  if (!lambda.is_polynomial() || !mu.is_polynomial()) {
    if (max_rows == 0 || max_rows > 4096) throw Error("lr_product with negative parts needs a finite row bound");
    const Part sl = std::max<Part>(0, -lambda.padded(max_rows).back());
    const Part sm = std::max<Part>(0, -mu.padded(max_rows).back());
    auto shifted = lr_product(lambda.twisted(sl, max_rows), mu.twisted(sm, max_rows), max_rows);
    SchurSum out;
    for (auto& [nu, m] : shifted) out.emplace(nu.twisted(-(sl + sm), max_rows), m);
    return out;
  }
  // Enumerate with the smaller diagram as the filling.
  const bool swap = boxes(mu) > boxes(lambda);
  LrKey key{swap ? mu : lambda, swap ? lambda : mu, max_rows};

  static std::shared_mutex mutex;
  static std::map<LrKey, SchurSum> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto result = lr_product_polynomial(key.lambda, key.mu, max_rows);
  std::unique_lock lock(mutex);
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

BigInt lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.is_polynomial() || !mu.is_polynomial() || !nu.is_polynomial()) return 0;
  if (boxes(lambda) + boxes(mu) != boxes(nu)) return 0;
  if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
  const auto prod = lr_product(lambda, mu, nu.length());
  auto it = prod.find(nu);
  return it == prod.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------
// S_lambda of a tensor product.

namespace {

bool is_row(const Partition& p) { return p.length() <= 1; }

bool is_column(const Partition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(), [](Part x) { return x == 1; });
}

Decomposition schur_of_tensor_uncached(const Partition& lambda, std::span<const int> dims) {
  Decomposition out;
  if (dims.size() == 1) {
    if (lambda.length() <= static_cast<std::size_t>(dims[0])) out.emplace(MultiPartition{lambda}, 1);
    return out;
  }
  const int t = static_cast<int>(boxes(lambda));
  const auto first_rows = static_cast<std::size_t>(dims[0]);
  // Row bound for the remaining factors: their total dimension, capped at t.
  std::int64_t rest_dim = 1;
  for (std::size_t j = 1; j < dims.size(); ++j) rest_dim = std::min<std::int64_t>(rest_dim * dims[j], t + 1);
  const auto rest_rows = static_cast<std::size_t>(std::min<std::int64_t>(rest_dim, t));
  const auto rest = dims.subspan(1);

  auto emit = [&](const Partition& mu, const Partition& nu, const BigInt& g) {
    if (g == 0 || nu.length() > rest_rows) return;
    for (const auto& [tail, m] : schur_of_tensor(nu, rest)) {
      std::vector<Partition> factors{mu};
      factors.insert(factors.end(), tail.factors().begin(), tail.factors().end());
      out[MultiPartition(std::move(factors))] += g * m;
    }
  };

  const auto firsts = partitions_in_box(t, first_rows, t);
  if (is_row(lambda)) {
    // g((t), mu, nu) = [mu == nu]
    for (const auto& mu : firsts) emit(mu, mu, 1);
  } else if (is_column(lambda)) {
    // g((1^t), mu, nu) = [nu == mu']
    for (const auto& mu : firsts) emit(mu, conjugate(mu), 1);
  } else {
    const auto& table = character_table(t);
    const auto seconds = partitions_in_box(t, rest_rows, t);
    for (const auto& mu : firsts) {
      for (const auto& nu : seconds) emit(mu, nu, table.kronecker(lambda, mu, nu));
    }
  }
  return out;
}

}  // namespace

Decomposition schur_of_tensor(const Partition& lambda, std::span<const int> dims) {
  if (dims.empty()) throw Error("schur_of_tensor needs at least one factor");
  if (!lambda.is_polynomial()) throw Error("schur_of_tensor needs a polynomial partition");
  for (auto d : dims) {
    if (d < 0) throw Error("negative dimension");
  }
  using Key = std::pair<Partition, std::vector<int>>;
  static std::shared_mutex mutex;
  static std::map<Key, Decomposition> cache;
  Key key{lambda, std::vector<int>(dims.begin(), dims.end())};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto result = schur_of_tensor_uncached(lambda, dims);
  std::unique_lock lock(mutex);
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

Decomposition ext_power_tensor(int t, std::span<const int> dims) {
  if (dims.empty()) throw Error("ext_power_tensor needs at least one factor");
  std::int64_t total = 1;
  for (auto d : dims) total *= d;
  if (t < 0 || t > total) return {};
  return schur_of_tensor(Partition(std::vector<Part>(static_cast<std::size_t>(t), 1)), dims);
}

BigInt decomposition_dimension(const Decomposition& d, std::span<const int> dims) {
  BigInt total = 0;
  for (const auto& [mp, m] : d) total += m * mp.dimension(dims);
  return total;
}

}  // namespace secres
