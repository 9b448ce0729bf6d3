#include "secres/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace secres {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::initializer_list<Part> parts) : parts_(parts) { canonicalize(); }

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) { canonicalize(); }

Partition Partition::rectangle(Part value, std::size_t count) {
  return Partition(std::vector<Part>(count, value));
}

void Partition::canonicalize() {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i - 1] < parts_[i]) {
      throw Error("partition parts must be weakly decreasing: " + to_string());
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

bool Partition::is_polynomial() const { return parts_.empty() || parts_.back() >= 0; }

std::vector<Partition::Part> Partition::padded(std::size_t n) const {
  if (parts_.size() > n) {
    throw Error("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
  }
  std::vector<Part> out(parts_);
  out.resize(n, 0);
  return out;
}

Partition Partition::twisted(Part c, std::size_t n) const {
  auto v = padded(n);
  for (auto& x : v) x += c;
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error("malformed partition '" + std::string(text) + "': expected [p1,p2,...]");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<Part> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = trim(text.substr(0, comma));
    Part value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw Error("malformed partition part '" + std::string(tok) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  if (!p.is_polynomial()) throw Error("conjugate undefined for virtual weights");
  std::vector<Partition::Part> out;
  if (p.empty()) return Partition();
  out.resize(static_cast<std::size_t>(p.first()), 0);
  for (auto part : p.parts()) {
    for (Partition::Part c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

Partition::Part boxes(const Partition& p) {
  return std::accumulate(p.parts().begin(), p.parts().end(), Partition::Part{0});
}

bool contains(const Partition& lambda, const Partition& mu) {
  const auto n = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

Partition dual_partition(const Partition& p, std::size_t n) {
  auto v = p.padded(n);
  std::reverse(v.begin(), v.end());
  for (auto& x : v) x = -x;
  return Partition(std::move(v));
}

BigInt schur_dim(const Partition& p, std::size_t n) {
  // Weyl's formula prod_{i<j} (l_i - l_j + j - i) / (j - i); exact because the
  // numerator and denominator products are accumulated separately.
  if (p.length() > n) {
    // A negative tail can still fit after a twist; only a polynomial
    // partition with too many rows gives the zero module.
    if (p.is_polynomial()) return 0;
    throw Error("partition " + p.to_string() + " does not fit in dimension " + std::to_string(n));
  }
  const auto v = p.padded(n);
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= BigInt(static_cast<long>(v[i] - v[j] + static_cast<Partition::Part>(j - i)));
      den *= BigInt(static_cast<long>(j - i));
    }
  }
  return num / den;
}

namespace {

void partitions_rec(int remaining, Partition::Part max_part, std::size_t max_rows,
                    std::vector<Partition::Part>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() >= max_rows) return;
  for (Partition::Part p = std::min<Partition::Part>(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - static_cast<int>(p), p, max_rows, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int t) {
  return partitions_in_box(t, static_cast<std::size_t>(std::max(t, 0)), std::max(t, 0));
}

std::vector<Partition> partitions_in_box(int t, std::size_t max_rows, Partition::Part max_cols) {
  std::vector<Partition> out;
  if (t < 0) return out;
  std::vector<Partition::Part> cur;
  partitions_rec(t, max_cols, max_rows, cur, out);
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw Error("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Partition::Part MultiPartition::common_boxes() const {
  if (factors_.empty()) return 0;
  const auto b = boxes(factors_.front());
  for (const auto& f : factors_) {
    if (boxes(f) != b) throw Error("multi-partition " + to_string() + " has unequal box counts");
  }
  return b;
}

bool MultiPartition::has_equal_boxes() const {
  if (factors_.empty()) return true;
  const auto b = boxes(factors_.front());
  return std::all_of(factors_.begin(), factors_.end(), [b](const Partition& f) { return boxes(f) == b; });
}

BigInt MultiPartition::dimension(std::span<const int> dims) const {
  if (dims.size() != factors_.size()) throw Error("dimension vector does not match multi-partition");
  BigInt out = 1;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out *= schur_dim(factors_[j], static_cast<std::size_t>(dims[j]));
    if (out == 0) break;
  }
  return out;
}

std::string MultiPartition::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) out += ';';
    out += factors_[j].to_string();
  }
  return out;
}

MultiPartition MultiPartition::parse(std::string_view text) {
  std::vector<Partition> factors;
  text = trim(text);
  if (text.empty()) return MultiPartition();
  while (true) {
    auto semi = text.find(';');
    factors.push_back(Partition::parse(text.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    text = text.substr(semi + 1);
  }
  return MultiPartition(std::move(factors));
}

}  // namespace secres
