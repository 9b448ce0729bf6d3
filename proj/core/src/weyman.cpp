#include "secres/weyman.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>
#include <tuple>

namespace secres {

using Part = Partition::Part;

namespace {

using TermKey = std::tuple<int, std::int64_t, MultiPartition>;
using TermMap = std::map<TermKey, BigInt>;

EquivariantResolution from_map(const SubspaceConfig& config, const TermMap& terms) {
  std::vector<std::vector<GradedSchurTerm>> slices;
  for (const auto& [key, mult] : terms) {
    if (mult == 0) continue;
    const auto& [i, deg, module] = key;
    if (slices.size() <= static_cast<std::size_t>(i)) slices.resize(static_cast<std::size_t>(i) + 1);
    slices[static_cast<std::size_t>(i)].push_back({module, mult, i, deg});
  }
  return EquivariantResolution::from_slices(config, std::move(slices));
}

void cartesian_accumulate(const std::vector<SchurSum>& sums, std::size_t idx, std::vector<Partition>& cur,
                          const BigInt& mult, const std::function<void(const std::vector<Partition>&, const BigInt&)>& emit) {
  if (idx == sums.size()) {
    emit(cur, mult);
    return;
  }
  for (const auto& [p, m] : sums[idx]) {
    cur[idx] = p;
    cartesian_accumulate(sums, idx + 1, cur, mult * m, emit);
  }
}

}  // namespace

EquivariantResolution EquivariantResolution::unit(const SubspaceConfig& config) {
  EquivariantResolution out(config);
  out.add({MultiPartition(std::vector<Partition>(config.size())), 1, 0, 0});
  return out;
}

EquivariantResolution EquivariantResolution::from_slices(SubspaceConfig config,
                                                         std::vector<std::vector<GradedSchurTerm>> slices) {
  EquivariantResolution out(std::move(config));
  out.slices_ = std::move(slices);
  out.canonicalize();
  return out;
}

int EquivariantResolution::length() const {
  for (auto i = static_cast<int>(slices_.size()) - 1; i >= 0; --i) {
    if (!slices_[static_cast<std::size_t>(i)].empty()) return i;
  }
  return -1;
}

std::size_t EquivariantResolution::term_count() const {
  std::size_t n = 0;
  for (const auto& s : slices_) n += s.size();
  return n;
}

std::vector<MultiPartition> EquivariantResolution::modules() const {
  std::vector<MultiPartition> out;
  for (const auto& s : slices_) {
    for (const auto& t : s) out.push_back(t.module);
  }
  return out;
}

void EquivariantResolution::add(const GradedSchurTerm& term) {
  if (term.homological_degree < 0) throw Error("term at negative homological degree");
  if (term.multiplicity <= 0) throw Error("term multiplicity must be positive");
  const auto i = static_cast<std::size_t>(term.homological_degree);
  if (slices_.size() <= i) slices_.resize(i + 1);
  for (auto& t : slices_[i]) {
    if (t.module == term.module && t.internal_degree == term.internal_degree) {
      t.multiplicity += term.multiplicity;
      return;
    }
  }
  slices_[i].push_back(term);
}

void EquivariantResolution::canonicalize() {
  for (auto& s : slices_) {
    std::sort(s.begin(), s.end(), [](const GradedSchurTerm& x, const GradedSchurTerm& y) {
      return std::tie(x.internal_degree, x.module) < std::tie(y.internal_degree, y.module);
    });
    std::vector<GradedSchurTerm> merged;
    for (auto& t : s) {
      if (!merged.empty() && merged.back().internal_degree == t.internal_degree && merged.back().module == t.module) {
        merged.back().multiplicity += t.multiplicity;
      } else {
        merged.push_back(std::move(t));
      }
    }
    s = std::move(merged);
  }
  slices_.resize(static_cast<std::size_t>(length() + 1));
}

void EquivariantResolution::validate() const {
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    for (const auto& t : slices_[i]) {
      const auto where = "term " + t.module.to_string() + " in slice " + std::to_string(i);
      if (t.homological_degree != static_cast<int>(i)) throw Error(where + " has the wrong homological degree");
      if (t.multiplicity <= 0) throw Error(where + " has non-positive multiplicity");
      if (t.module.size() != config_.size()) throw Error(where + " has the wrong number of factors");
      for (std::size_t j = 0; j < t.module.size(); ++j) {
        if (!t.module[j].is_polynomial()) throw Error(where + " has a negative part");
        if (t.module[j].length() > static_cast<std::size_t>(config_.a()[j])) {
          throw Error(where + " does not fit factor " + std::to_string(j));
        }
      }
      if (!t.module.has_equal_boxes()) throw Error(where + " has unequal box counts");
      if (t.module.common_boxes() != t.internal_degree) throw Error(where + " has degree != box count");
    }
  }
}

namespace {

// Adds scale * F(M)_i into terms at homological degree shift + i, for i >= min_hom.
// Nonzero terms at i < 0 throw whenever they are reached.
void accumulate_weyman(const FiberModule& m, const SubspaceConfig& config, int min_hom, int shift, const BigInt& scale,
                       TermMap& terms) {
  m.validate(config);
  const auto n = config.size();
  const auto nf = config.non_full();
  if (nf.size() > 1) throw Error("exact mode needs at most one non-full factor");

  if (nf.empty()) {
    if (min_hom > 0) return;
    std::vector<Partition> f;
    for (std::size_t j = 0; j < n; ++j) f.push_back(m.parts[j].twisted(m.twists[j], static_cast<std::size_t>(config.a()[j])));
    terms[{shift, m.degree, MultiPartition(std::move(f))}] += scale;
    return;
  }

  const auto j = nf.front();
  const auto gf = config.factor(j);
  const auto q = static_cast<std::size_t>(gf.a - gf.r);
  const auto ah = config.a_hat(j);
  std::vector<int> other_dims;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != j) other_dims.push_back(config.a()[i]);
  }
  const auto rank = config.rank_xi();

  // i = t - d >= min_hom forces t >= min_hom.
  for (std::int64_t t = std::max<std::int64_t>(0, min_hom); t <= rank; ++t) {
    for (const auto& lambda : partitions_in_box(static_cast<int>(t), q, ah)) {
      // Lambda^t xi = sum_lambda S_lambda' (others) (x) S_lambda Q_j*.
      const auto h = bott_cohomology(BundleWeight(m.parts[j], lambda, gf));
      if (h.zero) continue;
      const auto hom = static_cast<int>(t) - h.degree;
      if (hom >= 0 && hom < min_hom) continue;
      const auto nu = h.module.twisted(m.twists[j], static_cast<std::size_t>(gf.a));
      const auto rest = other_dims.empty() ? Decomposition{{MultiPartition{}, 1}}
                                           : schur_of_tensor(conjugate(lambda), other_dims);
      for (const auto& [mu, mult] : rest) {
        std::vector<SchurSum> sums;
        bool vanishes = false;
        for (std::size_t i = 0, k = 0; i < n; ++i) {
          if (i == j) {
            sums.push_back({{nu, 1}});
            continue;
          }
          const auto rows = static_cast<std::size_t>(config.a()[i]);
          auto prod = lr_product(m.parts[i], mu[k++], rows);
          if (prod.empty()) {
            vanishes = true;
            break;
          }
          if (m.twists[i] != 0) {
            SchurSum shifted;
            for (const auto& [p, c] : prod) shifted.emplace(p.twisted(m.twists[i], rows), c);
            prod = std::move(shifted);
          }
          sums.push_back(std::move(prod));
        }
        if (vanishes) continue;
        if (hom < 0) {
          throw Error("negative homological degree " + std::to_string(hom) + " in the complex of " + m.to_string() +
                      " over " + config.to_string() + "; the MCM hypothesis fails");
        }
        std::vector<Partition> cur(n);
        cartesian_accumulate(sums, 0, cur, mult * scale, [&](const std::vector<Partition>& f, const BigInt& c) {
          terms[{shift + hom, m.degree + t, MultiPartition(f)}] += c;
        });
      }
    }
  }
}

}  // namespace

EquivariantResolution weyman_complex(const FiberModule& m, const SubspaceConfig& config, int min_degree) {
  const auto nf = config.non_full();
  if (nf.size() > 1) {
    auto a = config.a();
    for (std::size_t k = 1; k < nf.size(); ++k) a[nf[k]] = config.r()[nf[k]];
    auto res = weyman_complex(m, SubspaceConfig(a, config.r()));
    for (std::size_t k = 1; k < nf.size(); ++k) {
      auto next = a;
      next[nf[k]] = config.a()[nf[k]];
      res = lift_once(res, SubspaceConfig(next, a), 0, k + 1 == nf.size() ? min_degree : 0);
      a = std::move(next);
    }
    res.set_config(config);
    return res;
  }
  TermMap terms;
  accumulate_weyman(m, config, min_degree, 0, 1, terms);
  return from_map(config, terms);
}

std::vector<MultiPartition> dual_top_modules(const FiberModule& m, const SubspaceConfig& config) {
  const auto dual = module_dual(m, config);
  std::vector<Partition> f;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const auto gf = config.factor(j);
    const auto h = bott_cohomology(BundleWeight(dual.parts[j], Partition(), gf));
    if (h.zero || h.degree != 0) return {};
    const auto a = static_cast<std::size_t>(gf.a);
    f.push_back(dual_partition(h.module.twisted(dual.twists[j], a), a));
  }
  return {MultiPartition(std::move(f))};
}

EquivariantResolution lift_once(const EquivariantResolution& e, const SubspaceConfig& config, unsigned threads,
                                int min_degree) {
  if (e.config().a() != config.r()) throw Error("fiber dimensions must equal the ranks of the lifting config");
  const auto rank = config.rank_xi();
  std::vector<const GradedSchurTerm*> work;
  for (const auto& s : e.slices()) {
    for (const auto& t : s) {
      if (!t.module.has_equal_boxes()) throw Error("fiber term " + t.module.to_string() + " has unequal box counts");
      if (t.homological_degree + rank < min_degree) continue;
      work.push_back(&t);
    }
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work.size(), 1)));
  // Column s contributes F_{s,t} to total degree s + t; sums are exact, so the
  // merged result does not depend on the work split.
  std::vector<TermMap> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t k = next++; k < work.size(); k = next++) {
        const auto& t = *work[k];
        const FiberModule m(t.module.factors(), std::vector<Part>(config.size(), 0), t.internal_degree);
        accumulate_weyman(m, config, std::max(0, min_degree - t.homological_degree), t.homological_degree, t.multiplicity,
                          partial[id]);
      }
    } catch (...) {
      errors[id] = std::current_exception();
      next = work.size();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker, k);
    worker(0);
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  auto& terms = partial[0];
  for (unsigned k = 1; k < threads; ++k) {
    for (auto& [key, v] : partial[k]) terms[key] += v;
    partial[k].clear();
  }
  return from_map(config, terms);
}

LiftResult lift_resolution(const EquivariantResolution& e, const std::vector<int>& target, const LiftOptions& opts) {
  const auto& start = e.config().a();
  if (target.size() != start.size()) throw Error("target has the wrong number of factors");
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (target[j] < start[j]) throw Error("target dimensions must not shrink");
  }
  LiftResult out{e, {}};
  auto current = start;
  while (current != target) {
    auto next = current;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (current[j] < target[j]) {
        next[j] = opts.strategy == LiftStrategy::Stepwise ? current[j] + 1 : target[j];
        break;
      }
    }
    SubspaceConfig config(next, current);
    LiftStep step{config, 0, 0, true};
    const auto j = config.non_full().front();
    const auto bound = config.r_hat(j) - config.r()[j];
    for (const auto& mod : out.resolution.modules()) step.small = step.small && mod[j].first() <= bound;
    const bool last = next == target;
    out.resolution = lift_once(out.resolution, config, opts.threads, last ? opts.min_degree : 0);
    step.terms = out.resolution.term_count();
    step.length = out.resolution.length();
    out.steps.push_back(step);
    current = next;
  }
  out.resolution.set_config(SubspaceConfig::full(target));
  return out;
}

EquivariantResolution cancel_adjacent(const EquivariantResolution& r) {
  auto slices = r.slices();
  for (std::size_t i = 0; i + 1 < slices.size(); ++i) {
    std::map<std::pair<std::int64_t, const MultiPartition*>, GradedSchurTerm*,
             decltype([](const auto& x, const auto& y) {
               return std::tie(x.first, *x.second) < std::tie(y.first, *y.second);
             })>
        lower;
    for (auto& lo : slices[i]) lower.emplace(std::pair{lo.internal_degree, &lo.module}, &lo);
    for (auto& hi : slices[i + 1]) {
      auto it = lower.find({hi.internal_degree, &hi.module});
      if (it == lower.end()) continue;
      const BigInt c = std::min(it->second->multiplicity, hi.multiplicity);
      it->second->multiplicity -= c;
      hi.multiplicity -= c;
    }
  }
  for (auto& s : slices) std::erase_if(s, [](const GradedSchurTerm& t) { return t.multiplicity <= 0; });
  return EquivariantResolution::from_slices(r.config(), std::move(slices));
}

BettiTable::BettiTable(const EquivariantResolution& r) {
  std::vector<int> dims(r.config().a());
  for (const auto& s : r.slices()) {
    for (const auto& t : s) {
      entries_[{t.internal_degree - t.homological_degree, t.homological_degree}] += t.multiplicity * t.module.dimension(dims);
    }
  }
  columns_ = r.length() + 1;
}

BigInt BettiTable::at(std::int64_t row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> BettiTable::totals() const {
  std::vector<BigInt> out(static_cast<std::size_t>(columns_), 0);
  for (const auto& [key, v] : entries_) out[static_cast<std::size_t>(key.second)] += v;
  return out;
}

std::string BettiTable::render() const {
  std::vector<std::int64_t> rows;
  for (const auto& [key, v] : entries_) {
    if (v != 0 && (rows.empty() || rows.back() != key.first)) rows.push_back(key.first);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const auto tot = totals();
  std::vector<std::size_t> width(static_cast<std::size_t>(columns_), 1);
  for (int c = 0; c < columns_; ++c) {
    auto& w = width[static_cast<std::size_t>(c)];
    w = std::max(w, std::to_string(c).size());
    w = std::max(w, tot[static_cast<std::size_t>(c)].get_str().size());
    for (auto row : rows) w = std::max(w, at(row, c).get_str().size());
  }
  std::size_t label = 6;
  for (auto row : rows) label = std::max(label, std::to_string(row).size() + 1);
  std::ostringstream os;
  auto cell = [&](const std::string& s, int c) {
    os << ' ' << std::string(width[static_cast<std::size_t>(c)] - s.size(), ' ') << s;
  };
  os << std::string(label, ' ');
  for (int c = 0; c < columns_; ++c) cell(std::to_string(c), c);
  os << '\n' << std::string(label - 6, ' ') << "total:";
  for (int c = 0; c < columns_; ++c) cell(tot[static_cast<std::size_t>(c)].get_str(), c);
  os << '\n';
  for (auto row : rows) {
    const auto name = std::to_string(row) + ":";
    os << std::string(label - name.size(), ' ') << name;
    for (int c = 0; c < columns_; ++c) {
      const auto v = at(row, c);
      cell(v == 0 ? "." : v.get_str(), c);
    }
    os << '\n';
  }
  return os.str();
}

Polynomial hilbert_numerator(const EquivariantResolution& r) {
  Polynomial out;
  std::vector<int> dims(r.config().a());
  for (const auto& s : r.slices()) {
    for (const auto& t : s) {
      BigInt c = t.multiplicity * t.module.dimension(dims);
      if (t.homological_degree % 2) c = -c;
      out[t.internal_degree] += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Polynomial poly_multiply(const Polynomial& x, const Polynomial& y) {
  Polynomial out;
  for (const auto& [e1, c1] : x) {
    for (const auto& [e2, c2] : y) out[e1 + e2] += c1 * c2;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string poly_to_string(const Polynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : p) {
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += mag.get_str();
    if (e != 0) {
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

AcmReport acm_check(const EquivariantResolution& r, std::int64_t codim) {
  AcmReport out;
  out.length = r.length();
  out.cancelled_length = cancel_adjacent(r).length();
  out.codim = codim;
  out.acm = out.length == codim;
  return out;
}

AgReport ag_check(const EquivariantResolution& r, std::int64_t codim) {
  AgReport out;
  const auto len = r.length();
  if (len < 0) return out;
  const auto& top = r.slices()[static_cast<std::size_t>(len)];
  std::vector<int> dims(r.config().a());
  for (const auto& t : top) out.top_dimension += t.multiplicity * t.module.dimension(dims);
  out.top_boxes = top.front().internal_degree;
  out.socle_degree = out.top_boxes - codim + 1;
  out.ag = len == codim && top.size() == 1 && out.top_dimension == 1;
  return out;
}

}  // namespace secres
