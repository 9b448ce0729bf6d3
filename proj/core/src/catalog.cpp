#include "secres/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json_detail.hpp"

#ifndef SECRES_DEFAULT_CATALOG_DIR
#define SECRES_DEFAULT_CATALOG_DIR "data/catalog/v1"
#endif

namespace secres {

using nlohmann::json;

namespace {

const std::map<std::string, CaseStatus>& status_names() {
  static const std::map<std::string, CaseStatus> names{
      {"ACM_PROVED", CaseStatus::AcmProved},       {"ACM_CONJECTURED", CaseStatus::AcmConjectured},
      {"AG_PROVED", CaseStatus::AgProved},         {"AG_CONJECTURED", CaseStatus::AgConjectured},
      {"CI", CaseStatus::CompleteIntersection},
  };
  return names;
}

std::filesystem::path resolve_dir(const std::filesystem::path& dir) { return dir.empty() ? default_catalog_dir() : dir; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join_ints(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

std::vector<BigInt> bigints(const json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(detail::bigint_from(x));
  return out;
}

Polynomial ci_numerator(const std::vector<std::int64_t>& degrees) {
  Polynomial out{{0, 1}};
  for (auto d : degrees) out = poly_multiply(out, Polynomial{{0, 1}, {d, -1}});
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

class Verifier {
 public:
  Verifier(const CaseRecord& rec, const VerifyOptions& opts) : rec_(rec), opts_(opts) {}

  void run(const CaseCheck& check, std::vector<CheckResult>& out) {
    out_ = &out;
    const auto params = json::parse(check.params);
    static const std::map<std::string, void (Verifier::*)(const json&)> table{
        {"betti_totals", &Verifier::betti_totals},
        {"betti_entries", &Verifier::betti_entries},
        {"generators", &Verifier::generators},
        {"acm", &Verifier::acm},
        {"ag", &Verifier::ag},
        {"hilbert", &Verifier::hilbert},
        {"smallness", &Verifier::smallness},
        {"inherit", &Verifier::inherit_check},
        {"regenerate", &Verifier::regenerate},
        {"lift_betti", &Verifier::lift_betti},
        {"strategy_agreement", &Verifier::strategy_agreement},
        {"mcm_last", &Verifier::mcm_last},
        {"chain", &Verifier::chain},
        {"matrix_socle", &Verifier::matrix_socle},
        {"orbit_codim", &Verifier::orbit_codim},
        {"secant_codim", &Verifier::secant_codim},
        {"no_verdict", &Verifier::no_verdict},
        {"weyman_acm", &Verifier::weyman_acm},
        {"lift_acm", &Verifier::lift_acm},
    };
    auto it = table.find(check.kind);
    if (it == table.end()) throw Error("unknown check kind '" + check.kind + "'");
    (this->*(it->second))(params);
  }

 private:
  void report(std::string claim, bool ok, std::string detail) { out_->push_back({std::move(claim), ok, std::move(detail)}); }

  const EquivariantResolution& stored() const {
    if (!rec_.resolution) throw Error("case " + rec_.name + " has no stored resolution");
    return *rec_.resolution;
  }

  EquivariantResolution start_resolution(const json& p) const {
    if (p.contains("start_case")) {
      auto other = load_case(p.at("start_case").get<std::string>(), opts_.dir);
      if (!other.resolution) throw Error("start case has no stored resolution");
      return *other.resolution;
    }
    if (p.contains("from")) return EquivariantResolution::unit(SubspaceConfig::full(p.at("from").get<std::vector<int>>()));
    return stored();
  }

  static LiftStrategy strategy_of(const json& p) {
    const auto s = p.value("strategy", std::string("stepwise"));
    if (s == "stepwise") return LiftStrategy::Stepwise;
    if (s == "one-shot") return LiftStrategy::OneShot;
    throw Error("unknown strategy '" + s + "'");
  }

  void compare_totals(const std::string& claim, const EquivariantResolution& r, const json& expected) {
    const auto got = BettiTable(r).totals();
    const auto want = bigints(expected);
    report(claim, got == want, "got " + join_ints(got) + ", expected " + join_ints(want));
  }

  void betti_totals(const json& p) { compare_totals("Betti totals", stored(), p.at("totals")); }

  void betti_entries(const json& p) {
    const BettiTable t(stored());
    bool ok = true;
    std::string detail;
    for (const auto& e : p.at("entries")) {
      const auto row = e.at(0).get<std::int64_t>();
      const auto col = e.at(1).get<int>();
      const auto want = detail::bigint_from(e.at(2));
      const auto got = t.at(row, col);
      if (got != want) ok = false;
      detail += "(" + std::to_string(row) + "," + std::to_string(col) + ")=" + got.get_str() + " ";
    }
    report("Betti table entries", ok, detail);
  }

  void generators(const json& p) {
    const auto& r = stored();
    std::map<std::int64_t, BigInt> got;
    if (r.slices().size() > 1) {
      for (const auto& t : r.slices()[1]) got[t.internal_degree] += t.multiplicity * t.module.dimension(r.config().a());
    }
    std::map<std::int64_t, BigInt> want;
    for (const auto& e : p.at("by_degree")) want[e.at(0).get<std::int64_t>()] = detail::bigint_from(e.at(1));
    std::string detail;
    for (const auto& [d, v] : got) detail += "degree " + std::to_string(d) + ": " + v.get_str() + " ";
    report("minimal generators by degree", got == want, detail);
  }

  void acm(const json& p) {
    const auto a = acm_check(stored(), p.at("codim").get<std::int64_t>());
    report("aCM: length equals codimension", a.acm,
           "length " + std::to_string(a.length) + ", codim " + std::to_string(a.codim));
  }

  void ag(const json& p) {
    const auto codim = p.at("codim").get<std::int64_t>();
    const auto g = ag_check(stored(), codim);
    const auto socle = p.at("socle").get<std::int64_t>();
    report("aG with socle degree " + std::to_string(socle), g.ag && g.socle_degree == socle,
           "top dim " + g.top_dimension.get_str() + ", socle " + std::to_string(g.socle_degree));
  }

  void hilbert(const json& p) {
    const auto want = ci_numerator(p.at("factors").get<std::vector<std::int64_t>>());
    const auto got = hilbert_numerator(stored());
    report("Hilbert numerator", got == want, poly_to_string(got) + " vs " + poly_to_string(want));
  }

  void smallness(const json& p) {
    const auto& r = stored();
    const auto dims = r.config().a();
    const auto bound = p.at("bound").get<std::int64_t>();
    const auto max_first = p.at("max_first").get<std::int64_t>();
    const auto terms = r.modules();
    const std::vector<std::size_t> factors =
        p.contains("factors") ? p.at("factors").get<std::vector<std::size_t>>() : [&] {
          std::vector<std::size_t> all(dims.size());
          for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
          return all;
        }();
    for (auto j : factors) {
      auto a = dims;
      ++a[j];
      const SubspaceConfig config(a, dims);
      const auto b = config.r_hat(j) - config.r()[j];
      std::vector<std::int64_t> bounds(dims.size(), std::numeric_limits<std::int64_t>::max());
      bounds[j] = b;
      Partition::Part top = 0;
      for (const auto& t : terms) top = std::max(top, t[j].first());
      const bool ok = b == bound && top == max_first && is_small(terms, bounds);
      report("factor " + std::to_string(j + 1) + " lift: first parts <= r_hat - r", ok,
             std::to_string(top) + " <= " + std::to_string(b));
    }
  }

  void inherit_check(const json& p) {
    const auto& r = stored();
    const auto to = SubspaceConfig::full(p.at("to").get<std::vector<int>>());
    std::size_t n = 0;
    for (const auto& m : r.modules()) {
      if (inherit(m, r.config(), to) == m) ++n;
    }
    report("terms inherit to " + to.to_string(), n == r.term_count(), std::to_string(n) + " terms");
  }

  void regenerate(const json& p) {
    const auto config = detail::config_from(p.at("config"));
    auto fresh = weyman_complex(FiberModule::unit(config.size()), config);
    fresh.set_config(stored().config());
    const bool ok = fresh == stored();
    report("regenerated from the unit fiber module", ok,
           std::to_string(fresh.term_count()) + " terms vs " + std::to_string(stored().term_count()));
  }

  void lift_betti(const json& p) {
    const auto t0 = std::chrono::steady_clock::now();
    auto l = lift_resolution(start_resolution(p), p.at("target").get<std::vector<int>>(),
                             {strategy_of(p), opts_.threads, 0});
    const auto secs = seconds_since(t0);
    compare_totals("lifted Betti totals (" + p.value("strategy", std::string("stepwise")) + ")", l.resolution,
                   p.at("totals"));
    if (p.contains("display_twists")) {
      std::vector<std::int64_t> got;
      bool single = true;
      for (const auto& s : l.resolution.slices()) {
        std::set<std::int64_t> degs;
        for (const auto& t : s) degs.insert(t.internal_degree);
        single = single && degs.size() == 1;
        if (!degs.empty()) got.push_back(-(*degs.begin() + rec_.display_offset));
      }
      const auto want = p.at("display_twists").get<std::vector<std::int64_t>>();
      std::string detail;
      for (auto g : got) detail += "R(" + std::to_string(g) + ") ";
      report("displayed twists", single && got == want, detail);
    }
    if (p.contains("max_seconds")) {
      const auto limit = p.at("max_seconds").get<double>();
      report("lift runtime", secs < limit, fmt_seconds(secs) + " (limit " + fmt_seconds(limit) + ")");
    }
  }

  void strategy_agreement(const json& p) {
    const auto start = start_resolution(p);
    const auto target = p.at("target").get<std::vector<int>>();
    const auto a = lift_resolution(start, target, {LiftStrategy::Stepwise, opts_.threads, 0}).resolution;
    const auto b = lift_resolution(start, target, {LiftStrategy::OneShot, opts_.threads, 0}).resolution;
    const auto ha = hilbert_numerator(a);
    const auto hb = hilbert_numerator(b);
    report("stepwise and one-shot Hilbert numerators agree", ha == hb, poly_to_string(ha));
    report("stepwise cancels to one-shot", cancel_adjacent(a) == cancel_adjacent(b),
           std::to_string(a.term_count()) + " vs " + std::to_string(b.term_count()) + " terms before cancellation");
  }

  void mcm_last(const json& p) {
    const auto config = detail::config_from(p.at("config"));
    const FiberModule m(MultiPartition::parse(p.at("module").get<std::string>()));
    const auto want = MultiPartition::parse(p.at("expected").get<std::string>());
    const auto closed = mcm_last_module(m, config);
    const auto w = weyman_complex(m, config);
    const auto& top = w.slices().back();
    const bool engine = top.size() == 1 && top.front().module == want;
    report("closed-form last module", closed == want, closed.to_string());
    report("engine last module", engine, top.front().module.to_string() + " at degree " + std::to_string(w.length()));
  }

  void chain(const json& p) {
    auto r = start_resolution(p);
    for (const auto& step : p.at("steps")) {
      const auto a = step.at("a").get<std::vector<int>>();
      const auto t0 = std::chrono::steady_clock::now();
      LiftOptions o{LiftStrategy::Stepwise, opts_.threads, step.value("min_degree", 0)};
      auto l = lift_resolution(r, a, o);
      const auto secs = seconds_since(t0);
      r = std::move(l.resolution);
      const auto label = SubspaceConfig::full(a).to_string();
      const auto& top = r.slices().back();
      const auto corner = MultiPartition::parse(step.at("corner").get<std::string>());
      BigInt dim = 0;
      for (const auto& t : top) dim += t.multiplicity * t.module.dimension(a);
      std::string truncated = o.min_degree > 0 ? ", slices >= " + std::to_string(o.min_degree) + " only" : "";
      report(label + " corner " + corner.to_string(), top.size() == 1 && top.front().module == corner,
             std::to_string(r.term_count()) + " terms, " + fmt_seconds(secs) + truncated);
      if (step.contains("corner_dim")) {
        const auto want = detail::bigint_from(step.at("corner_dim"));
        report(label + " corner dimension " + want.get_str(), dim == want, dim.get_str());
      }
      for (std::size_t k = 0; k < l.steps.size(); ++k) {
        if (!l.steps[k].small) {
          report(label + " smallness of the fiber (informational)", true,
                 "bound r_hat - r fails in " + l.steps[k].config.to_string() + "; cohomology computed directly");
        }
      }
      if (step.contains("codim")) {
        const auto codim = step.at("codim").get<std::int64_t>();
        const auto ac = acm_check(r, codim);
        report(label + " length equals codim " + std::to_string(codim), ac.acm, "length " + std::to_string(ac.length));
        if (step.contains("socle")) {
          const auto g = ag_check(r, codim);
          const auto socle = step.at("socle").get<std::int64_t>();
          report(label + " aG with socle " + std::to_string(socle), g.ag && g.socle_degree == socle,
                 std::to_string(g.top_boxes) + " boxes, socle " + std::to_string(g.socle_degree));
        }
      }
      if (step.contains("max_seconds")) {
        const auto limit = step.at("max_seconds").get<double>();
        report(label + " runtime", secs <= limit, fmt_seconds(secs) + " (limit " + fmt_seconds(limit) + ")");
      }
    }
  }

  void matrix_socle(const json& p) {
    int lo = p.at("n_min").get<int>();
    int hi = p.at("n_max").get<int>();
    if (auto it = opts_.params.find("n"); it != opts_.params.end()) lo = hi = std::stoi(it->second);
    for (int n = lo; n <= hi; ++n) {
      // Rank <= 2 matrices are Sub_{2,n}, desingularized over Gr(2, n) alone.
      const SubspaceConfig config({n, n}, {2, n});
      const auto r = weyman_complex(FiberModule::unit(2), config);
      const std::int64_t codim = static_cast<std::int64_t>(n - 2) * (n - 2);
      const auto ac = acm_check(r, codim);
      const auto g = ag_check(r, codim);
      report("n=" + std::to_string(n) + " aG with socle " + std::to_string(2 * n - 3),
             ac.acm && g.ag && g.socle_degree == 2 * n - 3,
             "length " + std::to_string(ac.length) + ", socle " + std::to_string(g.socle_degree));
    }
  }

  void orbit_codim(const json& p) {
    for (const auto& e : p.at("entries")) {
      const auto config = detail::config_from(e.at("config"));
      const auto orbit = orbit_dimension(config, e.at("fiber_dim").get<std::int64_t>());
      const auto codim = e.at("containing_dim").get<std::int64_t>() - orbit;
      const auto want = e.at("codim").get<std::int64_t>();
      report(e.at("label").get<std::string>(), codim == want, "codim " + std::to_string(codim));
    }
  }

  void secant_codim(const json& p) {
    const auto k = p.value("k", rec_.secant_order);
    std::int64_t ambient = 1;
    for (int x : rec_.dims) ambient *= x;
    const auto codim = ambient - expected_secant_dimension(k, rec_.dims);
    const auto want = p.at("codim").get<std::int64_t>();
    report("codimension " + std::to_string(want), codim == want, "expected-dimension count gives " + std::to_string(codim));
  }

  void no_verdict(const json&) {
    const bool conj = rec_.status == CaseStatus::AgConjectured || rec_.status == CaseStatus::AcmConjectured;
    report("conjectural status kept", conj, "status " + to_string(rec_.status) + "; no verdict claimed");
  }

  void weyman_acm(const json& p) {
    const auto config = detail::config_from(p.at("config"));
    const auto r = weyman_complex(FiberModule::unit(config.size()), config);
    const auto codim = p.at("codim").get<std::int64_t>();
    const auto ac = acm_check(r, codim);
    report("aCM over " + config.to_string(), ac.acm, "length " + std::to_string(ac.length));
    if (p.contains("socle")) {
      const auto g = ag_check(r, codim);
      const auto socle = p.at("socle").get<std::int64_t>();
      report("aG with socle " + std::to_string(socle), g.ag && g.socle_degree == socle,
             "top dim " + g.top_dimension.get_str() + ", socle " + std::to_string(g.socle_degree));
    }
  }

  void lift_acm(const json& p) {
    const auto l = lift_resolution(start_resolution(p), p.at("target").get<std::vector<int>>(),
                                   {strategy_of(p), opts_.threads, 0});
    const auto codim = p.at("codim").get<std::int64_t>();
    const auto ac = acm_check(l.resolution, codim);
    report("lifted resolution has length codim " + std::to_string(codim), ac.acm,
           "length " + std::to_string(ac.length) + ", " + std::to_string(l.resolution.term_count()) + " terms");
  }

  const CaseRecord& rec_;
  const VerifyOptions& opts_;
  std::vector<CheckResult>* out_ = nullptr;
};

}  // namespace

std::string to_string(CaseStatus s) {
  for (const auto& [k, v] : status_names()) {
    if (v == s) return k;
  }
  return "?";
}

CaseStatus case_status_from(std::string_view s) {
  auto it = status_names().find(std::string(s));
  if (it == status_names().end()) throw Error("unknown case status '" + std::string(s) + "'");
  return it->second;
}

bool CaseReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("SECRES_CATALOG_DIR"); env && *env) return env;
  return SECRES_DEFAULT_CATALOG_DIR;
}

std::vector<std::string> list_cases(const std::filesystem::path& dir) {
  const auto d = resolve_dir(dir);
  if (!std::filesystem::is_directory(d)) throw Error("catalog directory not found: " + d.string());
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(d)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CaseRecord parse_case(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed case JSON: ") + e.what());
  }
  CaseRecord rec;
  try {
    rec.name = j.at("name").get<std::string>();
    rec.title = j.value("title", std::string());
    rec.source = j.value("source", std::string());
    rec.secant_order = j.at("family").at("k").get<int>();
    rec.dims = j.at("family").at("dims").get<std::vector<int>>();
    rec.status = case_status_from(j.at("status").get<std::string>());
    rec.display_offset = j.value("display_offset", 0);
    if (j.contains("resolution")) rec.resolution = detail::resolution_from(j.at("resolution"));
    for (const auto& c : j.value("checks", json::array())) {
      rec.checks.push_back({c.at("kind").get<std::string>(), c.value("params", json::object()).dump()});
    }
  } catch (const json::exception& e) {
    throw Error(std::string("invalid case record: ") + e.what());
  }
  return rec;
}

CaseRecord load_case(const std::string& name, const std::filesystem::path& dir) {
  const auto path = resolve_dir(dir) / (name + ".json");
  if (!std::filesystem::exists(path)) throw Error("unknown case '" + name + "'");
  auto rec = parse_case(read_file(path));
  if (rec.name != name) throw Error("case file " + path.string() + " declares name '" + rec.name + "'");
  return rec;
}

CaseReport verify_case(const CaseRecord& record, const VerifyOptions& opts) {
  CaseReport out{record.name, record.status, {}};
  Verifier v(record, opts);
  for (const auto& c : record.checks) {
    try {
      v.run(c, out.checks);
    } catch (const std::exception& e) {
      out.checks.push_back({c.kind, false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

CaseReport verify_case(const std::string& name, const VerifyOptions& opts) {
  return verify_case(load_case(name, opts.dir), opts);
}

std::string report_to_text(const CaseReport& r) {
  std::ostringstream os;
  os << r.name << " [" << to_string(r.status) << "]: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks) os << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.claim << "  (" << c.detail << ")\n";
  return os.str();
}

std::string reports_to_json(const std::vector<CaseReport>& reports, int indent) {
  json arr = json::array();
  for (const auto& r : reports) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
    arr.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"passed", r.passed()}, {"checks", checks}});
  }
  return arr.dump(indent);
}

}  // namespace secres
