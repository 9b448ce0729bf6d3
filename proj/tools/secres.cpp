#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "secres/bott.hpp"
#include "secres/catalog.hpp"
#include "secres/characters.hpp"
#include "secres/geometry.hpp"
#include "secres/resolution_io.hpp"
#include "secres/weyman.hpp"

namespace {

using namespace secres;

std::vector<Partition::Part> parse_ints(const std::string& text) {
  std::vector<Partition::Part> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error("not an integer: '" + tok + "'");
    }
  }
  return out;
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> out;
  for (auto v : parse_ints(text)) out.push_back(static_cast<int>(v));
  return out;
}

void print_decomposition(const Decomposition& d) {
  std::vector<std::string> lines;
  for (const auto& [mp, mult] : d) lines.push_back(mult.get_str() + " " + mp.to_string());
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) std::cout << l << '\n';
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A case file carries its resolution under "resolution"; a bare resolution file is the object itself.
EquivariantResolution load_input(const std::string& path) {
  const auto text = read_text(path);
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON in " + path);
  if (j.contains("resolution")) return resolution_from_json(j.at("resolution").dump());
  return resolution_from_json(text);
}

int run_extpow(int t, const std::string& dims_text, bool check) {
  const auto dims = parse_dims(dims_text);
  const auto d = ext_power_tensor(t, dims);
  print_decomposition(d);
  if (check) {
    std::int64_t n = 1;
    for (int x : dims) n *= x;
    const auto sum = decomposition_dimension(d, dims);
    const auto want = binomial(n, t);
    std::cout << "dimension " << sum << " vs binomial(" << n << "," << t << ") = " << want << ": "
              << (sum == want ? "OK" : "MISMATCH") << '\n';
    return sum == want ? 0 : 1;
  }
  return 0;
}

int run_bott(int a, int r, const std::string& weight) {
  const auto slash = weight.find('/');
  const auto p = parse_ints(weight.substr(0, slash));
  const auto q = slash == std::string::npos ? std::vector<Partition::Part>{} : parse_ints(weight.substr(slash + 1));
  if (p.size() != static_cast<std::size_t>(r) || q.size() != static_cast<std::size_t>(a - r)) {
    throw Error("weight needs " + std::to_string(r) + " entries before '/' and " + std::to_string(a - r) + " after");
  }
  auto alpha = p;
  alpha.insert(alpha.end(), q.begin(), q.end());
  const auto res = bott_cohomology(BundleWeight(alpha, GrassmannianFactor(r, a)));
  if (res.zero) {
    std::cout << "ZERO\n";
  } else {
    std::cout << "H^" << res.degree << " = " << res.module.to_string()
              << ", dim = " << schur_dim(res.module, static_cast<std::size_t>(a)) << '\n';
  }
  return 0;
}

SubspaceConfig config_of(const std::string& a, const std::string& r) {
  return {parse_dims(a), r.empty() ? parse_dims(a) : parse_dims(r)};
}

int run_lift(const std::string& input, const std::string& target, const std::string& strategy,
             const std::string& out, int min_degree, unsigned threads) {
  LiftOptions opts;
  if (strategy == "one-shot") {
    opts.strategy = LiftStrategy::OneShot;
  } else if (strategy != "stepwise") {
    throw Error("unknown strategy '" + strategy + "'");
  }
  opts.min_degree = min_degree;
  opts.threads = threads;
  const auto res = lift_resolution(load_input(input), parse_dims(target), opts);
  for (const auto& s : res.steps) {
    std::cerr << "step " << s.config.to_string() << ": " << s.terms << " terms, length " << s.length
              << (s.small ? "" : ", not small") << '\n';
  }
  if (out.empty()) {
    std::cout << resolution_to_json(res.resolution) << '\n';
  } else {
    write_resolution(out, res.resolution);
    std::cout << BettiTable(res.resolution).render();
  }
  return 0;
}

int run_check(const std::string& input, bool acm, bool ag, std::int64_t codim) {
  const auto r = load_input(input);
  std::cout << BettiTable(r).render();
  if ((acm || ag) && codim < 0) throw Error("--acm and --ag need --codim");
  bool ok = true;
  if (acm) {
    const auto rep = acm_check(r, codim);
    std::cout << "aCM: " << (rep.acm ? "yes" : "no") << " (length " << rep.length << ", after cancellation "
              << rep.cancelled_length << ", codim " << rep.codim << ")\n";
    ok = ok && rep.acm;
  }
  if (ag) {
    const auto rep = ag_check(r, codim);
    std::cout << "aG: " << (rep.ag ? "yes" : "no") << " (top dimension " << rep.top_dimension << ", "
              << rep.top_boxes << " boxes, socle degree " << rep.socle_degree << ")\n";
    ok = ok && rep.ag;
  }
  return ok ? 0 : 1;
}

int run_catalog_list(const std::string& dir) {
  for (const auto& name : list_cases(dir)) {
    const auto rec = load_case(name, dir);
    std::cout << name << "  " << to_string(rec.status) << "  " << rec.title << '\n';
  }
  return 0;
}

int run_catalog_verify(const std::string& name, bool all, const std::string& format, const std::string& dir,
                       const std::string& n, unsigned threads) {
  VerifyOptions opts;
  opts.dir = dir;
  opts.threads = threads;
  if (!n.empty()) opts.params["n"] = n;
  std::vector<std::string> names;
  if (all) {
    names = list_cases(dir);
  } else if (!name.empty()) {
    names.push_back(name);
  } else {
    throw Error("catalog verify needs a case name or --all");
  }
  std::vector<CaseReport> reports;
  for (const auto& nm : names) {
    reports.push_back(verify_case(nm, opts));
    if (format == "text") std::cout << report_to_text(reports.back()) << std::flush;
  }
  if (format == "json") std::cout << reports_to_json(reports) << '\n';
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CaseReport& r) { return r.passed(); });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secres: equivariant resolutions of secant and subspace varieties"};
  app.require_subcommand(1);

  int t = 0;
  std::string dims, a, r, weight, input, target, strategy = "stepwise", out, format = "text", dir, case_name, n;
  bool check_dim = false, acm = false, ag = false, all = false;
  int min_degree = 0;
  unsigned threads = 0;
  std::int64_t codim = -1;

  auto* extpow = app.add_subcommand("extpow", "Schur decomposition of an exterior power of a tensor product");
  extpow->add_option("--t", t, "exterior power")->required();
  extpow->add_option("--dims", dims, "factor dimensions, e.g. 2,2,4")->required();
  extpow->add_flag("--check-dim", check_dim, "compare the dimension sum with the binomial");

  auto* bott = app.add_subcommand("bott", "cohomology of S_p R* (x) S_q Q* on Gr(r, a)");
  bott->add_option("--a", a, "ambient dimension")->required();
  bott->add_option("--r", r, "rank of R")->required();
  bott->add_option("--weight", weight, "p1,..,pr/q1,..,q(a-r)")->required()->allow_extra_args(false);

  auto* sub_dim = app.add_subcommand("sub-dim", "dimension of a subspace variety");
  sub_dim->add_option("--a", a)->required();
  sub_dim->add_option("--r", r)->required();
  auto* sub_gens = app.add_subcommand("sub-gens", "generator modules of a subspace variety");
  sub_gens->add_option("--a", a)->required();
  sub_gens->add_option("--r", r)->required();

  auto* lift = app.add_subcommand("lift", "lift a resolution to larger ambient dimensions");
  lift->add_option("--input", input, "resolution or case JSON")->required()->check(CLI::ExistingFile);
  lift->add_option("--target", target, "target dimensions")->required();
  lift->add_option("--strategy", strategy)->check(CLI::IsMember({"stepwise", "one-shot"}));
  lift->add_option("--out", out, "write the result here");
  lift->add_option("--min-degree", min_degree, "compute the final pass only from this homological degree");
  lift->add_option("--threads", threads);

  auto* check = app.add_subcommand("check", "Betti table and aCM / aG verdicts");
  check->add_option("--input", input)->required()->check(CLI::ExistingFile);
  check->add_flag("--acm", acm);
  check->add_flag("--ag", ag);
  check->add_option("--codim", codim);

  auto* catalog = app.add_subcommand("catalog", "stored cases");
  catalog->require_subcommand(1);
  catalog->add_option("--dir", dir, "catalog directory");
  auto* list = catalog->add_subcommand("list", "list stored cases");
  auto* verify = catalog->add_subcommand("verify", "run the checks of a case");
  verify->add_option("name", case_name);
  verify->add_flag("--all", all);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--n", n, "single size for parametric cases");
  verify->add_option("--threads", threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extpow) return run_extpow(t, dims, check_dim);
    if (*bott) return run_bott(std::stoi(a), std::stoi(r), weight);
    if (*sub_dim) {
      const auto c = config_of(a, r);
      std::cout << "dim " << sub_dimension(c) << ", codim " << c.ambient_dim() - sub_dimension(c) << '\n';
      return 0;
    }
    if (*sub_gens) {
      print_decomposition(sub_ideal_generators(config_of(a, r)));
      return 0;
    }
    if (*lift) return run_lift(input, target, strategy, out, min_degree, threads);
    if (*check) return run_check(input, acm, ag, codim);
    if (*list) return run_catalog_list(dir);
    if (*verify) return run_catalog_verify(case_name, all, format, dir, n, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
