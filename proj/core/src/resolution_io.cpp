#include "secres/resolution_io.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace secres {

namespace detail {

using nlohmann::json;

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt bigint_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error("expected an integer, got " + j.dump());
}

SubspaceConfig config_from(const json& j) {
  if (!j.is_object() || !j.contains("a")) throw Error("config needs an \"a\" array");
  auto a = j.at("a").get<std::vector<int>>();
  auto r = j.contains("r") ? j.at("r").get<std::vector<int>>() : a;
  return {std::move(a), std::move(r)};
}

json to_json(const EquivariantResolution& r) {
  json slices = json::array();
  for (const auto& s : r.slices()) {
    json slice = json::array();
    for (const auto& t : s) {
      slice.push_back({{"module", t.module.to_string()}, {"mult", bigint_to_json(t.multiplicity)}, {"degree", t.internal_degree}});
    }
    slices.push_back(std::move(slice));
  }
  return {{"config", {{"a", r.config().a()}, {"r", r.config().r()}}}, {"slices", std::move(slices)}};
}

EquivariantResolution resolution_from(const json& j) {
  if (!j.is_object() || !j.contains("config") || !j.contains("slices")) {
    throw Error("resolution needs \"config\" and \"slices\"");
  }
  const auto& slices = j.at("slices");
  if (!slices.is_array()) throw Error("\"slices\" must be an array");
  std::vector<std::vector<GradedSchurTerm>> terms(slices.size());
  for (std::size_t i = 0; i < slices.size(); ++i) {
    for (const auto& t : slices[i]) {
      try {
        GradedSchurTerm term{MultiPartition::parse(t.at("module").get<std::string>()), bigint_from(t.value("mult", json(1))),
                             static_cast<int>(i), t.at("degree").get<std::int64_t>()};
        if (term.multiplicity <= 0) throw Error("slice " + std::to_string(i) + ": multiplicity must be positive");
        terms[i].push_back(std::move(term));
      } catch (const json::exception& e) {
        throw Error("slice " + std::to_string(i) + ": " + e.what());
      }
    }
  }
  auto out = EquivariantResolution::from_slices(config_from(j.at("config")), std::move(terms));
  out.validate();
  return out;
}

}  // namespace detail

std::string resolution_to_json(const EquivariantResolution& r, int indent) { return detail::to_json(r).dump(indent); }

EquivariantResolution resolution_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  return detail::resolution_from(j);
}

EquivariantResolution read_resolution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return resolution_from_json(buf.str());
}

void write_resolution(const std::filesystem::path& path, const EquivariantResolution& r) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << resolution_to_json(r) << '\n';
}

}  // namespace secres
