#pragma once

// JSON form of an equivariant resolution:
// {"config":{"a":[...],"r":[...]},
//  "slices":[[{"module":"[p];[q]","mult":m,"degree":d},...],...]}

#include <filesystem>
#include <string>
#include <string_view>

#include "secres/weyman.hpp"

namespace secres {

std::string resolution_to_json(const EquivariantResolution& r, int indent = 2);
/// Parses and validates; throws Error with the offending field on failure.
EquivariantResolution resolution_from_json(std::string_view text);

EquivariantResolution read_resolution(const std::filesystem::path& path);
void write_resolution(const std::filesystem::path& path, const EquivariantResolution& r);

}  // namespace secres
