#ifndef EFFORGE_JSON_IO_HPP
#define EFFORGE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "efforge/certificate.hpp"
#include "efforge/hash_family.hpp"
#include "efforge/polyhedra.hpp"

namespace efforge {

// Field order is fixed (ordered_json) and rationals travel as exact strings,
// so serialization is bit-stable across runs.
using Json = nlohmann::ordered_json;

Json formulation_to_json(const ExtendedFormulation& ef);
ExtendedFormulation formulation_from_json(const Json& j);

Json hash_family_to_json(const HashFamily& family);
HashFamily hash_family_from_json(const Json& j);

Json certificate_to_json(const SymmetryCertificate& cert);

Json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j);

std::string dump_json(const Json& j);
Json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace efforge

#endif
