#pragma once

#include <string>

#include <json.hpp>

#include "k3inv/pairs.hpp"

namespace k3inv {

using nlohmann::json;

/// {"name": string, "gram": [[int,...],...], "labels": [string,...]?}
/// Rejects non-square or asymmetric gram with a diagnostic naming the
/// offending entry.
IntegerLattice lattice_from_json(const json& j);
json lattice_to_json(const IntegerLattice& l, const std::string& name);

/// {"matrix": [[int,...] x 22]} over the K3 lattice; columns are images of the
/// standard basis. Verifies the isometry condition and reports the first
/// violated inner product.
LatticeIsometry isometry_from_json(const json& j);
json isometry_to_json(const LatticeIsometry& m);

/// {"components":[{"type":"A","n":1,"count":3},...]}
json ade_config_to_json(const AdeConfig& c);

/// {"x":{"base":[rat x 22],"perturb":[[rat x 22],...]},"y":...,"z":...}
/// with rationals encoded as "p/q" strings (plain integers allowed on input).
PeriodSpec period_spec_from_json(const json& j);
json period_spec_to_json(const PeriodSpec& spec);

IntegerLattice load_lattice_file(const std::string& path);
LatticeIsometry load_isometry_file(const std::string& path);

} // namespace k3inv
