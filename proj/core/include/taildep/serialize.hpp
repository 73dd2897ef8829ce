#pragma once

#include <string>
#include <vector>

#include "taildep/clef.hpp"
#include "taildep/damex.hpp"
#include "taildep/experiments.hpp"
#include "taildep/simulation.hpp"

namespace taildep {

// JSON encodings of the report types. Feature indices are 1-based in all
// serialized output; undefined reals become null.

std::string discovery_report_json(const DiscoveryReport& report);

std::string cone_masses_json(const std::vector<ConeMass>& cones,
                             const DamexConfig& cfg);

std::string structure_json(const DependenceStructure& structure,
                           const StructureGenConfig& cfg, std::uint64_t seed);
DependenceStructure structure_from_json(const std::string& text);

std::string metrics_json(const Metrics& metrics);

std::string benchmark_report_json(const BenchmarkReport& report);

// Extracts the discovered family from a serialized report: the "maximal"
// array of a discovery report, the cone features of a DAMEX report, or a
// bare "subsets" array (ground-truth format).
std::vector<FeatureSet> family_from_json(const std::string& text);

}  // namespace taildep
