#pragma once

#include <string>
#include <vector>

#include "fareybary/geometry.hpp"

namespace fareybary {

enum class PartitionKind { Farey, Bary };

PartitionKind partition_kind_from_name(const std::string& name);

// The 3^raw_depth leaves of the chosen partition, depth-first in
// case order I, II, III (deterministic).
std::vector<TriangleState> partition_triangles(PartitionKind kind, int raw_depth);

// Deterministic SVG 1.1 wireframe of the partition; byte-identical for
// identical inputs. scale is the pixel size of the unit square.
std::string render_partition(PartitionKind kind, int raw_depth, int scale = 720);

// Default ceiling for render depth; FAREYBARY_MAX_RENDER_DEPTH overrides.
int max_render_depth();

}  // namespace fareybary
