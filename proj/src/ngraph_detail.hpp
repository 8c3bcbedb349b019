#pragma once

#include <vector>

#include "weave/ngraph.hpp"

namespace weave::detail {

struct CycleEnd {
    int vertex;
    int half;  // half-edge of the cycle at the end vertex
};

// Vertices along an edge path; `from` fixes the start vertex when given.
std::vector<int> path_vertices(const NGraph& g, const std::vector<int>& edges, int from = -1);
int y_center(const NGraph& g, const CycleSpec& c);
std::vector<CycleEnd> cycle_ends(const NGraph& g, const CycleSpec& c);
std::vector<int> cycle_interior(const NGraph& g, const CycleSpec& c);
std::vector<int> cycle_edges(const CycleSpec& c);
// Validates all cycles, turning failures into UnsupportedConfiguration.
void revalidate(const WeaveData& w, const char* what);

}  // namespace weave::detail
