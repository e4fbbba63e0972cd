#pragma once

#include <vector>

#include "steinerline/graph.hpp"

namespace steinerline {

// Classification of a connected subgraph by |E| against |V|.
// Tree: |E| = |V|-1. Unicyclic: |E| = |V|. Heavy: |E| >= |V|+1.
enum class ComponentClass { Tree, Unicyclic, Heavy };

const char* component_class_name(ComponentClass c);

// Maximal connected pieces, ordered by smallest contained vertex id.
std::vector<Subgraph> connected_components(const Subgraph& s);
std::vector<Subgraph> connected_components(const Graph& g);

ComponentClass classify_component(const Subgraph& c);

// Edges of the unique cycle of a unicyclic subgraph, ascending.
std::vector<EdgeId> cycle_edge_set(const Subgraph& c);

} // namespace steinerline
