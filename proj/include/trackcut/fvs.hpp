#pragma once

#include "trackcut/graph.hpp"

namespace trackcut {

/// Factor-2 weighted feedback vertex set by the local-ratio scheme: prune
/// vertices of degree <= 1, subtract weight along a semidisjoint cycle if one
/// exists (otherwise proportionally to degree - 1 on the whole core), move
/// zero-weight vertices to the solution, repeat; finish with reverse-delete so
/// the result is inclusion-minimal. Ties go to the lowest vertex index.
VertexSelection approx_fvs(const WeightedGraph& g);

}  // namespace trackcut
