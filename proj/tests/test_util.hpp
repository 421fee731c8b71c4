#pragma once

#include "sgi/signed_graph.hpp"

namespace sgi::test {

// Two triangles {0,1,2} and {0,3,4} sharing vertex 0. The tree edges carry +;
// s1 and s2 sign the closing edges 1-2 and 3-4.
inline SignedGraph bowtie(int s1 = 1, int s2 = 1) {
    return SignedGraph(5, {{0, 1, 1}, {0, 2, 1}, {1, 2, s1}, {0, 3, 1}, {0, 4, 1}, {3, 4, s2}});
}

// Star with center 0 and three leaves.
inline SignedGraph star3() { return SignedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}); }

}  // namespace sgi::test
