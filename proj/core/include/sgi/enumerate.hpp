#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sgi/signed_graph.hpp"

namespace sgi {

/// Hard cap on exhaustive enumeration; beyond this the class counts explode.
inline constexpr int kEnumerationCap = 8;

/// Canonical form of the underlying graph (signs ignored): the minimum packed
/// adjacency bit-string over all vertex relabelings. Equal keys <=> isomorphic
/// underlying graphs. Requires order <= kEnumerationCap.
std::uint64_t canonical_key(const SignedGraph& g);

/// Exactly one all-positive representative per isomorphism class of simple
/// graphs on n vertices (connected classes only when requested), sorted by
/// (edge count, canonical key). Built level by level: every class on n
/// vertices arises by attaching a new vertex to some class on n - 1.
/// 1 <= n <= kEnumerationCap, refused otherwise.
std::vector<SignedGraph> enumerate_underlying_graphs(int n, bool connected_only);

/// Representatives of every switching class of signatures on g's underlying
/// graph: a fixed spanning forest keeps sign +, and the theta remaining edges
/// run through all 2^theta sign patterns in mask order (bit b of the mask
/// flips the b-th non-forest edge). Every signature of g is switching
/// equivalent to exactly one emitted graph. The stream stops early when the
/// callback returns false.
void for_each_signature_representative(const SignedGraph& g,
                                       const std::function<bool(const SignedGraph&)>& fn);

std::vector<SignedGraph> signature_representatives(const SignedGraph& g);

}  // namespace sgi
