#pragma once

#include <vector>

#include "gkz/numbers.hpp"

namespace gkz {

/// Incremental (placing) triangulation of a finite point set in Z^k.
///
/// Points are inserted in the given order. A point outside the current hull
/// is joined to every boundary facet it sees; a point inside is handled by
/// splitting every simplex containing it. Every input point therefore ends
/// up as a vertex of the triangulation, which is what a fine (fully refined)
/// subdivision requires.
///
/// Points must be pairwise distinct and affinely span R^k. Returns simplices
/// as sorted (k+1)-tuples of point indices.
std::vector<std::vector<size_t>> placing_triangulation(const std::vector<IVec>& points,
                                                       const std::vector<size_t>& order);

/// Insertion order helpers. Lexicographic order is the canonical choice.
std::vector<size_t> lex_insertion_order(const std::vector<IVec>& points);
std::vector<size_t> reverse_lex_insertion_order(const std::vector<IVec>& points);
/// Deterministic pseudo-random order (own LCG; stable across platforms).
std::vector<size_t> seeded_insertion_order(const std::vector<IVec>& points, unsigned long seed);

/// Coordinates of the given points in a lattice basis of the affine lattice
/// they generate; the first point maps to the origin. The output dimension is
/// the affine rank of the set.
std::vector<IVec> affine_lattice_coordinates(const std::vector<IVec>& points);

}  // namespace gkz
