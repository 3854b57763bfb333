#pragma once

#include <utility>
#include <vector>

#include "racg/completion.hpp"
#include "racg/complex.hpp"
#include "racg/partite.hpp"

namespace racg {

/// Maps of the generalized complex back onto its source: every member of a
/// generalized edge maps onto the one source edge it replaces.
struct Correspondence {
  std::vector<std::pair<int, int>> vertex_map;  // generalized vertex -> source vertex
  std::vector<std::pair<int, int>> edge_map;    // generalized edge -> source edge
};

struct Generalization {
  CubeComplex complex;
  Correspondence corr;

  explicit Generalization(CubeComplex c) : complex(std::move(c)) {}
};

/// Replaces each edge labeled by a base vertex s_i with |A_i| parallel edges
/// labeled by the members of the part A_i, and each d-cube with one cube per
/// label tuple spanning a d-clique of the partite graph. Duplicate-boundary
/// source cubes contribute a single cube per tuple.
Generalization generalize_complex(const CubeComplex& sigma, const PartiteGraph& p);

/// Inverse of generalization on 1-skeleta: collapses every parallel class
/// realizing a part back to a single edge with the part's base label. Throws
/// NotAGeneralization when a parallel class does not exactly realize a part.
CubeComplex collapse(const CubeComplex& generalized, const PartiteGraph& p);

/// Free basis of the fundamental group of the generalized rose: fundamental
/// loop labels of the non-tree edges of the breadth-first spanning tree (in
/// canonical edge order) from the base. Count = |E| - |V| + 1.
std::vector<Word> generalize_generators(const std::vector<Word>& generators,
                                        const SimplicialGraph& g, const PartiteGraph& p);

/// Letterwise projection a -> s_i for a in A_i; a surjective homomorphism
/// from the partite group onto the base group.
Word project_word(const Word& w, const PartiteGraph& p);

/// Completes the generalized rose and compares it (as a based complex) with
/// the generalization of the completed rose. Throws BudgetExceeded when
/// either completion fails to finish within the budget.
bool commutation_check(const std::vector<Word>& generators, const SimplicialGraph& g,
                       const PartiteGraph& p, const Budget& budget);

}  // namespace racg
