#pragma once

#include <string>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// The Vamos matroid: 8 elements, rank 4, bases are all 4-subsets except
/// {1,2,3,4}, {1,2,5,6}, {1,2,7,8}, {3,4,5,6}, {3,4,7,8} in 1-based labels.
/// Elements carry labels "1".."8".
Matroid vamos();

/// U_{r,n}: every subset of size < r is a flat, plus the full set.
Matroid uniform(int r, int n);

/// The free matroid U_{n,n}: every subset is a flat.
Matroid boolean_matroid(int n);

/// The projective space PG(3,q) for q in {2,3}, as the matroid of 1-dim
/// subspaces of GF(q)^4. Elements are labelled by normalized coordinates.
Matroid pg3(int q);

/// Parses "vamos", "uniform(r,n)", "boolean(n)" or "pg3(q)".
/// Throws UnknownCatalogEntry / UnsupportedParam.
Matroid catalog(const std::string& spec);

}  // namespace matroidlab
