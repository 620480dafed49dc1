#pragma once

#include "lcsk/algebra.hpp"
#include "lcsk/comm_algebra.hpp"

namespace lcsk {

// Tensor construction L (x) A: generators are pairs (generator of L, basis
// element of A) in row-major order (i * dimA + s), parity inherited from L,
// bracket [ (x(x)a) _lam (y(x)b) ] = [x _lam y] (x) ab, i.e. the structure
// entries multiply: S'[(i,s)][(j,t)][(k,w)] = S[i][j][k] * c[s][t][w].
AlgebraPtr tensor_current(const AlgebraPtr& l, const CommutativeAlgebra& a);

// Index helpers for the row-major generator layout of tensor_current.
inline int tensor_index(int i, int s, int dim_a) { return i * dim_a + s; }

} // namespace lcsk
