#pragma once

#include "lcsk/algebra.hpp"

namespace lcsk {

// Rank-1 even algebra with [L_x L] = (d + 2x) L.
AlgebraPtr virasoro();

// Rank-2 super extension: even L, odd G;
// [L_x L] = (d + 2x) L, [L_x G] = (d + 3/2 x) G,
// [G_x L] = (1/2 d + 3/2 x) G, [G_x G] = 2 L.
AlgebraPtr neveu_schwarz();

// Rank-n algebra with every bracket zero. All generators even.
AlgebraPtr abelian(int rank);

// Current-type algebra of a finite-dimensional Lie algebra given by constant
// structure coefficients c[i][j][k]: [a_x b] = [a,b], no d or x dependence.
AlgebraPtr current_lie(std::string name, std::vector<std::string> gen_names,
                       const std::vector<std::vector<std::vector<Rat>>>& c);

// current_lie on sl2 with basis {e, h, f}: [h,e]=2e, [h,f]=-2f, [e,f]=h.
AlgebraPtr cur_sl2();

} // namespace lcsk
