#pragma once

#include "lcsk/current.hpp"
#include "lcsk/solvers.hpp"

namespace lcsk {

struct VerifierReport {
    std::string name;
    bool applicable = true; // false when a precondition (centerless, perfect) fails
    bool passed = false;
    std::vector<AxiomResidual> residuals; // witnesses, when meaningful
    std::vector<std::string> notes;       // dims, decompositions, precondition info
};

// Swap identity: [(phi_x(a,b)) _{x+mu} [c _gamma e]] equals
// [[a _x b] _{x+mu} phi_gamma(c,e)] on all generator quadruples.
VerifierReport verify_swap_identity(const BilinearConfMap& phi);

// Residual [phi_x(a,b) _{x+mu} c] - phi_{x+mu}([a _x b], c) on all triples
// must vanish or land in the center (decided exactly, by bracketing the
// residual against every generator at a fresh spectral variable).
VerifierReport verify_centralizer_residual(const BilinearConfMap& phi);

// On a centerless, perfect algebra (checked at deg_d), every solved
// biderivation must decompose over {alpha o bracket : alpha in centroid} and
// the dimensions must match.
VerifierReport verify_centroid_form(const AlgebraPtr& alg, int deg_d, int deg_l);

// On L (x) A with L centerless (checked at deg_d), every solved biderivation
// of the tensor algebra must be a sum over basis coefficients t of
// (alpha_t o bracket) (x) (t . a . b) with alpha_t in the centroid of L.
VerifierReport verify_current_decomposition(const AlgebraPtr& l, const CommutativeAlgebra& a,
                                            int deg_d, int deg_l);

// Polarized form of the commuting condition on all generator pairs:
// [psi(u) _{x+mu} v] = (-1)^{|u|(|psi|+|v|)} [u _kappa psi(v)] | kappa -> -d-x-mu.
VerifierReport verify_polarization(const LinearConfMap& psi);

// On a centerless algebra every solved commuting map must lie in the solved
// centroid span (both at deg_d).
VerifierReport verify_commuting_in_centroid(const AlgebraPtr& alg, int deg_d);

} // namespace lcsk
