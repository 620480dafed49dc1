#pragma once

#include "lcsk/conformal_maps.hpp"

#include <tuple>
#include <vector>

namespace lcsk {

// All solvers work the same way: enumerate a degree-bounded ansatz (one
// unknown per allowed matrix/tensor entry and monomial), express the defining
// conditions — which are linear in the unknown map — as an exact sparse
// homogeneous system by evaluating them on unit maps, and return the kernel,
// RREF-normalized over the stacked coefficient vectors so equal solution
// spaces always print identically.

struct CentroidBasis {
    std::vector<LinearConfMap> even, odd;
    int deg_d = 0;
    Convention conv = Convention::PartialCommuting;
    int dim() const { return static_cast<int>(even.size() + odd.size()); }
};

// Maps alpha with alpha([x _mu y]) = (-1)^{|x||alpha|} [x _mu alpha(y)] and
// alpha([x _mu y]) = [alpha(x) _mu y], entry degree bounded by deg_d.
CentroidBasis solve_centroid(const AlgebraPtr& alg, int deg_d,
                             Convention conv = Convention::PartialCommuting);

// Same, but optionally imposing only the right-sided identity; the default
// solver imposes both. Kept separate so tests can confirm one side implies
// the other on concrete algebras.
CentroidBasis solve_centroid_sides(const AlgebraPtr& alg, int deg_d, Convention conv,
                                   bool impose_left);

struct BiderBasis {
    std::vector<BilinearConfMap> even, odd;
    int deg_d = 0, deg_l = 0;
    // The second Leibniz identity is verified on every basis element rather
    // than imposed; violations are reported here.
    bool second_leibniz_ok = true;
    std::vector<AxiomResidual> second_leibniz_residuals;
    int dim() const { return static_cast<int>(even.size() + odd.size()); }
};

// Bilinear maps satisfying the conformal-skew and first Leibniz identities
// (imposed), with the second Leibniz identity verified on the result.
BiderBasis solve_biderivations(const AlgebraPtr& alg, int deg_d, int deg_l);

struct CommutingBasis {
    std::vector<LinearConfMap> basis;
    int deg_d = 0;
    Convention conv = Convention::PartialCommuting;
    int dim() const { return static_cast<int>(basis.size()); }
};

// Parity-preserving maps psi with [psi(u) _{x+mu} v] + [psi(v) _{x+mu} u] = 0
// for all module monomials d^a e_i, d^b e_j with a, b <= deg_d (the polarized
// form of [psi(u) _{x+mu} u] = 0, which is additionally spot-checked on
// deterministic pseudo-random elements).
CommutingBasis solve_commuting(const AlgebraPtr& alg, int deg_d,
                               Convention conv = Convention::PartialCommuting);

// ----- residual evaluators (shared by the solvers, verifiers and tests) -----

// Centroid identities on all generator pairs; right = alpha([x y]) vs
// [x alpha(y)], left = alpha([x y]) vs [alpha(x) y].
std::vector<AxiomResidual> centroid_residuals(const LinearConfMap& m, bool right, bool left);

// Conformal skew of a bilinear map on all generator pairs.
std::vector<AxiomResidual> bider_skew_residuals(const BilinearConfMap& phi);
// First Leibniz identity on all generator triples.
std::vector<AxiomResidual> bider_leibniz1_residuals(const BilinearConfMap& phi);
// Second Leibniz identity on all generator triples.
std::vector<AxiomResidual> bider_leibniz2_residuals(const BilinearConfMap& phi);
// Polarized commuting conditions on module monomials up to deg_d.
std::vector<AxiomResidual> commuting_residuals(const LinearConfMap& psi, int deg_d);

// ----- coordinate plumbing (deterministic ansatz enumeration) -----

// Slots (i input, k output, monomial) of the linear ansatz, input-major,
// monomials ascending graded-lex.
std::vector<std::tuple<int, int, Expo>> linear_slots(const AlgebraPtr& alg, Parity parity,
                                                     int deg_d, Convention conv);
// Slots (i, j, k, monomial) of the bilinear ansatz.
std::vector<std::tuple<int, int, int, Expo>> bilinear_slots(const AlgebraPtr& alg,
                                                            Parity parity, int deg_d,
                                                            int deg_l);

// Coordinates of a map in the slot enumeration at the given bounds. Throws
// when an entry does not fit the bounds.
std::vector<Rat> linear_map_coords(const LinearConfMap& m, int deg_d);
std::vector<Rat> bilinear_map_coords(const BilinearConfMap& m, int deg_d, int deg_l);

LinearConfMap linear_map_from_coords(const AlgebraPtr& alg, Parity parity, int deg_d,
                                     Convention conv, const std::vector<Rat>& coords);
BilinearConfMap bilinear_map_from_coords(const AlgebraPtr& alg, Parity parity, int deg_d,
                                         int deg_l, const std::vector<Rat>& coords);

} // namespace lcsk
