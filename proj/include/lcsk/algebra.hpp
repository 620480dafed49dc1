#pragma once

#include "lcsk/linalg.hpp"
#include "lcsk/spoly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lcsk {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity parity_add(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
// (-1)^{|a||b|}
inline int parity_sign(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

enum class ElemParity { Even, Odd, Mixed };

class LCSAlgebra;
using AlgebraPtr = std::shared_ptr<const LCSAlgebra>;

// structure[i][j][k] = coefficient of generator k in the bracket of
// generators i and j; a polynomial in the partial variable and the canonical
// spectral variable.
using StructureTable = std::vector<std::vector<std::vector<SPoly>>>;

// Finite-rank Z/2-graded algebra presented by its bracket table over the free
// Q[d]-module on the listed generators. Immutable after construction.
class LCSAlgebra {
public:
    // Validates shape, variable usage (partial + canonical lambda only) and
    // parity consistency: a nonzero entry (i,j,k) needs |k| = |i|+|j| mod 2.
    static AlgebraPtr make(std::string name,
                           std::vector<std::string> gen_names,
                           std::vector<Parity> parities,
                           StructureTable structure);

    int rank() const { return static_cast<int>(parities_.size()); }
    const std::string& name() const { return name_; }
    const std::string& gen_name(int i) const { return gen_names_[static_cast<size_t>(i)]; }
    Parity parity(int i) const { return parities_[static_cast<size_t>(i)]; }
    const SPoly& structure(int i, int j, int k) const;
    const StructureTable& structure() const { return structure_; }
    const VarTablePtr& vars() const { return vars_; }
    VarId lambda() const { return lambda_; }
    VarId partial() const { return vars_->partial(); }

private:
    LCSAlgebra() = default;
    std::string name_;
    std::vector<std::string> gen_names_;
    std::vector<Parity> parities_;
    StructureTable structure_;
    VarTablePtr vars_;
    VarId lambda_;
};

// Q[d]-module element: one polynomial coefficient per generator. Coefficients
// may mention spectral variables when the element arose from a bracket.
class ConformalElement {
public:
    ConformalElement(AlgebraPtr alg, std::vector<SPoly> coeffs);

    static ConformalElement zero(AlgebraPtr alg);
    static ConformalElement generator(AlgebraPtr alg, int i);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<SPoly>& coeffs() const { return coeffs_; }
    const SPoly& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    ElemParity parity() const; // zero counts as Even

    ConformalElement operator+(const ConformalElement& o) const;
    ConformalElement operator-(const ConformalElement& o) const;
    ConformalElement operator-() const;
    ConformalElement operator*(const SPoly& p) const; // scalar multiply
    ConformalElement operator*(const Rat& c) const;
    ConformalElement applied_partial() const; // multiply every coefficient by d

    std::string str() const;

private:
    void check_same(const ConformalElement& o) const;
    AlgebraPtr alg_;
    std::vector<SPoly> coeffs_;
};

// Core evaluation rule shared by the bracket and by bilinear conformal maps:
//   out_k = sum_{i,j} p_i[d -> -nu] * q_j[d -> d + nu] * T[i][j][k][slot -> nu]
// where slot is the spectral variable the table is written in. nu may be any
// affine expression (even one mentioning d, which the skew axiom needs).
std::vector<SPoly> eval_bilinear_table(const StructureTable& table, VarId slot,
                                       const std::vector<SPoly>& xc,
                                       const std::vector<SPoly>& yc,
                                       const Affine& nu);

// Bracket of two elements of the same algebra, evaluated at a spectral
// variable or at an affine combination of spectral variables (and d).
ConformalElement bracket(const ConformalElement& x, const ConformalElement& y, VarId at);
ConformalElement bracket_at(const ConformalElement& x, const ConformalElement& y, const Affine& at);

struct AxiomResidual {
    std::string context; // e.g. "skew(L,G)"
    int generator;       // output slot carrying the residual
    SPoly value;
};

struct AxiomReport {
    std::string axiom;
    bool passed = false;
    std::vector<AxiomResidual> residuals;
};

// Conformal antisymmetry on all generator pairs (exact, no bounds).
AxiomReport check_skew(const AlgebraPtr& alg);
// Jacobi identity on all generator triples (exact, no bounds).
AxiomReport check_jacobi(const AlgebraPtr& alg);

// Elements killed by every generator bracket, with coefficient degree in d
// at most deg_d. Coordinates: index i*(deg_d+1)+a is the coefficient of
// d^a * generator_i.
linalg::SolutionSpace center(const AlgebraPtr& alg, int deg_d);

// Same ansatz, but only against the listed elements.
linalg::SolutionSpace centralizer(const AlgebraPtr& alg,
                                  const std::vector<ConformalElement>& against,
                                  int deg_d);

// Rebuild an element from center/centralizer coordinates.
ConformalElement module_element(const AlgebraPtr& alg, int deg_d, const std::vector<Rat>& coords);

struct PerfectnessReport {
    bool perfect = false;
    int witness_generator = -1; // generator outside the bracket span, if any
    int bound = 0;
};

// Does every generator lie in the Q[d]-span of bracket coefficients, with
// multiplier degree at most deg_d?
PerfectnessReport is_perfect(const AlgebraPtr& alg, int deg_d);

} // namespace lcsk
