#pragma once

#include "lcsk/algebra.hpp"
#include "lcsk/comm_algebra.hpp"

namespace lcsk {

// How a linear map treats the partial variable.
//   PartialCommuting: entries are polynomials in d only and the map commutes
//     with d: m(d x) = d m(x). The default everywhere.
//   LambdaShifted: entries may also mention the canonical spectral variable
//     and the map obeys m_lam(d x) = (d + lam) m_lam(x). Experimental.
enum class Convention { PartialCommuting, LambdaShifted };

// Matrix-valued conformal-linear map on a fixed algebra: out_k = sum_i
// entry[k][i] * in_i (with the convention's d-rule applied to the input).
class LinearConfMap {
public:
    static LinearConfMap make(AlgebraPtr alg, std::vector<std::vector<SPoly>> entries,
                              Parity parity, Convention conv);
    static LinearConfMap identity(AlgebraPtr alg);
    static LinearConfMap zero(AlgebraPtr alg, Parity parity = Parity::Even,
                              Convention conv = Convention::PartialCommuting);

    const AlgebraPtr& algebra() const { return alg_; }
    const SPoly& entry(int k, int i) const {
        return entries_[static_cast<size_t>(k)][static_cast<size_t>(i)];
    }
    Parity parity() const { return parity_; }
    Convention convention() const { return conv_; }
    bool is_zero() const;
    std::string str() const;

private:
    LinearConfMap() = default;
    AlgebraPtr alg_;
    std::vector<std::vector<SPoly>> entries_; // [output k][input i]
    Parity parity_ = Parity::Even;
    Convention conv_ = Convention::PartialCommuting;
};

// Tensor-valued conformal-bilinear map: applied with exactly the bracket's
// evaluation rule, with tensor[i][j][k] polynomials in (d, x).
class BilinearConfMap {
public:
    static BilinearConfMap make(AlgebraPtr alg, StructureTable tensor, Parity parity);
    // The bracket itself, as a bilinear map (tensor = structure table).
    static BilinearConfMap bracket_map(AlgebraPtr alg);
    static BilinearConfMap zero(AlgebraPtr alg, Parity parity = Parity::Even);

    const AlgebraPtr& algebra() const { return alg_; }
    const StructureTable& tensor() const { return tensor_; }
    const SPoly& entry(int i, int j, int k) const {
        return tensor_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
    }
    Parity parity() const { return parity_; }
    bool is_zero() const;
    std::string str() const;

private:
    BilinearConfMap() = default;
    AlgebraPtr alg_;
    StructureTable tensor_;
    Parity parity_ = Parity::Even;
};

// Apply a linear map. For LambdaShifted maps the spectral parameter is the
// canonical variable x (substitute afterwards if another is needed).
ConformalElement apply_linear(const LinearConfMap& m, const ConformalElement& x);

// Apply a bilinear map at a spectral variable / affine expression.
ConformalElement apply_bilinear(const BilinearConfMap& m, const ConformalElement& x,
                                const ConformalElement& y, VarId at);
ConformalElement apply_bilinear_at(const BilinearConfMap& m, const ConformalElement& x,
                                   const ConformalElement& y, const Affine& at);

// Compose a linear map with the bracket: alpha([x _at y]) as a bilinear map
// tensor (entries U[i][j][k] = sum_m entry[k][m] * S[i][j][m], with the
// convention's d-rule folded in). Only PartialCommuting maps compose this way.
BilinearConfMap compose_with_bracket(const LinearConfMap& alpha);

// Lift of a coefficient multiplication onto a tensor algebra: the map
// e_(i,s) -> sum_w M[w][s] e_(i,w) with M = mult_operator(a), PartialCommuting
// and even. `la` must be tensor_current(l, a) with l of rank `rank_l`.
LinearConfMap mult_lift(const AlgebraPtr& la, const CommutativeAlgebra& a, int rank_l,
                        const std::vector<Rat>& elem);

// Lift alpha (x) mult_a: e_(i,s) -> sum_{k,w} alpha[k][i] M[w][s] e_(k,w).
LinearConfMap tensor_map_lift(const AlgebraPtr& la, const LinearConfMap& alpha,
                              const CommutativeAlgebra& a, const std::vector<Rat>& elem);

} // namespace lcsk
