#include "lcsk/conformal_maps.hpp"

#include "lcsk/current.hpp"
#include "lcsk/errors.hpp"

namespace lcsk {

namespace {

void check_entry_vars(const SPoly& p, const VarTablePtr& tab, bool allow_lambda,
                      const std::string& where) {
    if (p.table().get() != tab.get())
        throw ConstructionError(where + ": polynomial over a foreign registry");
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");
    for (const auto& [e, c] : p.terms())
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            bool ok = static_cast<int>(v) == d.index ||
                      (allow_lambda && static_cast<int>(v) == lam.index);
            if (!ok)
                throw ConstructionError(where + ": entry mentions a variable outside the " +
                                        (allow_lambda ? "(d, x)" : "(d)") + " alphabet");
        }
}

} // namespace

LinearConfMap LinearConfMap::make(AlgebraPtr alg, std::vector<std::vector<SPoly>> entries,
                                  Parity parity, Convention conv) {
    const int r = alg->rank();
    if (static_cast<int>(entries.size()) != r)
        throw ConstructionError("linear map matrix has wrong row count");
    for (int k = 0; k < r; ++k) {
        if (static_cast<int>(entries[static_cast<size_t>(k)].size()) != r)
            throw ConstructionError("linear map matrix has wrong column count");
        for (int i = 0; i < r; ++i) {
            const SPoly& p = entries[static_cast<size_t>(k)][static_cast<size_t>(i)];
            check_entry_vars(p, alg->vars(), conv == Convention::LambdaShifted,
                             "linear map entry (" + alg->gen_name(k) + "," + alg->gen_name(i) + ")");
            if (!p.is_zero() && alg->parity(k) != parity_add(alg->parity(i), parity))
                throw ConstructionError("linear map parity violation at entry (" +
                                        alg->gen_name(k) + "," + alg->gen_name(i) + ")");
        }
    }
    LinearConfMap m;
    m.alg_ = std::move(alg);
    m.entries_ = std::move(entries);
    m.parity_ = parity;
    m.conv_ = conv;
    return m;
}

LinearConfMap LinearConfMap::identity(AlgebraPtr alg) {
    const int r = alg->rank();
    std::vector<std::vector<SPoly>> e(static_cast<size_t>(r),
                                      std::vector<SPoly>(static_cast<size_t>(r),
                                                         SPoly(alg->vars())));
    for (int i = 0; i < r; ++i)
        e[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            SPoly::constant(alg->vars(), Rat(1));
    return make(std::move(alg), std::move(e), Parity::Even, Convention::PartialCommuting);
}

LinearConfMap LinearConfMap::zero(AlgebraPtr alg, Parity parity, Convention conv) {
    const int r = alg->rank();
    std::vector<std::vector<SPoly>> e(static_cast<size_t>(r),
                                      std::vector<SPoly>(static_cast<size_t>(r),
                                                         SPoly(alg->vars())));
    return make(std::move(alg), std::move(e), parity, conv);
}

bool LinearConfMap::is_zero() const {
    for (const auto& row : entries_)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

std::string LinearConfMap::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < alg_->rank(); ++i) {
        std::vector<SPoly> col;
        bool any = false;
        for (int k = 0; k < alg_->rank(); ++k)
            if (!entry(k, i).is_zero()) any = true;
        if (!any) continue;
        if (!out.empty()) out += "; ";
        out += alg_->gen_name(i) + " -> ";
        std::vector<SPoly> coeffs;
        for (int k = 0; k < alg_->rank(); ++k) coeffs.push_back(entry(k, i));
        out += ConformalElement(alg_, std::move(coeffs)).str();
    }
    return out;
}

BilinearConfMap BilinearConfMap::make(AlgebraPtr alg, StructureTable tensor, Parity parity) {
    const int r = alg->rank();
    if (static_cast<int>(tensor.size()) != r)
        throw ConstructionError("bilinear map tensor has wrong shape");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(tensor[static_cast<size_t>(i)].size()) != r)
            throw ConstructionError("bilinear map tensor has wrong shape");
        for (int j = 0; j < r; ++j) {
            if (static_cast<int>(tensor[static_cast<size_t>(i)][static_cast<size_t>(j)].size()) != r)
                throw ConstructionError("bilinear map tensor has wrong shape");
            for (int k = 0; k < r; ++k) {
                const SPoly& p =
                    tensor[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
                check_entry_vars(p, alg->vars(), true,
                                 "bilinear map entry (" + alg->gen_name(i) + "," +
                                     alg->gen_name(j) + "," + alg->gen_name(k) + ")");
                if (!p.is_zero() &&
                    alg->parity(k) !=
                        parity_add(parity_add(alg->parity(i), alg->parity(j)), parity))
                    throw ConstructionError("bilinear map parity violation at entry (" +
                                            alg->gen_name(i) + "," + alg->gen_name(j) + "," +
                                            alg->gen_name(k) + ")");
            }
        }
    }
    BilinearConfMap m;
    m.alg_ = std::move(alg);
    m.tensor_ = std::move(tensor);
    m.parity_ = parity;
    return m;
}

BilinearConfMap BilinearConfMap::bracket_map(AlgebraPtr alg) {
    StructureTable t = alg->structure();
    return make(std::move(alg), std::move(t), Parity::Even);
}

BilinearConfMap BilinearConfMap::zero(AlgebraPtr alg, Parity parity) {
    const int r = alg->rank();
    StructureTable t(static_cast<size_t>(r),
                     std::vector<std::vector<SPoly>>(
                         static_cast<size_t>(r),
                         std::vector<SPoly>(static_cast<size_t>(r), SPoly(alg->vars()))));
    return make(std::move(alg), std::move(t), parity);
}

bool BilinearConfMap::is_zero() const {
    for (const auto& plane : tensor_)
        for (const auto& row : plane)
            for (const auto& p : row)
                if (!p.is_zero()) return false;
    return true;
}

std::string BilinearConfMap::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < alg_->rank(); ++i)
        for (int j = 0; j < alg_->rank(); ++j) {
            bool any = false;
            for (int k = 0; k < alg_->rank(); ++k)
                if (!entry(i, j, k).is_zero()) any = true;
            if (!any) continue;
            if (!out.empty()) out += "; ";
            std::vector<SPoly> coeffs;
            for (int k = 0; k < alg_->rank(); ++k) coeffs.push_back(entry(i, j, k));
            out += "(" + alg_->gen_name(i) + "," + alg_->gen_name(j) + ") -> " +
                   ConformalElement(alg_, std::move(coeffs)).str();
        }
    return out;
}

ConformalElement apply_linear(const LinearConfMap& m, const ConformalElement& x) {
    const AlgebraPtr& alg = m.algebra();
    if (x.algebra().get() != alg.get())
        throw UsageError("applying a map to an element of a different algebra");
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");

    std::vector<SPoly> in = x.coeffs();
    if (m.convention() == Convention::LambdaShifted) {
        Affine shift = Affine::var(tab, d) + Affine::var(tab, lam);
        for (auto& p : in)
            if (!p.is_zero()) p = p.substituted(d, shift);
    }
    std::vector<SPoly> out(static_cast<size_t>(alg->rank()), SPoly(tab));
    for (int k = 0; k < alg->rank(); ++k)
        for (int i = 0; i < alg->rank(); ++i) {
            const SPoly& e = m.entry(k, i);
            if (e.is_zero() || in[static_cast<size_t>(i)].is_zero()) continue;
            out[static_cast<size_t>(k)] += e * in[static_cast<size_t>(i)];
        }
    return ConformalElement(alg, std::move(out));
}

ConformalElement apply_bilinear_at(const BilinearConfMap& m, const ConformalElement& x,
                                   const ConformalElement& y, const Affine& at) {
    const AlgebraPtr& alg = m.algebra();
    if (x.algebra().get() != alg.get() || y.algebra().get() != alg.get())
        throw UsageError("applying a map to elements of a different algebra");
    if (at.table.get() != alg->vars().get())
        throw UsageError("evaluation target over a foreign registry");
    std::vector<SPoly> out = eval_bilinear_table(m.tensor(), alg->lambda(),
                                                 x.coeffs(), y.coeffs(), at);
    if (out.empty()) out.assign(static_cast<size_t>(alg->rank()), SPoly(alg->vars()));
    return ConformalElement(alg, std::move(out));
}

ConformalElement apply_bilinear(const BilinearConfMap& m, const ConformalElement& x,
                                const ConformalElement& y, VarId at) {
    if (m.algebra()->vars()->kind(at) != VarKind::Spectral)
        throw UsageError("bilinear maps evaluate at spectral variables");
    return apply_bilinear_at(m, x, y, Affine::var(m.algebra()->vars(), at));
}

BilinearConfMap compose_with_bracket(const LinearConfMap& alpha) {
    if (alpha.convention() != Convention::PartialCommuting)
        throw UsageError("only partial-commuting maps compose naturally with the bracket");
    const AlgebraPtr& alg = alpha.algebra();
    const int r = alg->rank();
    StructureTable t(static_cast<size_t>(r),
                     std::vector<std::vector<SPoly>>(
                         static_cast<size_t>(r),
                         std::vector<SPoly>(static_cast<size_t>(r), SPoly(alg->vars()))));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                SPoly acc(alg->vars());
                for (int mm = 0; mm < r; ++mm) {
                    const SPoly& a = alpha.entry(k, mm);
                    const SPoly& s = alg->structure(i, j, mm);
                    if (a.is_zero() || s.is_zero()) continue;
                    acc += a * s;
                }
                t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    std::move(acc);
            }
    return BilinearConfMap::make(alg, std::move(t), alpha.parity());
}

LinearConfMap mult_lift(const AlgebraPtr& la, const CommutativeAlgebra& a, int rank_l,
                        const std::vector<Rat>& elem) {
    if (la->rank() != rank_l * a.dim())
        throw UsageError("tensor algebra rank does not match rank_l * dim(A)");
    linalg::RatMatrix m = a.mult_operator(elem);
    const int r = la->rank();
    std::vector<std::vector<SPoly>> e(static_cast<size_t>(r),
                                      std::vector<SPoly>(static_cast<size_t>(r),
                                                         SPoly(la->vars())));
    for (int i = 0; i < rank_l; ++i)
        for (int s = 0; s < a.dim(); ++s)
            for (int w = 0; w < a.dim(); ++w)
                if (!rat_is_zero(m.at(w, s)))
                    e[static_cast<size_t>(tensor_index(i, w, a.dim()))]
                     [static_cast<size_t>(tensor_index(i, s, a.dim()))] =
                        SPoly::constant(la->vars(), m.at(w, s));
    return LinearConfMap::make(la, std::move(e), Parity::Even, Convention::PartialCommuting);
}

LinearConfMap tensor_map_lift(const AlgebraPtr& la, const LinearConfMap& alpha,
                              const CommutativeAlgebra& a, const std::vector<Rat>& elem) {
    const int rank_l = alpha.algebra()->rank();
    if (la->rank() != rank_l * a.dim())
        throw UsageError("tensor algebra rank does not match rank_l * dim(A)");
    if (alpha.convention() != Convention::PartialCommuting)
        throw UsageError("tensor lift is defined for partial-commuting maps");
    linalg::RatMatrix m = a.mult_operator(elem);
    const int r = la->rank();
    std::vector<std::vector<SPoly>> e(static_cast<size_t>(r),
                                      std::vector<SPoly>(static_cast<size_t>(r),
                                                         SPoly(la->vars())));
    for (int i = 0; i < rank_l; ++i)
        for (int k = 0; k < rank_l; ++k) {
            const SPoly& av = alpha.entry(k, i);
            if (av.is_zero()) continue;
            for (int s = 0; s < a.dim(); ++s)
                for (int w = 0; w < a.dim(); ++w)
                    if (!rat_is_zero(m.at(w, s)))
                        e[static_cast<size_t>(tensor_index(k, w, a.dim()))]
                         [static_cast<size_t>(tensor_index(i, s, a.dim()))] +=
                            av * m.at(w, s);
        }
    return LinearConfMap::make(la, std::move(e), alpha.parity(), Convention::PartialCommuting);
}

} // namespace lcsk
