#include "lcsk/algebra.hpp"

#include "lcsk/errors.hpp"

#include <set>

namespace lcsk {

AlgebraPtr LCSAlgebra::make(std::string name,
                            std::vector<std::string> gen_names,
                            std::vector<Parity> parities,
                            StructureTable structure) {
    const size_t r = gen_names.size();
    if (parities.size() != r)
        throw ConstructionError("generator/parity count mismatch");
    {
        std::set<std::string> seen;
        for (const auto& g : gen_names) {
            if (g.empty()) throw ConstructionError("empty generator name");
            if (!seen.insert(g).second) throw ConstructionError("duplicate generator name: " + g);
        }
    }
    if (structure.size() != r)
        throw ConstructionError("structure table has wrong first dimension");

    const VarTablePtr& tab = VarTable::standard();
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");

    for (size_t i = 0; i < r; ++i) {
        if (structure[i].size() != r)
            throw ConstructionError("structure table has wrong second dimension at row " +
                                    std::to_string(i));
        for (size_t j = 0; j < r; ++j) {
            if (structure[i][j].size() != r)
                throw ConstructionError("structure entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") has wrong length");
            for (size_t k = 0; k < r; ++k) {
                const SPoly& p = structure[i][j][k];
                if (p.table().get() != tab.get())
                    throw ConstructionError("structure polynomial over a foreign registry");
                if (p.is_zero()) continue;
                for (const auto& [e, c] : p.terms()) {
                    for (size_t v = 0; v < e.size(); ++v) {
                        if (e[v] == 0) continue;
                        if (static_cast<int>(v) != d.index && static_cast<int>(v) != lam.index)
                            throw ConstructionError(
                                "structure entry (" + gen_names[i] + "," + gen_names[j] +
                                ") mentions a variable other than d and x");
                    }
                }
                Parity want = parity_add(parities[i], parities[j]);
                if (parities[k] != want)
                    throw ConstructionError(
                        "parity violation: bracket of " + gen_names[i] + " and " + gen_names[j] +
                        " has a component on " + gen_names[k]);
            }
        }
    }

    auto alg = std::shared_ptr<LCSAlgebra>(new LCSAlgebra());
    alg->name_ = std::move(name);
    alg->gen_names_ = std::move(gen_names);
    alg->parities_ = std::move(parities);
    alg->structure_ = std::move(structure);
    alg->vars_ = tab;
    alg->lambda_ = lam;
    return alg;
}

const SPoly& LCSAlgebra::structure(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= rank() || j >= rank() || k >= rank())
        throw UsageError("generator index out of range");
    return structure_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
}

ConformalElement::ConformalElement(AlgebraPtr alg, std::vector<SPoly> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != alg_->rank())
        throw UsageError("coefficient count does not match algebra rank");
    for (const auto& p : coeffs_)
        if (p.table().get() != alg_->vars().get())
            throw UsageError("element coefficient over a foreign registry");
}

ConformalElement ConformalElement::zero(AlgebraPtr alg) {
    std::vector<SPoly> c(static_cast<size_t>(alg->rank()), SPoly(alg->vars()));
    return ConformalElement(std::move(alg), std::move(c));
}

ConformalElement ConformalElement::generator(AlgebraPtr alg, int i) {
    if (i < 0 || i >= alg->rank()) throw UsageError("generator index out of range");
    std::vector<SPoly> c(static_cast<size_t>(alg->rank()), SPoly(alg->vars()));
    c[static_cast<size_t>(i)] = SPoly::constant(alg->vars(), Rat(1));
    return ConformalElement(std::move(alg), std::move(c));
}

void ConformalElement::check_same(const ConformalElement& o) const {
    if (alg_.get() != o.alg_.get()) throw UsageError("elements over different algebras");
}

bool ConformalElement::is_zero() const {
    for (const auto& p : coeffs_)
        if (!p.is_zero()) return false;
    return true;
}

ElemParity ConformalElement::parity() const {
    bool has_even = false, has_odd = false;
    for (int i = 0; i < alg_->rank(); ++i) {
        if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        (alg_->parity(i) == Parity::Even ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return ElemParity::Mixed;
    if (has_odd) return ElemParity::Odd;
    return ElemParity::Even;
}

ConformalElement ConformalElement::operator+(const ConformalElement& o) const {
    check_same(o);
    std::vector<SPoly> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return ConformalElement(alg_, std::move(c));
}

ConformalElement ConformalElement::operator-(const ConformalElement& o) const {
    check_same(o);
    std::vector<SPoly> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return ConformalElement(alg_, std::move(c));
}

ConformalElement ConformalElement::operator-() const {
    std::vector<SPoly> c = coeffs_;
    for (auto& p : c) p = -p;
    return ConformalElement(alg_, std::move(c));
}

ConformalElement ConformalElement::operator*(const SPoly& p) const {
    std::vector<SPoly> c = coeffs_;
    for (auto& q : c) q = q * p;
    return ConformalElement(alg_, std::move(c));
}

ConformalElement ConformalElement::operator*(const Rat& r) const {
    std::vector<SPoly> c = coeffs_;
    for (auto& q : c) q = q * r;
    return ConformalElement(alg_, std::move(c));
}

ConformalElement ConformalElement::applied_partial() const {
    SPoly d = SPoly::variable(alg_->vars(), alg_->partial());
    return *this * d;
}

std::string ConformalElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i < alg_->rank(); ++i) {
        const SPoly& p = coeffs_[static_cast<size_t>(i)];
        if (p.is_zero()) continue;
        std::string ps = p.str();
        bool multi = p.terms().size() > 1;
        std::string piece;
        if (multi) {
            piece = "(" + ps + ") " + alg_->gen_name(i);
        } else if (ps == "1") {
            piece = alg_->gen_name(i);
        } else if (ps == "-1") {
            piece = "-" + alg_->gen_name(i);
        } else {
            piece = ps + " " + alg_->gen_name(i);
        }
        if (!first) out += " + ";
        out += piece;
        first = false;
    }
    return out;
}

std::vector<SPoly> eval_bilinear_table(const StructureTable& table, VarId slot,
                                       const std::vector<SPoly>& xc,
                                       const std::vector<SPoly>& yc,
                                       const Affine& nu) {
    if (table.empty()) return {};
    const VarTablePtr& tab = nu.table;
    VarId d = tab->partial();
    const size_t out_rank = table[0][0].size();
    std::vector<SPoly> out(out_rank, SPoly(tab));

    Affine d_plus_nu = Affine::var(tab, d) + nu;
    Affine minus_nu = -nu;

    // substitute once per argument coefficient
    std::vector<SPoly> px(xc.size(), SPoly(tab)), qy(yc.size(), SPoly(tab));
    for (size_t i = 0; i < xc.size(); ++i)
        if (!xc[i].is_zero()) px[i] = xc[i].substituted(d, minus_nu);
    for (size_t j = 0; j < yc.size(); ++j)
        if (!yc[j].is_zero()) qy[j] = yc[j].substituted(d, d_plus_nu);

    for (size_t i = 0; i < xc.size(); ++i) {
        if (px[i].is_zero()) continue;
        for (size_t j = 0; j < yc.size(); ++j) {
            if (qy[j].is_zero()) continue;
            SPoly pq = px[i] * qy[j];
            for (size_t k = 0; k < out_rank; ++k) {
                const SPoly& s = table[i][j][k];
                if (s.is_zero()) continue;
                out[k] += pq * s.substituted(slot, nu);
            }
        }
    }
    return out;
}

ConformalElement bracket_at(const ConformalElement& x, const ConformalElement& y,
                            const Affine& at) {
    if (x.algebra().get() != y.algebra().get())
        throw UsageError("bracket of elements over different algebras");
    const AlgebraPtr& alg = x.algebra();
    if (at.table.get() != alg->vars().get())
        throw UsageError("bracket target over a foreign registry");
    std::vector<SPoly> out = eval_bilinear_table(alg->structure(), alg->lambda(),
                                                 x.coeffs(), y.coeffs(), at);
    if (out.empty()) out.assign(static_cast<size_t>(alg->rank()), SPoly(alg->vars()));
    return ConformalElement(alg, std::move(out));
}

ConformalElement bracket(const ConformalElement& x, const ConformalElement& y, VarId at) {
    const AlgebraPtr& alg = x.algebra();
    if (alg->vars()->kind(at) != VarKind::Spectral)
        throw UsageError("bracket must be evaluated at a spectral variable");
    return bracket_at(x, y, Affine::var(alg->vars(), at));
}

AxiomReport check_skew(const AlgebraPtr& alg) {
    AxiomReport rep;
    rep.axiom = "skew";
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = alg->lambda();
    // x -> -d - x
    Affine flip = -(Affine::var(tab, d) + Affine::var(tab, lam));
    for (int i = 0; i < alg->rank(); ++i) {
        for (int j = 0; j < alg->rank(); ++j) {
            int sign = parity_sign(alg->parity(i), alg->parity(j));
            for (int k = 0; k < alg->rank(); ++k) {
                SPoly resid = alg->structure(i, j, k) +
                              alg->structure(j, i, k).substituted(lam, flip) * Rat(sign);
                if (!resid.is_zero())
                    rep.residuals.push_back({"skew(" + alg->gen_name(i) + "," +
                                                 alg->gen_name(j) + ")",
                                             k, std::move(resid)});
            }
        }
    }
    rep.passed = rep.residuals.empty();
    return rep;
}

AxiomReport check_jacobi(const AlgebraPtr& alg) {
    AxiomReport rep;
    rep.axiom = "jacobi";
    const VarTablePtr& tab = alg->vars();
    VarId lam = alg->lambda();
    VarId mu = tab->spectral("mu");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);
    for (int i = 0; i < alg->rank(); ++i) {
        ConformalElement ei = ConformalElement::generator(alg, i);
        for (int j = 0; j < alg->rank(); ++j) {
            ConformalElement ej = ConformalElement::generator(alg, j);
            int sign = parity_sign(alg->parity(i), alg->parity(j));
            for (int k = 0; k < alg->rank(); ++k) {
                ConformalElement ek = ConformalElement::generator(alg, k);
                ConformalElement lhs = bracket(ei, bracket(ej, ek, mu), lam);
                ConformalElement rhs1 = bracket_at(bracket(ei, ej, lam), ek, lam_plus_mu);
                ConformalElement rhs2 = bracket(ej, bracket(ei, ek, lam), mu);
                ConformalElement resid = lhs - rhs1 - rhs2 * Rat(sign);
                for (int m = 0; m < alg->rank(); ++m) {
                    if (!resid.coeff(m).is_zero())
                        rep.residuals.push_back(
                            {"jacobi(" + alg->gen_name(i) + "," + alg->gen_name(j) + "," +
                                 alg->gen_name(k) + ")",
                             m, resid.coeff(m)});
                }
            }
        }
    }
    rep.passed = rep.residuals.empty();
    return rep;
}

namespace {

// Shared ansatz machinery for center/centralizer: unknowns are the
// coefficients of d^a * generator_i, a <= deg_d.
linalg::SolutionSpace annihilator(const AlgebraPtr& alg,
                                  const std::vector<ConformalElement>& against,
                                  int deg_d) {
    if (deg_d < 0) throw UsageError("negative degree bound");
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    const int per = deg_d + 1;
    const int ncols = alg->rank() * per;

    // rows keyed by (target index, output generator, monomial)
    std::map<std::tuple<int, int, Expo>, int> row_ids;
    std::vector<linalg::SparseEliminator::Row> rows;

    for (int i = 0; i < alg->rank(); ++i) {
        for (int a = 0; a < per; ++a) {
            int col = i * per + a;
            std::vector<SPoly> unit(static_cast<size_t>(alg->rank()), SPoly(tab));
            unit[static_cast<size_t>(i)] = SPoly::variable(tab, d, static_cast<unsigned>(a));
            ConformalElement u(alg, std::move(unit));
            for (size_t t = 0; t < against.size(); ++t) {
                ConformalElement br = bracket(u, against[t], alg->lambda());
                for (int k = 0; k < alg->rank(); ++k) {
                    for (const auto& [e, c] : br.coeff(k).terms()) {
                        auto key = std::make_tuple(static_cast<int>(t), k, e);
                        auto it = row_ids.find(key);
                        if (it == row_ids.end()) {
                            it = row_ids.emplace(key, static_cast<int>(rows.size())).first;
                            rows.emplace_back();
                        }
                        rows[static_cast<size_t>(it->second)].emplace_back(col, c);
                    }
                }
            }
        }
    }

    linalg::SparseEliminator elim(ncols);
    for (auto& r : rows) elim.add_row(std::move(r));
    return elim.kernel();
}

} // namespace

linalg::SolutionSpace center(const AlgebraPtr& alg, int deg_d) {
    std::vector<ConformalElement> gens;
    gens.reserve(static_cast<size_t>(alg->rank()));
    for (int j = 0; j < alg->rank(); ++j) gens.push_back(ConformalElement::generator(alg, j));
    return annihilator(alg, gens, deg_d);
}

linalg::SolutionSpace centralizer(const AlgebraPtr& alg,
                                  const std::vector<ConformalElement>& against,
                                  int deg_d) {
    for (const auto& e : against)
        if (e.algebra().get() != alg.get())
            throw UsageError("centralizer target over a different algebra");
    return annihilator(alg, against, deg_d);
}

ConformalElement module_element(const AlgebraPtr& alg, int deg_d, const std::vector<Rat>& coords) {
    const int per = deg_d + 1;
    if (static_cast<int>(coords.size()) != alg->rank() * per)
        throw UsageError("coordinate length mismatch");
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    std::vector<SPoly> c(static_cast<size_t>(alg->rank()), SPoly(tab));
    for (int i = 0; i < alg->rank(); ++i)
        for (int a = 0; a < per; ++a) {
            const Rat& v = coords[static_cast<size_t>(i * per + a)];
            if (!rat_is_zero(v))
                c[static_cast<size_t>(i)] +=
                    SPoly::variable(tab, d, static_cast<unsigned>(a)) * v;
        }
    return ConformalElement(alg, std::move(c));
}

PerfectnessReport is_perfect(const AlgebraPtr& alg, int deg_d) {
    if (deg_d < 0) throw UsageError("negative degree bound");
    PerfectnessReport rep;
    rep.bound = deg_d;
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = alg->lambda();

    // Coefficient vectors (in d) of every lambda-power of every bracket entry.
    std::vector<std::vector<SPoly>> gens; // each: rank-long vector of d-polys
    for (int i = 0; i < alg->rank(); ++i) {
        for (int j = 0; j < alg->rank(); ++j) {
            std::map<Expo, std::vector<SPoly>, GradedLex> by_lam;
            for (int k = 0; k < alg->rank(); ++k) {
                const SPoly& s = alg->structure(i, j, k);
                if (s.is_zero()) continue;
                for (const auto& [le, cp] : s.monomial_coeffs({lam})) {
                    auto it = by_lam.find(le);
                    if (it == by_lam.end())
                        it = by_lam.emplace(le, std::vector<SPoly>(
                                               static_cast<size_t>(alg->rank()), SPoly(tab)))
                                 .first;
                    it->second[static_cast<size_t>(k)] += cp;
                }
            }
            for (auto& [le, vec] : by_lam) gens.push_back(std::move(vec));
        }
    }

    // Column space: d^a * gens, a <= deg_d; vectorized over (generator, d-power).
    unsigned max_deg = 0;
    for (const auto& g : gens)
        for (const auto& p : g) max_deg = std::max(max_deg, p.degree_in(d));
    const unsigned width = max_deg + static_cast<unsigned>(deg_d) + 1;
    const int nrows = alg->rank() * static_cast<int>(width);

    std::vector<std::vector<Rat>> cols;
    for (const auto& g : gens) {
        for (int a = 0; a <= deg_d; ++a) {
            std::vector<Rat> v(static_cast<size_t>(nrows), Rat(0));
            for (int k = 0; k < alg->rank(); ++k) {
                for (const auto& [e, c] : g[static_cast<size_t>(k)].terms()) {
                    unsigned p = e[static_cast<size_t>(d.index)] + static_cast<unsigned>(a);
                    v[static_cast<size_t>(k) * width + p] = c;
                }
            }
            cols.push_back(std::move(v));
        }
    }

    linalg::RatMatrix m(nrows, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        for (int r = 0; r < nrows; ++r) m.at(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];

    for (int i = 0; i < alg->rank(); ++i) {
        std::vector<Rat> rhs(static_cast<size_t>(nrows), Rat(0));
        rhs[static_cast<size_t>(i) * width] = 1;
        if (!linalg::solve(m, rhs)) {
            rep.perfect = false;
            rep.witness_generator = i;
            return rep;
        }
    }
    rep.perfect = true;
    return rep;
}

} // namespace lcsk
