#include "lcsk/solvers.hpp"

#include "lcsk/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lcsk {

namespace {

std::vector<Expo> sorted_monomials(const VarTablePtr& tab, int deg_d, int deg_l,
                                   bool with_lambda) {
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");
    std::vector<Expo> out;
    for (int a = 0; a <= deg_d; ++a) {
        for (int b = 0; b <= (with_lambda ? deg_l : 0); ++b) {
            Expo e(static_cast<size_t>(tab->size()), 0u);
            e[static_cast<size_t>(d.index)] = static_cast<unsigned>(a);
            e[static_cast<size_t>(lam.index)] = static_cast<unsigned>(b);
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

// Rows of a sparse homogeneous system, keyed by (context, generator, monomial).
struct RowCollector {
    std::map<std::tuple<int, int, Expo>, int> ids;
    std::vector<linalg::SparseEliminator::Row> rows;

    void add(int ctx, const ConformalElement& resid, int col) {
        for (int k = 0; k < resid.algebra()->rank(); ++k) {
            for (const auto& [e, c] : resid.coeff(k).terms()) {
                auto key = std::make_tuple(ctx, k, e);
                auto it = ids.find(key);
                if (it == ids.end()) {
                    it = ids.emplace(std::move(key), static_cast<int>(rows.size())).first;
                    rows.emplace_back();
                }
                rows[static_cast<size_t>(it->second)].emplace_back(col, c);
            }
        }
    }

    linalg::SolutionSpace kernel(int ncols) {
        linalg::SparseEliminator elim(ncols);
        for (auto& r : rows) elim.add_row(std::move(r));
        return elim.kernel();
    }
};

LinearConfMap unit_linear(const AlgebraPtr& alg, Parity parity, Convention conv, int i, int k,
                          const Expo& mono) {
    const int r = alg->rank();
    std::vector<std::vector<SPoly>> e(static_cast<size_t>(r),
                                      std::vector<SPoly>(static_cast<size_t>(r),
                                                         SPoly(alg->vars())));
    e[static_cast<size_t>(k)][static_cast<size_t>(i)] =
        SPoly::monomial(alg->vars(), mono, Rat(1));
    return LinearConfMap::make(alg, std::move(e), parity, conv);
}

BilinearConfMap unit_bilinear(const AlgebraPtr& alg, Parity parity, int i, int j, int k,
                              const Expo& mono) {
    const int r = alg->rank();
    StructureTable t(static_cast<size_t>(r),
                     std::vector<std::vector<SPoly>>(
                         static_cast<size_t>(r),
                         std::vector<SPoly>(static_cast<size_t>(r), SPoly(alg->vars()))));
    t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
        SPoly::monomial(alg->vars(), mono, Rat(1));
    return BilinearConfMap::make(alg, std::move(t), parity);
}

} // namespace

std::vector<std::tuple<int, int, Expo>> linear_slots(const AlgebraPtr& alg, Parity parity,
                                                     int deg_d, Convention conv) {
    if (deg_d < 0) throw UsageError("negative degree bound");
    std::vector<Expo> monos = sorted_monomials(alg->vars(), deg_d, deg_d,
                                               conv == Convention::LambdaShifted);
    std::vector<std::tuple<int, int, Expo>> slots;
    for (int i = 0; i < alg->rank(); ++i)
        for (int k = 0; k < alg->rank(); ++k) {
            if (alg->parity(k) != parity_add(alg->parity(i), parity)) continue;
            for (const Expo& m : monos) slots.emplace_back(i, k, m);
        }
    return slots;
}

std::vector<std::tuple<int, int, int, Expo>> bilinear_slots(const AlgebraPtr& alg,
                                                            Parity parity, int deg_d,
                                                            int deg_l) {
    if (deg_d < 0 || deg_l < 0) throw UsageError("negative degree bound");
    std::vector<Expo> monos = sorted_monomials(alg->vars(), deg_d, deg_l, true);
    std::vector<std::tuple<int, int, int, Expo>> slots;
    for (int i = 0; i < alg->rank(); ++i)
        for (int j = 0; j < alg->rank(); ++j)
            for (int k = 0; k < alg->rank(); ++k) {
                if (alg->parity(k) !=
                    parity_add(parity_add(alg->parity(i), alg->parity(j)), parity))
                    continue;
                for (const Expo& m : monos) slots.emplace_back(i, j, k, m);
            }
    return slots;
}

LinearConfMap linear_map_from_coords(const AlgebraPtr& alg, Parity parity, int deg_d,
                                     Convention conv, const std::vector<Rat>& coords) {
    auto slots = linear_slots(alg, parity, deg_d, conv);
    if (coords.size() != slots.size()) throw UsageError("coordinate length mismatch");
    const int r = alg->rank();
    std::vector<std::vector<SPoly>> e(static_cast<size_t>(r),
                                      std::vector<SPoly>(static_cast<size_t>(r),
                                                         SPoly(alg->vars())));
    for (size_t u = 0; u < slots.size(); ++u) {
        if (rat_is_zero(coords[u])) continue;
        const auto& [i, k, mono] = slots[u];
        e[static_cast<size_t>(k)][static_cast<size_t>(i)] +=
            SPoly::monomial(alg->vars(), mono, coords[u]);
    }
    return LinearConfMap::make(alg, std::move(e), parity, conv);
}

BilinearConfMap bilinear_map_from_coords(const AlgebraPtr& alg, Parity parity, int deg_d,
                                         int deg_l, const std::vector<Rat>& coords) {
    auto slots = bilinear_slots(alg, parity, deg_d, deg_l);
    if (coords.size() != slots.size()) throw UsageError("coordinate length mismatch");
    const int r = alg->rank();
    StructureTable t(static_cast<size_t>(r),
                     std::vector<std::vector<SPoly>>(
                         static_cast<size_t>(r),
                         std::vector<SPoly>(static_cast<size_t>(r), SPoly(alg->vars()))));
    for (size_t u = 0; u < slots.size(); ++u) {
        if (rat_is_zero(coords[u])) continue;
        const auto& [i, j, k, mono] = slots[u];
        t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] +=
            SPoly::monomial(alg->vars(), mono, coords[u]);
    }
    return BilinearConfMap::make(alg, std::move(t), parity);
}

std::vector<Rat> linear_map_coords(const LinearConfMap& m, int deg_d) {
    auto slots = linear_slots(m.algebra(), m.parity(), deg_d, m.convention());
    std::vector<Rat> coords;
    coords.reserve(slots.size());
    for (const auto& [i, k, mono] : slots) coords.push_back(m.entry(k, i).coeff(mono));
    LinearConfMap rebuilt =
        linear_map_from_coords(m.algebra(), m.parity(), deg_d, m.convention(), coords);
    for (int k = 0; k < m.algebra()->rank(); ++k)
        for (int i = 0; i < m.algebra()->rank(); ++i)
            if (rebuilt.entry(k, i) != m.entry(k, i))
                throw UsageError("map entries exceed the coordinate degree bounds");
    return coords;
}

std::vector<Rat> bilinear_map_coords(const BilinearConfMap& m, int deg_d, int deg_l) {
    auto slots = bilinear_slots(m.algebra(), m.parity(), deg_d, deg_l);
    std::vector<Rat> coords;
    coords.reserve(slots.size());
    for (const auto& [i, j, k, mono] : slots) coords.push_back(m.entry(i, j, k).coeff(mono));
    BilinearConfMap rebuilt =
        bilinear_map_from_coords(m.algebra(), m.parity(), deg_d, deg_l, coords);
    for (int i = 0; i < m.algebra()->rank(); ++i)
        for (int j = 0; j < m.algebra()->rank(); ++j)
            for (int k = 0; k < m.algebra()->rank(); ++k)
                if (rebuilt.entry(i, j, k) != m.entry(i, j, k))
                    throw UsageError("map entries exceed the coordinate degree bounds");
    return coords;
}

// ------------------------------------------------------------------
// residual evaluators
// ------------------------------------------------------------------

std::vector<AxiomResidual> centroid_residuals(const LinearConfMap& m, bool right, bool left) {
    const AlgebraPtr& alg = m.algebra();
    const VarTablePtr& tab = alg->vars();
    VarId mu = tab->spectral("mu");
    std::vector<AxiomResidual> out;
    for (int i = 0; i < alg->rank(); ++i) {
        ConformalElement ei = ConformalElement::generator(alg, i);
        for (int j = 0; j < alg->rank(); ++j) {
            ConformalElement ej = ConformalElement::generator(alg, j);
            ConformalElement a = apply_linear(m, bracket(ei, ej, mu));
            if (right) {
                int sign = parity_sign(alg->parity(i), m.parity());
                ConformalElement resid = a - bracket(ei, apply_linear(m, ej), mu) * Rat(sign);
                for (int k = 0; k < alg->rank(); ++k)
                    if (!resid.coeff(k).is_zero())
                        out.push_back({"centroid-right(" + alg->gen_name(i) + "," +
                                           alg->gen_name(j) + ")",
                                       k, resid.coeff(k)});
            }
            if (left) {
                ConformalElement resid = a - bracket(apply_linear(m, ei), ej, mu);
                for (int k = 0; k < alg->rank(); ++k)
                    if (!resid.coeff(k).is_zero())
                        out.push_back({"centroid-left(" + alg->gen_name(i) + "," +
                                           alg->gen_name(j) + ")",
                                       k, resid.coeff(k)});
            }
        }
    }
    return out;
}

std::vector<AxiomResidual> bider_skew_residuals(const BilinearConfMap& phi) {
    const AlgebraPtr& alg = phi.algebra();
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");
    Affine flip = -(Affine::var(tab, d) + Affine::var(tab, lam));
    std::vector<AxiomResidual> out;
    for (int i = 0; i < alg->rank(); ++i) {
        ConformalElement ei = ConformalElement::generator(alg, i);
        for (int j = 0; j < alg->rank(); ++j) {
            ConformalElement ej = ConformalElement::generator(alg, j);
            int sign = parity_sign(alg->parity(i), alg->parity(j));
            ConformalElement fwd = apply_bilinear(phi, ei, ej, lam);
            ConformalElement rev = apply_bilinear(phi, ej, ei, lam);
            std::vector<SPoly> flipped;
            for (int k = 0; k < alg->rank(); ++k)
                flipped.push_back(rev.coeff(k).substituted(lam, flip));
            ConformalElement resid =
                fwd + ConformalElement(alg, std::move(flipped)) * Rat(sign);
            for (int k = 0; k < alg->rank(); ++k)
                if (!resid.coeff(k).is_zero())
                    out.push_back({"bider-skew(" + alg->gen_name(i) + "," + alg->gen_name(j) +
                                       ")",
                                   k, resid.coeff(k)});
        }
    }
    return out;
}

std::vector<AxiomResidual> bider_leibniz1_residuals(const BilinearConfMap& phi) {
    const AlgebraPtr& alg = phi.algebra();
    const VarTablePtr& tab = alg->vars();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);
    std::vector<AxiomResidual> out;
    for (int i = 0; i < alg->rank(); ++i) {
        ConformalElement ei = ConformalElement::generator(alg, i);
        for (int j = 0; j < alg->rank(); ++j) {
            ConformalElement ej = ConformalElement::generator(alg, j);
            int sign = parity_sign(alg->parity(i), alg->parity(j));
            for (int k = 0; k < alg->rank(); ++k) {
                ConformalElement ek = ConformalElement::generator(alg, k);
                ConformalElement t1 = apply_bilinear(phi, ei, bracket(ej, ek, mu), lam);
                ConformalElement t2 =
                    bracket_at(apply_bilinear(phi, ei, ej, lam), ek, lam_plus_mu);
                ConformalElement t3 = bracket(ej, apply_bilinear(phi, ei, ek, lam), mu);
                ConformalElement resid = t1 - t2 - t3 * Rat(sign);
                for (int w = 0; w < alg->rank(); ++w)
                    if (!resid.coeff(w).is_zero())
                        out.push_back({"bider-leibniz1(" + alg->gen_name(i) + "," +
                                           alg->gen_name(j) + "," + alg->gen_name(k) + ")",
                                       w, resid.coeff(w)});
            }
        }
    }
    return out;
}

std::vector<AxiomResidual> bider_leibniz2_residuals(const BilinearConfMap& phi) {
    const AlgebraPtr& alg = phi.algebra();
    const VarTablePtr& tab = alg->vars();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);
    std::vector<AxiomResidual> out;
    for (int i = 0; i < alg->rank(); ++i) {
        ConformalElement ei = ConformalElement::generator(alg, i);
        for (int j = 0; j < alg->rank(); ++j) {
            ConformalElement ej = ConformalElement::generator(alg, j);
            int sign = parity_sign(alg->parity(i), alg->parity(j));
            for (int k = 0; k < alg->rank(); ++k) {
                ConformalElement ek = ConformalElement::generator(alg, k);
                ConformalElement v1 =
                    apply_bilinear_at(phi, bracket(ei, ej, mu), ek, lam_plus_mu);
                ConformalElement v2 = bracket(ei, apply_bilinear(phi, ej, ek, lam), mu);
                ConformalElement v3 = bracket_at(ej, apply_bilinear(phi, ei, ek, mu),
                                                 Affine::var(tab, lam));
                ConformalElement resid = v1 - v2 + v3 * Rat(sign);
                for (int w = 0; w < alg->rank(); ++w)
                    if (!resid.coeff(w).is_zero())
                        out.push_back({"bider-leibniz2(" + alg->gen_name(i) + "," +
                                           alg->gen_name(j) + "," + alg->gen_name(k) + ")",
                                       w, resid.coeff(w)});
            }
        }
    }
    return out;
}

std::vector<AxiomResidual> commuting_residuals(const LinearConfMap& psi, int deg_d) {
    const AlgebraPtr& alg = psi.algebra();
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);

    std::vector<std::pair<int, int>> monos; // (d power, generator)
    for (int i = 0; i < alg->rank(); ++i)
        for (int a = 0; a <= deg_d; ++a) monos.emplace_back(a, i);

    auto elem = [&](int a, int i) {
        std::vector<SPoly> c(static_cast<size_t>(alg->rank()), SPoly(tab));
        c[static_cast<size_t>(i)] = SPoly::variable(tab, d, static_cast<unsigned>(a));
        return ConformalElement(alg, std::move(c));
    };

    std::vector<AxiomResidual> out;
    for (size_t p = 0; p < monos.size(); ++p) {
        for (size_t q = p; q < monos.size(); ++q) {
            ConformalElement u = elem(monos[p].first, monos[p].second);
            ConformalElement v = elem(monos[q].first, monos[q].second);
            ConformalElement resid = bracket_at(apply_linear(psi, u), v, lam_plus_mu) +
                                     bracket_at(apply_linear(psi, v), u, lam_plus_mu);
            for (int k = 0; k < alg->rank(); ++k)
                if (!resid.coeff(k).is_zero())
                    out.push_back({"commuting(d^" + std::to_string(monos[p].first) + " " +
                                       alg->gen_name(monos[p].second) + ", d^" +
                                       std::to_string(monos[q].first) + " " +
                                       alg->gen_name(monos[q].second) + ")",
                                   k, resid.coeff(k)});
        }
    }
    return out;
}

// ------------------------------------------------------------------
// solvers
// ------------------------------------------------------------------

namespace {

std::vector<LinearConfMap> solve_centroid_parity(const AlgebraPtr& alg, Parity parity,
                                                 int deg_d, Convention conv,
                                                 bool impose_left) {
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    const int r = alg->rank();

    auto slots = linear_slots(alg, parity, deg_d, conv);
    if (slots.empty()) return {};

    // precomputed brackets of generator pairs at mu
    std::vector<ConformalElement> gens;
    for (int i = 0; i < r; ++i) gens.push_back(ConformalElement::generator(alg, i));
    std::vector<std::vector<ConformalElement>> br;
    for (int i = 0; i < r; ++i) {
        std::vector<ConformalElement> row;
        for (int j = 0; j < r; ++j) row.push_back(bracket(gens[static_cast<size_t>(i)],
                                                          gens[static_cast<size_t>(j)], mu));
        br.push_back(std::move(row));
    }
    // pairs whose bracket touches a given generator
    std::vector<std::vector<std::pair<int, int>>> touching(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int m = 0; m < r; ++m)
                if (!br[static_cast<size_t>(i)][static_cast<size_t>(j)].coeff(m).is_zero())
                    touching[static_cast<size_t>(m)].emplace_back(i, j);

    RowCollector rc;
    for (size_t u = 0; u < slots.size(); ++u) {
        const auto& [i0, k0, mono] = slots[u];
        LinearConfMap unit = unit_linear(alg, parity, conv, i0, k0, mono);

        std::set<std::pair<int, int>> ctxs(touching[static_cast<size_t>(i0)].begin(),
                                           touching[static_cast<size_t>(i0)].end());
        for (int i = 0; i < r; ++i) {
            ctxs.emplace(i, i0);
            ctxs.emplace(i0, i);
        }
        for (const auto& [i, j] : ctxs) {
            const ConformalElement& bij = br[static_cast<size_t>(i)][static_cast<size_t>(j)];
            ConformalElement a = apply_linear(unit, bij);
            int pair_id = i * r + j;
            {
                int sign = parity_sign(alg->parity(i), parity);
                ConformalElement resid =
                    a - bracket(gens[static_cast<size_t>(i)],
                                apply_linear(unit, gens[static_cast<size_t>(j)]), mu) *
                            Rat(sign);
                rc.add(pair_id * 2, resid, static_cast<int>(u));
            }
            if (impose_left) {
                ConformalElement resid =
                    a - bracket(apply_linear(unit, gens[static_cast<size_t>(i)]),
                                gens[static_cast<size_t>(j)], mu);
                rc.add(pair_id * 2 + 1, resid, static_cast<int>(u));
            }
        }
    }
    (void)lam;
    (void)d;

    linalg::SolutionSpace ker = rc.kernel(static_cast<int>(slots.size()));
    std::vector<LinearConfMap> maps;
    for (const auto& v : ker.basis)
        maps.push_back(linear_map_from_coords(alg, parity, deg_d, conv, v));
    return maps;
}

} // namespace

CentroidBasis solve_centroid_sides(const AlgebraPtr& alg, int deg_d, Convention conv,
                                   bool impose_left) {
    CentroidBasis out;
    out.deg_d = deg_d;
    out.conv = conv;
    out.even = solve_centroid_parity(alg, Parity::Even, deg_d, conv, impose_left);
    out.odd = solve_centroid_parity(alg, Parity::Odd, deg_d, conv, impose_left);
    return out;
}

CentroidBasis solve_centroid(const AlgebraPtr& alg, int deg_d, Convention conv) {
    return solve_centroid_sides(alg, deg_d, conv, true);
}

namespace {

std::vector<BilinearConfMap> solve_bider_parity(const AlgebraPtr& alg, Parity parity,
                                                int deg_d, int deg_l) {
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);
    Affine flip = -(Affine::var(tab, d) + Affine::var(tab, lam));
    const int r = alg->rank();

    auto slots = bilinear_slots(alg, parity, deg_d, deg_l);
    if (slots.empty()) return {};

    std::vector<ConformalElement> gens;
    for (int i = 0; i < r; ++i) gens.push_back(ConformalElement::generator(alg, i));
    std::vector<std::vector<ConformalElement>> br;
    for (int i = 0; i < r; ++i) {
        std::vector<ConformalElement> row;
        for (int j = 0; j < r; ++j) row.push_back(bracket(gens[static_cast<size_t>(i)],
                                                          gens[static_cast<size_t>(j)], mu));
        br.push_back(std::move(row));
    }
    std::vector<std::vector<std::pair<int, int>>> touching(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int m = 0; m < r; ++m)
                if (!br[static_cast<size_t>(i)][static_cast<size_t>(j)].coeff(m).is_zero())
                    touching[static_cast<size_t>(m)].emplace_back(i, j);

    const int skew_base = 0;                 // ctx ids [0, r^2): skew pairs i <= j
    const int leibniz_base = r * r;          // ctx ids for triples, offset by pair block

    RowCollector rc;
    for (size_t u = 0; u < slots.size(); ++u) {
        const auto& [i0, j0, k0, mono] = slots[u];
        BilinearConfMap unit = unit_bilinear(alg, parity, i0, j0, k0, mono);

        // skew rows: imposed on pairs i <= j; the unit touches (i0,j0) and (j0,i0)
        {
            int i = std::min(i0, j0), j = std::max(i0, j0);
            int sign = parity_sign(alg->parity(i), alg->parity(j));
            ConformalElement fwd = apply_bilinear(unit, gens[static_cast<size_t>(i)],
                                                  gens[static_cast<size_t>(j)], lam);
            ConformalElement rev = apply_bilinear(unit, gens[static_cast<size_t>(j)],
                                                  gens[static_cast<size_t>(i)], lam);
            std::vector<SPoly> flipped;
            for (int k = 0; k < r; ++k) flipped.push_back(rev.coeff(k).substituted(lam, flip));
            ConformalElement resid =
                fwd + ConformalElement(alg, std::move(flipped)) * Rat(sign);
            rc.add(skew_base + i * r + j, resid, static_cast<int>(u));
        }

        // first Leibniz rows: contexts (i0, j, k)
        std::set<std::pair<int, int>> jk(touching[static_cast<size_t>(j0)].begin(),
                                         touching[static_cast<size_t>(j0)].end());
        for (int k = 0; k < r; ++k) {
            jk.emplace(j0, k); // t2 needs j == j0
            jk.emplace(k, j0); // t3 needs k == j0
        }
        for (const auto& [j, k] : jk) {
            int sign = parity_sign(alg->parity(i0), alg->parity(j));
            ConformalElement t1 = apply_bilinear(unit, gens[static_cast<size_t>(i0)],
                                                 br[static_cast<size_t>(j)][static_cast<size_t>(k)],
                                                 lam);
            ConformalElement t2 = bracket_at(apply_bilinear(unit, gens[static_cast<size_t>(i0)],
                                                            gens[static_cast<size_t>(j)], lam),
                                             gens[static_cast<size_t>(k)], lam_plus_mu);
            ConformalElement t3 = bracket(gens[static_cast<size_t>(j)],
                                          apply_bilinear(unit, gens[static_cast<size_t>(i0)],
                                                         gens[static_cast<size_t>(k)], lam),
                                          mu);
            ConformalElement resid = t1 - t2 - t3 * Rat(sign);
            rc.add(leibniz_base + (i0 * r + j) * r + k, resid, static_cast<int>(u));
        }
    }

    linalg::SolutionSpace ker = rc.kernel(static_cast<int>(slots.size()));
    std::vector<BilinearConfMap> maps;
    for (const auto& v : ker.basis)
        maps.push_back(bilinear_map_from_coords(alg, parity, deg_d, deg_l, v));
    return maps;
}

} // namespace

BiderBasis solve_biderivations(const AlgebraPtr& alg, int deg_d, int deg_l) {
    BiderBasis out;
    out.deg_d = deg_d;
    out.deg_l = deg_l;
    out.even = solve_bider_parity(alg, Parity::Even, deg_d, deg_l);
    out.odd = solve_bider_parity(alg, Parity::Odd, deg_d, deg_l);
    for (const auto& phi : out.even) {
        auto res = bider_leibniz2_residuals(phi);
        out.second_leibniz_residuals.insert(out.second_leibniz_residuals.end(), res.begin(),
                                            res.end());
    }
    for (const auto& phi : out.odd) {
        auto res = bider_leibniz2_residuals(phi);
        out.second_leibniz_residuals.insert(out.second_leibniz_residuals.end(), res.begin(),
                                            res.end());
    }
    out.second_leibniz_ok = out.second_leibniz_residuals.empty();
    return out;
}

CommutingBasis solve_commuting(const AlgebraPtr& alg, int deg_d, Convention conv) {
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);
    const int r = alg->rank();

    CommutingBasis out;
    out.deg_d = deg_d;
    out.conv = conv;

    auto slots = linear_slots(alg, Parity::Even, deg_d, conv);
    if (slots.empty()) return out;

    std::vector<std::pair<int, int>> monos; // (d power, generator)
    for (int i = 0; i < r; ++i)
        for (int a = 0; a <= deg_d; ++a) monos.emplace_back(a, i);
    auto elem = [&](int a, int i) {
        std::vector<SPoly> c(static_cast<size_t>(r), SPoly(tab));
        c[static_cast<size_t>(i)] = SPoly::variable(tab, d, static_cast<unsigned>(a));
        return ConformalElement(alg, std::move(c));
    };
    std::vector<ConformalElement> elems;
    for (const auto& [a, i] : monos) elems.push_back(elem(a, i));

    RowCollector rc;
    const int n = static_cast<int>(monos.size());
    for (size_t u = 0; u < slots.size(); ++u) {
        const auto& [i0, k0, mono] = slots[u];
        LinearConfMap unit = unit_linear(alg, Parity::Even, conv, i0, k0, mono);
        for (int p = 0; p < n; ++p) {
            for (int q = p; q < n; ++q) {
                if (monos[static_cast<size_t>(p)].second != i0 &&
                    monos[static_cast<size_t>(q)].second != i0)
                    continue;
                ConformalElement resid =
                    bracket_at(apply_linear(unit, elems[static_cast<size_t>(p)]),
                               elems[static_cast<size_t>(q)], lam_plus_mu) +
                    bracket_at(apply_linear(unit, elems[static_cast<size_t>(q)]),
                               elems[static_cast<size_t>(p)], lam_plus_mu);
                rc.add(p * n + q, resid, static_cast<int>(u));
            }
        }
    }

    linalg::SolutionSpace ker = rc.kernel(static_cast<int>(slots.size()));
    for (const auto& v : ker.basis)
        out.basis.push_back(linear_map_from_coords(alg, Parity::Even, deg_d, conv, v));

    // spot-check the unpolarized condition on deterministic pseudo-random u
    std::mt19937_64 rng(0xC0FFEEuLL);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const auto& psi : out.basis) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<SPoly> c(static_cast<size_t>(r), SPoly(tab));
            for (int i = 0; i < r; ++i)
                for (int a = 0; a <= deg_d; ++a)
                    c[static_cast<size_t>(i)] +=
                        SPoly::variable(tab, d, static_cast<unsigned>(a)) * Rat(coeff(rng));
            ConformalElement uu(alg, std::move(c));
            ConformalElement resid = bracket_at(apply_linear(psi, uu), uu, lam_plus_mu);
            if (!resid.is_zero())
                throw std::logic_error("commuting solver returned a non-commuting map");
        }
    }
    return out;
}

} // namespace lcsk
