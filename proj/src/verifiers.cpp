#include "lcsk/verifiers.hpp"

#include "lcsk/errors.hpp"

#include <map>

namespace lcsk {

namespace {

bool in_center_exact(const ConformalElement& z) {
    const AlgebraPtr& alg = z.algebra();
    VarId kappa = alg->vars()->spectral("kappa");
    for (int m = 0; m < alg->rank(); ++m) {
        if (!bracket(z, ConformalElement::generator(alg, m), kappa).is_zero()) return false;
    }
    return true;
}

std::string dim_note(const std::string& what, int dim) {
    return what + " dimension " + std::to_string(dim);
}

} // namespace

VerifierReport verify_swap_identity(const BilinearConfMap& phi) {
    VerifierReport rep;
    rep.name = "swap-identity";
    const AlgebraPtr& alg = phi.algebra();
    const VarTablePtr& tab = alg->vars();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    VarId gamma = tab->spectral("gamma");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);

    std::vector<ConformalElement> gens;
    for (int i = 0; i < alg->rank(); ++i) gens.push_back(ConformalElement::generator(alg, i));

    for (int i = 0; i < alg->rank(); ++i)
        for (int j = 0; j < alg->rank(); ++j) {
            ConformalElement phi_ij = apply_bilinear(phi, gens[static_cast<size_t>(i)],
                                                     gens[static_cast<size_t>(j)], lam);
            ConformalElement br_ij = bracket(gens[static_cast<size_t>(i)],
                                             gens[static_cast<size_t>(j)], lam);
            for (int p = 0; p < alg->rank(); ++p)
                for (int q = 0; q < alg->rank(); ++q) {
                    ConformalElement lhs = bracket_at(
                        phi_ij,
                        bracket(gens[static_cast<size_t>(p)], gens[static_cast<size_t>(q)],
                                gamma),
                        lam_plus_mu);
                    ConformalElement rhs = bracket_at(
                        br_ij,
                        apply_bilinear(phi, gens[static_cast<size_t>(p)],
                                       gens[static_cast<size_t>(q)], gamma),
                        lam_plus_mu);
                    ConformalElement resid = lhs - rhs;
                    for (int k = 0; k < alg->rank(); ++k)
                        if (!resid.coeff(k).is_zero())
                            rep.residuals.push_back(
                                {"swap(" + alg->gen_name(i) + "," + alg->gen_name(j) + ";" +
                                     alg->gen_name(p) + "," + alg->gen_name(q) + ")",
                                 k, resid.coeff(k)});
                }
        }
    rep.passed = rep.residuals.empty();
    return rep;
}

VerifierReport verify_centralizer_residual(const BilinearConfMap& phi) {
    VerifierReport rep;
    rep.name = "centralizer-residual";
    const AlgebraPtr& alg = phi.algebra();
    const VarTablePtr& tab = alg->vars();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);

    std::vector<ConformalElement> gens;
    for (int i = 0; i < alg->rank(); ++i) gens.push_back(ConformalElement::generator(alg, i));

    bool all_zero = true;
    bool all_central = true;
    for (int i = 0; i < alg->rank(); ++i)
        for (int j = 0; j < alg->rank(); ++j) {
            ConformalElement phi_ij = apply_bilinear(phi, gens[static_cast<size_t>(i)],
                                                     gens[static_cast<size_t>(j)], lam);
            ConformalElement br_ij = bracket(gens[static_cast<size_t>(i)],
                                             gens[static_cast<size_t>(j)], lam);
            for (int k = 0; k < alg->rank(); ++k) {
                ConformalElement resid =
                    bracket_at(phi_ij, gens[static_cast<size_t>(k)], lam_plus_mu) -
                    apply_bilinear_at(phi, br_ij, gens[static_cast<size_t>(k)], lam_plus_mu);
                if (resid.is_zero()) continue;
                all_zero = false;
                bool central = in_center_exact(resid);
                all_central = all_central && central;
                if (!central)
                    for (int w = 0; w < alg->rank(); ++w)
                        if (!resid.coeff(w).is_zero())
                            rep.residuals.push_back(
                                {"centralizer(" + alg->gen_name(i) + "," + alg->gen_name(j) +
                                     ";" + alg->gen_name(k) + ")",
                                 w, resid.coeff(w)});
            }
        }
    rep.passed = all_central;
    rep.notes.push_back(all_zero ? "residuals identically zero"
                                 : (all_central ? "nonzero residuals all central"
                                                : "residual outside the center"));
    return rep;
}

VerifierReport verify_centroid_form(const AlgebraPtr& alg, int deg_d, int deg_l) {
    VerifierReport rep;
    rep.name = "centroid-form";

    linalg::SolutionSpace ctr = center(alg, deg_d);
    if (ctr.dim() != 0) {
        rep.applicable = false;
        rep.notes.push_back("not applicable: " + dim_note("center", ctr.dim()) +
                            " at bound " + std::to_string(deg_d));
        return rep;
    }
    PerfectnessReport perf = is_perfect(alg, deg_d);
    if (!perf.perfect) {
        rep.applicable = false;
        rep.notes.push_back("not applicable: not perfect at bound " + std::to_string(deg_d) +
                            ", witness generator " + alg->gen_name(perf.witness_generator));
        return rep;
    }

    CentroidBasis cents = solve_centroid(alg, deg_d);
    BiderBasis biders = solve_biderivations(alg, deg_d, deg_l);

    // common vectorization bounds: composed tensors pick up the structure
    // table's degrees
    unsigned sd = 0, sl = 0;
    VarId d = alg->vars()->partial();
    VarId lam = alg->lambda();
    for (int i = 0; i < alg->rank(); ++i)
        for (int j = 0; j < alg->rank(); ++j)
            for (int k = 0; k < alg->rank(); ++k) {
                sd = std::max(sd, alg->structure(i, j, k).degree_in(d));
                sl = std::max(sl, alg->structure(i, j, k).degree_in(lam));
            }
    const int cap_d = deg_d + static_cast<int>(sd);
    const int cap_l = std::max(deg_l, static_cast<int>(sl));

    int induced_rank = 0;
    bool all_decomposed = true;

    for (Parity parity : {Parity::Even, Parity::Odd}) {
        const auto& cent_list = parity == Parity::Even ? cents.even : cents.odd;
        const auto& bider_list = parity == Parity::Even ? biders.even : biders.odd;

        std::vector<std::vector<Rat>> ucols;
        for (const auto& a : cent_list)
            ucols.push_back(bilinear_map_coords(compose_with_bracket(a), cap_d, cap_l));
        int ambient = ucols.empty()
                          ? static_cast<int>(bilinear_slots(alg, parity, cap_d, cap_l).size())
                          : static_cast<int>(ucols[0].size());
        linalg::SolutionSpace uspan = linalg::span_of(ambient, ucols);
        induced_rank += uspan.dim();

        linalg::RatMatrix m(ambient, static_cast<int>(ucols.size()));
        for (int c = 0; c < static_cast<int>(ucols.size()); ++c)
            for (int r = 0; r < ambient; ++r)
                m.at(r, c) = ucols[static_cast<size_t>(c)][static_cast<size_t>(r)];

        for (size_t n = 0; n < bider_list.size(); ++n) {
            std::vector<Rat> target = bilinear_map_coords(bider_list[n], cap_d, cap_l);
            auto sol = linalg::solve(m, target);
            if (!sol) {
                all_decomposed = false;
                rep.notes.push_back(std::string(parity == Parity::Even ? "even" : "odd") +
                                    " biderivation " + std::to_string(n) +
                                    " does not decompose over the centroid");
                continue;
            }
            std::string line = std::string(parity == Parity::Even ? "even" : "odd") +
                               " biderivation " + std::to_string(n) + " = [";
            for (size_t c = 0; c < sol->size(); ++c) {
                if (c) line += ", ";
                line += rat_str((*sol)[c]);
            }
            line += "] . (centroid o bracket)";
            rep.notes.push_back(std::move(line));
        }
    }

    rep.notes.push_back(dim_note("biderivation space", biders.dim()));
    rep.notes.push_back(dim_note("centroid-induced space", induced_rank));
    rep.passed = all_decomposed && biders.dim() == induced_rank;
    return rep;
}

VerifierReport verify_current_decomposition(const AlgebraPtr& l, const CommutativeAlgebra& a,
                                            int deg_d, int deg_l) {
    VerifierReport rep;
    rep.name = "current-decomposition";

    linalg::SolutionSpace ctr = center(l, deg_d);
    if (ctr.dim() != 0) {
        rep.applicable = false;
        rep.notes.push_back("not applicable: " + dim_note("center", ctr.dim()) +
                            " at bound " + std::to_string(deg_d));
        return rep;
    }

    AlgebraPtr la = tensor_current(l, a);
    BiderBasis biders = solve_biderivations(la, deg_d, deg_l);
    CentroidBasis cents = solve_centroid(l, deg_d);
    const int da = a.dim();
    const int rl = l->rank();
    const VarTablePtr& tab = l->vars();
    VarId lam = l->lambda();

    std::vector<ConformalElement> lgens;
    for (int i = 0; i < rl; ++i) lgens.push_back(ConformalElement::generator(l, i));

    bool all_decomposed = true;

    for (Parity parity : {Parity::Even, Parity::Odd}) {
        const auto& cent_list = parity == Parity::Even ? cents.even : cents.odd;
        const auto& bider_list = parity == Parity::Even ? biders.even : biders.odd;
        if (bider_list.empty()) continue;

        // alpha_ci([e_p _x e_q]) on the base algebra, reused across pairs
        std::vector<std::vector<std::vector<ConformalElement>>> abr; // [ci][p][q]
        for (const auto& alpha : cent_list) {
            std::vector<std::vector<ConformalElement>> grid;
            for (int p = 0; p < rl; ++p) {
                std::vector<ConformalElement> row;
                for (int q = 0; q < rl; ++q)
                    row.push_back(apply_linear(alpha, bracket(lgens[static_cast<size_t>(p)],
                                                              lgens[static_cast<size_t>(q)],
                                                              lam)));
                grid.push_back(std::move(row));
            }
            abr.push_back(std::move(grid));
        }

        const int nunk = da * static_cast<int>(cent_list.size());

        for (size_t n = 0; n < bider_list.size(); ++n) {
            const BilinearConfMap& phi = bider_list[n];

            // rows keyed by (pair context, output generator of LA, monomial)
            std::map<std::tuple<int, int, Expo>, int> ids;
            std::vector<std::vector<Rat>> cols(static_cast<size_t>(std::max(nunk, 1)));
            std::vector<Rat> rhs;
            auto row_id = [&](int ctx, int gen, const Expo& e) {
                auto key = std::make_tuple(ctx, gen, e);
                auto it = ids.find(key);
                if (it == ids.end()) {
                    it = ids.emplace(std::move(key), static_cast<int>(rhs.size())).first;
                    rhs.push_back(Rat(0));
                    for (auto& col : cols) col.push_back(Rat(0));
                }
                return it->second;
            };

            int ctx = 0;
            for (int pg = 0; pg < rl; ++pg)
                for (int s = 0; s < da; ++s)
                    for (int qg = 0; qg < rl; ++qg)
                        for (int u2 = 0; u2 < da; ++u2, ++ctx) {
                            ConformalElement target = apply_bilinear(
                                phi, ConformalElement::generator(la, tensor_index(pg, s, da)),
                                ConformalElement::generator(la, tensor_index(qg, u2, da)),
                                lam);
                            for (int k = 0; k < la->rank(); ++k)
                                for (const auto& [e, c] : target.coeff(k).terms())
                                    rhs[static_cast<size_t>(row_id(ctx, k, e))] = c;

                            int sign = parity_sign(
                                parity, parity_add(l->parity(pg), l->parity(qg)));
                            std::vector<Rat> bs(static_cast<size_t>(da), Rat(0)),
                                bu(static_cast<size_t>(da), Rat(0));
                            bs[static_cast<size_t>(s)] = 1;
                            bu[static_cast<size_t>(u2)] = 1;
                            std::vector<Rat> su = a.multiply(bs, bu);
                            for (int t = 0; t < da; ++t) {
                                std::vector<Rat> bt(static_cast<size_t>(da), Rat(0));
                                bt[static_cast<size_t>(t)] = 1;
                                std::vector<Rat> tsu = a.multiply(bt, su);
                                for (size_t ci = 0; ci < cent_list.size(); ++ci) {
                                    int unk = t * static_cast<int>(cent_list.size()) +
                                              static_cast<int>(ci);
                                    const ConformalElement& base =
                                        abr[ci][static_cast<size_t>(pg)][static_cast<size_t>(qg)];
                                    for (int k = 0; k < rl; ++k) {
                                        if (base.coeff(k).is_zero()) continue;
                                        for (int w = 0; w < da; ++w) {
                                            if (rat_is_zero(tsu[static_cast<size_t>(w)]))
                                                continue;
                                            Rat factor =
                                                tsu[static_cast<size_t>(w)] * Rat(sign);
                                            for (const auto& [e, c] : base.coeff(k).terms())
                                                cols[static_cast<size_t>(unk)][static_cast<size_t>(
                                                    row_id(ctx, tensor_index(k, w, da), e))] +=
                                                    factor * c;
                                        }
                                    }
                                }
                            }
                        }

            const int nrows = static_cast<int>(rhs.size());
            linalg::RatMatrix m(nrows, nunk);
            for (int c = 0; c < nunk; ++c)
                for (int r = 0; r < nrows; ++r)
                    m.at(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
            auto sol = linalg::solve(m, rhs);
            if (!sol) {
                all_decomposed = false;
                rep.notes.push_back(std::string(parity == Parity::Even ? "even" : "odd") +
                                    " biderivation " + std::to_string(n) +
                                    " does not decompose over centroid (x) coefficient "
                                    "multiplications");
                continue;
            }
            std::string line = std::string(parity == Parity::Even ? "even" : "odd") +
                               " biderivation " + std::to_string(n) + ": coefficients [";
            for (size_t c = 0; c < sol->size(); ++c) {
                if (c) line += ", ";
                line += rat_str((*sol)[c]);
            }
            line += "] over (basis element, centroid) pairs";
            rep.notes.push_back(std::move(line));
        }
    }

    rep.notes.push_back(dim_note("tensor biderivation space", biders.dim()));
    rep.passed = all_decomposed;
    return rep;
}

VerifierReport verify_polarization(const LinearConfMap& psi) {
    VerifierReport rep;
    rep.name = "polarization";
    const AlgebraPtr& alg = psi.algebra();
    const VarTablePtr& tab = alg->vars();
    VarId d = tab->partial();
    VarId lam = tab->spectral("x");
    VarId mu = tab->spectral("mu");
    VarId kappa = tab->spectral("kappa");
    Affine lam_plus_mu = Affine::var(tab, lam) + Affine::var(tab, mu);
    Affine skew_target = -(Affine::var(tab, d) + Affine::var(tab, lam) + Affine::var(tab, mu));

    for (int i = 0; i < alg->rank(); ++i) {
        ConformalElement ei = ConformalElement::generator(alg, i);
        for (int j = 0; j < alg->rank(); ++j) {
            ConformalElement ej = ConformalElement::generator(alg, j);
            ConformalElement lhs = bracket_at(apply_linear(psi, ei), ej, lam_plus_mu);
            ConformalElement r0 = bracket(ei, apply_linear(psi, ej), kappa);
            std::vector<SPoly> sub;
            for (int k = 0; k < alg->rank(); ++k)
                sub.push_back(r0.coeff(k).substituted(kappa, skew_target));
            int sign = parity_sign(alg->parity(i), parity_add(psi.parity(), alg->parity(j)));
            ConformalElement resid =
                lhs - ConformalElement(alg, std::move(sub)) * Rat(sign);
            for (int k = 0; k < alg->rank(); ++k)
                if (!resid.coeff(k).is_zero())
                    rep.residuals.push_back({"polarization(" + alg->gen_name(i) + "," +
                                                 alg->gen_name(j) + ")",
                                             k, resid.coeff(k)});
        }
    }
    rep.passed = rep.residuals.empty();
    return rep;
}

VerifierReport verify_commuting_in_centroid(const AlgebraPtr& alg, int deg_d) {
    VerifierReport rep;
    rep.name = "commuting-in-centroid";

    linalg::SolutionSpace ctr = center(alg, deg_d);
    if (ctr.dim() != 0) {
        rep.applicable = false;
        rep.notes.push_back("not applicable: " + dim_note("center", ctr.dim()) +
                            " at bound " + std::to_string(deg_d));
        return rep;
    }

    CommutingBasis comm = solve_commuting(alg, deg_d);
    CentroidBasis cents = solve_centroid(alg, deg_d);

    std::vector<std::vector<Rat>> cent_vecs;
    for (const auto& m : cents.even) cent_vecs.push_back(linear_map_coords(m, deg_d));
    int ambient = static_cast<int>(
        linear_slots(alg, Parity::Even, deg_d, Convention::PartialCommuting).size());
    linalg::SolutionSpace span = linalg::span_of(ambient, cent_vecs);

    bool ok = true;
    for (size_t n = 0; n < comm.basis.size(); ++n) {
        if (!linalg::in_span(linear_map_coords(comm.basis[n], deg_d), span)) {
            ok = false;
            rep.notes.push_back("commuting map " + std::to_string(n) +
                                " lies outside the centroid span");
        }
    }
    rep.notes.push_back(dim_note("commuting space", comm.dim()));
    rep.notes.push_back(dim_note("even centroid", static_cast<int>(cents.even.size())));
    rep.passed = ok;
    return rep;
}

} // namespace lcsk
