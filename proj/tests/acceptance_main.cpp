// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Exits nonzero when any criterion fails. Time limits are pinned here.
#include "lcsk/builtins.hpp"
#include "lcsk/current.hpp"
#include "lcsk/report.hpp"
#include "lcsk/runner.hpp"
#include "lcsk/solvers.hpp"
#include "lcsk/specfile.hpp"
#include "lcsk/verifiers.hpp"

#include "test_helpers.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace lcsk;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<AlgebraPtr> builtins() {
    return {virasoro(), neveu_schwarz(), cur_sl2(), abelian(2)};
}

struct Outcome {
    bool pass = true;
    std::string note; // appended to the printed line
    void fail(const std::string& why) {
        pass = false;
        note = note.empty() ? why : note + "; " + why;
    }
};

// ---- criterion 1: axiom suite on the built-ins and two quotients, < 5 s ----
Outcome criterion1() {
    constexpr double kLimit = 5.0;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::vector<std::pair<std::string, AlgebraPtr>> algs;
    for (const AlgebraPtr& a : builtins()) algs.emplace_back(a->name(), a);
    algs.emplace_back("virasoro(x)Q[t]/(t^2)",
                      tensor_current(virasoro(), CommutativeAlgebra::quotient_poly(2)));
    algs.emplace_back("virasoro(x)Q[t]/(t^3)",
                      tensor_current(virasoro(), CommutativeAlgebra::quotient_poly(3)));
    for (const auto& [name, alg] : algs) {
        AxiomReport s = check_skew(alg);
        AxiomReport j = check_jacobi(alg);
        if (!s.passed || !s.residuals.empty()) o.fail(name + ": skew");
        if (!j.passed || !j.residuals.empty()) o.fail(name + ": jacobi");
    }
    double dt = seconds_since(t0);
    if (dt >= kLimit) o.fail("took too long");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs (limit %.0fs)", dt, kLimit);
    o.note = o.note.empty() ? buf : o.note + "; " + buf;
    return o;
}

// ---- criterion 2: tensor construction preserves both axioms ----
Outcome criterion2() {
    Outcome o;
    std::vector<std::pair<std::string, CommutativeAlgebra>> coeffs;
    for (int n = 1; n <= 3; ++n)
        coeffs.emplace_back("Q[t]/(t^" + std::to_string(n) + ")",
                            CommutativeAlgebra::quotient_poly(n));
    coeffs.emplace_back("QxQ", CommutativeAlgebra::square());
    for (const AlgebraPtr& l : builtins())
        for (const auto& [cname, a] : coeffs) {
            AlgebraPtr la = tensor_current(l, a);
            if (!check_skew(la).passed) o.fail(l->name() + "(x)" + cname + ": skew");
            if (!check_jacobi(la).passed) o.fail(l->name() + "(x)" + cname + ": jacobi");
        }
    return o;
}

// ---- criterion 3: virasoro biderivations = centroid o bracket, dim 1, < 10 s ----
std::vector<BilinearConfMap> g_vir_biders; // reused by criterion 5

Outcome criterion3() {
    constexpr double kLimit = 10.0;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    AlgebraPtr v = virasoro();
    BiderBasis bb = solve_biderivations(v, 3, 3);
    CentroidBasis cb = solve_centroid(v, 3);
    if (bb.dim() != 1) o.fail("bider dim " + std::to_string(bb.dim()) + " != 1");
    if (cb.dim() != 1) o.fail("centroid dim " + std::to_string(cb.dim()) + " != 1");
    VerifierReport cf = verify_centroid_form(v, 3, 3);
    if (!cf.applicable || !cf.passed) o.fail("centroid-form failed");
    g_vir_biders = bb.even;
    g_vir_biders.insert(g_vir_biders.end(), bb.odd.begin(), bb.odd.end());
    double dt = seconds_since(t0);
    if (dt >= kLimit) o.fail("took too long");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs (limit %.0fs)", dt, kLimit);
    o.note = o.note.empty() ? buf : o.note + "; " + buf;
    return o;
}

// ---- criterion 4: virasoro (x) Q[t]/(t^2): dims 2, both verifiers pass, the
// centroid spans {id, t-multiplication}, < 60 s ----
std::vector<BilinearConfMap> g_cur_biders; // reused by criterion 5
AlgebraPtr g_cur_alg;

Outcome criterion4() {
    constexpr double kLimit = 60.0;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    AlgebraPtr v = virasoro();
    CommutativeAlgebra q2 = CommutativeAlgebra::quotient_poly(2);
    AlgebraPtr la = tensor_current(v, q2);
    g_cur_alg = la;

    BiderBasis bb = solve_biderivations(la, 3, 3);
    CentroidBasis cb = solve_centroid(la, 3);
    if (bb.dim() != 2) o.fail("bider dim " + std::to_string(bb.dim()) + " != 2");
    if (cb.dim() != 2) o.fail("centroid dim " + std::to_string(cb.dim()) + " != 2");

    VerifierReport cf = verify_centroid_form(la, 3, 3);
    if (!cf.applicable || !cf.passed) o.fail("centroid-form failed");
    VerifierReport cd = verify_current_decomposition(v, q2, 3, 3);
    if (!cd.applicable || !cd.passed) o.fail("current-decomposition failed");

    // the recovered centroid must span exactly {id, t-multiplication}
    std::vector<std::vector<Rat>> solved;
    for (const LinearConfMap& m : cb.even) solved.push_back(linear_map_coords(m, 3));
    std::vector<Rat> id_coords = linear_map_coords(LinearConfMap::identity(la), 3);
    std::vector<Rat> t_coords =
        linear_map_coords(mult_lift(la, q2, v->rank(), {Rat(0), Rat(1)}), 3);
    if (cb.odd.empty() && solved.size() == 2) {
        int ambient = static_cast<int>(solved[0].size());
        linalg::SolutionSpace span = linalg::span_of(ambient, solved);
        if (!linalg::in_span(id_coords, span)) o.fail("id outside the solved centroid");
        if (!linalg::in_span(t_coords, span))
            o.fail("t-multiplication outside the solved centroid");
    } else {
        o.fail("unexpected centroid shape");
    }

    g_cur_biders = bb.even;
    g_cur_biders.insert(g_cur_biders.end(), bb.odd.begin(), bb.odd.end());
    double dt = seconds_since(t0);
    if (dt >= kLimit) o.fail("took too long");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs (limit %.0fs)", dt, kLimit);
    o.note = o.note.empty() ? buf : o.note + "; " + buf;
    return o;
}

// ---- criterion 5: swap identity + identically-zero centralizer residuals on
// every biderivation recovered in criteria 3-4 ----
Outcome criterion5() {
    Outcome o;
    if (g_vir_biders.empty() || g_cur_biders.empty())
        o.fail("criteria 3-4 produced no biderivations");
    int n = 0;
    for (const BilinearConfMap& phi : g_vir_biders) {
        if (!verify_swap_identity(phi).passed)
            o.fail("swap failed on virasoro bider " + std::to_string(n));
        VerifierReport cr = verify_centralizer_residual(phi);
        if (!cr.passed || cr.notes.empty() || cr.notes[0] != "residuals identically zero")
            o.fail("centralizer residual not identically zero on virasoro bider " +
                   std::to_string(n));
        ++n;
    }
    n = 0;
    for (const BilinearConfMap& phi : g_cur_biders) {
        if (!verify_swap_identity(phi).passed)
            o.fail("swap failed on current bider " + std::to_string(n));
        VerifierReport cr = verify_centralizer_residual(phi);
        if (!cr.passed || cr.notes.empty() || cr.notes[0] != "residuals identically zero")
            o.fail("centralizer residual not identically zero on current bider " +
                   std::to_string(n));
        ++n;
    }
    o.note = "checked " + std::to_string(g_vir_biders.size() + g_cur_biders.size()) +
             " biderivations";
    return o;
}

// ---- criterion 6: commuting maps of virasoro are zero; polarization verifies
// its outputs, rejects id with the frozen residual; commuting maps live in the
// centroid on virasoro and its t^2 current algebra ----
Outcome criterion6() {
    Outcome o;
    AlgebraPtr v = virasoro();
    CommutingBasis cm = solve_commuting(v, 3);
    if (!cm.basis.empty()) o.fail("commuting dim " + std::to_string(cm.dim()) + " != 0");
    for (const LinearConfMap& psi : cm.basis)
        if (!verify_polarization(psi).passed) o.fail("polarization failed on solver output");

    VerifierReport idrep = verify_polarization(LinearConfMap::identity(v));
    const VarTablePtr& tab = VarTable::standard();
    SPoly expect = SPoly::variable(tab, tab->partial()) * rat(2) +
                   SPoly::variable(tab, tab->spectral("x")) * rat(4) +
                   SPoly::variable(tab, tab->spectral("mu")) * rat(4);
    if (idrep.passed) o.fail("polarization accepted id on virasoro");
    else if (idrep.residuals.size() != 1 || idrep.residuals[0].value != expect)
        o.fail("id residual is not 2d + 4x + 4mu");

    if (!verify_commuting_in_centroid(v, 3).passed)
        o.fail("commuting-in-centroid failed on virasoro");
    AlgebraPtr la = tensor_current(v, CommutativeAlgebra::quotient_poly(2));
    if (!verify_commuting_in_centroid(la, 3).passed)
        o.fail("commuting-in-centroid failed on the t^2 current algebra");
    return o;
}

// ---- criterion 7: neveu-schwarz full pipeline with super-signs ----
Outcome criterion7() {
    Outcome o;
    std::string ns_text = slurp(std::string(LCSK_SPECS_DIR) + "/neveu_schwarz.lcs");
    RunOptions opts;
    opts.deg_d = 3;
    opts.deg_l = 3;
    RunReport rep = run_command("verify-all", ns_text, opts);
    if (exit_status(rep) != 0) o.fail("verify-all failed");

    AlgebraPtr ns = neveu_schwarz();
    int bd = solve_biderivations(ns, 3, 3).dim();
    int cd = solve_centroid(ns, 3).dim();
    if (bd != cd)
        o.fail("bider dim " + std::to_string(bd) + " != centroid dim " + std::to_string(cd));
    if (!verify_centroid_form(ns, 3, 3).passed) o.fail("decomposition failed");
    o.note = "bider dim " + std::to_string(bd);
    return o;
}

// ---- criterion 8: the two independent bracket evaluators agree on >= 100
// randomized element pairs per built-in ----
Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(0x5eed5u);
    const VarTablePtr& tab = VarTable::standard();
    VarId x = tab->spectral("x");
    int checked = 0;
    for (const AlgebraPtr& alg : builtins()) {
        for (int trial = 0; trial < 100; ++trial) {
            ConformalElement a = testing::random_element(alg, 3, rng);
            ConformalElement b = testing::random_element(alg, 3, rng);
            ConformalElement fast = bracket(a, b, x);
            ConformalElement slow = testing::oracle_bracket(a, b, x);
            if (!(fast - slow).is_zero()) {
                o.fail(alg->name() + ": evaluators disagree on trial " +
                       std::to_string(trial));
                break;
            }
            ++checked;
        }
    }
    o.note = std::to_string(checked) + " pairs";
    return o;
}

// ---- criterion 9: solver dimensions stabilize in the bound ----
Outcome criterion9() {
    Outcome o;
    AlgebraPtr v = virasoro();
    std::vector<int> cent, bider;
    for (int n = 1; n <= 4; ++n) {
        cent.push_back(solve_centroid(v, n).dim());
        bider.push_back(solve_biderivations(v, n, n).dim());
    }
    auto check_profile = [&](const std::vector<int>& dims, const std::string& what) {
        for (size_t i = 1; i < dims.size(); ++i)
            if (dims[i] < dims[i - 1]) o.fail(what + " dimensions decreased");
        for (size_t i = 2; i < dims.size(); ++i)
            if (dims[i] != dims[1])
                o.fail(what + " dimensions not constant from bound 2");
    };
    check_profile(cent, "centroid");
    check_profile(bider, "biderivation");
    std::ostringstream n;
    n << "centroid";
    for (int d : cent) n << " " << d;
    n << ", bider";
    for (int d : bider) n << " " << d;
    o.note = n.str();
    return o;
}

// ---- criterion 10: spec-file round-trips and CLI-level exit statuses ----
Outcome criterion10() {
    Outcome o;
    const std::string dir = std::string(LCSK_SPECS_DIR) + "/";
    const char* shipped[] = {"virasoro.lcs",    "neveu_schwarz.lcs", "cur_sl2.lcs",
                             "abelian2.lcs",    "virasoro_t2.lcs",   "virasoro_qxq.lcs",
                             "corrupted_virasoro.lcs"};
    for (const char* f : shipped) {
        AlgebraSpecFile s = parse_spec(slurp(dir + f));
        if (parse_spec(canonical_print(s)) != s) o.fail(std::string(f) + ": round trip");
    }

    // 100 fuzzed models
    std::mt19937 rng(0xf5a2u);
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    const VarTablePtr& tab = VarTable::standard();
    const std::vector<std::string> gnames = {"A", "B", "C"};
    int survived = 0;
    for (int trial = 0; trial < 100; ++trial) {
        AlgebraSpecFile s;
        s.name = "fuzz" + std::to_string(trial);
        int r = rnd(1, 3);
        for (int i = 0; i < r; ++i)
            s.generators.push_back({gnames[static_cast<size_t>(i)],
                                    rnd(0, 1) ? Parity::Odd : Parity::Even});
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (rnd(0, 2) == 0) continue;
                Parity want = parity_add(s.generators[static_cast<size_t>(i)].parity,
                                         s.generators[static_cast<size_t>(j)].parity);
                std::vector<SPoly> coeffs(static_cast<size_t>(r), SPoly::zero(tab));
                bool any = false;
                for (int k = 0; k < r; ++k) {
                    if (s.generators[static_cast<size_t>(k)].parity != want) continue;
                    SPoly p = SPoly::zero(tab);
                    for (int a = 0; a <= 2; ++a)
                        for (int b = 0; a + b <= 2; ++b) {
                            int cf = rnd(-3, 3);
                            if (cf == 0) continue;
                            Expo e(tab->size(), 0);
                            e[0] = static_cast<unsigned>(a);
                            e[1] = static_cast<unsigned>(b);
                            p += SPoly::monomial(tab, e, Rat(cf));
                        }
                    if (!p.is_zero()) any = true;
                    coeffs[static_cast<size_t>(k)] = std::move(p);
                }
                if (any) s.brackets.emplace(std::make_pair(i, j), std::move(coeffs));
            }
        int cform = rnd(0, 2);
        if (cform == 1) {
            s.coeff.quotient = rnd(1, 3);
        } else if (cform == 2) {
            s.coeff.basis = {"u", "v"};
            s.coeff.unit = {Rat(1), Rat(rnd(0, 1))};
            for (int a = 0; a < 2; ++a)
                for (int b = a; b < 2; ++b) {
                    if (rnd(0, 1) == 0) continue;
                    std::vector<Rat> pr = {rat(rnd(-2, 2), rnd(1, 3)),
                                           rat(rnd(-2, 2), rnd(1, 3))};
                    if (rat_is_zero(pr[0]) && rat_is_zero(pr[1])) continue;
                    s.coeff.products.emplace(std::make_pair(a, b), std::move(pr));
                }
        }
        if (rnd(0, 1)) s.deg_d = rnd(0, 4);
        if (rnd(0, 1)) s.deg_l = rnd(0, 4);
        if (parse_spec(canonical_print(s)) == s) ++survived;
        else o.fail("fuzz model " + std::to_string(trial) + ": round trip");
    }

    // exit statuses through the command runner
    const char* centerless[] = {"virasoro.lcs", "neveu_schwarz.lcs", "cur_sl2.lcs",
                                "virasoro_t2.lcs", "virasoro_qxq.lcs"};
    for (const char* f : centerless) {
        RunReport rep = run_command("verify-all", slurp(dir + f), {});
        if (exit_status(rep) != 0) o.fail(std::string(f) + ": verify-all failed");
    }
    RunReport bad = run_command("verify-all", slurp(dir + "corrupted_virasoro.lcs"), {});
    if (exit_status(bad) == 0) o.fail("corrupted spec passed verify-all");

    o.note = "7 shipped + " + std::to_string(survived) + " fuzzed round trips";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int num;
        const char* what;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> table = {
        {1, "axiom suite on built-ins and quotients", criterion1},
        {2, "tensor construction preserves the axioms", criterion2},
        {3, "virasoro biderivations are centroidal, dim 1", criterion3},
        {4, "t^2 current algebra: dims 2, centroid spans {id, t}", criterion4},
        {5, "swap identity and centralizer residuals", criterion5},
        {6, "commuting maps and polarization", criterion6},
        {7, "neveu-schwarz pipeline with super-signs", criterion7},
        {8, "independent bracket evaluators agree", criterion8},
        {9, "solver dimensions stabilize in the bound", criterion9},
        {10, "spec round-trips and exit statuses", criterion10},
    };
    int failures = 0;
    for (const Criterion& c : table) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failures;
        std::printf("criterion %d: %s — %s%s%s\n", c.num, o.pass ? "PASS" : "FAIL", c.what,
                    o.note.empty() ? "" : " — ", o.note.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all 10 criteria passed\n");
    return failures ? 1 : 0;
}
