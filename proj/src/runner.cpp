#include "lcsk/runner.hpp"

#include "lcsk/builtins.hpp"
#include "lcsk/current.hpp"
#include "lcsk/errors.hpp"
#include "lcsk/solvers.hpp"
#include "lcsk/specfile.hpp"
#include "lcsk/verifiers.hpp"

namespace lcsk {

namespace {

std::string residual_line(const AlgebraPtr& alg, const AxiomResidual& r) {
    return r.context + ": residual on " + alg->gen_name(r.generator) + ": " + r.value.str();
}

CheckEntry from_axiom(const AlgebraPtr& alg, const AxiomReport& a,
                      const std::string& name = "") {
    CheckEntry e;
    e.name = name.empty() ? a.axiom : name;
    e.passed = a.passed;
    for (const AxiomResidual& r : a.residuals) e.lines.push_back(residual_line(alg, r));
    return e;
}

CheckEntry from_verifier(const AlgebraPtr& alg, const VerifierReport& v,
                         const std::string& name = "") {
    CheckEntry e;
    e.name = name.empty() ? v.name : name;
    e.applicable = v.applicable;
    e.passed = v.passed;
    for (const std::string& n : v.notes) e.lines.push_back(n);
    for (const AxiomResidual& r : v.residuals) e.lines.push_back(residual_line(alg, r));
    return e;
}

// skew + jacobi entries; when gating solvers, a failing axiom appends an
// explicit refusal entry
bool axiom_entries(const AlgebraPtr& alg, RunReport& rep, bool solver_gate,
                   const std::string& prefix = "") {
    AxiomReport s = check_skew(alg);
    AxiomReport j = check_jacobi(alg);
    rep.checks.push_back(from_axiom(alg, s, prefix.empty() ? "" : prefix + s.axiom));
    rep.checks.push_back(from_axiom(alg, j, prefix.empty() ? "" : prefix + j.axiom));
    bool ok = s.passed && j.passed;
    if (!ok && solver_gate) {
        CheckEntry e;
        e.name = "axiom-gate";
        e.passed = false;
        e.lines.push_back("solvers need a valid algebra; the axiom checks above failed");
        rep.checks.push_back(std::move(e));
    }
    return ok;
}

CheckEntry construction_entry(const AlgebraPtr& la, const CommutativeAlgebra& a) {
    CheckEntry e;
    e.name = "current-construction";
    e.passed = true;
    e.lines.push_back("coefficient algebra " + a.name() + ", dimension " +
                      std::to_string(a.dim()));
    e.lines.push_back("current algebra rank " + std::to_string(la->rank()));
    e.details["rank"] = std::to_string(la->rank());
    e.details["coefficient_dim"] = std::to_string(a.dim());
    return e;
}

CheckEntry center_entry(const AlgebraPtr& alg, int deg_d) {
    linalg::SolutionSpace z = center(alg, deg_d);
    CheckEntry e;
    e.name = "center";
    e.passed = true;
    e.lines.push_back("dimension " + std::to_string(z.dim()) + " at bound " +
                      std::to_string(deg_d));
    for (const auto& row : z.basis)
        e.lines.push_back("z = " + module_element(alg, deg_d, row).str());
    e.details["dim"] = std::to_string(z.dim());
    return e;
}

CheckEntry centroid_entry(const AlgebraPtr& alg, int deg_d, Convention conv) {
    CentroidBasis cb = solve_centroid(alg, deg_d, conv);
    CheckEntry e;
    e.name = "centroid";
    e.passed = true;
    e.lines.push_back("even dimension " + std::to_string(cb.even.size()) +
                      ", odd dimension " + std::to_string(cb.odd.size()));
    for (size_t n = 0; n < cb.even.size(); ++n)
        e.lines.push_back("even[" + std::to_string(n) + "]: " + cb.even[n].str());
    for (size_t n = 0; n < cb.odd.size(); ++n)
        e.lines.push_back("odd[" + std::to_string(n) + "]: " + cb.odd[n].str());
    e.details["even_dim"] = std::to_string(cb.even.size());
    e.details["odd_dim"] = std::to_string(cb.odd.size());
    return e;
}

void bider_entries(const AlgebraPtr& alg, int deg_d, int deg_l, RunReport& rep,
                   BiderBasis* out = nullptr) {
    BiderBasis bb = solve_biderivations(alg, deg_d, deg_l);
    CheckEntry e;
    e.name = "biderivations";
    e.passed = true;
    e.lines.push_back("even dimension " + std::to_string(bb.even.size()) +
                      ", odd dimension " + std::to_string(bb.odd.size()));
    for (size_t n = 0; n < bb.even.size(); ++n)
        e.lines.push_back("even[" + std::to_string(n) + "]: " + bb.even[n].str());
    for (size_t n = 0; n < bb.odd.size(); ++n)
        e.lines.push_back("odd[" + std::to_string(n) + "]: " + bb.odd[n].str());
    e.details["even_dim"] = std::to_string(bb.even.size());
    e.details["odd_dim"] = std::to_string(bb.odd.size());
    rep.checks.push_back(std::move(e));

    CheckEntry sl;
    sl.name = "second-leibniz";
    sl.passed = bb.second_leibniz_ok;
    sl.lines.push_back("verified on every basis biderivation");
    for (const AxiomResidual& r : bb.second_leibniz_residuals)
        sl.lines.push_back(residual_line(alg, r));
    rep.checks.push_back(std::move(sl));

    if (out) *out = std::move(bb);
}

void commuting_entries(const AlgebraPtr& alg, int deg_d, Convention conv, RunReport& rep) {
    CommutingBasis cb = solve_commuting(alg, deg_d, conv);
    CheckEntry e;
    e.name = "commuting";
    e.passed = true;
    e.lines.push_back("dimension " + std::to_string(cb.basis.size()));
    for (size_t n = 0; n < cb.basis.size(); ++n)
        e.lines.push_back("psi[" + std::to_string(n) + "]: " + cb.basis[n].str());
    e.details["dim"] = std::to_string(cb.basis.size());
    rep.checks.push_back(std::move(e));

    CheckEntry pol;
    pol.name = "polarization";
    pol.passed = true;
    for (size_t n = 0; n < cb.basis.size(); ++n) {
        VerifierReport v = verify_polarization(cb.basis[n]);
        if (!v.passed) pol.passed = false;
        for (const AxiomResidual& r : v.residuals)
            pol.lines.push_back("psi[" + std::to_string(n) + "] " + residual_line(alg, r));
    }
    pol.lines.push_back("checked " + std::to_string(cb.basis.size()) + " maps");
    rep.checks.push_back(std::move(pol));
}

void verify_all(const AlgebraPtr& base, const std::optional<CommutativeAlgebra>& coeff,
                RunReport& rep) {
    const int deg_d = rep.deg_d, deg_l = rep.deg_l;
    if (!axiom_entries(base, rep, true)) return;

    rep.checks.push_back(center_entry(base, deg_d));

    PerfectnessReport perf = is_perfect(base, deg_d);
    CheckEntry pe;
    pe.name = "perfect";
    pe.passed = true;
    pe.lines.push_back(perf.perfect
                           ? "perfect at bound " + std::to_string(deg_d)
                           : "not perfect at bound " + std::to_string(deg_d) +
                                 "; witness generator " +
                                 base->gen_name(perf.witness_generator));
    rep.checks.push_back(std::move(pe));

    rep.checks.push_back(centroid_entry(base, deg_d, Convention::PartialCommuting));

    BiderBasis biders;
    bider_entries(base, deg_d, deg_l, rep, &biders);

    rep.checks.push_back(from_verifier(base, verify_centroid_form(base, deg_d, deg_l)));

    CheckEntry swap;
    swap.name = "swap-identity";
    swap.passed = true;
    CheckEntry centr;
    centr.name = "centralizer-residual";
    centr.passed = true;
    int nmaps = 0;
    for (const auto* list : {&biders.even, &biders.odd})
        for (size_t idx = 0; idx < list->size(); ++idx) {
            const BilinearConfMap& phi = (*list)[idx];
            std::string tag = (list == &biders.even ? "even[" : "odd[") +
                              std::to_string(idx) + "] ";
            VerifierReport vs = verify_swap_identity(phi);
            if (!vs.passed) swap.passed = false;
            for (const AxiomResidual& r : vs.residuals)
                swap.lines.push_back(tag + residual_line(base, r));
            VerifierReport vc = verify_centralizer_residual(phi);
            if (!vc.passed) centr.passed = false;
            for (const std::string& n : vc.notes) centr.lines.push_back(tag + n);
            for (const AxiomResidual& r : vc.residuals)
                centr.lines.push_back(tag + residual_line(base, r));
            ++nmaps;
        }
    swap.lines.push_back("checked " + std::to_string(nmaps) + " biderivations");
    rep.checks.push_back(std::move(swap));
    rep.checks.push_back(std::move(centr));

    commuting_entries(base, deg_d, Convention::PartialCommuting, rep);
    rep.checks.push_back(from_verifier(base, verify_commuting_in_centroid(base, deg_d)));

    if (coeff) {
        AlgebraPtr la = tensor_current(base, *coeff);
        rep.checks.push_back(construction_entry(la, *coeff));
        if (!axiom_entries(la, rep, true, "current-")) return;
        rep.checks.push_back(from_verifier(
            la, verify_current_decomposition(base, *coeff, deg_d, deg_l),
            "current-decomposition"));
        rep.checks.push_back(from_verifier(la, verify_commuting_in_centroid(la, deg_d),
                                           "current-commuting-in-centroid"));
    }
}

} // namespace

RunReport run_command(const std::string& command, const std::string& spec_text,
                      const RunOptions& opts) {
    AlgebraSpecFile spec = parse_spec(spec_text);

    RunReport rep;
    rep.tool_version = kToolVersion;
    rep.input_name = spec.name;
    rep.input_digest = "fnv1a64:" + fnv1a64_hex(spec_text);
    rep.command = command;
    rep.deg_d = opts.deg_d.value_or(spec.deg_d.value_or(3));
    rep.deg_l = opts.deg_l.value_or(spec.deg_l.value_or(3));
    rep.convention = opts.conv == Convention::PartialCommuting ? "partial" : "shifted";

    std::optional<CommutativeAlgebra> coeff;
    if (opts.tensor) {
        if (spec.coeff.present())
            throw UsageError("--tensor conflicts with the [coefficient-algebra] section");
        coeff = CommutativeAlgebra::quotient_poly(*opts.tensor);
    } else {
        coeff = build_coeff_algebra(spec);
    }

    AlgebraPtr base = build_algebra(spec);
    AlgebraPtr work = base;
    if (coeff && command != "verify-all") {
        work = tensor_current(base, *coeff);
        rep.checks.push_back(construction_entry(work, *coeff));
    }

    if (command == "check") {
        axiom_entries(work, rep, false);
    } else if (command == "center") {
        if (axiom_entries(work, rep, true)) rep.checks.push_back(center_entry(work, rep.deg_d));
    } else if (command == "centroid") {
        if (axiom_entries(work, rep, true))
            rep.checks.push_back(centroid_entry(work, rep.deg_d, opts.conv));
    } else if (command == "bider") {
        if (axiom_entries(work, rep, true)) bider_entries(work, rep.deg_d, rep.deg_l, rep);
    } else if (command == "commuting") {
        if (axiom_entries(work, rep, true))
            commuting_entries(work, rep.deg_d, opts.conv, rep);
    } else if (command == "current") {
        if (!coeff)
            throw UsageError(
                "'current' needs --tensor N or a [coefficient-algebra] section");
        axiom_entries(work, rep, false, "current-");
    } else if (command == "verify-all") {
        if (opts.conv != Convention::PartialCommuting)
            throw UsageError("verify-all supports the partial convention only");
        verify_all(base, coeff, rep);
    } else {
        throw UsageError("unknown command '" + command + "'");
    }
    return rep;
}

} // namespace lcsk
