#include <doctest.h>

#include "lcsk/errors.hpp"
#include "lcsk/report.hpp"
#include "lcsk/runner.hpp"

#include <json.hpp>

#include <algorithm>

using namespace lcsk;

namespace {
const char* kVirasoro = "name virasoro\n"
                        "[generators]\n"
                        "L even\n"
                        "[brackets]\n"
                        "\"L,L\" = \"(d + 2*x) L\"\n";

const char* kCorrupted = "name corrupted\n"
                         "[generators]\n"
                         "L even\n"
                         "[brackets]\n"
                         "\"L,L\" = \"(d + 3*x) L\"\n";

const char* kNeveuSchwarz = "name ns\n"
                            "[generators]\n"
                            "L even\n"
                            "G odd\n"
                            "[brackets]\n"
                            "\"L,L\" = \"(d + 2*x) L\"\n"
                            "\"L,G\" = \"(d + 3/2*x) G\"\n"
                            "\"G,L\" = \"(1/2*d + 3/2*x) G\"\n"
                            "\"G,G\" = \"2 L\"\n";

std::vector<std::string> names(const RunReport& r) {
    std::vector<std::string> out;
    for (const CheckEntry& c : r.checks) out.push_back(c.name);
    return out;
}

const CheckEntry& entry(const RunReport& r, const std::string& name) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [&](const CheckEntry& c) { return c.name == name; });
    REQUIRE(it != r.checks.end());
    return *it;
}
} // namespace

TEST_CASE("digest matches the published 64-bit FNV-1a vectors") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("check populates the report header and passes on a valid algebra") {
    RunReport r = run_command("check", kVirasoro, {});
    CHECK(r.tool_version == kToolVersion);
    CHECK(r.input_name == "virasoro");
    CHECK(r.input_digest.rfind("fnv1a64:", 0) == 0);
    CHECK(r.input_digest.size() == 8 + 16);
    CHECK(r.command == "check");
    CHECK(r.deg_d == 3);
    CHECK(r.deg_l == 3);
    CHECK(r.convention == "partial");
    CHECK(names(r) == std::vector<std::string>{"skew", "jacobi"});
    CHECK(r.overall_pass());
    CHECK(exit_status(r) == 0);
}

TEST_CASE("check reports axiom residuals on a defective algebra") {
    RunReport r = run_command("check", kCorrupted, {});
    const CheckEntry& skew = entry(r, "skew");
    CHECK(!skew.passed);
    REQUIRE(!skew.lines.empty());
    CHECK(skew.lines[0].find("skew(L,L)") != std::string::npos);
    CHECK(!entry(r, "jacobi").passed);
    CHECK(!r.overall_pass());
    CHECK(exit_status(r) == 1);
}

TEST_CASE("solver commands refuse to run past failing axioms") {
    RunReport r = run_command("bider", kCorrupted, {});
    CHECK(names(r) == std::vector<std::string>{"skew", "jacobi", "axiom-gate"});
    const CheckEntry& gate = entry(r, "axiom-gate");
    CHECK(!gate.passed);
    REQUIRE(!gate.lines.empty());
    CHECK(gate.lines[0] == "solvers need a valid algebra; the axiom checks above failed");
    CHECK(exit_status(r) == 1);
}

TEST_CASE("center command") {
    RunReport r = run_command("center", kVirasoro, {});
    CHECK(names(r) == std::vector<std::string>{"skew", "jacobi", "center"});
    const CheckEntry& c = entry(r, "center");
    CHECK(c.passed);
    REQUIRE(!c.lines.empty());
    CHECK(c.lines[0] == "dimension 0 at bound 3");
    CHECK(c.details.at("dim") == "0");
}

TEST_CASE("bounds resolve flag > file > default") {
    RunOptions opts;
    opts.deg_d = 2;
    CHECK(run_command("center", kVirasoro, opts).deg_d == 2);

    std::string with_bounds = std::string(kVirasoro) + "[bounds]\ndeg-d 1\ndeg-l 4\n";
    RunReport file_bounds = run_command("center", with_bounds, {});
    CHECK(file_bounds.deg_d == 1);
    CHECK(file_bounds.deg_l == 4);
    CHECK(entry(file_bounds, "center").lines[0] == "dimension 0 at bound 1");

    RunReport overridden = run_command("center", with_bounds, opts);
    CHECK(overridden.deg_d == 2);
    CHECK(overridden.deg_l == 4);
}

TEST_CASE("centroid command") {
    RunReport r = run_command("centroid", kVirasoro, {});
    const CheckEntry& c = entry(r, "centroid");
    CHECK(c.details.at("even_dim") == "1");
    CHECK(c.details.at("odd_dim") == "0");
    CHECK(c.lines[0] == "even dimension 1, odd dimension 0");
    REQUIRE(c.lines.size() >= 2);
    CHECK(c.lines[1].rfind("even[0]:", 0) == 0);
}

TEST_CASE("bider command") {
    RunReport r = run_command("bider", kVirasoro, {});
    CHECK(names(r) ==
          std::vector<std::string>{"skew", "jacobi", "biderivations", "second-leibniz"});
    CHECK(entry(r, "biderivations").details.at("even_dim") == "1");
    CHECK(entry(r, "biderivations").details.at("odd_dim") == "0");
    CHECK(entry(r, "second-leibniz").passed);
    CHECK(r.overall_pass());
}

TEST_CASE("commuting command") {
    RunReport r = run_command("commuting", kVirasoro, {});
    CHECK(entry(r, "commuting").details.at("dim") == "0");
    const CheckEntry& pol = entry(r, "polarization");
    CHECK(pol.passed);
    REQUIRE(!pol.lines.empty());
    CHECK(pol.lines.back() == "checked 0 maps");
}

TEST_CASE("current command needs and uses a coefficient algebra") {
    CHECK_THROWS_AS(run_command("current", kVirasoro, {}), UsageError);

    RunOptions opts;
    opts.tensor = 2;
    RunReport r = run_command("current", kVirasoro, opts);
    CHECK(names(r) == std::vector<std::string>{"current-construction", "current-skew",
                                               "current-jacobi"});
    CHECK(entry(r, "current-construction").details.at("rank") == "2");
    CHECK(entry(r, "current-construction").details.at("coefficient_dim") == "2");
    CHECK(r.overall_pass());
}

TEST_CASE("solver commands operate on the current algebra when one is in play") {
    RunOptions opts;
    opts.tensor = 2;
    RunReport r = run_command("center", kVirasoro, opts);
    CHECK(names(r) ==
          std::vector<std::string>{"current-construction", "skew", "jacobi", "center"});
    CHECK(entry(r, "center").details.at("dim") == "0");
    CHECK(r.overall_pass());
}

TEST_CASE("--tensor conflicts with a file-level coefficient algebra") {
    std::string qxq = std::string(kVirasoro) +
                      "[coefficient-algebra]\nbasis u v\nunit = \"u + v\"\n"
                      "\"u,u\" = \"u\"\n\"v,v\" = \"v\"\n";
    RunOptions opts;
    opts.tensor = 2;
    CHECK_THROWS_WITH_AS(run_command("center", qxq, opts),
                         "--tensor conflicts with the [coefficient-algebra] section",
                         UsageError);
}

TEST_CASE("unknown commands and unsupported conventions are usage errors") {
    CHECK_THROWS_AS(run_command("frobnicate", kVirasoro, {}), UsageError);
    RunOptions shifted;
    shifted.conv = Convention::LambdaShifted;
    CHECK_THROWS_WITH_AS(run_command("verify-all", kVirasoro, shifted),
                         "verify-all supports the partial convention only", UsageError);
}

TEST_CASE("verify-all runs the full pipeline in a fixed order") {
    RunReport r = run_command("verify-all", kNeveuSchwarz, {});
    CHECK(names(r) == std::vector<std::string>{
                          "skew", "jacobi", "center", "perfect", "centroid",
                          "biderivations", "second-leibniz", "centroid-form",
                          "swap-identity", "centralizer-residual", "commuting",
                          "polarization", "commuting-in-centroid"});
    CHECK(r.overall_pass());
    CHECK(exit_status(r) == 0);
    CHECK(entry(r, "perfect").lines[0] == "perfect at bound 3");
    CHECK(entry(r, "centroid-form").applicable);
    CHECK(entry(r, "centroid-form").passed);
}

TEST_CASE("verify-all appends the current-algebra block when coefficients are present") {
    std::string spec = std::string(kVirasoro) +
                       "[coefficient-algebra]\nquotient 2\n[bounds]\ndeg-d 2\ndeg-l 2\n";
    RunReport r = run_command("verify-all", spec, {});
    std::vector<std::string> n = names(r);
    REQUIRE(n.size() == 18);
    CHECK(std::vector<std::string>(n.end() - 5, n.end()) ==
          std::vector<std::string>{"current-construction", "current-skew", "current-jacobi",
                                   "current-decomposition",
                                   "current-commuting-in-centroid"});
    CHECK(r.deg_d == 2);
    CHECK(r.overall_pass());
}

TEST_CASE("verify-all gates everything on a defective algebra") {
    RunReport r = run_command("verify-all", kCorrupted, {});
    CHECK(names(r) == std::vector<std::string>{"skew", "jacobi", "axiom-gate"});
    CHECK(exit_status(r) == 1);
}

TEST_CASE("text rendering is deterministic and carries the frozen layout") {
    RunReport r1 = run_command("verify-all", kNeveuSchwarz, {});
    RunReport r2 = run_command("verify-all", kNeveuSchwarz, {});
    std::string t1 = render_report(r1, ReportFormat::Text);
    std::string t2 = render_report(r2, ReportFormat::Text);
    CHECK(t1 == t2);
    CHECK(t1.rfind("lcsk 0.1.0\ninput: ns (fnv1a64:", 0) == 0);
    CHECK(t1.find("\ncommand: verify-all\n") != std::string::npos);
    CHECK(t1.find("\nbounds: deg-d 3, deg-l 3\n") != std::string::npos);
    CHECK(t1.find("\nconvention: partial\n") != std::string::npos);
    CHECK(t1.find("[PASS] skew\n") != std::string::npos);
    CHECK(t1.find("[FAIL]") == std::string::npos);
    size_t tail = t1.rfind("overall: PASS\n");
    CHECK(tail == t1.size() - 14);

    std::string failed = render_report(run_command("check", kCorrupted, {}),
                                       ReportFormat::Text);
    CHECK(failed.find("[FAIL] skew\n") != std::string::npos);
    CHECK(failed.find("    skew(L,L): residual on L: ") != std::string::npos);
    CHECK(failed.rfind("overall: FAIL\n") == failed.size() - 14);
}

TEST_CASE("machine rendering is valid JSON with the documented shape") {
    RunReport r = run_command("bider", kVirasoro, {});
    std::string text = render_report(r, ReportFormat::Machine);
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("schema") == "lcsk-report/1");
    CHECK(j.at("tool_version") == kToolVersion);
    CHECK(j.at("input").at("name") == "virasoro");
    CHECK(j.at("input").at("digest").get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK(j.at("command") == "bider");
    CHECK(j.at("bounds").at("deg_d") == 3);
    CHECK(j.at("bounds").at("deg_l") == 3);
    CHECK(j.at("convention") == "partial");
    CHECK(j.at("overall_pass") == true);
    REQUIRE(j.at("checks").is_array());
    REQUIRE(j.at("checks").size() == 4);
    CHECK(j.at("checks")[0].at("name") == "skew");
    CHECK(j.at("checks")[0].at("applicable") == true);
    CHECK(j.at("checks")[0].at("passed") == true);
    CHECK(j.at("checks")[2].at("details").at("even_dim") == "1");

    // deterministic byte-for-byte
    CHECK(render_report(run_command("bider", kVirasoro, {}), ReportFormat::Machine) == text);
}

TEST_CASE("a [SKIP] entry never fails the run") {
    // abelian algebras are not centerless, so centroid-form is inapplicable
    std::string ab = "name ab\n[generators]\nA even\n";
    RunReport r = run_command("verify-all", ab, {});
    const CheckEntry& cf = entry(r, "centroid-form");
    CHECK(!cf.applicable);
    CHECK(r.overall_pass());
    std::string text = render_report(r, ReportFormat::Text);
    CHECK(text.find("[SKIP] centroid-form (not applicable)\n") != std::string::npos);
}
