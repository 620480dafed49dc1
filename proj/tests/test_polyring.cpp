#include <doctest.h>

#include "lcsk/errors.hpp"
#include "lcsk/spoly.hpp"

using namespace lcsk;

namespace {
const VarTablePtr& tab() { return VarTable::standard(); }
SPoly v(const char* name) { return SPoly::variable(tab(), tab()->spectral(name)); }
SPoly dv() { return SPoly::variable(tab(), tab()->partial()); }
SPoly c(long n, long den = 1) { return SPoly::constant(tab(), rat(n, den)); }
} // namespace

TEST_CASE("rational parsing and rendering") {
    CHECK(rat_str(rat(3, 6)) == "1/2");
    CHECK(rat_str(rat(-4, 2)) == "-2");
    CHECK(rat_parse("3/2") == rat(3, 2));
    CHECK(rat_parse("-7") == rat(-7));
    CHECK(rat_is_zero(rat(0, 5)));
    CHECK_THROWS_AS(rat(1, 0), UsageError);
    CHECK_THROWS_AS(rat_parse("1.5"), UsageError);
    CHECK_THROWS_AS(rat_parse("x"), UsageError);
}

TEST_CASE("variable registry") {
    CHECK(tab()->size() == 6);
    CHECK(tab()->name(tab()->partial()) == "d");
    CHECK(tab()->kind(tab()->partial()) == VarKind::Partial);
    CHECK(tab()->kind(tab()->spectral("x")) == VarKind::Spectral);
    CHECK(!tab()->find("nope").has_value());
    CHECK_THROWS_AS(tab()->spectral("nope"), UsageError);
    CHECK_THROWS_AS(VarTable::make({"x", "x"}), ConstructionError);
    // the same shared registry every time, so polynomials from different
    // call sites mix freely
    CHECK(VarTable::standard().get() == tab().get());
}

TEST_CASE("polynomial arithmetic is exact and canonical") {
    SPoly p = (dv() + c(2) * v("x")) * (dv() - c(2) * v("x"));
    SPoly q = dv() * dv() - c(4) * v("x") * v("x");
    CHECK(p == q);
    CHECK((p - q).is_zero());

    // rational coefficients never round
    SPoly r = c(1, 3) * dv() + c(1, 6) * dv();
    CHECK(r == c(1, 2) * dv());

    // zero terms vanish from the map
    SPoly z = dv() - dv();
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}

TEST_CASE("rendering order is descending graded-lex") {
    SPoly p = dv() * dv() + c(3) * dv() * v("x") + c(2) * dv() * v("mu") +
              c(2) * v("x") * v("x") + c(4) * v("x") * v("mu");
    CHECK(p.str() == "d^2 + 3*d*x + 2*d*mu + 2*x^2 + 4*x*mu");
    CHECK((-p).str() == "-d^2 - 3*d*x - 2*d*mu - 2*x^2 - 4*x*mu");
    CHECK((c(1, 2) * dv()).str() == "1/2*d");
    CHECK(SPoly::zero(tab()).str() == "0");
    CHECK(c(-5).str() == "-5");
    CHECK((dv() * dv() * dv()).str() == "d^3");
}

TEST_CASE("affine substitution is a ring homomorphism") {
    VarId x = tab()->spectral("x");
    VarId mu = tab()->spectral("mu");
    VarId d = tab()->partial();

    SPoly p = dv() * dv() + c(2) * dv() * v("x") + v("x") * v("x");
    // x -> -d - x - mu
    Affine repl = -(Affine::var(tab(), d) + Affine::var(tab(), x) + Affine::var(tab(), mu));
    SPoly image = p.substituted(x, repl);
    SPoly t = -(dv() + v("x") + v("mu"));
    CHECK(image == dv() * dv() + c(2) * dv() * t + t * t);

    // substituting a variable that does not occur is the identity
    CHECK(p.substituted(tab()->spectral("kappa"), repl) == p);

    // homomorphism property on a product
    SPoly a = dv() + v("x");
    SPoly b = v("x") * v("x") - c(7);
    CHECK((a * b).substituted(x, repl) == a.substituted(x, repl) * b.substituted(x, repl));
}

TEST_CASE("monomial coefficient split") {
    VarId x = tab()->spectral("x");
    VarId mu = tab()->spectral("mu");
    SPoly p = c(2) * dv() * v("x") + c(3) * v("x") + v("mu") * dv() + c(5);
    auto parts = p.monomial_coeffs({x, mu});
    // keys: 1, x, mu with polynomial coefficients in d
    Expo unit(static_cast<size_t>(tab()->size()), 0);
    Expo ex = unit;
    ex[static_cast<size_t>(x.index)] = 1;
    Expo emu = unit;
    emu[static_cast<size_t>(mu.index)] = 1;
    CHECK(parts.size() == 3);
    CHECK(parts.at(unit) == c(5));
    CHECK(parts.at(ex) == c(2) * dv() + c(3));
    CHECK(parts.at(emu) == dv());

    // recombination identity
    SPoly back = SPoly::zero(tab());
    for (const auto& [e, coeff] : parts) back += coeff * SPoly::monomial(tab(), e, rat(1));
    CHECK(back == p);
}

TEST_CASE("degree queries") {
    SPoly p = dv() * dv() * v("x") + v("x") * v("x") * v("x");
    CHECK(p.degree_in(tab()->partial()) == 2);
    CHECK(p.degree_in(tab()->spectral("x")) == 3);
    CHECK(p.degree_in(tab()->spectral("mu")) == 0);
}

TEST_CASE("polynomials across registries never mix") {
    VarTablePtr other = VarTable::make({"x"});
    SPoly a = SPoly::variable(other, other->spectral("x"));
    CHECK_THROWS_AS(a + v("x"), UsageError);
}
