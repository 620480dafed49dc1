#pragma once

#include "lcsk/rational.hpp"
#include "lcsk/variables.hpp"

#include <map>
#include <string>
#include <vector>

namespace lcsk {

// Exponent vector, one slot per registry variable.
using Expo = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then exponents slot by slot
// (the partial variable is the most significant slot). Maps keyed by this
// comparator iterate in ascending order; rendering walks them backwards so the
// leading term prints first.
struct GradedLex {
    bool operator()(const Expo& a, const Expo& b) const;
};

// Sparse multivariate polynomial over Q in the variables of one registry.
// Always in canonical form: zero coefficients are never stored, so equality
// is term-map equality and is_zero() is emptiness.
class SPoly {
public:
    using TermMap = std::map<Expo, Rat, GradedLex>;

    SPoly() = default; // unusable until given a table; kept for containers
    explicit SPoly(VarTablePtr tab) : tab_(std::move(tab)) {}

    static SPoly zero(VarTablePtr tab) { return SPoly(std::move(tab)); }
    static SPoly constant(VarTablePtr tab, const Rat& c);
    static SPoly variable(VarTablePtr tab, VarId v, unsigned power = 1);
    static SPoly monomial(VarTablePtr tab, const Expo& e, const Rat& c);
    static SPoly from_affine(const Affine& a);

    const VarTablePtr& table() const { return tab_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const SPoly& o) const;
    bool operator!=(const SPoly& o) const { return !(*this == o); }

    SPoly& operator+=(const SPoly& o);
    SPoly& operator-=(const SPoly& o);
    SPoly operator+(const SPoly& o) const;
    SPoly operator-(const SPoly& o) const;
    SPoly operator-() const;
    SPoly operator*(const SPoly& o) const;
    SPoly operator*(const Rat& c) const;

    // Replace v by an affine expression over the same registry. Plain
    // commutative substitution; it is a ring homomorphism, which is exactly
    // what the bracket evaluation rule needs.
    SPoly substituted(VarId v, const Affine& repl) const;

    // Split into coefficients of the monomials in `vars`: key = exponent
    // vector supported on `vars`, value = polynomial in the remaining
    // variables. Summing value * monomial(key) recovers the original.
    std::map<Expo, SPoly, GradedLex> monomial_coeffs(const std::vector<VarId>& vars) const;

    unsigned degree_in(VarId v) const;
    Rat coeff(const Expo& e) const;

    // Canonical text: terms in descending graded-lex order, explicit '*'
    // between factors, "^" powers, rationals as a/b. Zero prints "0".
    std::string str() const;

private:
    void check_same(const SPoly& o) const;
    VarTablePtr tab_;
    TermMap terms_;
};

inline SPoly operator*(const Rat& c, const SPoly& p) { return p * c; }

} // namespace lcsk
