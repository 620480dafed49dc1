#include "lcsk/spoly.hpp"

#include "lcsk/errors.hpp"

#include <numeric>

namespace lcsk {

bool GradedLex::operator()(const Expo& a, const Expo& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SPoly SPoly::constant(VarTablePtr tab, const Rat& c) {
    SPoly p(std::move(tab));
    if (!rat_is_zero(c)) p.terms_[Expo(static_cast<size_t>(p.tab_->size()), 0u)] = c;
    return p;
}

SPoly SPoly::variable(VarTablePtr tab, VarId v, unsigned power) {
    SPoly p(std::move(tab));
    if (v.index < 0 || v.index >= p.tab_->size()) throw UsageError("variable id out of range");
    Expo e(static_cast<size_t>(p.tab_->size()), 0u);
    e[static_cast<size_t>(v.index)] = power;
    p.terms_[e] = Rat(1);
    return p;
}

SPoly SPoly::monomial(VarTablePtr tab, const Expo& e, const Rat& c) {
    SPoly p(std::move(tab));
    if (e.size() != static_cast<size_t>(p.tab_->size()))
        throw UsageError("exponent vector length mismatch");
    if (!rat_is_zero(c)) p.terms_[e] = c;
    return p;
}

SPoly SPoly::from_affine(const Affine& a) {
    SPoly p = constant(a.table, a.constant);
    for (size_t i = 0; i < a.coeff.size(); ++i)
        if (!rat_is_zero(a.coeff[i]))
            p += variable(a.table, VarId{static_cast<int>(i)}) * a.coeff[i];
    return p;
}

void SPoly::check_same(const SPoly& o) const {
    if (tab_.get() != o.tab_.get())
        throw UsageError("polynomials over different variable registries");
}

bool SPoly::operator==(const SPoly& o) const {
    check_same(o);
    return terms_ == o.terms_;
}

SPoly& SPoly::operator+=(const SPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (rat_is_zero(it->second)) terms_.erase(it);
        }
    }
    return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (rat_is_zero(it->second)) terms_.erase(it);
        }
    }
    return *this;
}

SPoly SPoly::operator+(const SPoly& o) const {
    SPoly r = *this;
    r += o;
    return r;
}

SPoly SPoly::operator-(const SPoly& o) const {
    SPoly r = *this;
    r -= o;
    return r;
}

SPoly SPoly::operator-() const {
    SPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

SPoly SPoly::operator*(const SPoly& o) const {
    check_same(o);
    SPoly r(tab_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Expo e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            Rat c = c1 * c2;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (rat_is_zero(it->second)) r.terms_.erase(it);
            }
        }
    }
    return r;
}

SPoly SPoly::operator*(const Rat& c) const {
    SPoly r(tab_);
    if (rat_is_zero(c)) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

SPoly SPoly::substituted(VarId v, const Affine& repl) const {
    if (repl.table.get() != tab_.get())
        throw UsageError("substitution target over a different registry");
    if (v.index < 0 || v.index >= tab_->size()) throw UsageError("variable id out of range");
    const size_t vi = static_cast<size_t>(v.index);

    unsigned maxp = 0;
    for (const auto& [e, c] : terms_) maxp = std::max(maxp, e[vi]);
    // powers of the replacement, computed once
    std::vector<SPoly> pw;
    pw.reserve(maxp + 1);
    pw.push_back(constant(tab_, Rat(1)));
    if (maxp > 0) {
        SPoly r = from_affine(repl);
        for (unsigned k = 1; k <= maxp; ++k) pw.push_back(pw.back() * r);
    }

    SPoly out(tab_);
    for (const auto& [e, c] : terms_) {
        Expo rest = e;
        unsigned p = rest[vi];
        rest[vi] = 0;
        out += pw[p] * monomial(tab_, rest, c);
    }
    return out;
}

std::map<Expo, SPoly, GradedLex> SPoly::monomial_coeffs(const std::vector<VarId>& vars) const {
    std::vector<bool> sel(static_cast<size_t>(tab_->size()), false);
    for (VarId v : vars) {
        if (v.index < 0 || v.index >= tab_->size()) throw UsageError("variable id out of range");
        sel[static_cast<size_t>(v.index)] = true;
    }
    std::map<Expo, SPoly, GradedLex> out;
    for (const auto& [e, c] : terms_) {
        Expo key(e.size(), 0u), rest(e.size(), 0u);
        for (size_t i = 0; i < e.size(); ++i) (sel[i] ? key[i] : rest[i]) = e[i];
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, SPoly(tab_)).first;
        it->second += monomial(tab_, rest, c);
    }
    return out;
}

unsigned SPoly::degree_in(VarId v) const {
    if (v.index < 0 || v.index >= tab_->size()) throw UsageError("variable id out of range");
    unsigned m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<size_t>(v.index)]);
    return m;
}

Rat SPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::string SPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // descending graded-lex: leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Expo& e = it->first;
        Rat c = it->second;
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rat a = abs(c);

        std::vector<std::string> factors;
        bool all_zero = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            all_zero = false;
            std::string f = tab_->name(VarId{static_cast<int>(i)});
            if (e[i] > 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        if (all_zero) {
            out += rat_str(a);
            continue;
        }
        std::string term;
        if (a != 1) term = rat_str(a) + "*";
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) term += "*";
            term += factors[i];
        }
        out += term;
    }
    return out;
}

} // namespace lcsk
