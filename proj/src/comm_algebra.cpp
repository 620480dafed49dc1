#include "lcsk/comm_algebra.hpp"

#include "lcsk/errors.hpp"

#include <set>

namespace lcsk {

CommutativeAlgebra CommutativeAlgebra::make(std::vector<std::string> basis_names,
                                            std::vector<std::vector<std::vector<Rat>>> mult,
                                            std::vector<Rat> unit) {
    const size_t n = basis_names.size();
    if (n == 0) throw ConstructionError("coefficient algebra needs at least one basis element");
    {
        std::set<std::string> seen;
        for (const auto& b : basis_names) {
            if (b.empty()) throw ConstructionError("empty basis name");
            if (!seen.insert(b).second) throw ConstructionError("duplicate basis name: " + b);
        }
    }
    if (mult.size() != n) throw ConstructionError("multiplication table has wrong shape");
    for (const auto& row : mult) {
        if (row.size() != n) throw ConstructionError("multiplication table has wrong shape");
        for (const auto& entry : row)
            if (entry.size() != n) throw ConstructionError("multiplication table has wrong shape");
    }
    if (unit.size() != n) throw ConstructionError("unit vector has wrong length");

    CommutativeAlgebra alg;
    alg.names_ = std::move(basis_names);
    alg.mult_ = std::move(mult);
    alg.unit_ = std::move(unit);
    alg.name_ = "comm" + std::to_string(n);

    // commutativity
    for (size_t s = 0; s < n; ++s)
        for (size_t t = s + 1; t < n; ++t)
            for (size_t w = 0; w < n; ++w)
                if (alg.mult_[s][t][w] != alg.mult_[t][s][w])
                    throw ConstructionError("multiplication not commutative at (" +
                                            alg.names_[s] + "," + alg.names_[t] + ")");

    // associativity: (b_s b_t) b_u = b_s (b_t b_u)
    auto basis_vec = [&](size_t s) {
        std::vector<Rat> v(n, Rat(0));
        v[s] = 1;
        return v;
    };
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t)
            for (size_t u = 0; u < n; ++u) {
                std::vector<Rat> lhs = alg.multiply(alg.multiply(basis_vec(s), basis_vec(t)),
                                                    basis_vec(u));
                std::vector<Rat> rhs = alg.multiply(basis_vec(s),
                                                    alg.multiply(basis_vec(t), basis_vec(u)));
                if (lhs != rhs)
                    throw ConstructionError("multiplication not associative at (" +
                                            alg.names_[s] + "," + alg.names_[t] + "," +
                                            alg.names_[u] + ")");
            }

    // unit law
    for (size_t s = 0; s < n; ++s) {
        std::vector<Rat> prod = alg.multiply(alg.unit_, basis_vec(s));
        if (prod != basis_vec(s))
            throw ConstructionError("unit law fails on basis element " + alg.names_[s]);
    }
    return alg;
}

CommutativeAlgebra CommutativeAlgebra::quotient_poly(int n) {
    if (n < 1) throw UsageError("quotient order must be at least 1");
    const size_t nn = static_cast<size_t>(n);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
    std::vector<std::vector<std::vector<Rat>>> mult(
        nn, std::vector<std::vector<Rat>>(nn, std::vector<Rat>(nn, Rat(0))));
    for (size_t s = 0; s < nn; ++s)
        for (size_t t = 0; t < nn; ++t)
            if (s + t < nn) mult[s][t][s + t] = 1;
    std::vector<Rat> unit(nn, Rat(0));
    unit[0] = 1;
    CommutativeAlgebra alg = make(std::move(names), std::move(mult), std::move(unit));
    alg.name_ = "Q[t]/(t^" + std::to_string(n) + ")";
    return alg;
}

CommutativeAlgebra CommutativeAlgebra::square() {
    std::vector<std::vector<std::vector<Rat>>> mult(
        2, std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, Rat(0))));
    mult[0][0][0] = 1;
    mult[1][1][1] = 1;
    CommutativeAlgebra alg = make({"u", "v"}, std::move(mult), {Rat(1), Rat(1)});
    alg.name_ = "QxQ";
    return alg;
}

std::vector<Rat> CommutativeAlgebra::multiply(const std::vector<Rat>& a,
                                              const std::vector<Rat>& b) const {
    const size_t n = names_.size();
    if (a.size() != n || b.size() != n) throw UsageError("coefficient vector length mismatch");
    std::vector<Rat> out(n, Rat(0));
    for (size_t s = 0; s < n; ++s) {
        if (rat_is_zero(a[s])) continue;
        for (size_t t = 0; t < n; ++t) {
            if (rat_is_zero(b[t])) continue;
            Rat ab = a[s] * b[t];
            for (size_t w = 0; w < n; ++w)
                if (!rat_is_zero(mult_[s][t][w])) out[w] += ab * mult_[s][t][w];
        }
    }
    return out;
}

std::vector<Rat> CommutativeAlgebra::decompose(const std::vector<Rat>& a) const {
    if (a.size() != names_.size()) throw UsageError("coefficient vector length mismatch");
    return a;
}

linalg::RatMatrix CommutativeAlgebra::mult_operator(const std::vector<Rat>& a) const {
    const int n = dim();
    if (static_cast<int>(a.size()) != n) throw UsageError("coefficient vector length mismatch");
    linalg::RatMatrix m(n, n);
    for (int t = 0; t < n; ++t) {
        std::vector<Rat> bt(static_cast<size_t>(n), Rat(0));
        bt[static_cast<size_t>(t)] = 1;
        std::vector<Rat> prod = multiply(a, bt);
        for (int w = 0; w < n; ++w) m.at(w, t) = prod[static_cast<size_t>(w)];
    }
    return m;
}

} // namespace lcsk
