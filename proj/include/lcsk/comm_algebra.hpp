#pragma once

#include "lcsk/linalg.hpp"
#include "lcsk/rational.hpp"

#include <string>
#include <vector>

namespace lcsk {

// Finite-dimensional commutative associative unital algebra over Q, given by
// a basis and a multiplication table. Construction checks commutativity,
// associativity and the unit law exactly and names a witness on failure.
class CommutativeAlgebra {
public:
    static CommutativeAlgebra make(std::vector<std::string> basis_names,
                                   std::vector<std::vector<std::vector<Rat>>> mult,
                                   std::vector<Rat> unit);

    // Q[t]/(t^n): basis 1, t, ..., t^(n-1). n >= 1.
    static CommutativeAlgebra quotient_poly(int n);

    // Q x Q with the coordinatewise product; basis u, v; unit u + v.
    static CommutativeAlgebra square();

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& basis_name(int s) const { return names_[static_cast<size_t>(s)]; }
    const std::string& name() const { return name_; }
    const Rat& c(int s, int t, int w) const {
        return mult_[static_cast<size_t>(s)][static_cast<size_t>(t)][static_cast<size_t>(w)];
    }
    const std::vector<Rat>& unit() const { return unit_; }

    std::vector<Rat> multiply(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

    // Coordinates of an element in the basis (identity on coordinate vectors;
    // validates length). Kept so callers can treat elements opaquely.
    std::vector<Rat> decompose(const std::vector<Rat>& a) const;

    // Matrix of multiplication by `a` in the basis: column t holds a * b_t.
    linalg::RatMatrix mult_operator(const std::vector<Rat>& a) const;

private:
    CommutativeAlgebra() = default;
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::vector<Rat>>> mult_;
    std::vector<Rat> unit_;
};

} // namespace lcsk
