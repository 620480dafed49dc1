#pragma once

#include "lcsk/algebra.hpp"
#include "lcsk/comm_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcsk {

// Parsed model of an algebra description file. Kept fully canonical: bracket
// and product entries that evaluate to zero are never stored, so two files
// describing the same algebra parse to equal models and
// parse(canonical_print(m)) == m.
//
// File grammar (sections in this order, '#' starts a comment outside quotes):
//
//   name <identifier>
//
//   [generators]
//   <identifier> even|odd          # one line per generator
//
//   [brackets]                     # omitted pairs are zero
//   "A,B" = "<expression>"
//
//   [coefficient-algebra]          # optional; either form
//   quotient <n>                   #   Q[t]/(t^n)
//   --- or ---
//   basis <id> <id> ...
//   unit = "<combination>"
//   "u,v" = "<combination>"        # omitted products are zero
//
//   [bounds]                       # optional defaults for the solvers
//   deg-d <n>
//   deg-l <n>
//
// Expressions use rational literals (a or a/b), the names d and x, '+', '-',
// '*', '^', parentheses, and juxtaposition for products. Each additive term
// may mention at most one generator, as its last factor.
struct GeneratorSpec {
    std::string name;
    Parity parity = Parity::Even;
    bool operator==(const GeneratorSpec&) const = default;
};

struct CoeffAlgebraSpec {
    std::optional<int> quotient;        // Q[t]/(t^n) shortcut
    std::vector<std::string> basis;     // explicit table form
    std::vector<Rat> unit;              // coordinates in `basis`
    // product of basis elements s <= t, nonzero entries only
    std::map<std::pair<int, int>, std::vector<Rat>> products;

    bool present() const { return quotient.has_value() || !basis.empty(); }
    bool operator==(const CoeffAlgebraSpec&) const = default;
};

struct AlgebraSpecFile {
    std::string name;
    std::vector<GeneratorSpec> generators;
    // (i, j) -> coefficient of each generator in the bracket of generators
    // i, j; polynomials in d and x over the standard registry. Nonzero only.
    std::map<std::pair<int, int>, std::vector<SPoly>> brackets;
    CoeffAlgebraSpec coeff;
    std::optional<int> deg_d, deg_l;
    bool operator==(const AlgebraSpecFile&) const = default;
};

// Throws ParseError with a 1-based source position on any defect, including
// parity-inconsistent bracket entries.
AlgebraSpecFile parse_spec(const std::string& text);

// Deterministic rendering; parse_spec(canonical_print(m)) == m.
std::string canonical_print(const AlgebraSpecFile& spec);

AlgebraPtr build_algebra(const AlgebraSpecFile& spec);

// The coefficient algebra, when the file declares one. Construction-time
// algebra checks (commutativity, associativity, unit law) fire here.
std::optional<CommutativeAlgebra> build_coeff_algebra(const AlgebraSpecFile& spec);

} // namespace lcsk
