#pragma once

#include "lcsk/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcsk {

enum class VarKind { Partial, Spectral };

// Index into a VarTable. Slot 0 is always the partial variable.
struct VarId {
    int index = -1;
    bool operator==(const VarId&) const = default;
};

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

// Immutable registry of the variables a polynomial may mention: exactly one
// partial (printed "d") plus named spectral variables. Polynomials built over
// different registries never mix.
class VarTable {
public:
    static VarTablePtr make(std::vector<std::string> spectral_names);

    // Shared registry used by the whole kernel: d, x, mu, gamma, eta, kappa.
    // "x" is the canonical lambda of bracket tables.
    static const VarTablePtr& standard();

    int size() const { return static_cast<int>(names_.size()); }
    VarId partial() const { return VarId{0}; }
    VarKind kind(VarId v) const { return v.index == 0 ? VarKind::Partial : VarKind::Spectral; }
    const std::string& name(VarId v) const;
    std::optional<VarId> find(std::string_view name) const;
    VarId spectral(std::string_view name) const; // throws UsageError when absent

private:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

// Rational-affine combination c + sum_i coeff[i] * var_i. Substitution targets
// are always affine; that keeps every replacement a ring homomorphism.
struct Affine {
    VarTablePtr table;
    Rat constant;
    std::vector<Rat> coeff; // indexed by VarId::index

    static Affine zero(VarTablePtr tab);
    static Affine var(VarTablePtr tab, VarId v, const Rat& scale = Rat(1));

    Affine& add_var(VarId v, const Rat& scale = Rat(1));
    Affine& add_const(const Rat& c);
    Affine operator-() const;
    Affine operator+(const Affine& o) const;
};

} // namespace lcsk
