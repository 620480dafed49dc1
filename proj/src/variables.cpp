#include "lcsk/variables.hpp"

#include "lcsk/errors.hpp"

#include <algorithm>

namespace lcsk {

VarTablePtr VarTable::make(std::vector<std::string> spectral_names) {
    std::vector<std::string> names;
    names.reserve(spectral_names.size() + 1);
    names.push_back("d");
    for (auto& n : spectral_names) {
        if (n.empty()) throw ConstructionError("empty variable name");
        if (std::find(names.begin(), names.end(), n) != names.end())
            throw ConstructionError("duplicate variable name: " + n);
        names.push_back(std::move(n));
    }
    return VarTablePtr(new VarTable(std::move(names)));
}

const VarTablePtr& VarTable::standard() {
    static const VarTablePtr tab = make({"x", "mu", "gamma", "eta", "kappa"});
    return tab;
}

const std::string& VarTable::name(VarId v) const {
    if (v.index < 0 || v.index >= size()) throw UsageError("variable id out of range");
    return names_[static_cast<size_t>(v.index)];
}

std::optional<VarId> VarTable::find(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<size_t>(i)] == name) return VarId{i};
    return std::nullopt;
}

VarId VarTable::spectral(std::string_view name) const {
    auto v = find(name);
    if (!v || v->index == 0) throw UsageError("no spectral variable named " + std::string(name));
    return *v;
}

Affine Affine::zero(VarTablePtr tab) {
    Affine a;
    a.table = std::move(tab);
    a.constant = 0;
    a.coeff.assign(static_cast<size_t>(a.table->size()), Rat(0));
    return a;
}

Affine Affine::var(VarTablePtr tab, VarId v, const Rat& scale) {
    Affine a = zero(std::move(tab));
    a.coeff[static_cast<size_t>(v.index)] = scale;
    return a;
}

Affine& Affine::add_var(VarId v, const Rat& scale) {
    coeff[static_cast<size_t>(v.index)] += scale;
    return *this;
}

Affine& Affine::add_const(const Rat& c) {
    constant += c;
    return *this;
}

Affine Affine::operator-() const {
    Affine a = *this;
    a.constant = -a.constant;
    for (auto& c : a.coeff) c = -c;
    return a;
}

Affine Affine::operator+(const Affine& o) const {
    if (table.get() != o.table.get()) throw UsageError("affine terms over different registries");
    Affine a = *this;
    a.constant += o.constant;
    for (size_t i = 0; i < a.coeff.size(); ++i) a.coeff[i] += o.coeff[i];
    return a;
}

} // namespace lcsk
