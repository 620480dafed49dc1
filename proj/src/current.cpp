#include "lcsk/current.hpp"

namespace lcsk {

AlgebraPtr tensor_current(const AlgebraPtr& l, const CommutativeAlgebra& a) {
    const int rl = l->rank();
    const int da = a.dim();
    const int r = rl * da;
    const VarTablePtr& tab = l->vars();

    std::vector<std::string> names;
    std::vector<Parity> parities;
    names.reserve(static_cast<size_t>(r));
    parities.reserve(static_cast<size_t>(r));
    for (int i = 0; i < rl; ++i)
        for (int s = 0; s < da; ++s) {
            names.push_back(l->gen_name(i) + "@" + a.basis_name(s));
            parities.push_back(l->parity(i));
        }

    StructureTable st(static_cast<size_t>(r),
                      std::vector<std::vector<SPoly>>(
                          static_cast<size_t>(r),
                          std::vector<SPoly>(static_cast<size_t>(r), SPoly(tab))));
    for (int i = 0; i < rl; ++i)
        for (int j = 0; j < rl; ++j)
            for (int k = 0; k < rl; ++k) {
                const SPoly& s_ijk = l->structure(i, j, k);
                if (s_ijk.is_zero()) continue;
                for (int s = 0; s < da; ++s)
                    for (int t = 0; t < da; ++t)
                        for (int w = 0; w < da; ++w) {
                            const Rat& c = a.c(s, t, w);
                            if (rat_is_zero(c)) continue;
                            st[static_cast<size_t>(tensor_index(i, s, da))]
                              [static_cast<size_t>(tensor_index(j, t, da))]
                              [static_cast<size_t>(tensor_index(k, w, da))] += s_ijk * c;
                        }
            }

    return LCSAlgebra::make(l->name() + "(x)" + a.name(), std::move(names),
                            std::move(parities), std::move(st));
}

} // namespace lcsk
