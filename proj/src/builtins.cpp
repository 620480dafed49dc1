#include "lcsk/builtins.hpp"

#include "lcsk/errors.hpp"

namespace lcsk {

namespace {

StructureTable empty_table(const VarTablePtr& tab, int rank) {
    return StructureTable(
        static_cast<size_t>(rank),
        std::vector<std::vector<SPoly>>(static_cast<size_t>(rank),
                                        std::vector<SPoly>(static_cast<size_t>(rank), SPoly(tab))));
}

} // namespace

AlgebraPtr virasoro() {
    const VarTablePtr& tab = VarTable::standard();
    SPoly d = SPoly::variable(tab, tab->partial());
    SPoly x = SPoly::variable(tab, tab->spectral("x"));
    StructureTable s = empty_table(tab, 1);
    s[0][0][0] = d + x * Rat(2);
    return LCSAlgebra::make("virasoro", {"L"}, {Parity::Even}, std::move(s));
}

AlgebraPtr neveu_schwarz() {
    const VarTablePtr& tab = VarTable::standard();
    SPoly d = SPoly::variable(tab, tab->partial());
    SPoly x = SPoly::variable(tab, tab->spectral("x"));
    StructureTable s = empty_table(tab, 2);
    s[0][0][0] = d + x * Rat(2);                     // [L L]
    s[0][1][1] = d + x * rat(3, 2);                  // [L G]
    s[1][0][1] = d * rat(1, 2) + x * rat(3, 2);      // [G L]
    s[1][1][0] = SPoly::constant(tab, Rat(2));       // [G G]
    return LCSAlgebra::make("neveu-schwarz", {"L", "G"}, {Parity::Even, Parity::Odd},
                            std::move(s));
}

AlgebraPtr abelian(int rank) {
    if (rank < 0) throw UsageError("negative rank");
    const VarTablePtr& tab = VarTable::standard();
    std::vector<std::string> names;
    std::vector<Parity> parities(static_cast<size_t>(rank), Parity::Even);
    for (int i = 0; i < rank; ++i) names.push_back("A" + std::to_string(i + 1));
    return LCSAlgebra::make("abelian" + std::to_string(rank), std::move(names),
                            std::move(parities), empty_table(tab, rank));
}

AlgebraPtr current_lie(std::string name, std::vector<std::string> gen_names,
                       const std::vector<std::vector<std::vector<Rat>>>& c) {
    const VarTablePtr& tab = VarTable::standard();
    const int r = static_cast<int>(gen_names.size());
    StructureTable s = empty_table(tab, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                s[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    SPoly::constant(tab, c[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                            [static_cast<size_t>(k)]);
    std::vector<Parity> parities(static_cast<size_t>(r), Parity::Even);
    return LCSAlgebra::make(std::move(name), std::move(gen_names), std::move(parities),
                            std::move(s));
}

AlgebraPtr cur_sl2() {
    std::vector<std::vector<std::vector<Rat>>> c(
        3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    // basis order e=0, h=1, f=2
    c[1][0][0] = 2;   // [h,e] = 2e
    c[0][1][0] = -2;  // [e,h] = -2e
    c[1][2][2] = -2;  // [h,f] = -2f
    c[2][1][2] = 2;   // [f,h] = 2f
    c[0][2][1] = 1;   // [e,f] = h
    c[2][0][1] = -1;  // [f,e] = -h
    return current_lie("cur-sl2", {"e", "h", "f"}, c);
}

} // namespace lcsk
