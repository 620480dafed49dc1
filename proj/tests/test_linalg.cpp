#include <doctest.h>

#include "lcsk/linalg.hpp"

#include <random>

using namespace lcsk;
using namespace lcsk::linalg;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = Rat(rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    return m;
}

std::vector<Rat> mat_apply(const RatMatrix& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(static_cast<size_t>(m.rows()), Rat(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out[static_cast<size_t>(r)] += m.at(r, c) * v[static_cast<size_t>(c)];
    return out;
}

bool is_zero_vec(const std::vector<Rat>& v) {
    for (const Rat& r : v)
        if (!rat_is_zero(r)) return false;
    return true;
}

} // namespace

TEST_CASE("rref on a known matrix") {
    RatMatrix m = from_rows({{1, 2, 3}, {2, 4, 7}, {1, 2, 4}});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<int>{0, 2});
    CHECK(r.m.at(0, 0) == Rat(1));
    CHECK(r.m.at(0, 1) == Rat(2));
    CHECK(r.m.at(0, 2) == Rat(0));
    CHECK(r.m.at(1, 2) == Rat(1));
}

TEST_CASE("rref is deterministic under row swaps of equivalent systems") {
    RatMatrix a = from_rows({{0, 1, 1}, {1, 0, 2}});
    RatMatrix b = from_rows({{1, 0, 2}, {0, 1, 1}});
    RrefResult ra = rref(a), rb = rref(b);
    CHECK(ra.m == rb.m);
    CHECK(ra.pivot_cols == rb.pivot_cols);
}

TEST_CASE("nullspace vectors satisfy the system and are normalized") {
    RatMatrix m = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}});
    SolutionSpace ker = nullspace(m);
    CHECK(ker.ambient == 4);
    CHECK(ker.dim() == 2);
    for (const auto& v : ker.basis) CHECK(is_zero_vec(mat_apply(m, v)));
    // RREF normalization: pivot coordinates are 1 and exclusive
    for (size_t i = 0; i < ker.basis.size(); ++i) {
        CHECK(ker.basis[i][static_cast<size_t>(ker.pivots[i])] == Rat(1));
        for (size_t j = 0; j < ker.basis.size(); ++j)
            if (i != j) CHECK(rat_is_zero(ker.basis[j][static_cast<size_t>(ker.pivots[i])]));
    }
}

TEST_CASE("span_of normalizes equal subspaces identically") {
    std::vector<std::vector<Rat>> gen1 = {{Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(3)}};
    std::vector<std::vector<Rat>> gen2 = {{Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(2), Rat(5)},
                                          {Rat(3), Rat(6), Rat(1)}};
    SolutionSpace s1 = span_of(3, gen1);
    SolutionSpace s2 = span_of(3, gen2);
    CHECK(s1.dim() == 2);
    CHECK(s1.basis == s2.basis);
    CHECK(s1.pivots == s2.pivots);
}

TEST_CASE("in_span returns exact coordinates") {
    SolutionSpace s = span_of(3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}});
    auto c = in_span({Rat(2), Rat(3), Rat(5)}, s);
    REQUIRE(c.has_value());
    // reconstruct
    std::vector<Rat> back(3, Rat(0));
    for (size_t i = 0; i < s.basis.size(); ++i)
        for (size_t j = 0; j < 3; ++j) back[j] += (*c)[i] * s.basis[i][j];
    CHECK(back == std::vector<Rat>{Rat(2), Rat(3), Rat(5)});
    CHECK(!in_span({Rat(1), Rat(1), Rat(1)}, s).has_value());
}

TEST_CASE("solve finds a particular solution or reports inconsistency") {
    RatMatrix m = from_rows({{1, 1}, {1, -1}});
    auto sol = solve(m, {Rat(3), Rat(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(2));
    CHECK((*sol)[1] == Rat(1));

    RatMatrix sing = from_rows({{1, 1}, {2, 2}});
    CHECK(!solve(sing, {Rat(1), Rat(3)}).has_value());
    auto under = solve(sing, {Rat(1), Rat(2)});
    REQUIRE(under.has_value());
    CHECK(mat_apply(sing, *under) == std::vector<Rat>{Rat(1), Rat(2)});
}

TEST_CASE("sparse eliminator matches dense nullspace on random systems") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_int_distribution<int> dims(1, 8);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = dims(rng), cols = dims(rng);
        RatMatrix m(rows, cols);
        SparseEliminator elim(cols);
        for (int r = 0; r < rows; ++r) {
            SparseEliminator::Row row;
            for (int c = 0; c < cols; ++c) {
                int x = val(rng);
                m.at(r, c) = Rat(x);
                if (x) row.push_back({c, Rat(x)});
            }
            elim.add_row(std::move(row));
        }
        SolutionSpace dense = nullspace(m);
        SolutionSpace sparse = elim.kernel();
        CHECK(dense.ambient == sparse.ambient);
        CHECK(dense.basis == sparse.basis);
        CHECK(dense.pivots == sparse.pivots);
    }
}

TEST_CASE("sparse eliminator rank tracks duplicates") {
    SparseEliminator elim(3);
    elim.add_row({{0, Rat(1)}, {2, Rat(2)}});
    elim.add_row({{0, Rat(2)}, {2, Rat(4)}}); // dependent
    CHECK(elim.rank() == 1);
    elim.add_row({{1, Rat(5)}});
    CHECK(elim.rank() == 2);
    SolutionSpace ker = elim.kernel();
    CHECK(ker.dim() == 1);
    // RREF-normalized: leading entry 1
    CHECK(ker.basis[0] == std::vector<Rat>{Rat(1), Rat(0), rat(-1, 2)});
}
