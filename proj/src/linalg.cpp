#include "lcsk/linalg.hpp"

#include "lcsk/errors.hpp"

#include <algorithm>

namespace lcsk::linalg {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RrefResult rref(RatMatrix m) {
    RrefResult res;
    std::vector<int> pivot_cols;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int sel = -1;
        for (int r = lead; r < m.rows(); ++r) {
            if (!rat_is_zero(m.at(r, col))) { sel = r; break; }
        }
        if (sel < 0) continue;
        if (sel != lead)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(lead, c));
        Rat inv = m.at(lead, col);
        for (int c = col; c < m.cols(); ++c) m.at(lead, c) /= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            Rat f = m.at(r, col);
            if (rat_is_zero(f)) continue;
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(lead, c);
        }
        pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = static_cast<int>(pivot_cols.size());
    res.pivot_cols = std::move(pivot_cols);
    res.m = std::move(m);
    return res;
}

SolutionSpace nullspace(const RatMatrix& m) {
    RrefResult r = rref(m);
    SolutionSpace s;
    s.ambient = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rat>> vecs;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols()), Rat(0));
        v[static_cast<size_t>(f)] = 1;
        for (int p = 0; p < r.rank; ++p)
            v[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(p)])] = -r.m.at(p, f);
        vecs.push_back(std::move(v));
    }
    return span_of(m.cols(), vecs);
}

SolutionSpace span_of(int ambient, const std::vector<std::vector<Rat>>& vecs) {
    RatMatrix m(static_cast<int>(vecs.size()), ambient);
    for (int i = 0; i < static_cast<int>(vecs.size()); ++i) {
        if (static_cast<int>(vecs[static_cast<size_t>(i)].size()) != ambient)
            throw UsageError("span vector length mismatch");
        for (int j = 0; j < ambient; ++j) m.at(i, j) = vecs[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    RrefResult r = rref(std::move(m));
    SolutionSpace s;
    s.ambient = ambient;
    for (int i = 0; i < r.rank; ++i) {
        std::vector<Rat> row(static_cast<size_t>(ambient));
        for (int j = 0; j < ambient; ++j) row[static_cast<size_t>(j)] = r.m.at(i, j);
        s.basis.push_back(std::move(row));
    }
    s.pivots = r.pivot_cols;
    return s;
}

std::optional<std::vector<Rat>> in_span(const std::vector<Rat>& v, const SolutionSpace& s) {
    if (static_cast<int>(v.size()) != s.ambient) throw UsageError("vector length mismatch");
    std::vector<Rat> rem = v;
    std::vector<Rat> coeffs;
    coeffs.reserve(s.basis.size());
    for (size_t i = 0; i < s.basis.size(); ++i) {
        Rat c = rem[static_cast<size_t>(s.pivots[i])];
        coeffs.push_back(c);
        if (!rat_is_zero(c))
            for (size_t j = 0; j < rem.size(); ++j) rem[j] -= c * s.basis[i][j];
    }
    for (const Rat& r : rem)
        if (!rat_is_zero(r)) return std::nullopt;
    return coeffs;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw UsageError("rhs length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[static_cast<size_t>(r)];
    }
    RrefResult rr = rref(std::move(aug));
    for (int c : rr.pivot_cols)
        if (c == a.cols()) return std::nullopt; // pivot in the rhs column
    std::vector<Rat> x(static_cast<size_t>(a.cols()), Rat(0));
    for (int p = 0; p < rr.rank; ++p)
        x[static_cast<size_t>(rr.pivot_cols[static_cast<size_t>(p)])] = rr.m.at(p, a.cols());
    return x;
}

void SparseEliminator::add_row(Row row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!row.empty()) {
        int lead = row.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            Rat inv = row.front().second;
            for (auto& [c, v] : row) v /= inv;
            pivots_.emplace(lead, std::move(row));
            return;
        }
        // row -= row[0] * pivot
        Rat f = row.front().second;
        const Row& pv = it->second;
        Row merged;
        merged.reserve(row.size() + pv.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < pv.size()) {
            if (j >= pv.size() || (i < row.size() && row[i].first < pv[j].first)) {
                merged.push_back(row[i++]);
            } else if (i >= row.size() || pv[j].first < row[i].first) {
                merged.emplace_back(pv[j].first, -f * pv[j].second);
                ++j;
            } else {
                Rat v = row[i].second - f * pv[j].second;
                if (!rat_is_zero(v)) merged.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        row = std::move(merged);
    }
}

SolutionSpace SparseEliminator::kernel() const {
    // Back-substitute so every pivot row is zero on the other pivot columns.
    std::map<int, Row> reduced = pivots_;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
        Row& row = it->second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [c, v] : row) {
                if (c == it->first) continue;
                auto p = reduced.find(c);
                if (p == reduced.end()) continue;
                // row -= v * pivot_row(c)
                Rat f = v;
                const Row& pv = p->second;
                Row merged;
                merged.reserve(row.size() + pv.size());
                size_t i = 0, j = 0;
                while (i < row.size() || j < pv.size()) {
                    if (j >= pv.size() || (i < row.size() && row[i].first < pv[j].first)) {
                        merged.push_back(row[i++]);
                    } else if (i >= row.size() || pv[j].first < row[i].first) {
                        merged.emplace_back(pv[j].first, -f * pv[j].second);
                        ++j;
                    } else {
                        Rat v2 = row[i].second - f * pv[j].second;
                        if (!rat_is_zero(v2)) merged.emplace_back(row[i].first, std::move(v2));
                        ++i;
                        ++j;
                    }
                }
                row = std::move(merged);
                changed = true;
                break;
            }
        }
    }

    std::vector<std::vector<Rat>> vecs;
    for (int f = 0; f < ncols_; ++f) {
        if (reduced.count(f)) continue;
        std::vector<Rat> v(static_cast<size_t>(ncols_), Rat(0));
        v[static_cast<size_t>(f)] = 1;
        for (const auto& [lead, row] : reduced)
            for (const auto& [c, val] : row)
                if (c == f) v[static_cast<size_t>(lead)] = -val;
        vecs.push_back(std::move(v));
    }
    return span_of(ncols_, vecs);
}

} // namespace lcsk::linalg
