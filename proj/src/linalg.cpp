#include "slocc/linalg.hpp"

#include <algorithm>

namespace slocc {

std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows[0].size();
    std::vector<std::vector<mpz_class>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        mpz_class l = 1;
        for (const auto& v : r) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
        }
        std::vector<mpz_class> ir(cols);
        bool nonzero = false;
        for (std::size_t c = 0; c < cols; ++c) {
            ir[c] = r[c].raw().get_num() * (l / r[c].raw().get_den());
            nonzero = nonzero || ir[c] != 0;
        }
        if (nonzero) {
            m.push_back(std::move(ir));
        }
    }
    const std::size_t n = m.size();
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t p = rank;
        while (p < n && m[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            continue;
        }
        std::swap(m[p], m[rank]);
        const mpz_class& piv = m[rank][c];
        for (std::size_t r = rank + 1; r < n; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                // Bareiss step: exact division by the previous pivot.
                m[r][k] = (piv * m[r][k] - m[r][c] * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

namespace {

void make_primitive(SparseRow& row)
{
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) {
            return;
        }
    }
    if (g > 1) {
        for (auto& [c, v] : row) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseRow> rows)
{
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }), rows.end());
    for (auto& r : rows) {
        make_primitive(r);
    }
    // Pivot rows keyed by leading column; a new row is reduced against them until
    // it vanishes or lands on a fresh leading column.
    std::map<std::size_t, SparseRow> pivots;
    // Shorter rows first keeps fill-in low.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    mpz_class f1, f2, g;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = pivots.find(lead->first);
            if (it == pivots.end()) {
                std::size_t col = lead->first;
                pivots.emplace(col, std::move(row));
                break;
            }
            const SparseRow& piv = it->second;
            const mpz_class& a = piv.begin()->second;
            const mpz_class& b = lead->second;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_divexact(f1.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(f2.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
            // row <- f1*row - f2*piv
            SparseRow next;
            auto i = row.begin();
            auto j = piv.begin();
            while (i != row.end() || j != piv.end()) {
                if (j == piv.end() || (i != row.end() && i->first < j->first)) {
                    next.emplace_hint(next.end(), i->first, f1 * i->second);
                    ++i;
                } else if (i == row.end() || j->first < i->first) {
                    next.emplace_hint(next.end(), j->first, -f2 * j->second);
                    ++j;
                } else {
                    mpz_class v = f1 * i->second - f2 * j->second;
                    if (v != 0) {
                        next.emplace_hint(next.end(), i->first, std::move(v));
                    }
                    ++i;
                    ++j;
                }
            }
            make_primitive(next);
            row = std::move(next);
        }
    }
    return pivots.size();
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows, std::size_t cols)
{
    std::vector<std::vector<Rational>> m = rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[r]);
        Rational inv = m[r][c].inverse();
        for (auto& v : m[r]) {
            v *= inv;
        }
        for (std::size_t q = 0; q < m.size(); ++q) {
            if (q == r || m[q][c].is_zero()) {
                continue;
            }
            Rational f = m[q][c];
            for (std::size_t k = 0; k < cols; ++k) {
                m[q][k] -= f * m[r][k];
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) {
            continue;
        }
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -m[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace slocc
