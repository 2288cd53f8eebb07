#include "slocc/hilbert.hpp"

#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace slocc {

mpz_class SeriesTruncation::coefficient(const SeriesExponent& e) const
{
    auto it = coefficients.find(e);
    return it == coefficients.end() ? mpz_class(0) : it->second;
}

SeriesTruncation expand_series(const SeriesSpec& spec, unsigned truncation)
{
    SeriesTruncation out;
    out.truncation = truncation;
    for (const auto& [c, e] : spec.numerator) {
        if (e[0] <= truncation) {
            out.coefficients[e] += c;
        }
    }
    for (const auto& m : spec.denominator) {
        if (m[0] == 0) {
            throw std::invalid_argument("denominator factor of " + spec.name + " has t-degree 0");
        }
        std::map<SeriesExponent, mpz_class> next;
        for (const auto& [e, c] : out.coefficients) {
            SeriesExponent cur = e;
            while (cur[0] <= truncation) {
                next[cur] += c;
                for (int i = 0; i < 4; ++i) {
                    cur[i] += m[i];
                }
            }
        }
        out.coefficients.clear();
        for (auto& [e, c] : next) {
            if (c != 0) {
                out.coefficients.emplace(e, std::move(c));
            }
        }
    }
    return out;
}

const SeriesSpec& series222()
{
    static const SeriesSpec s{"2x2x2",
                              {{1, {0, 0, 0, 0}}, {-1, {6, 2, 2, 2}}},
                              {{1, 1, 1, 1}, {2, 2, 0, 0}, {2, 0, 2, 0}, {2, 0, 0, 2}, {3, 1, 1, 1}, {4, 0, 0, 0}}};
    return s;
}

const SeriesSpec& series223_printed()
{
    static const SeriesSpec s{"2x2x3 (printed)",
                              {{1, {0, 0, 0, 0}}, {-1, {8, 2, 2, 2}}},
                              {{1, 1, 1, 1}, {2, 0, 0, 2}, {3, 1, 1, 0}, {4, 1, 2, 0}, {4, 1, 0, 2}, {6, 0, 0, 0}}};
    return s;
}

const SeriesSpec& series223_corrected()
{
    static const SeriesSpec s{"2x2x3 (corrected)",
                              {{1, {0, 0, 0, 0}}, {-1, {8, 2, 2, 2}}},
                              {{1, 1, 1, 1}, {2, 0, 0, 2}, {3, 1, 1, 0}, {4, 2, 0, 1}, {4, 0, 2, 1}, {6, 0, 0, 0}}};
    return s;
}

const SeriesSpec& series233()
{
    static const SeriesSpec s{"2x3x3",
                              {
                                  {-1, {26, 4, 5, 5}}, {-1, {22, 2, 4, 4}}, {-1, {21, 3, 3, 3}}, {-1, {19, 3, 4, 4}},
                                  {-1, {18, 4, 3, 3}}, {-1, {17, 1, 5, 5}}, {-1, {16, 2, 4, 4}}, {1, {16, 0, 4, 4}},
                                  {-1, {15, 3, 3, 3}}, {1, {15, 1, 3, 3}},  {-1, {11, 3, 2, 2}}, {1, {11, 1, 2, 2}},
                                  {-1, {10, 4, 1, 1}}, {1, {10, 2, 1, 1}},  {1, {9, 3, 0, 0}},   {1, {8, 0, 2, 2}},
                                  {1, {7, 1, 1, 1}},   {1, {5, 1, 2, 2}},   {1, {4, 2, 1, 1}},   {1, {0, 0, 0, 0}},
                              },
                              {{1, 1, 1, 1},
                               {3, 3, 0, 0},
                               {4, 0, 1, 1},
                               {6, 0, 3, 0},
                               {6, 0, 0, 3},
                               {6, 0, 3, 3},
                               {6, 2, 0, 0},
                               {12, 0, 0, 0}}};
    return s;
}

const SeriesSpec& printed_series(const Shape& shape)
{
    if (shape == Shape(2, 2, 2)) {
        return series222();
    }
    if (shape == Shape(2, 2, 3)) {
        return series223_printed();
    }
    if (shape == Shape(2, 3, 3)) {
        return series233();
    }
    throw ShapeError("no Hilbert series for " + shape.str() + "; supported: " + kClassifiableShapes);
}

bool admissible(const Shape& shape, const CovariantDegree& deg, std::array<unsigned, 3>* weights)
{
    std::array<unsigned, 3> l{};
    for (unsigned s = 0; s < 3; ++s) {
        if (deg.d[s] > deg.d0 || (deg.d0 - deg.d[s]) % shape.dim(s) != 0) {
            return false;
        }
        l[s] = (deg.d0 - deg.d[s]) / shape.dim(s);
    }
    if (weights != nullptr) {
        *weights = l;
    }
    return true;
}

unsigned default_d0_bound(const Shape& shape)
{
    return shape == Shape(2, 3, 3) ? 3 : 4;
}

namespace {

unsigned flat(const Shape& shape, unsigned i, unsigned j, unsigned k)
{
    return (i * shape.dim(1) + j) * shape.dim(2) + k;
}

// Nondecreasing sequences of length d0 over [0, n).
void multisets(unsigned n, unsigned d0, std::vector<std::uint16_t>& cur, std::vector<std::vector<std::uint16_t>>& out)
{
    if (cur.size() == d0) {
        out.push_back(cur);
        return;
    }
    unsigned start = cur.empty() ? 0 : cur.back();
    for (unsigned f = start; f < n; ++f) {
        cur.push_back(static_cast<std::uint16_t>(f));
        multisets(n, d0, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::size_t covariant_dimension(const Shape& shape, const CovariantDegree& deg, unsigned d0_bound)
{
    if (!shape.classifiable()) {
        throw ShapeError("covariant dimensions need a classifiable shape (" + std::string(kClassifiableShapes) + ")");
    }
    const unsigned bound = d0_bound == 0 ? default_d0_bound(shape) : d0_bound;
    if (deg.d0 > bound) {
        throw ResourceError("d0 = " + std::to_string(deg.d0) + " exceeds the kernel bound " + std::to_string(bound) +
                            " for " + shape.str());
    }
    std::array<unsigned, 3> l{};
    if (!admissible(shape, deg, &l)) {
        return 0;
    }
    const unsigned n = shape.size();
    std::array<std::vector<unsigned>, 3> idx;
    for (unsigned i = 0; i < shape.dim(0); ++i) {
        for (unsigned j = 0; j < shape.dim(1); ++j) {
            for (unsigned k = 0; k < shape.dim(2); ++k) {
                idx[0].push_back(i);
                idx[1].push_back(j);
                idx[2].push_back(k);
            }
        }
    }
    auto replaced = [&](unsigned f, unsigned s, unsigned p) {
        std::array<unsigned, 3> ijk = {idx[0][f], idx[1][f], idx[2][f]};
        ijk[s] = p;
        return flat(shape, ijk[0], ijk[1], ijk[2]);
    };

    // Basis: a-monomials whose slot counts all reach l_s; the covariant-variable
    // exponents are then forced (count - l_s).
    std::vector<std::vector<std::uint16_t>> all;
    std::vector<std::uint16_t> cur;
    multisets(n, deg.d0, cur, all);
    using Exps = std::array<std::array<int, 3>, 3>;
    std::vector<std::pair<std::vector<std::uint16_t>, Exps>> basis;
    for (auto& m : all) {
        Exps e{};
        for (auto f : m) {
            for (unsigned s = 0; s < 3; ++s) {
                ++e[s][idx[s][f]];
            }
        }
        bool ok = true;
        for (unsigned s = 0; s < 3 && ok; ++s) {
            for (unsigned i = 0; i < shape.dim(s); ++i) {
                e[s][i] -= static_cast<int>(l[s]);
                ok = ok && e[s][i] >= 0;
            }
        }
        if (ok) {
            basis.emplace_back(std::move(m), e);
        }
    }
    if (basis.empty()) {
        return 0;
    }

    std::map<std::vector<std::uint16_t>, std::size_t> targets;
    auto key_of = [&](unsigned op, const std::vector<std::uint16_t>& m, const Exps& e) {
        std::vector<std::uint16_t> key;
        key.reserve(m.size() + 10);
        key.push_back(static_cast<std::uint16_t>(op));
        key.insert(key.end(), m.begin(), m.end());
        for (unsigned s = 0; s < 3; ++s) {
            for (unsigned i = 0; i < 3; ++i) {
                key.push_back(static_cast<std::uint16_t>(e[s][i]));
            }
        }
        auto [it, fresh] = targets.emplace(std::move(key), targets.size());
        return it->second;
    };

    std::vector<SparseRow> rows;
    rows.reserve(basis.size());
    for (const auto& [m, e] : basis) {
        SparseRow row;
        unsigned op = 0;
        for (unsigned s = 0; s < 3; ++s) {
            for (unsigned i = 0; i + 1 < shape.dim(s); ++i) {
                for (auto [p, q] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
                    // E_pq: a_{..q..} -> a_{..p..} on coefficients, -x_q d/dx_p on the covariant variables.
                    for (std::size_t pos = 0; pos < m.size(); ++pos) {
                        if (idx[s][m[pos]] != q || (pos > 0 && m[pos] == m[pos - 1])) {
                            continue;
                        }
                        long mult = 0;
                        for (auto f : m) {
                            mult += f == m[pos] ? 1 : 0;
                        }
                        std::vector<std::uint16_t> t = m;
                        t[pos] = static_cast<std::uint16_t>(replaced(m[pos], s, p));
                        std::sort(t.begin(), t.end());
                        row[key_of(op, t, e)] += mult;
                    }
                    if (e[s][p] > 0) {
                        Exps t = e;
                        --t[s][p];
                        ++t[s][q];
                        row[key_of(op, m, t)] -= e[s][p];
                    }
                    ++op;
                }
            }
        }
        for (auto it = row.begin(); it != row.end();) {
            it = it->second == 0 ? row.erase(it) : std::next(it);
        }
        rows.push_back(std::move(row));
    }
    return basis.size() - sparse_rank(std::move(rows));
}

HilbertReport verify_hilbert(const Shape& shape, unsigned d0_bound, const SeriesSpec* spec)
{
    const SeriesSpec& sp = spec != nullptr ? *spec : printed_series(shape);
    SeriesTruncation series = expand_series(sp, d0_bound);
    HilbertReport r{shape, sp.name, d0_bound, {}, true};
    for (unsigned d0 = 0; d0 <= d0_bound; ++d0) {
        for (unsigned d1 = 0; d1 <= d0; ++d1) {
            for (unsigned d2 = 0; d2 <= d0; ++d2) {
                for (unsigned d3 = 0; d3 <= d0; ++d3) {
                    CovariantDegree deg{d0, {d1, d2, d3}};
                    const bool ok = admissible(shape, deg);
                    mpz_class coef = series.coefficient({d0, d1, d2, d3});
                    if (!ok && coef == 0) {
                        continue;
                    }
                    std::size_t kernel = ok ? covariant_dimension(shape, deg, d0_bound) : 0;
                    const bool match = coef == mpz_class(static_cast<unsigned long>(kernel));
                    r.all_match = r.all_match && match;
                    r.rows.push_back(HilbertRow{deg, ok, coef, kernel, match});
                }
            }
        }
    }
    return r;
}

nlohmann::json to_json(const HilbertReport& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"degree", {row.degree.d0, row.degree.d[0], row.degree.d[1], row.degree.d[2]}},
                        {"admissible", row.admissible},
                        {"series", row.series.get_str()},
                        {"kernel", row.kernel},
                        {"match", row.match}});
    }
    return {{"shape", r.shape.str()},
            {"series", r.series},
            {"d0_bound", r.d0_bound},
            {"rows", rows},
            {"all_match", r.all_match}};
}

}  // namespace slocc
