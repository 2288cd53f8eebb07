#pragma once

#include "slocc/forms.hpp"
#include "slocc/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace slocc::testing {

inline constexpr std::uint64_t kSeed = 20240521;
inline constexpr unsigned kTrials = 1000;

inline Rational random_rational(Rng& rng, long bound = 5)
{
    long num = rng.between(-bound, bound);
    long den = rng.between(1, 3);
    return Rational(num, den);
}

inline Rational random_nonzero(Rng& rng, long bound = 5)
{
    Rational r;
    while ((r = random_rational(rng, bound)).is_zero()) {
    }
    return r;
}

// Variables over x, y, z and two coefficient symbols; small exponents keep products cheap.
inline const std::vector<VariableId>& pool()
{
    static const std::vector<VariableId> v = {vars::x(0), vars::x(1), vars::y(0), vars::y(1),
                                              vars::z(0), vars::z(1), vars::a(0), vars::a(1)};
    return v;
}

inline Polynomial random_polynomial(Rng& rng, unsigned max_terms = 6, unsigned max_exp = 2)
{
    std::vector<Polynomial::Term> terms;
    const unsigned n = static_cast<unsigned>(rng.below(max_terms + 1));
    for (unsigned t = 0; t < n; ++t) {
        Monomial m;
        for (const auto& v : pool()) {
            if (unsigned e = static_cast<unsigned>(rng.below(max_exp + 1)); e > 0 && rng.below(3) == 0) {
                m = m * Monomial(v, e);
            }
        }
        terms.push_back({m, random_rational(rng)});
    }
    return Polynomial::from_terms(std::move(terms));
}

inline Hypermatrix random_state(Rng& rng, const Shape& shape, long bound = 3)
{
    std::vector<Rational> e(shape.size());
    do {
        for (auto& x : e) {
            x = Rational(rng.between(-bound, bound));
        }
    } while (std::all_of(e.begin(), e.end(), [](const Rational& r) { return r.is_zero(); }));
    return Hypermatrix(shape, e);
}

}  // namespace slocc::testing
