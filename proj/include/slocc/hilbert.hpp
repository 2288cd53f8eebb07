#pragma once

#include "slocc/forms.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace slocc {

// Exponents of (t, u1, u2, u3).
using SeriesExponent = std::array<unsigned, 4>;

// numerator / prod (1 - m) over the denominator monomials m.
struct SeriesSpec {
    std::string name;
    std::vector<std::pair<long, SeriesExponent>> numerator;
    std::vector<SeriesExponent> denominator;
};

struct SeriesTruncation {
    unsigned truncation = 0;  // largest t-degree kept
    std::map<SeriesExponent, mpz_class> coefficients;

    mpz_class coefficient(const SeriesExponent& e) const;
};

// Throws std::invalid_argument when a denominator factor has t-degree 0.
SeriesTruncation expand_series(const SeriesSpec& spec, unsigned truncation);

// Closed forms as printed, with the u2^3 u2^3 factor of 2x3x3 read as u2^3 u3^3.
const SeriesSpec& series222();
const SeriesSpec& series223_printed();
// 2x2x3 with the two degree-4 factors at the multidegrees of D_x and D_y.
const SeriesSpec& series223_corrected();
const SeriesSpec& series233();
// The printed series of a classifiable shape.
const SeriesSpec& printed_series(const Shape& shape);

struct CovariantDegree {
    unsigned d0 = 0;
    std::array<unsigned, 3> d{};
};

// Weights l_s with d_s + l_s n_s = d0, or false when some l_s is not a nonnegative integer.
bool admissible(const Shape& shape, const CovariantDegree& deg, std::array<unsigned, 3>* weights = nullptr);

// Default d0 bound of the kernel oracle: 4 for 2x2x2 and 2x2x3, 3 for 2x3x3.
unsigned default_d0_bound(const Shape& shape);

// Dimension of the space of covariants of the given degree: the joint kernel
// of every simple raising and lowering operator of each sl factor on the
// weight-zero polynomials of that multidegree. Throws ResourceError when d0
// exceeds d0_bound (0 means the default).
std::size_t covariant_dimension(const Shape& shape, const CovariantDegree& deg, unsigned d0_bound = 0);

struct HilbertRow {
    CovariantDegree degree;
    bool admissible;
    mpz_class series;
    std::size_t kernel;
    bool match;
};

struct HilbertReport {
    Shape shape;
    std::string series;
    unsigned d0_bound;
    std::vector<HilbertRow> rows;
    bool all_match;
};

// Every admissible degree with d0 <= d0_bound, plus any inadmissible degree
// where the series is nonzero.
HilbertReport verify_hilbert(const Shape& shape, unsigned d0_bound, const SeriesSpec* spec = nullptr);

nlohmann::json to_json(const HilbertReport& r);

}  // namespace slocc
