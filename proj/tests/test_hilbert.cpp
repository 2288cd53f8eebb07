#include "slocc/errors.hpp"
#include "slocc/hilbert.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace slocc;

namespace {

const Shape k222(2, 2, 2);
const Shape k223(2, 2, 3);
const Shape k233(2, 3, 3);

std::size_t dim(const Shape& s, unsigned d0, unsigned d1, unsigned d2, unsigned d3)
{
    return covariant_dimension(s, CovariantDegree{d0, {d1, d2, d3}});
}

unsigned max_t(const SeriesSpec& s)
{
    unsigned m = 0;
    for (const auto& e : s.denominator) {
        m = std::max(m, e[0]);
    }
    return m;
}

}  // namespace

TEST_SUITE("hilbert") {

TEST_CASE("named series coefficients")
{
    SeriesTruncation h222 = expand_series(series222(), 4);
    CHECK(h222.coefficient({1, 1, 1, 1}) == 1);
    CHECK(h222.coefficient({0, 0, 0, 0}) == 1);
    SeriesTruncation h223 = expand_series(series223_printed(), 4);
    CHECK(h223.coefficient({2, 0, 0, 2}) == 1);
    CHECK(h223.coefficient({0, 0, 0, 0}) == 1);
    CHECK(expand_series(series233(), 2).coefficient({0, 0, 0, 0}) == 1);
}

TEST_CASE("kernel dimensions at small degrees")
{
    CHECK(dim(k222, 1, 1, 1, 1) == 1);
    CHECK(dim(k222, 2, 2, 0, 0) == 1);
    CHECK(dim(k222, 0, 0, 0, 0) == 1);
    CHECK(dim(k223, 4, 0, 2, 0) == expand_series(series223_printed(), 4).coefficient({4, 0, 2, 0}));
    CHECK(dim(k223, 2, 0, 0, 2) == 1);
    CHECK(dim(k233, 1, 1, 1, 1) == 1);
}

TEST_CASE("inadmissible degrees have no covariants")
{
    CovariantDegree deg{3, {0, 0, 0}};
    CHECK_FALSE(admissible(k222, deg));
    CHECK(covariant_dimension(k222, deg) == 0);
    CHECK(expand_series(series222(), 3).coefficient({3, 0, 0, 0}) == 0);
    CHECK_FALSE(admissible(k233, CovariantDegree{2, {0, 1, 1}}));
    CHECK(dim(k233, 2, 0, 1, 1) == 0);
    CHECK(dim(k222, 2, 3, 0, 0) == 0);
}

TEST_CASE("printed series agree with the kernel oracle at the standard bounds")
{
    CHECK(verify_hilbert(k222, 4).all_match);
    CHECK(verify_hilbert(k223, 3).all_match);
    CHECK(verify_hilbert(k233, 2).all_match);
    CHECK(verify_hilbert(k233, 3).all_match);
}

TEST_CASE("2x2x3 printed series fails at d0 = 4, the corrected one does not")
{
    HilbertReport printed = verify_hilbert(k223, 4);
    CHECK_FALSE(printed.all_match);
    std::vector<std::array<unsigned, 4>> bad;
    for (const auto& r : printed.rows) {
        if (!r.match) {
            bad.push_back({r.degree.d0, r.degree.d[0], r.degree.d[1], r.degree.d[2]});
        }
    }
    std::sort(bad.begin(), bad.end());
    // The printed factors sit at t^4 u1 u2^2 and t^4 u1 u3^2; D_x, D_y live at t^4 u1^2 u3 and t^4 u2^2 u3.
    CHECK(bad == std::vector<std::array<unsigned, 4>>{{4, 0, 2, 1}, {4, 1, 0, 2}, {4, 1, 2, 0}, {4, 2, 0, 1}});
    CHECK(verify_hilbert(k223, 4, &series223_corrected()).all_match);
}

TEST_CASE("series coefficients are nonnegative")
{
    for (const SeriesSpec* s : {&series222(), &series223_printed(), &series223_corrected(), &series233()}) {
        for (const auto& [e, c] : expand_series(*s, 14).coefficients) {
            CHECK_MESSAGE(c >= 0, s->name);
        }
    }
}

TEST_CASE("symmetry")
{
    // 2x2x2: the series is invariant under every permutation of u1, u2, u3.
    SeriesTruncation h = expand_series(series222(), 10);
    for (const auto& [e, c] : h.coefficients) {
        std::array<unsigned, 3> u = {e[1], e[2], e[3]};
        std::sort(u.begin(), u.end());
        do {
            REQUIRE(h.coefficient({e[0], u[0], u[1], u[2]}) == c);
        } while (std::next_permutation(u.begin(), u.end()));
    }
    // 2x2xn: swapping the two qubit slots preserves kernel dimensions.
    for (const Shape& s : {k222, k223}) {
        for (unsigned d0 = 0; d0 <= 3; ++d0) {
            for (unsigned d1 = 0; d1 <= d0; ++d1) {
                for (unsigned d2 = 0; d2 < d1; ++d2) {
                    for (unsigned d3 = 0; d3 <= d0; ++d3) {
                        CHECK(dim(s, d0, d1, d2, d3) == dim(s, d0, d2, d1, d3));
                    }
                }
            }
        }
    }
    SeriesTruncation c = expand_series(series223_corrected(), 8);
    for (const auto& [e, v] : c.coefficients) {
        REQUIRE(c.coefficient({e[0], e[2], e[1], e[3]}) == v);
    }
}

TEST_CASE("every generator shows up in its series")
{
    for (const SeriesSpec* s : {&series222(), &series223_printed(), &series223_corrected(), &series233()}) {
        SeriesTruncation h = expand_series(*s, max_t(*s));
        for (const auto& e : s->denominator) {
            CHECK_MESSAGE(h.coefficient(e) > 0, s->name);
        }
    }
    CHECK(expand_series(series222(), 4).coefficient({4, 0, 0, 0}) == 1);
    CHECK(expand_series(series223_printed(), 6).coefficient({6, 0, 0, 0}) == 1);
    CHECK(expand_series(series233(), 12).coefficient({12, 0, 0, 0}) >= 1);
    CHECK(expand_series(series222(), 3).coefficient({3, 1, 1, 1}) >= 1);
}

TEST_CASE("bounds and errors")
{
    CHECK_THROWS_AS(dim(k233, 4, 1, 1, 1), ResourceError);
    CHECK_THROWS_AS(covariant_dimension(Shape(2, 2, 4), CovariantDegree{1, {1, 1, 1}}), ShapeError);
    CHECK_THROWS_AS(printed_series(Shape(2, 2, 4)), ShapeError);
    SeriesSpec bad{"bad", {{1, {0, 0, 0, 0}}}, {{0, 1, 0, 0}}};
    CHECK_THROWS_AS(expand_series(bad, 3), std::invalid_argument);
}

TEST_CASE("report serializes rationally")
{
    nlohmann::json j = to_json(verify_hilbert(k222, 2));
    CHECK(j["all_match"] == true);
    CHECK(j["rows"][0]["series"].is_string());
}

}  // TEST_SUITE
