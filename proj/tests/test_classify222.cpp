#include "slocc/classify222.hpp"
#include "slocc/classify223.hpp"
#include "slocc/classify233.hpp"
#include "slocc/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace slocc;
using slocc::testing::kSeed;

namespace {

const Shape k222(2, 2, 2);

VariableId gv(Group g, unsigned i) { return VariableId{g, static_cast<std::uint8_t>(i), Copy::plain}; }

// q^2 - 4pr for p g0^2 + q g0 g1 + r g1^2, read off by second derivatives.
Polynomial discriminant(const Polynomial& f, Group g)
{
    Polynomial p = scale(derive(f, gv(g, 0), 2), Rational(1, 2));
    Polynomial q = derive(derive(f, gv(g, 0)), gv(g, 1));
    Polynomial r = scale(derive(f, gv(g, 1), 2), Rational(1, 2));
    return q * q - Rational(4) * p * r;
}

Classification classify(const Hypermatrix& h)
{
    const Shape& s = h.shape();
    return s == k222 ? classify222(h) : s == Shape(2, 2, 3) ? classify223(h) : classify233(h);
}

}  // namespace

TEST_SUITE("classify222") {

TEST_CASE("GHZ, W and the separable state")
{
    Cov222 ghz = covariants222(parse_ket("|000>+|111>"));
    CHECK(ghz.B_x == Polynomial::parse("x0*x1"));
    CHECK(!ghz.Delta.is_zero());

    Cov222 w = covariants222(parse_ket("|100>+|010>+|001>"));
    CHECK(w.Delta.is_zero());
    CHECK(!w.C.is_zero());

    Cov222 sep = covariants222(parse_ket("|000>"));
    CHECK(v_vector222(sep).bitstring() == "00000");
}

TEST_CASE("reference rows and labels")
{
    CHECK(classify222(parse_ket("|001>+|111>")).orbit->label == "O_IV");
    CHECK(classify222(parse_ket("|001>+|111>")).nullity.str() == "<0,0,1,0,0>");
    CHECK(classify222(parse_ket("|010>+|111>")).orbit->label == "O_II");
    CHECK(classify222(parse_ket("|010>+|111>")).nullity.str() == "<0,1,0,0,0>");
    CHECK(classify222(parse_ket("|000>+|111>")).orbit->label == "O_VI");
    CHECK(classify222(parse_ket("|100>+|010>+|001>")).orbit->label == "O_V");
    for (const auto& rec : orbit_registry(k222)) {
        Classification c = classify222(rec.representative);
        CHECK(c.orbit->label == rec.label);
        CHECK(c.orbit == &rec);
        const bool delta = c.nullity.at("Δ");
        CHECK(delta == (rec.label == "O_VI"));
    }
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(classify222(Hypermatrix(k222)), ZeroStateError);
    CHECK_THROWS_AS(classify222(parse_ket("|002>")), ShapeError);
}

TEST_CASE("Delta is the common discriminant of B_x, B_y, B_z")
{
    Cov222Forms g = covariant_forms222(generic_ground_form(k222));
    CHECK(!g.Delta.is_zero());
    CHECK(g.Delta == discriminant(g.B_x, Group::x));
    CHECK(discriminant(g.B_y, Group::y) == g.Delta);
    CHECK(discriminant(g.B_z, Group::z) == g.Delta);
    CHECK(g.Delta.homogeneous_in(Group::a, 4));
}

TEST_CASE("syzygy among C, B_x B_y B_z and Delta A^2")
{
    const auto& l = syzygy222_constants();
    CHECK(l[0] == Rational(1));
    CHECK(l[1] == Rational(4));
    CHECK(l[2] == Rational(-1));
    CHECK(syzygy222_residual_generic().is_zero());
    CHECK(syzygy222_residual(ground_form(parse_ket("|000>+|111>"))).is_zero());
    Rng rng(kSeed + 30);
    for (int t = 0; t < 20; ++t) {
        CHECK(syzygy222_residual(ground_form(slocc::testing::random_state(rng, k222, 9))).is_zero());
    }
}

TEST_CASE("nullity pattern is SLOCC invariant")
{
    Rng rng(kSeed + 31);
    for (const auto& rec : orbit_registry(k222)) {
        for (int t = 0; t < 200; ++t) {
            Hypermatrix img = act(random_slocc(k222, rng, 2), rec.representative);
            REQUIRE(classify222(img).orbit->label == rec.label);
        }
    }
}

TEST_CASE("nullity vectors are scale invariant")
{
    // Every format, since each covariant is homogeneous in the coefficients.
    Rng rng(kSeed + 32);
    const std::vector<Shape> shapes = {k222, Shape(2, 2, 3), Shape(2, 3, 3)};
    for (unsigned t = 0; t < slocc::testing::kTrials; ++t) {
        const auto& reg = orbit_registry(shapes[t % 3]);
        const OrbitRecord& rec = reg[rng.below(reg.size())];
        Hypermatrix h = act(random_slocc(rec.format, rng, 1), rec.representative);
        Classification base = classify(h);
        Classification scaled = classify(h.scaled(slocc::testing::random_nonzero(rng, 7)));
        REQUIRE(scaled.nullity == base.nullity);
        REQUIRE(scaled.orbit == base.orbit);
    }
}

}  // TEST_SUITE
