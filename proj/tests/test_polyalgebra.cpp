#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"
#include "slocc/polynomial.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace slocc;
using slocc::testing::kSeed;
using slocc::testing::kTrials;
using slocc::testing::random_polynomial;

namespace {

Polynomial v(VariableId id) { return Polynomial::variable(id); }

}  // namespace

TEST_SUITE("polyalgebra") {

TEST_CASE("rationals are canonical")
{
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), ParseError);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-3, 7).inverse() == Rational(-7, 3));
}

TEST_CASE("small products")
{
    Polynomial x0 = v(vars::x(0)), x1 = v(vars::x(1));
    CHECK((x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1);
    Polynomial p = x0 * x1 + Rational(3);
    CHECK((p + scale(p, Rational(-1))).is_zero());
    CHECK((p + scale(p, Rational(-1))).terms().empty());

    Polynomial ghz = x0 * v(vars::y(0)) * v(vars::z(0)) + x1 * v(vars::y(1)) * v(vars::z(1));
    CHECK(mul(ghz, ghz).str() == "x0^2*y0^2*z0^2 + 2 * x0*x1*y0*y1*z0*z1 + x1^2*y1^2*z1^2");
    CHECK(pow(x0 + x1, 3) == x0 * x0 * x0 + Rational(3) * x0 * x0 * x1 + Rational(3) * x0 * x1 * x1 + x1 * x1 * x1);
}

TEST_CASE("text form round-trips")
{
    Rng rng(kSeed);
    for (unsigned t = 0; t < kTrials; ++t) {
        Polynomial p = random_polynomial(rng);
        REQUIRE(Polynomial::parse(p.str()) == p);
    }
    CHECK(Polynomial::parse("2*x0 - 1/3*y'1^2").str() == "2 * x0 - 1/3 * y'1^2");
    CHECK(Polynomial().str() == "0");
    CHECK_THROWS_AS(Polynomial::parse("x0 +"), ParseError);
}

TEST_CASE("canonical order puts higher powers of earlier variables first")
{
    Polynomial p = Polynomial::parse("1 + x1 + x0*x1 + x0^2");
    CHECK(p.str() == "x0^2 + x0*x1 + x1 + 1");
}

TEST_CASE("ring axioms on random triples")
{
    Rng rng(kSeed + 1);
    for (unsigned t = 0; t < kTrials; ++t) {
        Polynomial p = random_polynomial(rng, 20, 2);
        Polynomial q = random_polynomial(rng, 20, 2);
        Polynomial r = random_polynomial(rng, 20, 2);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE(p + q == q + p);
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * q == q * p);
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(p + Polynomial() == p);
        REQUIRE(p * Polynomial(1) == p);
        REQUIRE((p - p).is_zero());
    }
}

TEST_CASE("builder agrees with operator arithmetic")
{
    Rng rng(kSeed + 2);
    for (unsigned t = 0; t < 200; ++t) {
        Polynomial p = random_polynomial(rng, 8);
        Polynomial q = random_polynomial(rng, 8);
        Rational c = slocc::testing::random_rational(rng);
        PolynomialBuilder b;
        b.add_product(p, q, c);
        b.add(p);
        REQUIRE(b.build() == scale(p * q, c) + p);
    }
}

TEST_CASE("derivatives")
{
    Polynomial x0 = v(vars::x(0)), y1 = v(vars::y(1));
    CHECK(derive(x0 * x0 * y1, vars::x(0)) == Rational(2) * x0 * y1);
    CHECK(derive(Polynomial(Rational(7, 2)), vars::z(2)).is_zero());
    Polynomial ghz = Polynomial::parse("x0*y0*z0 + x1*y1*z1");
    CHECK(derive(ghz, vars::y(0)) == Polynomial::parse("x0*z0"));
    CHECK(derive(pow(x0, 3), vars::x(0), 2) == Rational(6) * x0);
}

TEST_CASE("derivatives commute and obey Leibniz")
{
    Rng rng(kSeed + 3);
    const auto& vs = slocc::testing::pool();
    for (unsigned t = 0; t < kTrials; ++t) {
        Polynomial p = random_polynomial(rng, 10, 3);
        Polynomial q = random_polynomial(rng, 10, 3);
        VariableId a = vs[rng.below(vs.size())];
        VariableId b = vs[rng.below(vs.size())];
        REQUIRE(derive(derive(p, a), b) == derive(derive(p, b), a));
        REQUIRE(derive(p * q, a) == derive(p, a) * q + p * derive(q, a));
        REQUIRE(derive(p + q, a) == derive(p, a) + derive(q, a));
    }
}

TEST_CASE("monomial derivative applies each order")
{
    Polynomial p = Polynomial::parse("x0^3*y1^2 + x0*y1");
    Monomial m = Monomial(vars::x(0), 2) * Monomial(vars::y(1));
    CHECK(derive(p, m) == derive(derive(p, vars::x(0), 2), vars::y(1)));
}

TEST_CASE("determinants")
{
    Polynomial x0 = v(vars::x(0)), x1 = v(vars::x(1));
    CHECK(det_poly({{x0, 0}, {0, x1}}) == x0 * x1);
    Polynomial z0 = v(vars::z(0)), z1 = v(vars::z(1)), z2 = v(vars::z(2));
    CHECK(det_poly({{z0, z1}, {z1, z2}}) == z0 * z2 - z1 * z1);
    CHECK_THROWS_AS(det_poly({{x0, x1}}), DimensionError);
}

TEST_CASE("det_poly is alternating")
{
    Rng rng(kSeed + 4);
    for (unsigned t = 0; t < kTrials; ++t) {
        std::vector<std::vector<Polynomial>> m(3, std::vector<Polynomial>(3));
        for (auto& row : m) {
            for (auto& e : row) {
                e = random_polynomial(rng, 2, 1);
            }
        }
        Polynomial d = det_poly(m);
        unsigned i = static_cast<unsigned>(rng.below(3));
        unsigned j = (i + 1 + static_cast<unsigned>(rng.below(2))) % 3;
        auto swapped = m;
        std::swap(swapped[i], swapped[j]);
        REQUIRE(det_poly(swapped) == -d);
        auto repeated = m;
        repeated[j] = repeated[i];
        REQUIRE(det_poly(repeated).is_zero());
    }
}

TEST_CASE("substitution")
{
    Polynomial ghz = Polynomial::parse("x0*y0*z0 + x1*y1*z1");
    Bindings e000 = {{vars::x(0), 1}, {vars::x(1), 0}, {vars::y(0), 1},
                     {vars::y(1), 0}, {vars::z(0), 1}, {vars::z(1), 0}};
    CHECK(substitute(ghz, e000) == Polynomial(1));
    Polynomial p = Polynomial::parse("x0^2*y1 + a0*x1");
    CHECK(compose(p, {{vars::x(0), Polynomial::parse("x0 + x1")}}) ==
          Polynomial::parse("x0^2*y1 + 2*x0*x1*y1 + x1^2*y1 + a0*x1"));
}

TEST_CASE("substitutions with disjoint bindings commute")
{
    Rng rng(kSeed + 5);
    const auto& vs = slocc::testing::pool();
    for (unsigned t = 0; t < kTrials; ++t) {
        Polynomial p = random_polynomial(rng, 10, 3);
        Bindings first, second;
        for (const auto& var : vs) {
            switch (rng.below(3)) {
            case 0: first[var] = slocc::testing::random_rational(rng); break;
            case 1: second[var] = slocc::testing::random_rational(rng); break;
            default: break;
            }
        }
        Bindings both = first;
        both.insert(second.begin(), second.end());
        REQUIRE(substitute(substitute(p, first), second) == substitute(substitute(p, second), first));
        REQUIRE(substitute(substitute(p, first), second) == substitute(p, both));
    }
}

TEST_CASE("copy tags and traces")
{
    Polynomial p = v(vars::x(0, Copy::p1)) * v(vars::x(1, Copy::p2));
    CopyMap tr;
    tr.set(Group::x, Copy::p1, Copy::plain).set(Group::x, Copy::p2, Copy::plain);
    CHECK(retag(p, tr) == Polynomial::parse("x0*x1"));
    CHECK(retag(p, CopyMap::erase_all()) == Polynomial::parse("x0*x1"));

    // A partial trace sending x'' and x''' to x''.
    Polynomial q = v(vars::x(0, Copy::p2)) * v(vars::x(1, Copy::p3));
    CopyMap partial;
    partial.set(Group::x, Copy::p3, Copy::p2);
    CHECK(retag(q, partial) == v(vars::x(0, Copy::p2)) * v(vars::x(1, Copy::p2)));
    CHECK(in_copy(Polynomial::parse("x0*z1"), Copy::p3) == v(vars::x(0, Copy::p3)) * v(vars::z(1, Copy::p3)));
    CHECK(pairing(Group::z, Copy::plain, Group::zeta, Copy::plain, 3) == Polynomial::parse("z0*zeta0 + z1*zeta1 + z2*zeta2"));
}

TEST_CASE("degree queries")
{
    Polynomial p = Polynomial::parse("x0^2*y1 + x1*y0*y1");
    CHECK(p.degree_in(Group::x) == 2);
    CHECK(p.degree_in(Group::y) == 2);
    CHECK(p.homogeneous_in(Group::x, 2) == false);
    CHECK(Polynomial::parse("x0*y1 + x1*y0").homogeneous_in(Group::x, 1));
    CHECK(p.total_degree() == 3);
}

TEST_CASE("exact rank and nullspace")
{
    std::vector<std::vector<Rational>> m = {{1, 2, 3}, {2, 4, 6}, {Rational(1, 2), 0, 1}};
    CHECK(exact_rank(m) == 2);
    auto ns = nullspace(m, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : m) {
        Rational dot = 0;
        for (int i = 0; i < 3; ++i) {
            dot += row[i] * ns[0][i];
        }
        CHECK(dot.is_zero());
    }
    std::vector<SparseRow> rows = {{{0, 2}, {5, 4}}, {{0, 1}, {5, 2}}, {{3, 7}}};
    CHECK(sparse_rank(rows) == 2);
}

TEST_CASE("sparse and dense rank agree on random integer matrices")
{
    Rng rng(kSeed + 6);
    for (unsigned t = 0; t < 300; ++t) {
        const unsigned r = 1 + static_cast<unsigned>(rng.below(6));
        const unsigned c = 1 + static_cast<unsigned>(rng.below(6));
        std::vector<std::vector<Rational>> dense(r, std::vector<Rational>(c));
        std::vector<SparseRow> sparse(r);
        for (unsigned i = 0; i < r; ++i) {
            for (unsigned j = 0; j < c; ++j) {
                long x = rng.below(3) == 0 ? rng.between(-2, 2) : 0;
                dense[i][j] = x;
                if (x != 0) {
                    sparse[i][j] = x;
                }
            }
        }
        const std::size_t rank = exact_rank(dense);
        REQUIRE(sparse_rank(sparse) == rank);
        REQUIRE(nullspace(dense, c).size() == c - rank);
    }
}

}  // TEST_SUITE
