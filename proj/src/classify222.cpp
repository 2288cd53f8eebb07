#include "slocc/classify222.hpp"

#include "classify_common.hpp"
#include "slocc/cayley.hpp"
#include "slocc/linalg.hpp"

#include <mutex>

namespace slocc {

namespace {

const Shape& shape222()
{
    static const Shape s(2, 2, 2);
    return s;
}

// q^2 - 4pr for p x0^2 + q x0 x1 + r x1^2.
Polynomial binary_quadratic_discriminant(const Polynomial& f, Group g)
{
    const VariableId v0{g, 0, Copy::plain};
    const VariableId v1{g, 1, Copy::plain};
    Polynomial p = derive(f, v0, 2) * Rational(1, 2);
    Polynomial q = derive(derive(f, v0), v1);
    Polynomial r = derive(f, v1, 2) * Rational(1, 2);
    return q * q - Rational(4) * p * r;
}

}  // namespace

Cov222Forms covariant_forms222(const Polynomial& A)
{
    Cov222Forms c;
    c.A = A;
    c.B_x = det_poly(detail::hessian_block(A, Group::y, 2, Group::z, 2));
    c.B_y = det_poly(detail::hessian_block(A, Group::x, 2, Group::z, 2));
    c.B_z = det_poly(detail::hessian_block(A, Group::x, 2, Group::y, 2));
    c.C = jacobian2(A, c.B_x, Group::x);
    c.Delta = binary_quadratic_discriminant(c.B_x, Group::x);
    return c;
}

Cov222 covariants222(const Hypermatrix& h)
{
    detail::require_state(h, shape222());
    Cov222Forms f = covariant_forms222(ground_form(h));
    return Cov222{f.A, f.B_x, f.B_y, f.B_z, f.C, f.Delta.constant_value()};
}

const std::vector<std::string>& v_schema222()
{
    static const std::vector<std::string> names = {"B_x", "B_y", "B_z", "C", "Δ"};
    return names;
}

const std::vector<std::pair<std::string, std::string>>& v_table222()
{
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"O_VI", "11111"}, {"O_V", "11110"}, {"O_IV", "00100"},
        {"O_III", "10000"}, {"O_II", "01000"}, {"O_I", "00000"},
    };
    return rows;
}

NullityVector v_vector222(const Cov222& c)
{
    return NullityVector(v_schema222(),
                         std::vector<bool>{!c.B_x.is_zero(), !c.B_y.is_zero(), !c.B_z.is_zero(), !c.C.is_zero(),
                                           !c.Delta.is_zero()});
}

Classification classify222(const Hypermatrix& h)
{
    return detail::match_table(shape222(), v_vector222(covariants222(h)), v_table222());
}

Polynomial syzygy222_residual(const Polynomial& A)
{
    const auto& l = syzygy222_constants();
    Cov222Forms c = covariant_forms222(A);
    return l[0] * (c.C * c.C) + l[1] * (c.B_x * c.B_y * c.B_z) + l[2] * (c.Delta * c.A * c.A);
}

Polynomial syzygy222_residual_generic()
{
    return syzygy222_residual(generic_ground_form(shape222()));
}

const std::array<Rational, 3>& syzygy222_constants()
{
    static std::array<Rational, 3> lambda;
    static std::once_flag once;
    std::call_once(once, [] {
        // Each sample (random state, random point) gives one linear equation in lambda.
        Rng rng(20240222);
        std::vector<std::vector<Rational>> eqs;
        for (int sample = 0; sample < 8; ++sample) {
            std::vector<Rational> entries;
            for (unsigned f = 0; f < 8; ++f) {
                entries.emplace_back(static_cast<long>(rng.between(-5, 5)));
            }
            Cov222Forms c = covariant_forms222(ground_form(Hypermatrix(shape222(), entries)));
            Bindings point;
            for (unsigned i = 0; i < 2; ++i) {
                point[vars::x(i)] = Rational(static_cast<long>(rng.between(-4, 4)));
                point[vars::y(i)] = Rational(static_cast<long>(rng.between(-4, 4)));
                point[vars::z(i)] = Rational(static_cast<long>(rng.between(-4, 4)));
            }
            auto value = [&](const Polynomial& p) { return substitute(p, point).constant_value(); };
            eqs.push_back({value(c.C * c.C), value(c.B_x * c.B_y * c.B_z), value(c.Delta * c.A * c.A)});
        }
        auto basis = nullspace(eqs, 3);
        if (basis.size() != 1 || basis[0][0].is_zero()) {
            throw std::logic_error("2x2x2 syzygy: expected a one-dimensional relation space");
        }
        Rational norm = basis[0][0].inverse();
        for (int i = 0; i < 3; ++i) {
            lambda[i] = basis[0][i] * norm;
        }
    });
    return lambda;
}

}  // namespace slocc
