#include "slocc/classify223.hpp"

#include "classify_common.hpp"

#include <algorithm>
#include <array>

namespace slocc {

namespace {

const Shape& shape223()
{
    static const Shape s(2, 2, 3);
    return s;
}

// A is multilinear, so the mixed third derivative is the coefficient a_ijk.
Polynomial coefficient_of(const Polynomial& A, unsigned i, unsigned j, unsigned k)
{
    return derive(derive(derive(A, vars::x(i)), vars::y(j)), vars::z(k));
}

TransvectionPlan plan2(const std::string& lf, const Polynomial& f, const std::string& lg, const Polynomial& g,
                       std::vector<OmegaSpec> omegas)
{
    TransvectionPlan p;
    p.factors = {factor_in(lf, f, Copy::p1), factor_in(lg, g, Copy::p2)};
    p.omegas = std::move(omegas);
    return p;
}

TransvectionPlan plan3(const std::string& lf, const Polynomial& f, const std::string& lg, const Polynomial& g,
                       const std::string& lh, const Polynomial& h, std::vector<OmegaSpec> omegas)
{
    TransvectionPlan p;
    p.factors = {factor_in(lf, f, Copy::p1), factor_in(lg, g, Copy::p2), factor_in(lh, h, Copy::p3)};
    p.omegas = std::move(omegas);
    return p;
}

const std::vector<Copy> k12 = {Copy::p1, Copy::p2};
const std::vector<Copy> k123 = {Copy::p1, Copy::p2, Copy::p3};

}  // namespace

Polynomial b223(const Polynomial& A)
{
    return det_poly(detail::hessian_block(A, Group::x, 2, Group::y, 2));
}

Polynomial c223(const Polynomial& A)
{
    std::vector<std::vector<Polynomial>> m;
    for (unsigned k = 0; k < 3; ++k) {
        m.push_back({coefficient_of(A, 0, 0, k), coefficient_of(A, 1, 0, k), coefficient_of(A, 0, 1, k),
                     coefficient_of(A, 1, 1, k)});
    }
    auto xy = [](unsigned i, unsigned j) { return Polynomial::variable(vars::x(i)) * Polynomial::variable(vars::y(j)); };
    m.push_back({xy(1, 1), -xy(0, 1), -xy(1, 0), xy(0, 0)});
    return det_poly(m);
}

Polynomial c223_s3_sum(const Polynomial& A, bool signed_sum)
{
    std::array<unsigned, 3> s = {0, 1, 2};
    PolynomialBuilder out;
    do {
        int sign = 1;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if (s[i] > s[j]) {
                    sign = -sign;
                }
            }
        }
        Polynomial inner = coefficient_of(A, 0, 0, s[1]) * coefficient_of(A, 1, 1, s[2]) -
                           coefficient_of(A, 1, 0, s[1]) * coefficient_of(A, 0, 1, s[2]);
        for (unsigned i = 0; i < 2; ++i) {
            for (unsigned j = 0; j < 2; ++j) {
                Polynomial xy = Polynomial::variable(vars::x(i)) * Polynomial::variable(vars::y(j));
                out.add(coefficient_of(A, i, j, s[0]) * inner * xy, Rational(signed_sum ? sign : 1));
            }
        }
    } while (std::next_permutation(s.begin(), s.end()));
    return out.build();
}

Polynomial delta223(const Polynomial& C)
{
    return det_poly(detail::hessian_block(C, Group::x, 2, Group::y, 2));
}

std::vector<PlanCandidate> candidate_plans223(const Polynomial& A, const Polynomial& B, const Polynomial& C)
{
    const Polynomial pz = pairing(Group::z, Copy::plain, Group::zeta, Copy::plain, 3);
    std::vector<PlanCandidate> out;
    auto add = [&](std::string name, std::string id, std::string reading, bool selected, TransvectionPlan plan) {
        out.push_back(PlanCandidate{std::move(name), std::move(id), std::move(reading), selected, std::move(plan)});
    };

    add("D_x", "omega_y", "tr Omega_y (A', C''): keeps the x-quadratic part", true,
        plan2("A", A, "C", C, {omega(Group::y, k12)}));
    add("D_x", "omega_x", "tr Omega_x (A', C'')", false, plan2("A", A, "C", C, {omega(Group::x, k12)}));
    add("D_y", "omega_x", "tr Omega_x (A', C''): keeps the y-quadratic part", true,
        plan2("A", A, "C", C, {omega(Group::x, k12)}));
    add("D_y", "omega_y", "tr Omega_y (A', C'')", false, plan2("A", A, "C", C, {omega(Group::y, k12)}));

    add("B_xζ", "omega_y_omega_z", "tr Omega_y Omega_z (A', A'', P_ζ''')", true,
        plan3("A", A, "A", A, "P_ζ", pz, {omega(Group::y, k12), omega(Group::z, k123)}));
    add("B_xζ", "omega_x_omega_z", "slot order read literally: tr Omega_x Omega_z (A', A'', P_ζ''')", false,
        plan3("A", A, "A", A, "P_ζ", pz, {omega(Group::x, k12), omega(Group::z, k123)}));
    add("B_yζ", "omega_x_omega_z", "tr Omega_x Omega_z (A', A'', P_ζ''')", true,
        plan3("A", A, "A", A, "P_ζ", pz, {omega(Group::x, k12), omega(Group::z, k123)}));
    add("B_yζ", "omega_y_omega_z", "slot order read literally: tr Omega_y Omega_z (A', A'', P_ζ''')", false,
        plan3("A", A, "A", A, "P_ζ", pz, {omega(Group::y, k12), omega(Group::z, k123)}));

    add("D_ζ", "omega_x2", "literal: tr Omega_x^2 (B', B'', P_ζ''')", false,
        plan3("B", B, "B", B, "P_ζ", pz, {omega(Group::x, k12, 2)}));
    add("D_ζ", "omega_z1_p", "tr Omega_z (B', B'', P_ζ''')", false,
        plan3("B", B, "B", B, "P_ζ", pz, {omega(Group::z, k123)}));
    add("D_ζ", "omega_z2_p", "tr Omega_z^2 (B', B'', P_ζ''')", false,
        plan3("B", B, "B", B, "P_ζ", pz, {omega(Group::z, k123, 2)}));
    add("D_ζ", "omega_z2_p2", "tr Omega_z^2 (B', B'', P_ζ'''^2): the adjugate conic of B", true,
        plan3("B", B, "B", B, "P_ζ^2", pz * pz, {omega(Group::z, k123, 2)}));
    return out;
}

Cov223 covariants223(const Hypermatrix& h)
{
    detail::require_state(h, shape223());
    Cov223 c;
    c.A = ground_form(h);
    c.B = b223(c.A);
    c.C = c223(c.A);
    c.Delta = delta223(c.C).constant_value();
    const auto plans = candidate_plans223(c.A, c.B, c.C);
    c.D_x = transvect(selected_candidate(plans, "D_x").plan);
    c.D_y = transvect(selected_candidate(plans, "D_y").plan);
    c.B_xzeta = transvect(selected_candidate(plans, "B_xζ").plan);
    c.B_yzeta = transvect(selected_candidate(plans, "B_yζ").plan);
    c.D_zeta = transvect(selected_candidate(plans, "D_ζ").plan);
    return c;
}

const std::vector<std::string>& v_schema223()
{
    static const std::vector<std::string> names = {"B", "C", "D_x", "D_y", "Δ"};
    return names;
}

const std::vector<std::string>& w_schema223()
{
    static const std::vector<std::string> names = {"B", "B_xζ", "B_yζ", "C", "Δ", "D_ζ"};
    return names;
}

const std::vector<std::pair<std::string, std::string>>& v_table223()
{
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"O_VIII", "11111"}, {"O_VII", "11110"}, {"O_VI", "10000"}, {"O_V", "10000"},
        {"O_IV", "00000"},   {"O_III", "00000"}, {"O_II", "10000"}, {"O_I", "00000"},
    };
    return rows;
}

const std::vector<std::pair<std::string, std::string>>& w_table223()
{
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"O_VIII", "111111"}, {"O_VII", "111101"}, {"O_VI", "111001"}, {"O_V", "111000"},
        {"O_IV", "010000"},   {"O_III", "001000"}, {"O_II", "100000"}, {"O_I", "000000"},
    };
    return rows;
}

NullityVector v_vector223(const Cov223& c)
{
    return NullityVector(v_schema223(), std::vector<bool>{!c.B.is_zero(), !c.C.is_zero(), !c.D_x.is_zero(),
                                                          !c.D_y.is_zero(), !c.Delta.is_zero()});
}

NullityVector v_vector223(const Hypermatrix& h)
{
    return v_vector223(covariants223(h));
}

std::vector<std::pair<std::string, Polynomial>> named_values223(const Cov223& c)
{
    return {{"B", c.B},       {"B_xζ", c.B_xzeta}, {"B_yζ", c.B_yzeta}, {"C", c.C},
            {"Δ", c.Delta},   {"D_ζ", c.D_zeta},   {"D_x", c.D_x},      {"D_y", c.D_y}};
}

NullityVector w_vector223(const Cov223& c)
{
    return NullityVector(w_schema223(),
                         std::vector<bool>{!c.B.is_zero(), !c.B_xzeta.is_zero(), !c.B_yzeta.is_zero(),
                                           !c.C.is_zero(), !c.Delta.is_zero(), !c.D_zeta.is_zero()});
}

Classification classify223(const Hypermatrix& h)
{
    return detail::match_table(shape223(), w_vector223(covariants223(h)), w_table223());
}

}  // namespace slocc
