#include "slocc/classify233.hpp"

#include "classify_common.hpp"
#include "slocc/linalg.hpp"

#include <gmpxx.h>

#include <set>

namespace slocc {

namespace {

const Shape& shape233()
{
    static const Shape s(2, 3, 3);
    return s;
}

const std::vector<Copy> k12 = {Copy::p1, Copy::p2};
const std::vector<Copy> k13 = {Copy::p1, Copy::p3};
const std::vector<Copy> k23 = {Copy::p2, Copy::p3};
const std::vector<Copy> k123 = {Copy::p1, Copy::p2, Copy::p3};

Polynomial var(VariableId v)
{
    return Polynomial::variable(v);
}

TransvectionPlan plan_of(std::vector<PlanFactor> factors, std::vector<OmegaSpec> omegas)
{
    TransvectionPlan p;
    p.factors = std::move(factors);
    p.omegas = std::move(omegas);
    return p;
}

struct Pairings {
    Polynomial y_eta = pairing(Group::y, Copy::plain, Group::eta, Copy::plain, 3);
    Polynomial z_zeta = pairing(Group::z, Copy::plain, Group::zeta, Copy::plain, 3);
};

using Sink = std::vector<PlanCandidate>;

void add(Sink& out, std::string name, std::string id, std::string reading, bool selected, TransvectionPlan plan)
{
    out.push_back(PlanCandidate{std::move(name), std::move(id), std::move(reading), selected, std::move(plan)});
}

void plans_d_xyz(Sink& out, const Cov233& c)
{
    add(out, "D_xyz", "omega_x", "tr Omega_x (C_x', A'')", true,
        plan_of({factor_in("C_x", c.C_x, Copy::p1), factor_in("A", c.A, Copy::p2)}, {omega(Group::x, k12)}));
}

void plans_d_yz(Sink& out, const Cov233& c)
{
    const Polynomial a2 = c.A * c.A;
    add(out, "D_yz", "cross_x",
        "tr Omega_x(',\") Omega_x(',''') Omega_y Omega_z (A'^2, A'', A'''): x' coupled with both other copies", true,
        plan_of({factor_in("A^2", a2, Copy::p1), factor_in("A", c.A, Copy::p2), factor_in("A", c.A, Copy::p3)},
                {omega(Group::y, k123), omega(Group::z, k123), omega(Group::x, k12), omega(Group::x, k13)}));
    TransvectionPlan literal =
        plan_of({factor_in("A^2", a2, Copy::p1), factor_in("A", c.A, Copy::p2), factor_in("A", c.A, Copy::p3)},
                {omega(Group::y, k123), omega(Group::z, k123), omega(Group::x, k23), omega(Group::x, k12)});
    literal.partial_traces.push_back(
        PartialTrace{3, CopyMap().set(Group::x, Copy::p3, Copy::p2), "tr'_x: x''' -> x''"});
    add(out, "D_yz", "literal_nested", "tr Omega_x tr'_x Omega'_x(\",''') Omega_z Omega_y (A'^2, A'', A''') read in order",
        false, std::move(literal));
}

void plans_f_y(Sink& out, const Cov233& c)
{
    add(out, "F_y", "omega_z_omega_x", "tr Omega_z Omega_x(',\") (A', A'', D_yz''')", true,
        plan_of({factor_in("A", c.A, Copy::p1), factor_in("A", c.A, Copy::p2), factor_in("D_yz", c.D_yz, Copy::p3)},
                {omega(Group::z, k123), omega(Group::x, k12)}));
}

void plans_b(Sink& out, const Cov233& c)
{
    const Pairings p;
    auto aa = [&](const std::string& l, const Polynomial& third) {
        return std::vector<PlanFactor>{factor_in("A", c.A, Copy::p1), factor_in("A", c.A, Copy::p2),
                                       factor_in(l, third, Copy::p3)};
    };
    add(out, "B_zη", "omega_y_omega_x", "tr Omega_y Omega_x(',\") (A', A'', P(y,η)''')", true,
        plan_of(aa("P(y,η)", p.y_eta), {omega(Group::y, k123), omega(Group::x, k12)}));
    add(out, "B_yζ", "omega_z_omega_x", "tr Omega_z Omega_x(',\") (A', A'', P(z,ζ)''')", true,
        plan_of(aa("P(z,ζ)", p.z_zeta), {omega(Group::z, k123), omega(Group::x, k12)}));
    add(out, "B_xηζ", "omega_y_omega_z", "tr Omega_y Omega_z (A', A'', (P(y,η) P(z,ζ))''')", true,
        plan_of(aa("P(y,η)P(z,ζ)", p.y_eta * p.z_zeta), {omega(Group::y, k123), omega(Group::z, k123)}));
}

void plans_d_eta_zeta(Sink& out, const Cov233& c)
{
    add(out, "D_ηζ", "omega_x2", "tr Omega_x^2 (B_xηζ', B_xηζ'')", true,
        plan_of({factor_in("B_xηζ", c.B_x_eta_zeta, Copy::p1),
                 factor_in("B_xηζ", c.B_x_eta_zeta, Copy::p2)},
                {omega(Group::x, k12, 2)}));
}

void plans_d_yz_eta_zeta(Sink& out, const Cov233& c)
{
    const Pairings p;
    // G keeps its copies: it is the untraced Omega_x(A' A'').
    const Polynomial g = omega_apply(omega(Group::x, k12), in_copy(c.A, Copy::p1) * in_copy(c.A, Copy::p2));
    add(out, "D_yzηζ", "g_squared", "tr Omega_y Omega_z (G^2, (P(y,η) P(z,ζ))''') with G = Omega_x(A' A'') untraced",
        true,
        plan_of({PlanFactor{"G^2", g * g, k12}, factor_in("P(y,η)P(z,ζ)", p.y_eta * p.z_zeta, Copy::p3)},
                {omega(Group::y, k123), omega(Group::z, k123)}));
}

void plans_f(Sink& out, const Cov233& c)
{
    auto three = [](const std::string& l, const Polynomial& f) {
        return std::vector<PlanFactor>{factor_in(l, f, Copy::p1), factor_in(l, f, Copy::p2), factor_in(l, f, Copy::p3)};
    };
    add(out, "F_η", "omega_z2", "tr Omega_z^2 (B_zη', B_zη'', B_zη''')", true,
        plan_of(three("B_zη", c.B_z_eta), {omega(Group::z, k123, 2)}));
    add(out, "F_ζ", "omega_y2", "tr Omega_y^2 (B_yζ', B_yζ'', B_yζ'''): the y/z mirror of F_η", true,
        plan_of(three("B_yζ", c.B_y_zeta), {omega(Group::y, k123, 2)}));
    add(out, "F_ζ", "omega_z2_literal", "tr Omega_z^2 (B_yζ', B_yζ'', B_yζ''') read literally", false,
        plan_of(three("B_yζ", c.B_y_zeta), {omega(Group::z, k123, 2)}));
}

void plans_h(Sink& out, const Cov233& c)
{
    auto factors = [&](const std::string& l, const Polynomial& middle) {
        return std::vector<PlanFactor>{factor_in("D_yzηζ", c.D_yz_eta_zeta, Copy::p1),
                                       factor_in(l, middle, Copy::p2),
                                       factor_in("B_xηζ", c.B_x_eta_zeta, Copy::p3)};
    };
    add(out, "H_xyzζ", "omega_eta_bzeta", "tr Omega_eta (D_yzηζ', B_zη'', B_xηζ'''): middle factor exchanged",
        true, plan_of(factors("B_zη", c.B_z_eta), {omega(Group::eta, k123)}));
    add(out, "H_xyzζ", "omega_eta_byzeta", "tr Omega_eta (D_yzηζ', B_yζ'', B_xηζ''') read literally",
        false, plan_of(factors("B_yζ", c.B_y_zeta), {omega(Group::eta, k123)}));
    add(out, "H_xyzζ", "omega_zeta_byzeta", "tr Omega_zeta (D_yzηζ', B_yζ'', B_xηζ'''): operator exchanged",
        false, plan_of(factors("B_yζ", c.B_y_zeta), {omega(Group::zeta, k123)}));
    add(out, "H_xyzη", "omega_zeta_byzeta", "tr Omega_zeta (D_yzηζ', B_yζ'', B_xηζ'''): middle factor exchanged",
        true, plan_of(factors("B_yζ", c.B_y_zeta), {omega(Group::zeta, k123)}));
    add(out, "H_xyzη", "omega_zeta_bzeta", "tr Omega_zeta (D_yzηζ', B_zη'', B_xηζ''') read literally",
        false, plan_of(factors("B_zη", c.B_z_eta), {omega(Group::zeta, k123)}));
    add(out, "H_xyzη", "omega_eta_bzeta", "tr Omega_eta (D_yzηζ', B_zη'', B_xηζ'''): operator exchanged",
        false, plan_of(factors("B_zη", c.B_z_eta), {omega(Group::eta, k123)}));
}

Polynomial run(void (*build)(Sink&, const Cov233&), const Cov233& c, const std::string& name)
{
    Sink s;
    build(s, c);
    return transvect(selected_candidate(s, name).plan);
}

}  // namespace

BinaryCubicForms binary_cubic_forms(const std::array<Polynomial, 4>& k)
{
    BinaryCubicForms f;
    f.coeffs = k;
    const Polynomial x0 = var(vars::x(0));
    const Polynomial x1 = var(vars::x(1));
    f.a = k[0] * pow(x0, 3) + k[1] * x0 * x0 * x1 + k[2] * x0 * x1 * x1 + k[3] * pow(x1, 3);
    const Polynomial P = Rational(3) * k[0] * k[2] - k[1] * k[1];
    const Polynomial Q = Rational(9) * k[0] * k[3] - k[1] * k[2];
    const Polynomial R = Rational(3) * k[1] * k[3] - k[2] * k[2];
    f.b = P * x0 * x0 + Q * x0 * x1 + R * x1 * x1;
    f.c = derive(f.b, vars::x(0)) * derive(f.a, vars::x(1)) - derive(f.b, vars::x(1)) * derive(f.a, vars::x(0));
    f.d = Rational(4) * P * R - Q * Q;
    return f;
}

Polynomial c_x233(const Polynomial& A)
{
    return det_poly(detail::hessian_block(A, Group::y, 3, Group::z, 3));
}

namespace {

std::array<Polynomial, 4> cubic_coefficients(const Polynomial& cx)
{
    const VariableId x0 = vars::x(0);
    const VariableId x1 = vars::x(1);
    return {derive(cx, x0, 3) * Rational(1, 6), derive(derive(cx, x0, 2), x1) * Rational(1, 2),
            derive(derive(cx, x1, 2), x0) * Rational(1, 2), derive(cx, x1, 3) * Rational(1, 6)};
}

}  // namespace

BinaryCubicSystem binary_cubic_system(const Hypermatrix& h)
{
    if (!(h.shape() == shape233())) {
        throw ShapeError("expected a " + shape233().str() + " state, got " + h.shape().str());
    }
    BinaryCubicForms f = binary_cubic_forms(cubic_coefficients(c_x233(ground_form(h))));
    BinaryCubicSystem s;
    for (int i = 0; i < 4; ++i) {
        s.a[i] = f.coeffs[i].constant_value();
    }
    s.cubic = f.a;
    s.b = f.b;
    s.c = f.c;
    s.d = f.d.constant_value();
    return s;
}

Cov233 covariants233(const Hypermatrix& h)
{
    detail::require_state(h, shape233());
    Cov233 c;
    c.A = ground_form(h);
    c.C_x = c_x233(c.A);
    BinaryCubicForms f = binary_cubic_forms(cubic_coefficients(c.C_x));
    c.F_x = f.b;
    c.I_x = f.c;
    c.Delta = f.d.constant_value();
    c.D_xyz = run(plans_d_xyz, c, "D_xyz");
    c.D_yz = run(plans_d_yz, c, "D_yz");
    c.F_y = run(plans_f_y, c, "F_y");
    c.B_z_eta = run(plans_b, c, "B_zη");
    c.B_y_zeta = run(plans_b, c, "B_yζ");
    c.B_x_eta_zeta = run(plans_b, c, "B_xηζ");
    c.D_eta_zeta = run(plans_d_eta_zeta, c, "D_ηζ");
    c.D_yz_eta_zeta = run(plans_d_yz_eta_zeta, c, "D_yzηζ");
    c.F_eta = run(plans_f, c, "F_η");
    c.F_zeta = run(plans_f, c, "F_ζ");
    c.H_xyz_zeta = run(plans_h, c, "H_xyzζ");
    c.H_xyz_eta = run(plans_h, c, "H_xyzη");
    return c;
}

std::vector<PlanCandidate> candidate_plans233(const Cov233& c)
{
    Sink out;
    plans_d_xyz(out, c);
    plans_d_yz(out, c);
    plans_f_y(out, c);
    plans_b(out, c);
    plans_d_eta_zeta(out, c);
    plans_d_yz_eta_zeta(out, c);
    plans_f(out, c);
    plans_h(out, c);
    return out;
}

const std::vector<std::string>& w_schema233()
{
    static const std::vector<std::string> names = {"D_yzηζ", "B_xηζ", "B_yζ", "B_zη", "C_x",    "D_ηζ",   "D_yz",
                                                   "F_y",    "F_x",   "F_η",  "F_ζ",  "H_xyzζ", "H_xyzη", "Δ"};
    return names;
}

const std::vector<std::pair<std::string, std::string>>& w_table233()
{
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"O_XVII", "11111111111111"}, {"O_XVI", "11111111111110"}, {"O_XV", "11111111011110"},
        {"O_XIV", "11111110100110"},  {"O_XIII", "11111100000110"}, {"O_XII", "11110100010010"},
        {"O_XI", "11110111000110"},   {"O_X", "11110100000010"},   {"O_IX", "01001000000000"},
        {"O_VIII", "11110100001100"}, {"O_VII", "11110100000100"}, {"O_VI", "11110100000000"},
        {"O_V", "11110000000000"},    {"O_IV", "01000000000000"},  {"O_III", "00100000000000"},
        {"O_II", "00010000000000"},   {"O_I", "00000000000000"},
    };
    return rows;
}

std::vector<std::pair<std::string, Polynomial>> named_values233(const Cov233& c)
{
    return {{"D_yzηζ", c.D_yz_eta_zeta},
            {"B_xηζ", c.B_x_eta_zeta},
            {"B_yζ", c.B_y_zeta},
            {"B_zη", c.B_z_eta},
            {"C_x", c.C_x},
            {"D_ηζ", c.D_eta_zeta},
            {"D_yz", c.D_yz},
            {"F_y", c.F_y},
            {"F_x", c.F_x},
            {"F_η", c.F_eta},
            {"F_ζ", c.F_zeta},
            {"H_xyzζ", c.H_xyz_zeta},
            {"H_xyzη", c.H_xyz_eta},
            {"Δ", Polynomial(c.Delta)},
            {"D_xyz", c.D_xyz},
            {"I_x", c.I_x}};
}

NullityVector w_vector233(const Cov233& c)
{
    std::vector<bool> bits;
    for (const auto& [name, value] : named_values233(c)) {
        if (bits.size() < w_schema233().size()) {
            bits.push_back(!value.is_zero());
        }
    }
    return NullityVector(w_schema233(), bits);
}

Classification classify233(const Hypermatrix& h)
{
    return detail::match_table(shape233(), w_vector233(covariants233(h)), w_table233());
}

CubicSyzygyReport cubic_syzygy_search()
{
    BinaryCubicForms f = binary_cubic_forms(
        {var(vars::a(0)), var(vars::a(1)), var(vars::a(2)), var(vars::a(3))});
    const std::array<Polynomial, 3> products = {pow(f.b, 3), f.c * f.c, f.d * f.a * f.a};
    const std::array<Polynomial, 3> printed = {f.b, f.c, f.d * f.a * f.a};

    CubicSyzygyReport r;
    for (int i = 0; i < 3; ++i) {
        r.degrees[i] = {products[i].degree_in(Group::a), products[i].degree_in(Group::x)};
        r.printed_degrees[i] = {printed[i].degree_in(Group::a), printed[i].degree_in(Group::x)};
    }

    std::map<std::string, std::size_t> row_of;
    std::vector<Monomial> monos;
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < 3; ++i) {
        for (const auto& t : products[i].terms()) {
            auto [it, fresh] = row_of.emplace(t.mono.str(), rows.size());
            if (fresh) {
                rows.emplace_back(3, Rational(0));
            }
            rows[it->second][i] = t.coef;
        }
    }
    auto basis = nullspace(rows, 3);
    r.solution_dimension = basis.size();
    if (basis.size() == 1) {
        // Scale to a primitive integer vector with positive first entry.
        mpz_class lcm = 1;
        for (const auto& q : basis[0]) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.den().get_mpz_t());
        }
        std::array<mpz_class, 3> ints;
        mpz_class g = 0;
        for (int i = 0; i < 3; ++i) {
            mpq_class v = basis[0][i].raw() * lcm;
            ints[i] = v.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
        }
        int s = sgn(ints[0]) < 0 ? -1 : 1;
        for (int i = 0; i < 3; ++i) {
            r.lambda[i] = Rational(mpz_class(ints[i] / g * s));
        }
        r.residual = r.lambda[0] * products[0] + r.lambda[1] * products[1] + r.lambda[2] * products[2];
    }
    return r;
}

}  // namespace slocc
