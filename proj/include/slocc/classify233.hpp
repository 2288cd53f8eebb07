#pragma once

#include "slocc/cayley.hpp"
#include "slocc/classify222.hpp"

#include <array>

namespace slocc {

// The binary cubic a = a0 x0^3 + a1 x0^2 x1 + a2 x0 x1^2 + a3 x1^3 and its
// covariants. Coefficients may be symbolic (generic search) or numeric.
struct BinaryCubicForms {
    std::array<Polynomial, 4> coeffs;
    Polynomial a;
    Polynomial b;  // P x0^2 + Q x0 x1 + R x1^2, the Hessian over 4
    Polynomial c;  // db/dx0 da/dx1 - db/dx1 da/dx0
    Polynomial d;  // 4PR - Q^2
};

BinaryCubicForms binary_cubic_forms(const std::array<Polynomial, 4>& coeffs);

struct BinaryCubicSystem {
    std::array<Rational, 4> a;
    Polynomial cubic, b, c;
    Rational d;
};

// Built from C_x of the state, so b, c, d are F_x, I_x and Delta.
BinaryCubicSystem binary_cubic_system(const Hypermatrix& h);

// C_x = det(d2A/dy_j dz_k), a binary cubic in x.
Polynomial c_x233(const Polynomial& A);

struct Cov233 {
    Polynomial A, C_x, F_x, I_x;
    Rational Delta;
    Polynomial D_xyz, D_yz, F_y;
    Polynomial B_z_eta, B_y_zeta, B_x_eta_zeta, D_eta_zeta, D_yz_eta_zeta;
    Polynomial F_eta, F_zeta, H_xyz_zeta, H_xyz_eta;
};

// Every reading of each transvectant-built concomitant, selected ones flagged.
// Factors are taken from c, so c must already hold the selected values
// (as returned by covariants233).
std::vector<PlanCandidate> candidate_plans233(const Cov233& c);

Cov233 covariants233(const Hypermatrix& h);

// <[D_yzetazeta],[B_xetazeta],[B_yzeta],[B_zeta],[C_x],[D_etazeta],[D_yz],[F_y],[F_x],[F_eta],[F_zeta],
//  [H_xyzzeta],[H_xyzeta],[Delta]>
NullityVector w_vector233(const Cov233& c);
const std::vector<std::string>& w_schema233();
const std::vector<std::pair<std::string, std::string>>& w_table233();
// Slot name -> value of the concomitant with that name, including D_xyz and I_x.
std::vector<std::pair<std::string, Polynomial>> named_values233(const Cov233& c);

Classification classify233(const Hypermatrix& h);

struct CubicSyzygyReport {
    // (coefficient degree, x degree) of b^3, c^2, d a^2.
    std::array<std::pair<unsigned, unsigned>, 3> degrees;
    // Same for the printed terms b, c, d a^2.
    std::array<std::pair<unsigned, unsigned>, 3> printed_degrees;
    std::size_t solution_dimension = 0;
    // Primitive integer solution with a positive first entry; meaningful when the dimension is 1.
    std::array<Rational, 3> lambda;
    Polynomial residual;
};

// Solves lambda1 b^3 + lambda2 c^2 + lambda3 d a^2 = 0 over the generic cubic.
CubicSyzygyReport cubic_syzygy_search();

}  // namespace slocc
