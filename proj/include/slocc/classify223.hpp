#pragma once

#include "slocc/cayley.hpp"
#include "slocc/classify222.hpp"

namespace slocc {

struct Cov223 {
    Polynomial A, B, C, D_x, D_y;
    Rational Delta;
    Polynomial B_xzeta, B_yzeta, D_zeta;
};

// B = det(d2A/dx_i dy_j), a quadratic form in z.
Polynomial b223(const Polynomial& A);
// The 4x4 determinant with rows (a_00k, a_10k, a_01k, a_11k), k = 0,1,2, and
// last row (x1y1, -x0y1, -x1y0, x0y0). Coefficients are read off A, so a
// generic ground form gives the generic C.
Polynomial c223(const Polynomial& A);
// Sum over i,j and sigma in S_3 of a_{ij sigma1}(a_{00 sigma2}a_{11 sigma3} - a_{10 sigma2}a_{01 sigma3}) x_i y_j,
// with sign(sigma) when signed_sum is set.
Polynomial c223_s3_sum(const Polynomial& A, bool signed_sum);
// det(d2C/dx_i dy_j): the degree 6 invariant.
Polynomial delta223(const Polynomial& C);

// Every reading of D_x, D_y, B_xzeta, B_yzeta, D_zeta, selected ones flagged.
std::vector<PlanCandidate> candidate_plans223(const Polynomial& A, const Polynomial& B, const Polynomial& C);

Cov223 covariants223(const Hypermatrix& h);

// <[B],[C],[D_x],[D_y],[Delta]>; does not separate all orbits.
NullityVector v_vector223(const Cov223& c);
NullityVector v_vector223(const Hypermatrix& h);
// <[B],[B_xzeta],[B_yzeta],[C],[Delta],[D_zeta]>
NullityVector w_vector223(const Cov223& c);
// Schema name -> value, for every named quantity (D_x and D_y included).
std::vector<std::pair<std::string, Polynomial>> named_values223(const Cov223& c);

const std::vector<std::string>& v_schema223();
const std::vector<std::string>& w_schema223();
const std::vector<std::pair<std::string, std::string>>& v_table223();
const std::vector<std::pair<std::string, std::string>>& w_table223();

Classification classify223(const Hypermatrix& h);

}  // namespace slocc
