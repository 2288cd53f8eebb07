#pragma once

#include "slocc/forms.hpp"
#include "slocc/nullity.hpp"
#include "slocc/orbitgeom.hpp"
#include "slocc/polynomial.hpp"

#include <array>

namespace slocc {

struct Classification {
    const OrbitRecord* orbit;  // points into the immutable registry
    NullityVector nullity;
};

// All entries as polynomials; Delta lives in the a-variables only (a constant
// once coefficients are numeric).
struct Cov222Forms {
    Polynomial A, B_x, B_y, B_z, C, Delta;
};

struct Cov222 {
    Polynomial A, B_x, B_y, B_z, C;
    Rational Delta;
};

// B_x = det(d2A/dy_i dz_j), B_y, B_z alike; C = Jacobian of (A, B_x) in x;
// Delta = discriminant of B_x. Works on generic or numeric ground forms.
Cov222Forms covariant_forms222(const Polynomial& A);

Cov222 covariants222(const Hypermatrix& h);

// <[B_x],[B_y],[B_z],[C],[Delta]>
NullityVector v_vector222(const Cov222& c);
const std::vector<std::string>& v_schema222();
// Reference rows, ambient orbit first.
const std::vector<std::pair<std::string, std::string>>& v_table222();

Classification classify222(const Hypermatrix& h);

// (lambda1, lambda2, lambda3) with lambda1 C^2 + lambda2 B_x B_y B_z + lambda3 Delta A^2 = 0,
// normalised to lambda1 = 1. Solved once from seeded numeric specializations.
const std::array<Rational, 3>& syzygy222_constants();
// The combination above evaluated on a ground form (generic or numeric).
Polynomial syzygy222_residual(const Polynomial& A);
Polynomial syzygy222_residual_generic();

}  // namespace slocc
