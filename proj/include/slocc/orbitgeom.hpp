#pragma once

#include "slocc/forms.hpp"

#include <string>
#include <vector>

namespace slocc {

struct OrbitRecord {
    Shape format;
    std::string label;           // "O_I" ... "O_XVII"
    Hypermatrix representative;
    int projective_dimension;
    std::string dimension_formula;  // affine in n for the 2x2x(n+1) family, else the number
    std::string variety;            // [P^k] marks the distinguished factor of a J-pair
    std::vector<std::string> covers;
    std::string duality;            // display annotation only; may be empty
};

// Records listed from the ambient orbit downwards. For 2x2x(n+1) with n >= 3
// the parametric table is instantiated at that n. Cached and immutable.
const std::vector<OrbitRecord>& orbit_registry(const Shape& format);
// Throws UnknownLabelError.
const OrbitRecord& find_orbit(const Shape& format, const std::string& label);

// Rank of {(E x I x I)h, (I x E x I)h, (I x I x E)h : E elementary in gl}.
std::size_t tangent_rank(const Hypermatrix& h);
// tangent_rank - 1. Throws ZeroStateError.
int tangent_dimension(const Hypermatrix& h);

struct TangentReport {
    std::string label;
    std::size_t affine_rank;
    int projective_dimension;
    int expected;
    bool match;
};

std::vector<TangentReport> verify_registry(const Shape& format);
nlohmann::json to_json(const TangentReport& r);

// Transitive closure of the covers relation, ascending in dimension.
std::vector<std::string> hasse_ancestors(const Shape& format, const std::string& label);
std::vector<std::string> hasse_descendants(const Shape& format, const std::string& label);

// Inclusion poset with dimensions, edges from larger to smaller closure.
std::string hasse_dot(const Shape& format);

}  // namespace slocc
