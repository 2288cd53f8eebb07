#pragma once

#include "slocc/classify222.hpp"
#include "slocc/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace slocc::detail {

inline void require_state(const Hypermatrix& h, const Shape& expected)
{
    if (!(h.shape() == expected)) {
        throw ShapeError("expected a " + expected.str() + " state, got " + h.shape().str());
    }
    if (h.is_zero()) {
        throw ZeroStateError("the zero hypermatrix is not a projective state");
    }
}

inline Classification match_table(const Shape& format, const NullityVector& v,
                                  const std::vector<std::pair<std::string, std::string>>& table)
{
    const std::string bits = v.bitstring();
    for (const auto& [label, row] : table) {
        if (row == bits) {
            return Classification{&find_orbit(format, label), v};
        }
    }
    throw UnmatchedPatternError("nullity vector " + v.str() + " matches no " + format.str() + " orbit");
}

// Second derivatives d2p/du_i dv_j as a matrix.
inline std::vector<std::vector<Polynomial>> hessian_block(const Polynomial& p, Group u, unsigned nu, Group v,
                                                          unsigned nv)
{
    std::vector<std::vector<Polynomial>> m(nu, std::vector<Polynomial>(nv));
    for (unsigned i = 0; i < nu; ++i) {
        Polynomial di = derive(p, VariableId{u, static_cast<std::uint8_t>(i), Copy::plain});
        for (unsigned j = 0; j < nv; ++j) {
            m[i][j] = derive(di, VariableId{v, static_cast<std::uint8_t>(j), Copy::plain});
        }
    }
    return m;
}

}  // namespace slocc::detail
