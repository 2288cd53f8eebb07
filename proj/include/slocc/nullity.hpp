#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace slocc {

// Ordered pattern [P1],[P2],...: bit i is 1 when concomitant i is nonzero.
class NullityVector {
public:
    NullityVector() = default;
    NullityVector(std::vector<std::string> names, std::vector<bool> bits);
    // bits given as "10110".
    NullityVector(std::vector<std::string> names, std::string_view bits);

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<bool>& bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    // Throws std::out_of_range on an unknown slot name.
    bool at(std::string_view name) const;
    // Sub-vector on the named slots, in the given order.
    NullityVector restrict(const std::vector<std::string>& names) const;

    std::string bitstring() const;
    // "<1,0,1>"
    std::string str() const;
    nlohmann::json to_json() const;

    friend bool operator==(const NullityVector& a, const NullityVector& b) = default;

private:
    std::vector<std::string> names_;
    std::vector<bool> bits_;
};

}  // namespace slocc
