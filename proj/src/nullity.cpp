#include "slocc/nullity.hpp"

#include <stdexcept>

namespace slocc {

NullityVector::NullityVector(std::vector<std::string> names, std::vector<bool> bits)
    : names_(std::move(names)), bits_(std::move(bits))
{
    if (names_.size() != bits_.size()) {
        throw std::invalid_argument("nullity vector: schema and values differ in length");
    }
}

NullityVector::NullityVector(std::vector<std::string> names, std::string_view bits) : names_(std::move(names))
{
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("nullity vector: bits must be 0/1");
        }
        bits_.push_back(c == '1');
    }
    if (names_.size() != bits_.size()) {
        throw std::invalid_argument("nullity vector: schema and values differ in length");
    }
}

bool NullityVector::at(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return bits_[i];
        }
    }
    throw std::out_of_range("nullity vector has no slot " + std::string(name));
}

NullityVector NullityVector::restrict(const std::vector<std::string>& names) const
{
    std::vector<bool> bits;
    bits.reserve(names.size());
    for (const auto& n : names) {
        bits.push_back(at(n));
    }
    return NullityVector(names, std::move(bits));
}

std::string NullityVector::bitstring() const
{
    std::string s;
    for (bool b : bits_) {
        s += b ? '1' : '0';
    }
    return s;
}

std::string NullityVector::str() const
{
    std::string s = "<";
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += bits_[i] ? "1" : "0";
    }
    return s + ">";
}

nlohmann::json NullityVector::to_json() const
{
    nlohmann::json values = nlohmann::json::array();
    for (bool b : bits_) {
        values.push_back(b ? 1 : 0);
    }
    return {{"slots", names_}, {"values", values}};
}

}  // namespace slocc
