#pragma once

#include "slocc/polynomial.hpp"
#include "slocc/rational.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace slocc {

// Supported: (2,2,k) for k >= 2 and (2,3,3). Classification covers (2,2,2), (2,2,3), (2,3,3).
class Shape {
public:
    Shape(unsigned n1, unsigned n2, unsigned n3);
    // "2x2x3", "2,2,3" or "[2,2,3]".
    static Shape parse(std::string_view text);
    static bool supported(unsigned n1, unsigned n2, unsigned n3);

    unsigned dim(unsigned slot) const { return n_[slot]; }
    const std::array<unsigned, 3>& dims() const { return n_; }
    unsigned size() const { return n_[0] * n_[1] * n_[2]; }
    bool classifiable() const;
    std::string str() const;

    friend bool operator==(const Shape& a, const Shape& b) { return a.n_ == b.n_; }
    friend auto operator<=>(const Shape& a, const Shape& b) { return a.n_ <=> b.n_; }

private:
    std::array<unsigned, 3> n_;
};

inline const char* kClassifiableShapes = "2x2x2, 2x2x3, 2x3x3";

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix(unsigned rows, unsigned cols);
    static Matrix identity(unsigned n);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    Rational& operator()(unsigned i, unsigned j) { return data_[i * cols_ + j]; }
    const Rational& operator()(unsigned i, unsigned j) const { return data_[i * cols_ + j]; }

    Rational det() const;
    Matrix inverse() const;
    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    unsigned rows_;
    unsigned cols_;
    std::vector<Rational> data_;
};

class Hypermatrix {
public:
    explicit Hypermatrix(Shape shape);
    Hypermatrix(Shape shape, std::vector<Rational> entries);
    // Sum of basis kets with coefficient 1, e.g. {{0,0,0},{1,1,1}}.
    static Hypermatrix basis_sum(Shape shape, const std::vector<std::array<unsigned, 3>>& kets);

    const Shape& shape() const { return shape_; }
    const std::vector<Rational>& entries() const { return entries_; }
    std::size_t flat_index(unsigned i, unsigned j, unsigned k) const;
    const Rational& at(unsigned i, unsigned j, unsigned k) const { return entries_[flat_index(i, j, k)]; }
    void set(unsigned i, unsigned j, unsigned k, Rational v) { entries_[flat_index(i, j, k)] = std::move(v); }
    bool is_zero() const;
    Hypermatrix scaled(const Rational& c) const;
    // "|000> + 2|011> - 1/3|102>"; "0" for the zero tensor.
    std::string ket_string() const;

    friend bool operator==(const Hypermatrix& a, const Hypermatrix& b) = default;

private:
    Shape shape_;
    std::vector<Rational> entries_;
};

struct SloccElement {
    std::array<Matrix, 3> g;

    static SloccElement identity(const Shape& shape);
    SloccElement inverse() const;
    // (a*b) acts as a after b.
    friend SloccElement operator*(const SloccElement& a, const SloccElement& b);
};

// Sum A_ijk x_i y_j z_k with numeric coefficients.
Polynomial ground_form(const Hypermatrix& h);
// Same with symbolic coefficients a_{i n2 n3 + j n3 + k}.
Polynomial generic_ground_form(const Shape& shape);
// Bindings a_f -> entry f, for substituting into generic expressions.
Bindings coefficient_bindings(const Hypermatrix& h);

// A'_{i'j'k'} = sum (g1)_{i'i} (g2)_{j'j} (g3)_{k'k} A_ijk.
Hypermatrix act(const SloccElement& g, const Hypermatrix& h);

// Seeded, platform-independent integer stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    // Uniform on [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);
    // Uniform on [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

// Per slot, between 0 and size_bound shears I + c E_ij (i != j) with
// 1 <= |c| <= size_bound. Every factor has determinant 1.
SloccElement random_slocc(const Shape& shape, std::uint64_t seed, unsigned size_bound);
SloccElement random_slocc(const Shape& shape, Rng& rng, unsigned size_bound);

// Grammar (whitespace ignored):
//   state := term { ('+' | '-') term }
//   term  := ['+' | '-'] [coef ['*']] ket
//   coef  := digits ['/' digits]
//   ket   := '|' digit digit digit ('>' | U+27E9)
// Without an explicit shape the smallest supported shape holding every index is used.
Hypermatrix parse_ket(std::string_view text, std::optional<Shape> shape = std::nullopt);

// {"shape":[n1,n2,n3],"entries":["1","0","-2/3",...]} with optional "label".
nlohmann::json state_to_json(const Hypermatrix& h, const std::string& label = "");
Hypermatrix state_from_json(const nlohmann::json& doc);

}  // namespace slocc
