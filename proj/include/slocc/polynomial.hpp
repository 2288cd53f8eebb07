#pragma once

#include "slocc/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace slocc {

enum class Group : std::uint8_t { a = 0, x = 1, y = 2, z = 3, zeta = 4, eta = 5 };
enum class Copy : std::uint8_t { plain = 0, p1 = 1, p2 = 2, p3 = 3 };

inline constexpr std::size_t kGroupCount = 6;
inline constexpr std::size_t kCopyCount = 4;

std::string_view group_name(Group g);
// "" for plain, then "'", "''", "'''".
std::string_view copy_marks(Copy c);

// Ordered by (group, index, copy); the packed code realises that order.
struct VariableId {
    Group group = Group::a;
    std::uint8_t index = 0;
    Copy copy = Copy::plain;

    constexpr std::uint16_t code() const
    {
        return static_cast<std::uint16_t>((static_cast<unsigned>(group) << 10) |
                                          (static_cast<unsigned>(index) << 2) |
                                          static_cast<unsigned>(copy));
    }
    static constexpr VariableId from_code(std::uint16_t c)
    {
        return VariableId{static_cast<Group>(c >> 10), static_cast<std::uint8_t>((c >> 2) & 0xFF),
                          static_cast<Copy>(c & 3)};
    }
    VariableId with_copy(Copy c) const { return VariableId{group, index, c}; }
    // e.g. "x0", "y'2", "zeta'''1", "a13".
    std::string name() const;

    friend constexpr bool operator==(VariableId a, VariableId b) { return a.code() == b.code(); }
    friend constexpr auto operator<=>(VariableId a, VariableId b) { return a.code() <=> b.code(); }
};

namespace vars {
inline VariableId a(unsigned i) { return {Group::a, static_cast<std::uint8_t>(i), Copy::plain}; }
inline VariableId x(unsigned i, Copy c = Copy::plain) { return {Group::x, static_cast<std::uint8_t>(i), c}; }
inline VariableId y(unsigned i, Copy c = Copy::plain) { return {Group::y, static_cast<std::uint8_t>(i), c}; }
inline VariableId z(unsigned i, Copy c = Copy::plain) { return {Group::z, static_cast<std::uint8_t>(i), c}; }
inline VariableId zeta(unsigned i, Copy c = Copy::plain) { return {Group::zeta, static_cast<std::uint8_t>(i), c}; }
inline VariableId eta(unsigned i, Copy c = Copy::plain) { return {Group::eta, static_cast<std::uint8_t>(i), c}; }
}  // namespace vars

// Sparse power product. Entries sorted by variable code, exponents positive.
class Monomial {
public:
    using Entry = std::uint32_t;  // code << 16 | exponent
    using Storage = boost::container::small_vector<Entry, 8>;

    Monomial() = default;
    explicit Monomial(VariableId v, unsigned exponent = 1);

    static constexpr VariableId variable(Entry e) { return VariableId::from_code(static_cast<std::uint16_t>(e >> 16)); }
    static constexpr unsigned exponent(Entry e) { return e & 0xFFFF; }
    static constexpr Entry make_entry(VariableId v, unsigned exp) { return (Entry(v.code()) << 16) | exp; }

    const Storage& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    unsigned exponent(VariableId v) const;
    unsigned degree() const;
    unsigned degree_in(Group g) const;
    unsigned degree_in(Group g, Copy c) const;
    std::size_t hash() const;

    Monomial operator*(const Monomial& o) const;
    // Appends an entry whose code exceeds every stored code; used by builders.
    void push_back_sorted(VariableId v, unsigned exp) { entries_.push_back(make_entry(v, exp)); }

    // "x0^2*y1"; "1" for the empty monomial.
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

private:
    Storage entries_;
};

// Negative when a precedes b in canonical order: lexicographic with x0 > x1 > ...,
// so higher powers of earlier variables come first and the constant comes last.
int compare(const Monomial& a, const Monomial& b);

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Relabels copy tags per group. Identity unless set.
class CopyMap {
public:
    CopyMap();
    static CopyMap identity() { return {}; }
    // Every copy of every group goes to plain: the full trace.
    static CopyMap erase_all();

    CopyMap& set(Group g, Copy from, Copy to);
    CopyMap& set_all_groups(Copy from, Copy to);
    Copy apply(Group g, Copy c) const { return map_[static_cast<int>(g)][static_cast<int>(c)]; }
    bool erases_all() const;
    bool is_identity() const;

private:
    std::array<std::array<Copy, kCopyCount>, kGroupCount> map_;
};

class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coef;
    };

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(int c) : Polynomial(Rational(c)) {}
    static Polynomial variable(VariableId v);
    static Polynomial term(Monomial m, Rational c);
    // Merges like monomials and drops zeros; input order irrelevant.
    static Polynomial from_terms(std::vector<Term> terms);
    // Trusted: terms already canonical (sorted, distinct, nonzero).
    static Polynomial from_sorted_terms(std::vector<Term> terms);
    // Accepts the canonical text form and mild variations ("2*x0 - 1/3*y'1^2").
    static Polynomial parse(std::string_view text);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()); }
    // Requires is_constant().
    Rational constant_value() const;
    Rational coefficient(const Monomial& m) const;
    // Maximum total degree of the variables of group g (and copy c); 0 for the zero polynomial.
    unsigned degree_in(Group g) const;
    unsigned degree_in(Group g, Copy c) const;
    unsigned total_degree() const;
    bool depends_on(Group g) const { return degree_in(g) > 0; }
    // True when every term has exactly the given degree in the group.
    bool homogeneous_in(Group g, unsigned degree) const;

    std::string str() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend bool operator==(const Polynomial& p, const Polynomial& q);

private:
    friend class PolynomialBuilder;
    std::vector<Term> terms_;  // canonical order, nonzero coefficients
};

// Hash-based accumulator for sums of many terms.
class PolynomialBuilder {
public:
    void add(const Monomial& m, const Rational& c);
    void add(Monomial&& m, const Rational& c);
    void add(const Polynomial& p, const Rational& scale = Rational(1));
    // Adds scale * p * q without materialising the product.
    void add_product(const Polynomial& p, const Polynomial& q, const Rational& scale = Rational(1));
    Polynomial build();

private:
    std::unordered_map<Monomial, mpq_class, MonomialHash> acc_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial pow(const Polynomial& p, unsigned e);

Polynomial derive(const Polynomial& p, VariableId v, unsigned times = 1);
// Applies the product of partial derivatives encoded by m (exponent = order).
Polynomial derive(const Polynomial& p, const Monomial& m);

// Square matrices of any size, by Laplace expansion along the first row with memoised minors.
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m);

using Bindings = std::map<VariableId, Rational>;
Polynomial substitute(const Polynomial& p, const Bindings& bindings);
// Replaces each bound variable by a polynomial.
Polynomial compose(const Polynomial& p, const std::map<VariableId, Polynomial>& images);
Polynomial retag(const Polynomial& p, const CopyMap& map);
// Moves every plain variable of p into copy c.
Polynomial in_copy(const Polynomial& p, Copy c);

// Pairing form sum_i u_i v_i over the given index range, e.g. P(z, zeta).
Polynomial pairing(Group u, Copy cu, Group v, Copy cv, unsigned n);

}  // namespace slocc
