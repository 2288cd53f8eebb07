#include "slocc/forms.hpp"

#include "slocc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace slocc {

// ---------------------------------------------------------------- Shape

bool Shape::supported(unsigned n1, unsigned n2, unsigned n3)
{
    if (n1 != 2) {
        return false;
    }
    return (n2 == 2 && n3 >= 2 && n3 <= 64) || (n2 == 3 && n3 == 3);
}

Shape::Shape(unsigned n1, unsigned n2, unsigned n3) : n_{n1, n2, n3}
{
    if (!supported(n1, n2, n3)) {
        throw ShapeError("unsupported shape " + str() + "; classifiable formats are " + kClassifiableShapes +
                         ", dimension checks also accept 2x2xk for 2 <= k <= 64");
    }
}

Shape Shape::parse(std::string_view text)
{
    std::vector<unsigned> dims;
    std::string cur;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (c == 'x' || c == 'X' || c == ',' || c == '[' || c == ']' || c == ' ') {
            if (!cur.empty()) {
                dims.push_back(static_cast<unsigned>(std::stoul(cur)));
                cur.clear();
            }
        } else {
            throw ParseError("bad shape \"" + std::string(text) + "\"");
        }
    }
    if (!cur.empty()) {
        dims.push_back(static_cast<unsigned>(std::stoul(cur)));
    }
    if (dims.size() != 3) {
        throw ParseError("shape needs three dimensions: \"" + std::string(text) + "\"");
    }
    return Shape(dims[0], dims[1], dims[2]);
}

bool Shape::classifiable() const
{
    return n_[0] == 2 && ((n_[1] == 2 && (n_[2] == 2 || n_[2] == 3)) || (n_[1] == 3 && n_[2] == 3));
}

std::string Shape::str() const
{
    return std::to_string(n_[0]) + "x" + std::to_string(n_[1]) + "x" + std::to_string(n_[2]);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

Matrix Matrix::identity(unsigned n)
{
    Matrix m(n, n);
    for (unsigned i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Rational Matrix::det() const
{
    if (rows_ != cols_) {
        throw DimensionError("determinant of non-square matrix");
    }
    Matrix m = *this;
    Rational d(1);
    for (unsigned c = 0; c < cols_; ++c) {
        unsigned p = c;
        while (p < rows_ && m(p, c).is_zero()) {
            ++p;
        }
        if (p == rows_) {
            return Rational(0);
        }
        if (p != c) {
            for (unsigned k = 0; k < cols_; ++k) {
                std::swap(m(p, k), m(c, k));
            }
            d = -d;
        }
        d *= m(c, c);
        for (unsigned r = c + 1; r < rows_; ++r) {
            if (m(r, c).is_zero()) {
                continue;
            }
            Rational f = m(r, c) / m(c, c);
            for (unsigned k = c; k < cols_; ++k) {
                m(r, k) -= f * m(c, k);
            }
        }
    }
    return d;
}

Matrix Matrix::inverse() const
{
    if (rows_ != cols_) {
        throw DimensionError("inverse of non-square matrix");
    }
    const unsigned n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (unsigned c = 0; c < n; ++c) {
        unsigned p = c;
        while (p < n && a(p, c).is_zero()) {
            ++p;
        }
        if (p == n) {
            throw std::domain_error("singular matrix");
        }
        for (unsigned k = 0; k < n; ++k) {
            std::swap(a(p, k), a(c, k));
            std::swap(inv(p, k), inv(c, k));
        }
        Rational pivot = a(c, c);
        for (unsigned k = 0; k < n; ++k) {
            a(c, k) /= pivot;
            inv(c, k) /= pivot;
        }
        for (unsigned r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) {
                continue;
            }
            Rational f = a(r, c);
            for (unsigned k = 0; k < n; ++k) {
                a(r, k) -= f * a(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) {
        throw DimensionError("matrix product size mismatch");
    }
    Matrix r(a.rows_, b.cols_);
    for (unsigned i = 0; i < a.rows_; ++i) {
        for (unsigned k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) {
                continue;
            }
            for (unsigned j = 0; j < b.cols_; ++j) {
                r(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------- Hypermatrix

Hypermatrix::Hypermatrix(Shape shape) : shape_(shape), entries_(shape.size()) {}

Hypermatrix::Hypermatrix(Shape shape, std::vector<Rational> entries) : shape_(shape), entries_(std::move(entries))
{
    if (entries_.size() != shape_.size()) {
        throw DimensionError("hypermatrix of shape " + shape_.str() + " needs " + std::to_string(shape_.size()) +
                             " entries, got " + std::to_string(entries_.size()));
    }
}

Hypermatrix Hypermatrix::basis_sum(Shape shape, const std::vector<std::array<unsigned, 3>>& kets)
{
    Hypermatrix h(shape);
    for (const auto& k : kets) {
        std::size_t f = h.flat_index(k[0], k[1], k[2]);
        h.entries_[f] += Rational(1);
    }
    return h;
}

std::size_t Hypermatrix::flat_index(unsigned i, unsigned j, unsigned k) const
{
    if (i >= shape_.dim(0) || j >= shape_.dim(1) || k >= shape_.dim(2)) {
        throw DimensionError("index out of range for shape " + shape_.str());
    }
    return (std::size_t(i) * shape_.dim(1) + j) * shape_.dim(2) + k;
}

bool Hypermatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Hypermatrix Hypermatrix::scaled(const Rational& c) const
{
    Hypermatrix h = *this;
    for (auto& e : h.entries_) {
        e *= c;
    }
    return h;
}

std::string Hypermatrix::ket_string() const
{
    const bool wide = shape_.dim(2) > 10;
    std::string s;
    for (unsigned i = 0; i < shape_.dim(0); ++i) {
        for (unsigned j = 0; j < shape_.dim(1); ++j) {
            for (unsigned k = 0; k < shape_.dim(2); ++k) {
                const Rational& c = at(i, j, k);
                if (c.is_zero()) {
                    continue;
                }
                if (s.empty()) {
                    if (c.sign() < 0) {
                        s += "-";
                    }
                } else {
                    s += c.sign() < 0 ? " - " : " + ";
                }
                if (!c.abs().is_one()) {
                    s += c.abs().str();
                }
                s += "|";
                if (wide) {
                    s += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
                } else {
                    s += std::to_string(i) + std::to_string(j) + std::to_string(k);
                }
                s += ">";
            }
        }
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- SLOCC

SloccElement SloccElement::identity(const Shape& shape)
{
    return SloccElement{{Matrix::identity(shape.dim(0)), Matrix::identity(shape.dim(1)), Matrix::identity(shape.dim(2))}};
}

SloccElement SloccElement::inverse() const
{
    return SloccElement{{g[0].inverse(), g[1].inverse(), g[2].inverse()}};
}

SloccElement operator*(const SloccElement& a, const SloccElement& b)
{
    return SloccElement{{a.g[0] * b.g[0], a.g[1] * b.g[1], a.g[2] * b.g[2]}};
}

Polynomial ground_form(const Hypermatrix& h)
{
    const Shape& s = h.shape();
    std::vector<Polynomial::Term> terms;
    for (unsigned i = 0; i < s.dim(0); ++i) {
        for (unsigned j = 0; j < s.dim(1); ++j) {
            for (unsigned k = 0; k < s.dim(2); ++k) {
                const Rational& c = h.at(i, j, k);
                if (!c.is_zero()) {
                    terms.push_back({Monomial(vars::x(i)) * Monomial(vars::y(j)) * Monomial(vars::z(k)), c});
                }
            }
        }
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial generic_ground_form(const Shape& s)
{
    std::vector<Polynomial::Term> terms;
    unsigned f = 0;
    for (unsigned i = 0; i < s.dim(0); ++i) {
        for (unsigned j = 0; j < s.dim(1); ++j) {
            for (unsigned k = 0; k < s.dim(2); ++k, ++f) {
                terms.push_back(
                    {Monomial(vars::a(f)) * Monomial(vars::x(i)) * Monomial(vars::y(j)) * Monomial(vars::z(k)), Rational(1)});
            }
        }
    }
    return Polynomial::from_terms(std::move(terms));
}

Bindings coefficient_bindings(const Hypermatrix& h)
{
    Bindings b;
    for (std::size_t f = 0; f < h.entries().size(); ++f) {
        b[vars::a(static_cast<unsigned>(f))] = h.entries()[f];
    }
    return b;
}

Hypermatrix act(const SloccElement& g, const Hypermatrix& h)
{
    const Shape& s = h.shape();
    for (unsigned slot = 0; slot < 3; ++slot) {
        if (g.g[slot].rows() != s.dim(slot) || g.g[slot].cols() != s.dim(slot)) {
            throw DimensionError("group element does not match shape " + s.str());
        }
    }
    const unsigned n1 = s.dim(0), n2 = s.dim(1), n3 = s.dim(2);
    std::vector<Rational> cur = h.entries();
    auto idx = [&](unsigned i, unsigned j, unsigned k) { return (std::size_t(i) * n2 + j) * n3 + k; };
    // One slot at a time.
    for (unsigned slot = 0; slot < 3; ++slot) {
        std::vector<Rational> next(cur.size());
        const Matrix& m = g.g[slot];
        for (unsigned i = 0; i < n1; ++i) {
            for (unsigned j = 0; j < n2; ++j) {
                for (unsigned k = 0; k < n3; ++k) {
                    const Rational& v = cur[idx(i, j, k)];
                    if (v.is_zero()) {
                        continue;
                    }
                    const unsigned src = slot == 0 ? i : (slot == 1 ? j : k);
                    for (unsigned t = 0; t < s.dim(slot); ++t) {
                        const Rational& c = m(t, src);
                        if (c.is_zero()) {
                            continue;
                        }
                        std::size_t dst = slot == 0 ? idx(t, j, k) : (slot == 1 ? idx(i, t, k) : idx(i, j, t));
                        next[dst] += c * v;
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return Hypermatrix(s, std::move(cur));
}

std::uint64_t Rng::below(std::uint64_t n)
{
    // Rejection sampling keeps the draw uniform and library-independent.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

SloccElement random_slocc(const Shape& shape, Rng& rng, unsigned size_bound)
{
    if (size_bound < 1) {
        throw std::invalid_argument("random_slocc: size_bound must be at least 1");
    }
    SloccElement g = SloccElement::identity(shape);
    for (unsigned slot = 0; slot < 3; ++slot) {
        const unsigned n = shape.dim(slot);
        const auto count = rng.below(size_bound + 1);
        for (std::uint64_t s = 0; s < count; ++s) {
            auto i = static_cast<unsigned>(rng.below(n));
            auto j = static_cast<unsigned>(rng.below(n - 1));
            if (j >= i) {
                ++j;
            }
            std::int64_t c = rng.between(1, size_bound);
            if (rng.below(2) == 1) {
                c = -c;
            }
            Matrix shear = Matrix::identity(n);
            shear(i, j) = Rational(static_cast<long>(c));
            g.g[slot] = shear * g.g[slot];
        }
    }
    return g;
}

SloccElement random_slocc(const Shape& shape, std::uint64_t seed, unsigned size_bound)
{
    Rng rng(seed);
    return random_slocc(shape, rng, size_bound);
}

// ---------------------------------------------------------------- I/O

namespace {

class KetParser {
public:
    explicit KetParser(std::string_view s) : s_(s) {}

    std::vector<std::pair<Rational, std::array<unsigned, 3>>> parse()
    {
        std::vector<std::pair<Rational, std::array<unsigned, 3>>> out;
        skip();
        if (at_end()) {
            fail("empty state");
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Rational coef(1);
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string text = digits();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    text += "/" + digits();
                }
                coef = Rational::parse(text);
                skip();
                if (!at_end() && peek() == '*') {
                    ++pos_;
                    skip();
                }
            }
            out.emplace_back(sign > 0 ? coef : -coef, ket());
            first = false;
            skip();
        }
        return out;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("ket parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::string(s_.substr(start, pos_ - start));
    }
    std::array<unsigned, 3> ket()
    {
        if (at_end() || peek() != '|') {
            fail("expected '|'");
        }
        ++pos_;
        std::array<unsigned, 3> idx{};
        std::string body = digits();
        if (!at_end() && peek() == ',') {
            // Comma form |i,j,k> for indices above 9.
            std::vector<std::string> parts{body};
            while (!at_end() && peek() == ',') {
                ++pos_;
                parts.push_back(digits());
            }
            if (parts.size() != 3) {
                fail("ket needs three indices");
            }
            for (int t = 0; t < 3; ++t) {
                idx[t] = static_cast<unsigned>(std::stoul(parts[t]));
            }
        } else {
            if (body.size() != 3) {
                fail("ket needs three indices");
            }
            for (int t = 0; t < 3; ++t) {
                idx[t] = static_cast<unsigned>(body[t] - '0');
            }
        }
        if (!at_end() && peek() == '>') {
            ++pos_;
        } else if (s_.substr(pos_, 3) == "\xE2\x9F\xA9") {
            pos_ += 3;
        } else {
            fail("expected '>'");
        }
        return idx;
    }
};

}  // namespace

Hypermatrix parse_ket(std::string_view text, std::optional<Shape> shape)
{
    auto terms = KetParser(text).parse();
    if (!shape) {
        std::array<unsigned, 3> need{2, 2, 2};
        for (const auto& [c, idx] : terms) {
            for (int t = 0; t < 3; ++t) {
                need[t] = std::max(need[t], idx[t] + 1);
            }
        }
        if (need[1] >= 3) {
            need[1] = 3;
            need[2] = std::max(need[2], 3U);
        }
        shape = Shape(need[0], need[1], need[2]);
    }
    Hypermatrix h(*shape);
    for (const auto& [c, idx] : terms) {
        if (idx[0] >= shape->dim(0) || idx[1] >= shape->dim(1) || idx[2] >= shape->dim(2)) {
            throw ParseError("ket index exceeds shape " + shape->str());
        }
        h.set(idx[0], idx[1], idx[2], h.at(idx[0], idx[1], idx[2]) + c);
    }
    return h;
}

nlohmann::json state_to_json(const Hypermatrix& h, const std::string& label)
{
    nlohmann::json j;
    const auto& d = h.shape().dims();
    j["shape"] = {d[0], d[1], d[2]};
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : h.entries()) {
        entries.push_back(e.str());
    }
    j["entries"] = entries;
    if (!label.empty()) {
        j["label"] = label;
    }
    return j;
}

Hypermatrix state_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("shape") || !doc.contains("entries")) {
        throw ParseError("state document needs \"shape\" and \"entries\"");
    }
    const auto& sh = doc["shape"];
    if (!sh.is_array() || sh.size() != 3) {
        throw ParseError("\"shape\" must be an array of three positive integers");
    }
    std::array<unsigned, 3> dims{};
    for (int t = 0; t < 3; ++t) {
        if (!sh[t].is_number_integer() || sh[t].get<long long>() <= 0 || sh[t].get<long long>() > 1000) {
            throw ParseError("\"shape\" must be an array of three positive integers");
        }
        dims[t] = sh[t].get<unsigned>();
    }
    Shape shape(dims[0], dims[1], dims[2]);
    const auto& en = doc["entries"];
    if (!en.is_array()) {
        throw ParseError("\"entries\" must be an array of rational strings");
    }
    if (en.size() != shape.size()) {
        throw ParseError("\"entries\" has " + std::to_string(en.size()) + " values, shape " + shape.str() + " needs " +
                         std::to_string(shape.size()));
    }
    std::vector<Rational> values;
    values.reserve(en.size());
    for (const auto& e : en) {
        if (e.is_string()) {
            values.push_back(Rational::parse(e.get<std::string>()));
        } else if (e.is_number_integer()) {
            values.emplace_back(e.get<long>());
        } else {
            throw ParseError("entries must be exact rational strings, not floats");
        }
    }
    return Hypermatrix(shape, std::move(values));
}

}  // namespace slocc
