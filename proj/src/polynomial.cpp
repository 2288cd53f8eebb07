#include "slocc/polynomial.hpp"

#include "slocc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace slocc {

std::string_view group_name(Group g)
{
    switch (g) {
    case Group::a: return "a";
    case Group::x: return "x";
    case Group::y: return "y";
    case Group::z: return "z";
    case Group::zeta: return "zeta";
    case Group::eta: return "eta";
    }
    return "?";
}

std::string_view copy_marks(Copy c)
{
    switch (c) {
    case Copy::plain: return "";
    case Copy::p1: return "'";
    case Copy::p2: return "''";
    case Copy::p3: return "'''";
    }
    return "?";
}

std::string VariableId::name() const
{
    std::string s(group_name(group));
    s += copy_marks(copy);
    s += std::to_string(index);
    return s;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VariableId v, unsigned exponent)
{
    if (exponent > 0) {
        entries_.push_back(make_entry(v, exponent));
    }
}

unsigned Monomial::exponent(VariableId v) const
{
    const std::uint16_t code = v.code();
    for (Entry e : entries_) {
        auto c = static_cast<std::uint16_t>(e >> 16);
        if (c == code) {
            return exponent(e);
        }
        if (c > code) {
            break;
        }
    }
    return 0;
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (Entry e : entries_) {
        d += exponent(e);
    }
    return d;
}

unsigned Monomial::degree_in(Group g) const
{
    unsigned d = 0;
    for (Entry e : entries_) {
        if (variable(e).group == g) {
            d += exponent(e);
        }
    }
    return d;
}

unsigned Monomial::degree_in(Group g, Copy c) const
{
    unsigned d = 0;
    for (Entry e : entries_) {
        VariableId v = variable(e);
        if (v.group == g && v.copy == c) {
            d += exponent(e);
        }
    }
    return d;
}

std::size_t Monomial::hash() const
{
    std::uint64_t h = 1469598103934665603ULL;
    for (Entry e : entries_) {
        h ^= e;
        h *= 1099511628211ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto i = entries_.begin();
    auto j = o.entries_.begin();
    while (i != entries_.end() && j != o.entries_.end()) {
        Entry ci = *i >> 16;
        Entry cj = *j >> 16;
        if (ci == cj) {
            r.entries_.push_back(*i + exponent(*j));
            ++i;
            ++j;
        } else if (ci < cj) {
            r.entries_.push_back(*i++);
        } else {
            r.entries_.push_back(*j++);
        }
    }
    r.entries_.insert(r.entries_.end(), i, entries_.end());
    r.entries_.insert(r.entries_.end(), j, o.entries_.end());
    return r;
}

std::string Monomial::str() const
{
    if (entries_.empty()) {
        return "1";
    }
    std::string s;
    for (Entry e : entries_) {
        if (!s.empty()) {
            s += '*';
        }
        s += variable(e).name();
        if (exponent(e) > 1) {
            s += '^';
            s += std::to_string(exponent(e));
        }
    }
    return s;
}

int compare(const Monomial& a, const Monomial& b)
{
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0;
    for (; i < ea.size() && i < eb.size(); ++i) {
        if (ea[i] == eb[i]) {
            continue;
        }
        Monomial::Entry ca = ea[i] >> 16;
        Monomial::Entry cb = eb[i] >> 16;
        if (ca != cb) {
            return ca < cb ? -1 : 1;
        }
        return Monomial::exponent(ea[i]) > Monomial::exponent(eb[i]) ? -1 : 1;
    }
    if (ea.size() == eb.size()) {
        return 0;
    }
    return ea.size() > eb.size() ? -1 : 1;
}

// ---------------------------------------------------------------- CopyMap

CopyMap::CopyMap()
{
    for (auto& row : map_) {
        for (std::size_t c = 0; c < kCopyCount; ++c) {
            row[c] = static_cast<Copy>(c);
        }
    }
}

CopyMap CopyMap::erase_all()
{
    CopyMap m;
    for (auto& row : m.map_) {
        row.fill(Copy::plain);
    }
    return m;
}

CopyMap& CopyMap::set(Group g, Copy from, Copy to)
{
    map_[static_cast<int>(g)][static_cast<int>(from)] = to;
    return *this;
}

CopyMap& CopyMap::set_all_groups(Copy from, Copy to)
{
    for (auto& row : map_) {
        row[static_cast<int>(from)] = to;
    }
    return *this;
}

bool CopyMap::erases_all() const
{
    for (const auto& row : map_) {
        for (Copy c : row) {
            if (c != Copy::plain) {
                return false;
            }
        }
    }
    return true;
}

bool CopyMap::is_identity() const
{
    return map_ == CopyMap().map_;
}

// ---------------------------------------------------------------- Builder

void PolynomialBuilder::add(const Monomial& m, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    acc_[m] += c.raw();
}

void PolynomialBuilder::add(Monomial&& m, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    acc_[std::move(m)] += c.raw();
}

void PolynomialBuilder::add(const Polynomial& p, const Rational& scale)
{
    if (scale.is_zero()) {
        return;
    }
    for (const auto& t : p.terms()) {
        if (scale.is_one()) {
            acc_[t.mono] += t.coef.raw();
        } else {
            acc_[t.mono] += t.coef.raw() * scale.raw();
        }
    }
}

void PolynomialBuilder::add_product(const Polynomial& p, const Polynomial& q, const Rational& scale)
{
    if (scale.is_zero()) {
        return;
    }
    mpq_class t;
    acc_.reserve(acc_.size() + p.size() * q.size());
    for (const auto& tp : p.terms()) {
        for (const auto& tq : q.terms()) {
            mpq_mul(t.get_mpq_t(), tp.coef.raw().get_mpq_t(), tq.coef.raw().get_mpq_t());
            if (!scale.is_one()) {
                mpq_mul(t.get_mpq_t(), t.get_mpq_t(), scale.raw().get_mpq_t());
            }
            mpq_class& slot = acc_[tp.mono * tq.mono];
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), t.get_mpq_t());
        }
    }
}

Polynomial PolynomialBuilder::build()
{
    Polynomial p;
    p.terms_.reserve(acc_.size());
    for (auto& [m, c] : acc_) {
        if (sgn(c) != 0) {
            p.terms_.push_back({m, Rational(c)});
        }
    }
    acc_.clear();
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Polynomial::Term& a, const Polynomial::Term& b) { return compare(a.mono, b.mono) < 0; });
    return p;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c)
{
    if (!c.is_zero()) {
        terms_.push_back({Monomial(), c});
    }
}

Polynomial Polynomial::variable(VariableId v)
{
    return term(Monomial(v), Rational(1));
}

Polynomial Polynomial::term(Monomial m, Rational c)
{
    Polynomial p;
    if (!c.is_zero()) {
        p.terms_.push_back({std::move(m), std::move(c)});
    }
    return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms)
{
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    PolynomialBuilder b;
    for (auto& t : terms) {
        b.add(std::move(t.mono), t.coef);
    }
    return b.build();
}

Rational Polynomial::constant_value() const
{
    if (!is_constant()) {
        throw std::logic_error("constant_value on non-constant polynomial " + str());
    }
    return terms_.empty() ? Rational(0) : terms_[0].coef;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return compare(t.mono, key) < 0; });
    if (it != terms_.end() && it->mono == m) {
        return it->coef;
    }
    return Rational(0);
}

unsigned Polynomial::degree_in(Group g) const
{
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.degree_in(g));
    }
    return d;
}

unsigned Polynomial::degree_in(Group g, Copy c) const
{
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.degree_in(g, c));
    }
    return d;
}

unsigned Polynomial::total_degree() const
{
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.degree());
    }
    return d;
}

bool Polynomial::homogeneous_in(Group g, unsigned degree) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree_in(g) == degree; });
}

std::string Polynomial::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coef.sign() < 0;
        if (first) {
            if (negative) {
                s += '-';
            }
        } else {
            s += negative ? " - " : " + ";
        }
        Rational mag = t.coef.abs();
        if (t.mono.empty()) {
            s += mag.str();
        } else if (mag.is_one()) {
            s += t.mono.str();
        } else {
            s += mag.str();
            s += " * ";
            s += t.mono.str();
        }
        first = false;
    }
    return s;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        t.coef = -t.coef;
    }
    return r;
}

namespace {

std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b,
                                    bool subtract)
{
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        int c = compare(i->mono, j->mono);
        if (c < 0) {
            out.push_back(*i++);
        } else if (c > 0) {
            out.push_back({j->mono, subtract ? -j->coef : j->coef});
            ++j;
        } else {
            Rational s = subtract ? i->coef - j->coef : i->coef + j->coef;
            if (!s.is_zero()) {
                out.push_back({i->mono, std::move(s)});
            }
            ++i;
            ++j;
        }
    }
    for (; i != a.end(); ++i) {
        out.push_back(*i);
    }
    for (; j != b.end(); ++j) {
        out.push_back({j->mono, subtract ? -j->coef : j->coef});
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coef *= c;
    }
    return *this;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q)
{
    Polynomial r;
    r.terms_ = merge(p.terms_, q.terms_, false);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q)
{
    Polynomial r;
    r.terms_ = merge(p.terms_, q.terms_, true);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    if (p.size() == 1 && p.terms_[0].mono.empty()) {
        return q * p.terms_[0].coef;
    }
    if (q.size() == 1 && q.terms_[0].mono.empty()) {
        return p * q.terms_[0].coef;
    }
    if (p.size() == 1 || q.size() == 1) {
        // Multiplying by one term preserves the order of the other factor.
        const Polynomial& single = p.size() == 1 ? p : q;
        const Polynomial& many = p.size() == 1 ? q : p;
        Polynomial r;
        r.terms_.reserve(many.size());
        for (const auto& t : many.terms_) {
            r.terms_.push_back({t.mono * single.terms_[0].mono, t.coef * single.terms_[0].coef});
        }
        return r;
    }
    PolynomialBuilder b;
    b.add_product(p, q);
    return b.build();
}

bool operator==(const Polynomial& p, const Polynomial& q)
{
    if (p.terms_.size() != q.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < p.terms_.size(); ++i) {
        if (!(p.terms_[i].mono == q.terms_[i].mono) || !(p.terms_[i].coef == q.terms_[i].coef)) {
            return false;
        }
    }
    return true;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }

Polynomial pow(const Polynomial& p, unsigned e)
{
    Polynomial result(1);
    Polynomial base = p;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

// ---------------------------------------------------------------- calculus

Polynomial derive(const Polynomial& p, VariableId v, unsigned times)
{
    if (times == 0) {
        return p;
    }
    return derive(p, Monomial(v, times));
}

Polynomial derive(const Polynomial& p, const Monomial& m)
{
    if (m.empty()) {
        return p;
    }
    // Subtracting a fixed exponent vector preserves lexicographic order,
    // so the surviving terms stay canonical.
    std::vector<Polynomial::Term> out;
    const auto& need = m.entries();
    for (const auto& t : p.terms()) {
        const auto& have = t.mono.entries();
        Monomial::Storage rest;
        rest.reserve(have.size());
        mpz_class factor = 1;
        std::size_t j = 0;
        bool ok = true;
        for (std::size_t i = 0; i < have.size(); ++i) {
            Monomial::Entry code = have[i] >> 16;
            if (j < need.size() && (need[j] >> 16) < code) {
                ok = false;
                break;
            }
            if (j < need.size() && (need[j] >> 16) == code) {
                unsigned e = Monomial::exponent(have[i]);
                unsigned k = Monomial::exponent(need[j]);
                if (e < k) {
                    ok = false;
                    break;
                }
                for (unsigned s = 0; s < k; ++s) {
                    factor *= (e - s);
                }
                if (e > k) {
                    rest.push_back((code << 16) | (e - k));
                }
                ++j;
            } else {
                rest.push_back(have[i]);
            }
        }
        if (!ok || j != need.size()) {
            continue;
        }
        Monomial mono;
        for (auto e : rest) {
            mono.push_back_sorted(Monomial::variable(e), Monomial::exponent(e));
        }
        out.push_back({std::move(mono), t.coef * Rational(factor)});
    }
    return Polynomial::from_sorted_terms(std::move(out));
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial det_rec(const PolyMatrix& m, std::size_t row, std::uint32_t used, std::vector<Polynomial>& memo,
                   std::vector<bool>& known)
{
    const std::size_t n = m.size();
    if (row == n) {
        return Polynomial(1);
    }
    if (known[used]) {
        return memo[used];
    }
    Polynomial sum;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (used & (1U << c)) {
            continue;
        }
        if (!m[row][c].is_zero()) {
            Polynomial minor = det_rec(m, row + 1, used | (1U << c), memo, known);
            if (!minor.is_zero()) {
                Polynomial t = m[row][c] * minor;
                if (sign > 0) {
                    sum += t;
                } else {
                    sum -= t;
                }
            }
        }
        sign = -sign;
    }
    memo[used] = sum;
    known[used] = true;
    return sum;
}

}  // namespace

Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m)
{
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw DimensionError("det_poly: matrix is not square");
        }
    }
    if (n > 20) {
        throw DimensionError("det_poly: matrix too large");
    }
    std::vector<Polynomial> memo(std::size_t(1) << n);
    std::vector<bool> known(std::size_t(1) << n, false);
    return det_rec(m, 0, 0, memo, known);
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings)
{
    if (bindings.empty()) {
        return p;
    }
    PolynomialBuilder b;
    for (const auto& t : p.terms()) {
        Monomial rest;
        Rational c = t.coef;
        for (auto e : t.mono.entries()) {
            VariableId v = Monomial::variable(e);
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                rest.push_back_sorted(v, Monomial::exponent(e));
            } else {
                c *= it->second.pow(Monomial::exponent(e));
            }
        }
        b.add(std::move(rest), c);
    }
    return b.build();
}

Polynomial compose(const Polynomial& p, const std::map<VariableId, Polynomial>& images)
{
    std::map<std::pair<std::uint16_t, unsigned>, Polynomial> powers;
    auto power_of = [&](VariableId v, unsigned e) -> const Polynomial& {
        auto key = std::make_pair(v.code(), e);
        auto it = powers.find(key);
        if (it == powers.end()) {
            it = powers.emplace(key, pow(images.at(v), e)).first;
        }
        return it->second;
    };
    PolynomialBuilder b;
    for (const auto& t : p.terms()) {
        Polynomial acc(t.coef);
        Monomial rest;
        for (auto e : t.mono.entries()) {
            VariableId v = Monomial::variable(e);
            if (images.count(v)) {
                acc = acc * power_of(v, Monomial::exponent(e));
            } else {
                rest.push_back_sorted(v, Monomial::exponent(e));
            }
        }
        b.add(acc * Polynomial::term(rest, Rational(1)));
    }
    return b.build();
}

Polynomial retag(const Polynomial& p, const CopyMap& map)
{
    if (map.is_identity()) {
        return p;
    }
    PolynomialBuilder b;
    for (const auto& t : p.terms()) {
        std::vector<std::pair<std::uint16_t, unsigned>> items;
        items.reserve(t.mono.entries().size());
        for (auto e : t.mono.entries()) {
            VariableId v = Monomial::variable(e);
            items.emplace_back(v.with_copy(map.apply(v.group, v.copy)).code(), Monomial::exponent(e));
        }
        std::sort(items.begin(), items.end());
        Monomial m;
        for (std::size_t i = 0; i < items.size();) {
            unsigned exp = 0;
            std::size_t j = i;
            for (; j < items.size() && items[j].first == items[i].first; ++j) {
                exp += items[j].second;
            }
            m.push_back_sorted(VariableId::from_code(items[i].first), exp);
            i = j;
        }
        b.add(std::move(m), t.coef);
    }
    return b.build();
}

Polynomial in_copy(const Polynomial& p, Copy c)
{
    CopyMap m;
    m.set_all_groups(Copy::plain, c);
    return retag(p, m);
}

Polynomial pairing(Group u, Copy cu, Group v, Copy cv, unsigned n)
{
    Polynomial s;
    for (unsigned i = 0; i < n; ++i) {
        auto idx = static_cast<std::uint8_t>(i);
        s += Polynomial::variable({u, idx, cu}) * Polynomial::variable({v, idx, cv});
    }
    return s;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    Polynomial parse()
    {
        skip();
        if (at_end()) {
            fail("empty polynomial");
        }
        Polynomial result;
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
            Polynomial t = parse_term();
            result += sign > 0 ? t : -t;
            first = false;
            skip();
        }
        return result;
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
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
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

    Polynomial parse_term()
    {
        Rational coef(1);
        Monomial mono;
        bool any = false;
        while (true) {
            skip();
            if (at_end()) {
                fail("expected factor");
            }
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string num = digits();
                std::string text = num;
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    text += "/" + digits();
                }
                coef *= Rational::parse(text);
            } else {
                mono = mono * parse_power();
            }
            any = true;
            skip();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) {
            fail("empty term");
        }
        return Polynomial::term(mono, coef);
    }

    Monomial parse_power()
    {
        static const std::pair<std::string_view, Group> names[] = {
            {"zeta", Group::zeta}, {"eta", Group::eta}, {"a", Group::a},
            {"x", Group::x},       {"y", Group::y},     {"z", Group::z}};
        Group g{};
        bool found = false;
        for (const auto& [name, group] : names) {
            if (s_.substr(pos_, name.size()) == name) {
                g = group;
                pos_ += name.size();
                found = true;
                break;
            }
        }
        if (!found) {
            fail("unknown variable");
        }
        unsigned primes = 0;
        while (!at_end() && peek() == '\'') {
            ++primes;
            ++pos_;
        }
        if (primes > 3) {
            fail("at most three primes");
        }
        unsigned long index = std::stoul(digits());
        if (index > 255) {
            fail("variable index out of range");
        }
        unsigned exp = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            exp = static_cast<unsigned>(std::stoul(digits()));
        }
        return Monomial(VariableId{g, static_cast<std::uint8_t>(index), static_cast<Copy>(primes)}, exp);
    }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text)
{
    return PolyParser(text).parse();
}

}  // namespace slocc
