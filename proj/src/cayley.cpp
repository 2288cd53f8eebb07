#include "slocc/cayley.hpp"

#include "slocc/errors.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace slocc {

namespace {

std::string copy_tag(Copy c)
{
    switch (c) {
    case Copy::plain: return "plain";
    case Copy::p1: return "p1";
    case Copy::p2: return "p2";
    case Copy::p3: return "p3";
    }
    return "?";
}

}  // namespace

std::string OmegaSpec::str() const
{
    std::string s = "Omega_" + std::string(group_name(group));
    if (power != 1) {
        s += "^" + std::to_string(power);
    }
    s += "[";
    for (std::size_t i = 0; i < copies.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += copy_tag(copies[i]);
    }
    s += "]";
    return s;
}

OmegaSpec omega(Group g, std::vector<Copy> copies, unsigned power)
{
    return OmegaSpec{g, std::move(copies), power};
}

Polynomial omega_operator(const OmegaSpec& spec)
{
    const std::size_t n = spec.copies.size();
    if (n != 2 && n != 3) {
        throw StructuralError("omega needs 2 or 3 copies, got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (spec.copies[i] == spec.copies[j]) {
                throw StructuralError("omega copies must be distinct: " + spec.str());
            }
        }
    }
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = Polynomial::variable({spec.group, static_cast<std::uint8_t>(i), spec.copies[j]});
        }
    }
    return pow(det_poly(m), spec.power);
}

Polynomial apply_operator(const Polynomial& op, const Polynomial& p)
{
    PolynomialBuilder b;
    for (const auto& t : op.terms()) {
        b.add(derive(p, t.mono), t.coef);
    }
    return b.build();
}

Polynomial omega_apply(const OmegaSpec& spec, const Polynomial& p)
{
    return apply_operator(omega_operator(spec), p);
}

Polynomial jacobian2(const Polynomial& f, const Polynomial& g, Group group)
{
    const VariableId v0{group, 0, Copy::plain};
    const VariableId v1{group, 1, Copy::plain};
    return derive(f, v0) * derive(g, v1) - derive(f, v1) * derive(g, v0);
}

PlanFactor factor_in(const std::string& label, const Polynomial& p, Copy c)
{
    return PlanFactor{label, in_copy(p, c), {c}};
}

void validate(const TransvectionPlan& plan)
{
    std::array<int, kCopyCount> owner{};
    owner.fill(-1);
    for (std::size_t f = 0; f < plan.factors.size(); ++f) {
        for (Copy c : plan.factors[f].copies) {
            auto& o = owner[static_cast<int>(c)];
            if (o >= 0) {
                throw StructuralError("copy " + copy_tag(c) + " populated by factors " +
                                      plan.factors[o].label + " and " + plan.factors[f].label);
            }
            o = static_cast<int>(f);
        }
    }
    for (const auto& om : plan.omegas) {
        omega_operator(om);  // arity and distinctness
        for (Copy c : om.copies) {
            if (owner[static_cast<int>(c)] < 0) {
                throw StructuralError(om.str() + " references unpopulated copy " + copy_tag(c));
            }
        }
    }
    for (const auto& pt : plan.partial_traces) {
        if (pt.before_omega > plan.omegas.size()) {
            throw StructuralError("partial trace position out of range");
        }
    }
    if (!plan.trace.erases_all()) {
        throw StructuralError("final trace must erase every copy tag");
    }
}

Polynomial transvect_literal(const TransvectionPlan& plan)
{
    validate(plan);
    Polynomial p(1);
    for (const auto& f : plan.factors) {
        p = p * f.poly;
    }
    auto apply_traces_at = [&](std::size_t pos) {
        for (const auto& pt : plan.partial_traces) {
            if (pt.before_omega == pos) {
                p = retag(p, pt.map);
            }
        }
    };
    for (std::size_t i = 0; i < plan.omegas.size(); ++i) {
        apply_traces_at(i);
        p = omega_apply(plan.omegas[i], p);
    }
    apply_traces_at(plan.omegas.size());
    return retag(p, plan.trace);
}

Polynomial transvect(const TransvectionPlan& plan)
{
    if (!plan.partial_traces.empty()) {
        return transvect_literal(plan);
    }
    validate(plan);
    const std::size_t nf = plan.factors.size();
    if (nf == 0) {
        return plan.omegas.empty() ? Polynomial(1) : Polynomial();
    }
    std::array<int, kCopyCount> owner{};
    owner.fill(-1);
    for (std::size_t f = 0; f < nf; ++f) {
        for (Copy c : plan.factors[f].copies) {
            owner[static_cast<int>(c)] = static_cast<int>(f);
        }
    }
    Polynomial op(1);
    for (const auto& om : plan.omegas) {
        op = op * omega_operator(om);
    }

    std::vector<std::unordered_map<Monomial, Polynomial, MonomialHash>> memo(nf);
    auto traced_derivative = [&](std::size_t f, const Monomial& m) -> const Polynomial& {
        auto it = memo[f].find(m);
        if (it == memo[f].end()) {
            it = memo[f].emplace(m, retag(derive(plan.factors[f].poly, m), plan.trace)).first;
        }
        return it->second;
    };

    PolynomialBuilder result;
    std::vector<Monomial> parts(nf);
    std::vector<const Polynomial*> values(nf);
    for (const auto& t : op.terms()) {
        for (auto& m : parts) {
            m = Monomial();
        }
        bool orphan = false;
        for (auto e : t.mono.entries()) {
            int f = owner[static_cast<int>(Monomial::variable(e).copy)];
            if (f < 0) {
                orphan = true;
                break;
            }
            parts[f].push_back_sorted(Monomial::variable(e), Monomial::exponent(e));
        }
        if (orphan) {
            continue;
        }
        bool zero = false;
        for (std::size_t f = 0; f < nf && !zero; ++f) {
            values[f] = &traced_derivative(f, parts[f]);
            zero = values[f]->is_zero();
        }
        if (zero) {
            continue;
        }
        if (nf == 1) {
            result.add(*values[0], t.coef);
            continue;
        }
        Polynomial head = *values[0];
        for (std::size_t f = 1; f + 1 < nf; ++f) {
            head = head * *values[f];
        }
        result.add_product(head, *values[nf - 1], t.coef);
    }
    return result.build();
}

nlohmann::json plan_to_json(const TransvectionPlan& plan)
{
    nlohmann::json j;
    j["factors"] = nlohmann::json::array();
    for (const auto& f : plan.factors) {
        nlohmann::json copies = nlohmann::json::array();
        for (Copy c : f.copies) {
            copies.push_back(copy_tag(c));
        }
        j["factors"].push_back({{"label", f.label}, {"copies", copies}});
    }
    j["omegas"] = nlohmann::json::array();
    for (const auto& om : plan.omegas) {
        j["omegas"].push_back(om.str());
    }
    j["partial_traces"] = nlohmann::json::array();
    for (const auto& pt : plan.partial_traces) {
        j["partial_traces"].push_back({{"before_omega", pt.before_omega}, {"rule", pt.label}});
    }
    j["trace"] = "erase all copy tags";
    return j;
}

const PlanCandidate& selected_candidate(const std::vector<PlanCandidate>& list, const std::string& concomitant)
{
    const PlanCandidate* found = nullptr;
    for (const auto& c : list) {
        if (c.concomitant == concomitant && c.selected) {
            if (found != nullptr) {
                throw std::logic_error("two selected plans for " + concomitant);
            }
            found = &c;
        }
    }
    if (found == nullptr) {
        throw std::logic_error("no selected plan for " + concomitant);
    }
    return *found;
}

}  // namespace slocc
