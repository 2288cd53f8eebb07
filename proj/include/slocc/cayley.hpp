#pragma once

#include "slocc/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace slocc {

// Determinantal operator over 2 (binary) or 3 (ternary) copies of one group.
// Row i differentiates index i, column j acts on copies[j].
struct OmegaSpec {
    Group group = Group::x;
    std::vector<Copy> copies;
    unsigned power = 1;

    std::string str() const;
};

OmegaSpec omega(Group g, std::vector<Copy> copies, unsigned power = 1);

// The operator as a polynomial in commuting derivative symbols: the symbol v
// stands for d/dv. Throws StructuralError on repeated copies or wrong arity.
Polynomial omega_operator(const OmegaSpec& spec);

// Applies a polynomial in derivative symbols to p.
Polynomial apply_operator(const Polynomial& op, const Polynomial& p);

Polynomial omega_apply(const OmegaSpec& spec, const Polynomial& p);

// 2x2 Jacobian in the plain variables g0, g1 of a binary group.
Polynomial jacobian2(const Polynomial& f, const Polynomial& g, Group group);

struct PlanFactor {
    std::string label;
    Polynomial poly;          // already expressed in its copies
    std::vector<Copy> copies; // copy tags this factor occupies, pairwise disjoint across factors
};

// Relabelling applied before omegas[before_omega] (or after the last one when
// before_omega == omegas.size()).
struct PartialTrace {
    std::size_t before_omega = 0;
    CopyMap map;
    std::string label;
};

struct TransvectionPlan {
    std::vector<PlanFactor> factors;
    std::vector<OmegaSpec> omegas;
    std::vector<PartialTrace> partial_traces;
    CopyMap trace = CopyMap::erase_all();
};

PlanFactor factor_in(const std::string& label, const Polynomial& p, Copy c);

// Throws StructuralError when copies overlap, an omega references an
// unpopulated copy, a partial trace is out of range, or the trace keeps a copy.
void validate(const TransvectionPlan& plan);

// Product of factors, omegas in order, final trace. Without partial traces the
// operator is distributed over the factors and no full product is formed.
Polynomial transvect(const TransvectionPlan& plan);

// Always forms the full product and applies each step literally.
Polynomial transvect_literal(const TransvectionPlan& plan);

nlohmann::json plan_to_json(const TransvectionPlan& plan);

// One reading of a concomitant's formula. Exactly one candidate per
// concomitant is selected; the others are kept for the conformance report.
struct PlanCandidate {
    std::string concomitant;
    std::string id;
    std::string reading;
    bool selected = false;
    TransvectionPlan plan;
};

// Throws std::logic_error unless exactly one selected candidate exists.
const PlanCandidate& selected_candidate(const std::vector<PlanCandidate>& list, const std::string& concomitant);

}  // namespace slocc
