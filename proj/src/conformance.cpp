#include "slocc/conformance.hpp"

#include "slocc/classify223.hpp"
#include "slocc/classify233.hpp"

#include <map>

namespace slocc {

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

// Column of `slot` in a reference table, in registry order; '-' where the
// table has no row for the label.
std::string reference_column(const std::vector<OrbitRecord>& reg, const std::vector<std::string>& schema,
                             const Rows& table, const std::string& slot)
{
    std::size_t idx = schema.size();
    for (std::size_t i = 0; i < schema.size(); ++i) {
        if (schema[i] == slot) {
            idx = i;
        }
    }
    std::string col;
    for (const auto& r : reg) {
        char cell = '-';
        if (idx < schema.size()) {
            for (const auto& [label, bits] : table) {
                if (label == r.label) {
                    cell = bits[idx];
                }
            }
        }
        col.push_back(cell);
    }
    return col;
}

bool column_matches(const std::string& got, const std::string& ref)
{
    for (std::size_t i = 0; i < ref.size(); ++i) {
        if (ref[i] != '-' && ref[i] != got[i]) {
            return false;
        }
    }
    return true;
}

struct FormatData {
    std::vector<std::string> labels;
    // concomitant -> candidate id -> column
    std::map<std::string, std::map<std::string, std::string>> columns;
    std::map<std::string, std::string> selected_column;
    std::vector<PlanCandidate> first_plans;  // candidates at the first representative, for serialization
};

template <typename Build>
FormatData evaluate(const Shape& shape, Build candidates_for)
{
    FormatData d;
    const auto& reg = orbit_registry(shape);
    for (std::size_t r = 0; r < reg.size(); ++r) {
        d.labels.push_back(reg[r].label);
        std::vector<PlanCandidate> cands = candidates_for(reg[r].representative);
        for (const auto& c : cands) {
            d.columns[c.concomitant][c.id].push_back(transvect(c.plan).is_zero() ? '0' : '1');
        }
        if (r == 0) {
            d.first_plans = std::move(cands);
        }
    }
    return d;
}

nlohmann::json format_section(const Shape& shape, const FormatData& d,
                              const std::map<std::string, std::pair<std::string, std::string>>& references,
                              nlohmann::json& irreproducible)
{
    nlohmann::json out;
    out["format"] = shape.str();
    out["representatives"] = d.labels;
    out["concomitants"] = nlohmann::json::array();
    std::vector<std::string> order;
    for (const auto& c : d.first_plans) {
        if (order.empty() || order.back() != c.concomitant) {
            order.push_back(c.concomitant);
        }
    }
    for (const auto& name : order) {
        const auto& [ref, source] = references.at(name);
        nlohmann::json entry;
        entry["name"] = name;
        entry["reference_column"] = ref;
        entry["reference_source"] = source;
        entry["candidates"] = nlohmann::json::array();
        std::size_t matching = 0;
        for (const auto& c : d.first_plans) {
            if (c.concomitant != name) {
                continue;
            }
            const std::string& col = d.columns.at(name).at(c.id);
            const bool ok = column_matches(col, ref);
            matching += ok ? 1 : 0;
            if (c.selected) {
                entry["selected"] = c.id;
                for (std::size_t i = 0; i < ref.size(); ++i) {
                    if (ref[i] != '-' && ref[i] != col[i]) {
                        irreproducible.push_back(
                            {{"format", shape.str()}, {"concomitant", name}, {"orbit", d.labels[i]}});
                    }
                }
            }
            entry["candidates"].push_back({{"id", c.id},
                                           {"reading", c.reading},
                                           {"selected", c.selected},
                                           {"column", col},
                                           {"matches_reference", ok},
                                           {"plan", plan_to_json(c.plan)}});
        }
        entry["matching_candidates"] = matching;
        out["concomitants"].push_back(entry);
    }
    return out;
}

}  // namespace

const std::vector<SubTable>& subtables233()
{
    static const std::vector<SubTable> tables = [] {
        std::vector<SubTable> t;
        Rows cubic = {{"O_XVII", "111"}, {"O_XVI", "110"}, {"O_XIV", "110"}, {"O_XV", "100"},
                      {"O_XIII", "100"}, {"O_IX", "100"}};
        for (const char* l : {"O_I", "O_II", "O_III", "O_IV", "O_V", "O_VI", "O_VII", "O_VIII", "O_X", "O_XI",
                              "O_XII"}) {
            cubic.emplace_back(l, "000");
        }
        t.push_back({"binary cubic system", {"C_x", "F_x", "Δ"}, cubic, cubic, ""});
        Rows dyz = {{"O_XV", "11"}, {"O_XIII", "01"}, {"O_IX", "00"}};
        t.push_back({"degree 4 separation", {"D_yz", "D_xyz"}, dyz, dyz, ""});
        Rows fy = {{"O_XVI", "1"}, {"O_XIV", "0"}};
        t.push_back({"F_y separation", {"F_y"}, fy, fy, ""});
        Rows bb_printed = {{"O_III", "01"}, {"O_II", "10"}, {"O_I", "00"}};
        Rows bb_expected = {{"O_III", "10"}, {"O_II", "01"}, {"O_I", "00"}};
        t.push_back({"quadratic concomitants", {"B_yζ", "B_zη"}, bb_printed, bb_expected,
                     "printed rows for O_III and O_II are exchanged relative to the full w_A table and to direct "
                     "computation under every plan"});
        Rows vp = {{"O_XII", "11101001"}, {"O_XI", "11110011"}, {"O_X", "11100001"}, {"O_VIII", "11100110"},
                   {"O_VII", "11100010"}, {"O_VI", "11100000"}, {"O_V", "11000000"}, {"O_IV", "01000000"}};
        t.push_back({"v'_A", {"D_yzηζ", "B_xηζ", "D_ηζ", "D_yz", "F_η", "F_ζ", "H_xyzζ", "H_xyzη"}, vp, vp, ""});
        return t;
    }();
    return tables;
}

nlohmann::json conformance_report()
{
    nlohmann::json irreproducible = nlohmann::json::array();
    nlohmann::json report;
    report["formats"] = nlohmann::json::array();

    {
        const Shape s(2, 2, 3);
        const auto& reg = orbit_registry(s);
        FormatData d = evaluate(s, [](const Hypermatrix& h) {
            Cov223 c = covariants223(h);
            return candidate_plans223(c.A, c.B, c.C);
        });
        std::map<std::string, std::pair<std::string, std::string>> refs;
        for (const char* n : {"D_x", "D_y"}) {
            refs[n] = {reference_column(reg, v_schema223(), v_table223(), n), "v_A table"};
        }
        for (const char* n : {"B_xζ", "B_yζ", "D_ζ"}) {
            refs[n] = {reference_column(reg, w_schema223(), w_table223(), n), "w_A table"};
        }
        report["formats"].push_back(format_section(s, d, refs, irreproducible));
    }
    {
        const Shape s(2, 3, 3);
        const auto& reg = orbit_registry(s);
        FormatData d = evaluate(s, [](const Hypermatrix& h) { return candidate_plans233(covariants233(h)); });
        std::map<std::string, std::pair<std::string, std::string>> refs;
        for (const auto& n : w_schema233()) {
            refs[n] = {reference_column(reg, w_schema233(), w_table233(), n), "w_A table"};
        }
        const SubTable& deg4 = subtables233()[1];
        refs["D_xyz"] = {reference_column(reg, deg4.columns, deg4.expected, "D_xyz"), "⟨[D_yz],[D_xyz]⟩ sub-table"};
        report["formats"].push_back(format_section(s, d, refs, irreproducible));
    }

    report["errata"] = nlohmann::json::array({
        {{"item", "⟨[B_yζ],[B_zη]⟩ sub-table"},
         {"printed", "O_III 01, O_II 10"},
         {"used", "O_III 10, O_II 01"},
         {"evidence", "full w_A table columns [B_yζ],[B_zη] and every candidate plan"}},
        {{"item", "H_xyzη, H_xyzζ middle factors"},
         {"printed", "Omega_zeta with B_zη, Omega_eta with B_yζ"},
         {"used", "Omega_zeta with B_yζ, Omega_eta with B_zη"},
         {"evidence", "printed readings vanish identically; the exchanged operators give the other H column"}},
        {{"item", "F_ζ operator"},
         {"printed", "Omega_z^2 over three copies of B_yζ"},
         {"used", "Omega_y^2"},
         {"evidence", "B_yζ has no z, so the printed reading vanishes identically"}},
        {{"item", "binary cubic syzygy"},
         {"printed", "9b + 512c + 128da^2 = 0"},
         {"used", "4b^3 + c^2 + 9da^2 = 0"},
         {"evidence", "homogeneous ansatz has a one-dimensional solution space"}},
    });
    report["residual_ambiguities"] = nlohmann::json::array({
        {{"item", "2x2x3 D_x versus D_y"},
         {"detail", "the reference columns of [D_x] and [D_y] coincide, so both readings of each are admissible"}},
    });
    report["irreproducible_cells"] = irreproducible;
    return report;
}

}  // namespace slocc
