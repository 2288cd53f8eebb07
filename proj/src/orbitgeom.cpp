#include "slocc/orbitgeom.hpp"

#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace slocc {

namespace {

struct Row {
    const char* label;
    const char* ket;
    const char* dim;  // number, or affine expression in n
    const char* variety;
    std::vector<std::string> covers;
    const char* duality;
};

int eval_affine(const std::string& expr, int n)
{
    // Forms: "7", "n+2", "3n+5".
    auto pos = expr.find('n');
    if (pos == std::string::npos) {
        return std::stoi(expr);
    }
    int coef = pos == 0 ? 1 : std::stoi(expr.substr(0, pos));
    int constant = pos + 1 < expr.size() ? std::stoi(expr.substr(pos + 1)) : 0;
    return coef * n + constant;
}

std::string substitute_n(std::string text, int n)
{
    // "P^{2n+1}" -> "P^7" at n = 3; bare "P^n" -> "P^3".
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '{') {
            auto close = text.find('}', i);
            out += std::to_string(eval_affine(text.substr(i + 1, close - i - 1), n));
            i = close;
        } else if (text[i] == 'n' && i > 0 && text[i - 1] == '^') {
            out += std::to_string(n);
        } else {
            out += text[i];
        }
    }
    return out;
}

const std::vector<Row>& rows222()
{
    static const std::vector<Row> rows = {
        {"O_VI", "|000>+|111>", "7", "P^7 (ambient)", {"O_V"}, ""},
        {"O_V", "|100>+|010>+|001>", "6", "τ(P^1×P^1×P^1)", {"O_IV", "O_III", "O_II"}, "dual to O_I"},
        {"O_IV", "|001>+|111>", "4", "σ_2(P^1×P^1)×P^1", {"O_I"}, "self-dual"},
        {"O_III", "|100>+|111>", "4", "P^1×σ_2(P^1×P^1)", {"O_I"}, "self-dual"},
        {"O_II", "|010>+|111>", "4", "σ_2(P^1×[P^1]×P^1)×P^1", {"O_I"}, "self-dual"},
        {"O_I", "|000>", "3", "P^1×P^1×P^1", {}, "dual to O_V"},
    };
    return rows;
}

const std::vector<Row>& rows223()
{
    static const std::vector<Row> rows = {
        {"O_VIII", "|000>+|011>+|101>+|112>", "11", "P^11 (ambient)", {"O_VII"}, ""},
        {"O_VII", "|000>+|011>+|102>", "10", "J(X, O_IV)", {"O_VI"}, "dual to O_I"},
        {"O_VI", "|000>+|111>", "9", "σ_2(X)", {"O_V"}, "dual to O_II"},
        {"O_V", "|000>+|011>+|101>", "8", "τ(X)", {"O_IV", "O_III", "O_II"}, "self-dual"},
        {"O_IV", "|000>+|011>", "6", "P^1×σ_2(P^1×P^2) ≃ P^1×P^5", {"O_I"}, "self-dual"},
        {"O_III", "|000>+|101>", "6", "σ_2(P^1×[P^1]×P^2)×P^1", {"O_I"}, "self-dual"},
        {"O_II", "|000>+|110>", "5", "σ_2(P^1×P^1)×P^2 ≃ P^3×P^2", {"O_I"}, "dual to O_VI"},
        {"O_I", "|000>", "4", "X = P^1×P^1×P^2", {}, "dual to O_VII"},
    };
    return rows;
}

const std::vector<Row>& rows22n()
{
    static const std::vector<Row> rows = {
        {"O_IX", "|000>+|011>+|102>+|113>", "4n+3", "P^{4n+3} (ambient)", {"O_VIII"}, ""},
        {"O_VIII", "|000>+|011>+|101>+|112>", "3n+5", "σ_3(X)", {"O_VII"}, "dual to O_II"},
        {"O_VII", "|000>+|011>+|102>", "3n+4", "J(X, O_IV)", {"O_VI"}, "dual to O_I"},
        {"O_VI", "|000>+|111>", "2n+5", "σ_2(X)", {"O_V"}, "self-dual"},
        {"O_V", "|000>+|011>+|101>", "2n+4", "τ(X)", {"O_IV", "O_III", "O_II"}, "self-dual"},
        {"O_IV", "|000>+|011>", "2n+2", "P^1×σ_2(P^1×P^n) ≃ P^1×P^{2n+1}", {"O_I"}, "self-dual"},
        {"O_III", "|000>+|101>", "2n+2", "σ_2(P^1×[P^1]×P^n)×P^1", {"O_I"}, "self-dual"},
        {"O_II", "|000>+|110>", "n+3", "σ_2(P^1×P^1)×P^n ≃ P^3×P^n", {"O_I"}, "dual to O_VIII"},
        {"O_I", "|000>", "n+2", "X = P^1×P^1×P^n", {}, "dual to O_VII"},
    };
    return rows;
}

const std::vector<Row>& rows233()
{
    static const std::vector<Row> rows = {
        {"O_XVII", "|000>+|011>+|100>+|122>", "17", "P^17 (ambient)", {"O_XVI"}, ""},
        {"O_XVI", "|000>+|011>+|101>+|122>", "16", "J(X, τ(X))", {"O_XV", "O_XIV"}, ""},
        {"O_XV", "|000>+|011>+|022>+|101>+|112>", "15", "T(X, τ(X))", {"O_XIII", "O_VIII", "O_XI", "O_XII"}, ""},
        {"O_XIV", "|000>+|011>+|122>", "14", "J(X, P^1×σ_2(P^2×P^2))", {"O_XIII"}, ""},
        {"O_XIII", "|000>+|011>+|022>+|101>", "13", "T(X, P^1×σ_2(P^2×P^2))", {"O_VII", "O_X", "O_IX"}, ""},
        {"O_XII", "|000>+|011>+|101>+|112>", "13", "σ_2(σ_2(P^1×[P^2]×P^2)×P^2)", {"O_X"}, ""},
        {"O_XI", "|000>+|011>+|121>+|102>", "13", "J(P^5×P^2, σ_2(P^1×[P^2]×P^2)×P^2)", {"O_VII", "O_X"}, ""},
        {"O_X", "|000>+|011>+|102>", "12", "J(X, σ_2(P^1×[P^2]×P^2)×P^2)", {"O_VI"}, ""},
        {"O_IX", "|000>+|011>+|022>", "9", "P^1×σ_3(P^2×P^2) ≃ P^1×P^8", {"O_IV"}, ""},
        {"O_VIII", "|000>+|011>+|110>+|121>", "13", "σ_2(P^5×P^2)", {"O_VII"}, ""},
        {"O_VII", "|000>+|011>+|120>", "12", "J(X, P^5×P^2)", {"O_VI"}, ""},
        {"O_VI", "|000>+|111>", "11", "σ_2(X)", {"O_V"}, ""},
        {"O_V", "|000>+|011>+|101>", "10", "τ(X)", {"O_IV", "O_II", "O_III"}, ""},
        {"O_IV", "|000>+|011>", "8", "P^1×σ_2(P^2×P^2)", {"O_I"}, ""},
        {"O_III", "|000>+|101>", "7", "σ_2(P^1×[P^2]×P^2)×P^2", {"O_I"}, ""},
        {"O_II", "|000>+|110>", "7", "σ_2(P^1×P^2)×P^2 ≃ P^5×P^2", {"O_I"}, ""},
        {"O_I", "|000>", "5", "X = P^1×P^2×P^2", {}, ""},
    };
    return rows;
}

std::vector<OrbitRecord> build_registry(const Shape& format)
{
    const auto& d = format.dims();
    const std::vector<Row>* rows = nullptr;
    int n = static_cast<int>(d[2]) - 1;
    if (d[1] == 3) {
        rows = &rows233();
    } else if (d[2] == 2) {
        rows = &rows222();
    } else if (d[2] == 3) {
        rows = &rows223();
    } else {
        rows = &rows22n();
    }
    std::vector<OrbitRecord> out;
    for (const Row& r : *rows) {
        out.push_back(OrbitRecord{format, r.label, parse_ket(r.ket, format), eval_affine(r.dim, n), r.dim,
                                  substitute_n(r.variety, n), r.covers, r.duality});
    }
    // Each record must lie strictly above what it covers.
    for (const auto& rec : out) {
        for (const auto& c : rec.covers) {
            auto it = std::find_if(out.begin(), out.end(), [&](const OrbitRecord& o) { return o.label == c; });
            if (it == out.end() || it->projective_dimension >= rec.projective_dimension) {
                throw std::logic_error("registry inconsistency at " + rec.label + " -> " + c);
            }
        }
    }
    return out;
}

}  // namespace

const std::vector<OrbitRecord>& orbit_registry(const Shape& format)
{
    static std::mutex mu;
    static std::map<Shape, std::unique_ptr<const std::vector<OrbitRecord>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(format);
    if (it == cache.end()) {
        it = cache.emplace(format, std::make_unique<const std::vector<OrbitRecord>>(build_registry(format))).first;
    }
    return *it->second;
}

const OrbitRecord& find_orbit(const Shape& format, const std::string& label)
{
    for (const auto& r : orbit_registry(format)) {
        if (r.label == label) {
            return r;
        }
    }
    std::string known;
    for (const auto& r : orbit_registry(format)) {
        known += (known.empty() ? "" : ", ") + r.label;
    }
    throw UnknownLabelError("unknown orbit label \"" + label + "\" for format " + format.str() + " (known: " + known +
                            ")");
}

std::size_t tangent_rank(const Hypermatrix& h)
{
    const Shape& s = h.shape();
    const unsigned n1 = s.dim(0), n2 = s.dim(1), n3 = s.dim(2);
    std::vector<std::vector<Rational>> rows;
    for (unsigned slot = 0; slot < 3; ++slot) {
        const unsigned n = s.dim(slot);
        for (unsigned a = 0; a < n; ++a) {
            for (unsigned b = 0; b < n; ++b) {
                // (E_ab in this slot) h: moves index b to index a.
                std::vector<Rational> v(s.size());
                for (unsigned i = 0; i < n1; ++i) {
                    for (unsigned j = 0; j < n2; ++j) {
                        for (unsigned k = 0; k < n3; ++k) {
                            std::array<unsigned, 3> idx{i, j, k};
                            if (idx[slot] != b) {
                                continue;
                            }
                            std::array<unsigned, 3> dst = idx;
                            dst[slot] = a;
                            v[h.flat_index(dst[0], dst[1], dst[2])] = h.at(i, j, k);
                        }
                    }
                }
                rows.push_back(std::move(v));
            }
        }
    }
    return exact_rank(rows);
}

int tangent_dimension(const Hypermatrix& h)
{
    if (h.is_zero()) {
        throw ZeroStateError("the zero tensor has no orbit");
    }
    return static_cast<int>(tangent_rank(h)) - 1;
}

std::vector<TangentReport> verify_registry(const Shape& format)
{
    std::vector<TangentReport> out;
    for (const auto& rec : orbit_registry(format)) {
        std::size_t rank = tangent_rank(rec.representative);
        int dim = static_cast<int>(rank) - 1;
        out.push_back({rec.label, rank, dim, rec.projective_dimension, dim == rec.projective_dimension});
    }
    return out;
}

nlohmann::json to_json(const TangentReport& r)
{
    return {{"label", r.label},
            {"affine_rank", r.affine_rank},
            {"projective_dimension", r.projective_dimension},
            {"expected", r.expected},
            {"match", r.match}};
}

namespace {

std::vector<std::string> closure(const Shape& format, const std::string& label, bool upward)
{
    const auto& reg = orbit_registry(format);
    find_orbit(format, label);
    std::set<std::string> seen;
    std::vector<std::string> frontier{label};
    while (!frontier.empty()) {
        std::string cur = frontier.back();
        frontier.pop_back();
        for (const auto& rec : reg) {
            bool edge = upward ? std::find(rec.covers.begin(), rec.covers.end(), cur) != rec.covers.end()
                               : rec.label == cur;
            if (!edge) {
                continue;
            }
            if (upward) {
                if (seen.insert(rec.label).second) {
                    frontier.push_back(rec.label);
                }
            } else {
                for (const auto& c : rec.covers) {
                    if (seen.insert(c).second) {
                        frontier.push_back(c);
                    }
                }
            }
        }
    }
    std::vector<std::pair<int, std::size_t>> keyed;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        if (seen.count(reg[i].label)) {
            // Ascending dimension; ties keep bottom-up registry order.
            keyed.emplace_back(reg[i].projective_dimension, reg.size() - i);
        }
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> out;
    for (const auto& [dim, pos] : keyed) {
        out.push_back(reg[reg.size() - pos].label);
    }
    return out;
}

}  // namespace

std::vector<std::string> hasse_ancestors(const Shape& format, const std::string& label)
{
    return closure(format, label, true);
}

std::vector<std::string> hasse_descendants(const Shape& format, const std::string& label)
{
    return closure(format, label, false);
}

std::string hasse_dot(const Shape& format)
{
    const auto& reg = orbit_registry(format);
    std::string s = "digraph \"orbits_" + format.str() + "\" {\n  rankdir=TB;\n  node [shape=box];\n";
    for (const auto& rec : reg) {
        s += "  \"" + rec.label + "\" [label=\"" + rec.label + "\\n" + rec.variety + "\\ndim " +
             std::to_string(rec.projective_dimension) + "\"];\n";
    }
    for (const auto& rec : reg) {
        for (const auto& c : rec.covers) {
            s += "  \"" + rec.label + "\" -> \"" + c + "\";\n";
        }
    }
    s += "}\n";
    return s;
}

}  // namespace slocc
