#include "commands.hpp"

#include "slocc/classify222.hpp"
#include "slocc/classify223.hpp"
#include "slocc/classify233.hpp"
#include "slocc/conformance.hpp"
#include "slocc/errors.hpp"
#include "slocc/hilbert.hpp"
#include "slocc/orbitgeom.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace slocc::cli {

namespace {

const Shape k222(2, 2, 2);
const Shape k223(2, 2, 3);
const Shape k233(2, 3, 3);

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (const auto& x : v) {
        s += (s.empty() ? "" : sep) + x;
    }
    return s;
}

Classification classify_any(const Hypermatrix& h)
{
    if (h.shape() == k222) {
        return classify222(h);
    }
    if (h.shape() == k223) {
        return classify223(h);
    }
    if (h.shape() == k233) {
        return classify233(h);
    }
    throw ShapeError("no classifier for " + h.shape().str() + "; classifiable formats are " + kClassifiableShapes);
}

std::string normalise_label(std::string label)
{
    return label.rfind("O_", 0) == 0 ? label : "O_" + label;
}

// Stable per-task seed, independent of thread scheduling.
std::uint64_t task_seed(std::uint64_t seed, std::uint64_t task)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (task + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

nlohmann::json check(const std::string& name, bool pass, nlohmann::json detail = nullptr)
{
    nlohmann::json j = {{"check", name}, {"pass", pass}};
    if (!detail.is_null()) {
        j["detail"] = std::move(detail);
    }
    return j;
}

std::string row_of(const std::vector<std::pair<std::string, std::string>>& table, const std::string& label)
{
    for (const auto& [l, bits] : table) {
        if (l == label) {
            return bits;
        }
    }
    return "";
}

void tables_suite(nlohmann::json& checks)
{
    for (const auto& rec : orbit_registry(k222)) {
        Classification c = classify222(rec.representative);
        const std::string want = row_of(v_table222(), rec.label);
        checks.push_back(check("2x2x2 v_A " + rec.label, c.orbit->label == rec.label && c.nullity.bitstring() == want,
                               {{"got", c.nullity.bitstring()}, {"expected", want}, {"label", c.orbit->label}}));
    }
    for (const auto& rec : orbit_registry(k223)) {
        Cov223 cov = covariants223(rec.representative);
        const std::string v = v_vector223(cov).bitstring();
        const std::string w = w_vector223(cov).bitstring();
        Classification c = classify223(rec.representative);
        checks.push_back(check("2x2x3 v_A " + rec.label, v == row_of(v_table223(), rec.label),
                               {{"got", v}, {"expected", row_of(v_table223(), rec.label)}}));
        checks.push_back(check("2x2x3 w_A " + rec.label, c.orbit->label == rec.label && w == row_of(w_table223(), rec.label),
                               {{"got", w}, {"expected", row_of(w_table223(), rec.label)}, {"label", c.orbit->label}}));
    }
    std::map<std::string, std::map<std::string, bool>> bits233;
    for (const auto& rec : orbit_registry(k233)) {
        Cov233 cov = covariants233(rec.representative);
        const std::string w = w_vector233(cov).bitstring();
        Classification c = classify233(rec.representative);
        checks.push_back(check("2x3x3 w_A " + rec.label, c.orbit->label == rec.label && w == row_of(w_table233(), rec.label),
                               {{"got", w}, {"expected", row_of(w_table233(), rec.label)}, {"label", c.orbit->label}}));
        for (const auto& [name, value] : named_values233(cov)) {
            bits233[rec.label][name] = !value.is_zero();
        }
    }
    for (const auto* table : {&w_table223(), &w_table233()}) {
        std::set<std::string> rows;
        for (const auto& [l, bits] : *table) {
            rows.insert(bits);
        }
        checks.push_back(check(std::to_string(table->size()) + "-row w_A table pairwise distinct",
                               rows.size() == table->size()));
    }
    for (const auto& sub : subtables233()) {
        bool ok = true;
        nlohmann::json got = nlohmann::json::object();
        for (const auto& [label, want] : sub.expected) {
            std::string bits;
            for (const auto& col : sub.columns) {
                bits.push_back(bits233.at(label).at(col) ? '1' : '0');
            }
            got[label] = bits;
            ok = ok && bits == want;
        }
        nlohmann::json detail = {{"rows", got}};
        if (!sub.note.empty()) {
            detail["erratum"] = sub.note;
        }
        checks.push_back(check("2x3x3 sub-table " + sub.name, ok, detail));
    }
    nlohmann::json report = conformance_report();
    checks.push_back(check("conformance: no irreproducible cells", report["irreproducible_cells"].empty(),
                           report["irreproducible_cells"]));
}

void dims_suite(nlohmann::json& checks, const VerifyOptions& o)
{
    std::vector<Shape> shapes = {k222, k223, k233};
    if (o.n) {
        shapes.emplace_back(2, 2, *o.n + 1);
    } else {
        for (unsigned n : {3u, 4u, 5u}) {
            shapes.emplace_back(2, 2, n + 1);
        }
    }
    for (const auto& s : shapes) {
        for (const auto& r : verify_registry(s)) {
            checks.push_back(check(s.str() + " " + r.label, r.match, to_json(r)));
        }
    }
}

nlohmann::json syzygy_document()
{
    const auto& l = syzygy222_constants();
    Polynomial residual = syzygy222_residual_generic();
    CubicSyzygyReport cubic = cubic_syzygy_search();
    auto degrees = [](const std::array<std::pair<unsigned, unsigned>, 3>& d) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [a, x] : d) {
            j.push_back({a, x});
        }
        return j;
    };
    return {{"2x2x2",
             {{"relation", "lambda1 C^2 + lambda2 B_x B_y B_z + lambda3 Δ A^2"},
              {"lambda", {l[0].str(), l[1].str(), l[2].str()}},
              {"residual", residual.str()},
              {"residual_is_zero", residual.is_zero()}}},
            {"binary_cubic",
             {{"relation", "lambda1 b^3 + lambda2 c^2 + lambda3 d a^2"},
              {"degrees", degrees(cubic.degrees)},
              {"printed_term_degrees", degrees(cubic.printed_degrees)},
              {"solution_dimension", cubic.solution_dimension},
              {"lambda", {cubic.lambda[0].str(), cubic.lambda[1].str(), cubic.lambda[2].str()}},
              {"residual", cubic.residual.str()},
              {"residual_is_zero", cubic.solution_dimension == 1 && cubic.residual.is_zero()}}}};
}

void syzygy_suite(nlohmann::json& checks)
{
    nlohmann::json d = syzygy_document();
    checks.push_back(check("2x2x2 syzygy residual", d["2x2x2"]["residual_is_zero"].get<bool>(), d["2x2x2"]));
    checks.push_back(check("binary cubic syzygy, one-dimensional and verified",
                           d["binary_cubic"]["residual_is_zero"].get<bool>(), d["binary_cubic"]));
}

void fuzz_suite(nlohmann::json& checks, const VerifyOptions& o)
{
    struct Task {
        const OrbitRecord* rec;
        std::uint64_t seed;
        unsigned failures = 0;
        std::string first_failure;
    };
    std::vector<Task> tasks;
    for (const auto* s : {&k222, &k223, &k233}) {
        for (const auto& rec : orbit_registry(*s)) {
            tasks.push_back(Task{&rec, task_seed(o.seed, tasks.size())});
        }
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            Task& t = tasks[i];
            Rng rng(t.seed);
            for (unsigned k = 0; k < o.trials; ++k) {
                Hypermatrix img = act(random_slocc(t.rec->format, rng, 2), t.rec->representative);
                const std::string got = classify_any(img).orbit->label;
                if (got != t.rec->label && t.failures++ == 0) {
                    t.first_failure = img.ket_string() + " -> " + got;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < o.threads; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& t : tasks) {
        nlohmann::json detail = {{"trials", o.trials}, {"failures", t.failures}};
        if (t.failures > 0) {
            detail["first_failure"] = t.first_failure;
        }
        checks.push_back(check(t.rec->format.str() + " " + t.rec->label, t.failures == 0, detail));
    }
}

void hilbert_suite(nlohmann::json& checks)
{
    for (auto [s, bound] : {std::pair{k222, 4u}, std::pair{k223, 3u}, std::pair{k233, 2u}}) {
        HilbertReport r = verify_hilbert(s, bound);
        for (const auto& row : r.rows) {
            std::ostringstream name;
            name << s.str() << " t^" << row.degree.d0 << " u^(" << row.degree.d[0] << "," << row.degree.d[1] << ","
                 << row.degree.d[2] << ")";
            checks.push_back(check(name.str(), row.match,
                                   {{"series", row.series.get_str()}, {"kernel", row.kernel}}));
        }
    }
}

template <typename T>
bool is_a(const std::exception& e)
{
    return dynamic_cast<const T*>(&e) != nullptr;
}

// ---- input ----------------------------------------------------------------

std::string read_all(std::istream& in)
{
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Hypermatrix parse_state(const std::string& text, const std::string& shape)
{
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) {
        throw ParseError("empty input");
    }
    if (text[start] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return state_from_json(doc);
    }
    std::optional<Shape> s;
    if (!shape.empty()) {
        s = Shape::parse(shape);
    }
    return parse_ket(text, s);
}

struct StateInput {
    std::string ket;
    std::string file;
    std::string shape;

    void attach(CLI::App* app)
    {
        app->add_option("file", file, "State document or ket file ('-' or absent: standard input)");
        app->add_option("--ket", ket, "State in ket notation, e.g. \"|000>+|111>\"");
        app->add_option("--shape", shape, "Shape for --ket, e.g. 2x2x3 (default: smallest supported)");
    }

    Hypermatrix load(std::istream& in) const
    {
        if (!ket.empty()) {
            return parse_state(ket, shape);
        }
        if (file.empty() || file == "-") {
            return parse_state(read_all(in), shape);
        }
        std::ifstream f(file);
        if (!f) {
            throw ParseError("cannot read " + file);
        }
        return parse_state(read_all(f), shape);
    }
};

std::string bits_with_names(const NullityVector& v)
{
    return v.str() + "  (" + join(v.names(), " ") + ")";
}

void print_json(std::ostream& out, const nlohmann::json& j)
{
    out << j.dump(2) << "\n";
}

void print_checks(std::ostream& out, const nlohmann::json& doc)
{
    for (const auto& c : doc["checks"]) {
        out << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["check"].get<std::string>() << "\n";
    }
    out << (doc["pass"].get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
}

}  // namespace

nlohmann::json classify_document(const Hypermatrix& h)
{
    Classification c = classify_any(h);
    const OrbitRecord& o = *c.orbit;
    nlohmann::json j = {{"format", h.shape().str()},
                        {"state", h.ket_string()},
                        {"orbit", o.label},
                        {"variety", o.variety},
                        {"dim", o.projective_dimension},
                        {"nullity", c.nullity.to_json()},
                        {"ancestors", hasse_ancestors(h.shape(), o.label)}};
    if (h.shape() == k223) {
        j["v_A"] = v_vector223(h).to_json();
    }
    if (!o.duality.empty()) {
        j["duality"] = o.duality;
    }
    return j;
}

nlohmann::json covariants_document(const Hypermatrix& h)
{
    std::vector<std::pair<std::string, Polynomial>> values;
    if (h.shape() == k222) {
        Cov222 c = covariants222(h);
        values = {{"A", c.A}, {"B_x", c.B_x}, {"B_y", c.B_y}, {"B_z", c.B_z}, {"C", c.C}, {"Δ", Polynomial(c.Delta)}};
    } else if (h.shape() == k223) {
        Cov223 c = covariants223(h);
        values = named_values223(c);
        values.insert(values.begin(), {"A", c.A});
    } else if (h.shape() == k233) {
        Cov233 c = covariants233(h);
        values = named_values233(c);
        values.insert(values.begin(), {"A", c.A});
        BinaryCubicSystem s = binary_cubic_system(h);
        for (int i = 0; i < 4; ++i) {
            values.emplace_back("a" + std::to_string(i), Polynomial(s.a[i]));
        }
    } else {
        classify_any(h);  // throws the unsupported-shape error
    }
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [name, p] : values) {
        list.push_back({{"name", name}, {"value", p.str()}, {"zero", p.is_zero()}});
    }
    return {{"format", h.shape().str()}, {"state", h.ket_string()}, {"covariants", list}};
}

nlohmann::json verify_suite(const std::string& suite, const VerifyOptions& options)
{
    nlohmann::json checks = nlohmann::json::array();
    if (suite == "tables") {
        tables_suite(checks);
    } else if (suite == "dims") {
        dims_suite(checks, options);
    } else if (suite == "syzygy") {
        syzygy_suite(checks);
    } else if (suite == "slocc-fuzz") {
        fuzz_suite(checks, options);
    } else if (suite == "hilbert") {
        hilbert_suite(checks);
    } else {
        throw std::invalid_argument("unknown verify suite " + suite);
    }
    bool pass = true;
    for (const auto& c : checks) {
        pass = pass && c["pass"].get<bool>();
    }
    return {{"suite", suite}, {"checks", checks}, {"pass", pass}};
}

int report_exception(const std::exception& e, std::ostream& err)
{
    int code = kInternal;
    if (is_a<ZeroStateError>(e)) {
        code = kZeroState;
    } else if (is_a<ShapeError>(e) || is_a<UnknownLabelError>(e)) {
        code = kUnsupported;
    } else if (is_a<ParseError>(e) || is_a<DimensionError>(e)) {
        code = kParseError;
    } else if (is_a<ResourceError>(e)) {
        code = kUsage;
    }
    err << (code == kInternal ? "internal error: " : "error: ") << e.what() << "\n";
    return code;
}

unsigned thread_count_from_env()
{
    const char* v = std::getenv("SLOCC_THREADS");
    if (v == nullptr) {
        return 1;
    }
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    return (end == v || n < 1) ? 1u : static_cast<unsigned>(std::min(n, 256L));
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact SLOCC orbit classification for 2x2x2, 2x2x3 and 2x3x3 states", "slocc"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable text instead of JSON");

    StateInput classify_in, cov_in;
    auto* classify = app.add_subcommand("classify", "Identify the orbit of a state");
    classify_in.attach(classify);
    auto* covariants = app.add_subcommand("covariants", "Print every covariant and concomitant of a state");
    cov_in.attach(covariants);

    std::string nf_shape, nf_label;
    auto* normal_form = app.add_subcommand("normal-form", "Print the representative of an orbit");
    normal_form->add_option("--shape", nf_shape, "Format, e.g. 2x2x3")->required();
    normal_form->add_option("--label", nf_label, "Orbit label, e.g. O_V or V")->required();

    std::string dims_shape;
    unsigned dims_n = 0;
    auto* dims = app.add_subcommand("dims", "Tangent-space dimension of every registry orbit");
    auto* dims_shape_opt = dims->add_option("--shape", dims_shape, "Format");
    dims->add_option("--n", dims_n, "Use the 2x2x(n+1) family, n >= 3")->excludes(dims_shape_opt);

    std::string hasse_shape;
    unsigned hasse_n = 0;
    auto* hasse = app.add_subcommand("hasse", "Inclusion poset as a DOT graph");
    auto* hasse_shape_opt = hasse->add_option("--shape", hasse_shape, "Format");
    hasse->add_option("--n", hasse_n, "Use the 2x2x(n+1) family, n >= 3")->excludes(hasse_shape_opt);

    auto* syzygy = app.add_subcommand("syzygy-check", "Solve and verify the 2x2x2 and binary cubic syzygies");

    std::string hil_shape = "2x2x2";
    unsigned hil_d0 = 0;
    std::string hil_series = "printed";
    auto* hilbert = app.add_subcommand("hilbert", "Compare closed-form series coefficients with kernel dimensions");
    hilbert->add_option("--shape", hil_shape, "Format")->capture_default_str();
    hilbert->add_option("--d0", hil_d0, "Largest coefficient degree (default 4, 3, 2 for 2x2x2, 2x2x3, 2x3x3)");
    hilbert->add_option("--series", hil_series, "printed, or corrected (2x2x3 only)")
        ->check(CLI::IsMember({"printed", "corrected"}))
        ->capture_default_str();

    std::string suite;
    VerifyOptions vopt;
    unsigned verify_n = 0;
    std::string report_path;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "tables, dims, syzygy, slocc-fuzz or hilbert")
        ->required()
        ->check(CLI::IsMember({"tables", "dims", "syzygy", "slocc-fuzz", "hilbert"}));
    verify->add_option("--seed", vopt.seed, "Seed for slocc-fuzz")->capture_default_str();
    verify->add_option("--trials", vopt.trials, "Images per representative for slocc-fuzz")->capture_default_str();
    verify->add_option("--n", verify_n, "Single 2x2x(n+1) member for dims (default: n = 3, 4, 5)");
    verify->add_option("--report", report_path, "Also write the JSON report to this file");

    auto* conformance = app.add_subcommand("conformance", "Candidate transvection plans and their nullity columns");

    for (auto* sub : app.get_subcommands({})) {
        sub->add_flag("--pretty", pretty, "Human-readable text instead of JSON");
    }

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) {
            args.emplace_back(argv[i]);
        }
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (classify->parsed()) {
            const Hypermatrix h = classify_in.load(in);
            nlohmann::json j = classify_document(h);
            if (pretty) {
                Classification c = classify_any(h);
                out << "orbit      " << j["orbit"].get<std::string>() << "\n"
                    << "format     " << j["format"].get<std::string>() << "\n"
                    << "variety    " << j["variety"].get<std::string>() << "\n"
                    << "dimension  " << j["dim"].get<int>() << "\n"
                    << "nullity    " << bits_with_names(c.nullity) << "\n"
                    << "ancestors  " << join(j["ancestors"].get<std::vector<std::string>>(), " ") << "\n";
            } else {
                print_json(out, j);
            }
            return kOk;
        }
        if (covariants->parsed()) {
            nlohmann::json j = covariants_document(cov_in.load(in));
            if (pretty) {
                for (const auto& c : j["covariants"]) {
                    out << c["name"].get<std::string>() << " = " << c["value"].get<std::string>() << "\n";
                }
            } else {
                print_json(out, j);
            }
            return kOk;
        }
        if (normal_form->parsed()) {
            const Shape s = Shape::parse(nf_shape);
            const OrbitRecord& rec = find_orbit(s, normalise_label(nf_label));
            if (pretty) {
                out << rec.representative.ket_string() << "\n";
            } else {
                print_json(out, state_to_json(rec.representative, rec.label));
            }
            return kOk;
        }
        if (dims->parsed() || hasse->parsed()) {
            const std::string& text = dims->parsed() ? dims_shape : hasse_shape;
            const unsigned n = dims->parsed() ? dims_n : hasse_n;
            if (text.empty() && n == 0) {
                err << "error: give --shape or --n\n";
                return kUsage;
            }
            if (n != 0 && n < 3) {
                err << "error: --n must be at least 3 (use --shape 2x2x2 or 2x2x3 below that)\n";
                return kUsage;
            }
            const Shape s = n != 0 ? Shape(2, 2, n + 1) : Shape::parse(text);
            if (hasse->parsed()) {
                out << hasse_dot(s);
                return kOk;
            }
            auto reports = verify_registry(s);
            bool ok = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) {
                ok = ok && r.match;
                arr.push_back(to_json(r));
            }
            if (pretty) {
                for (const auto& r : reports) {
                    out << std::left << std::setw(8) << r.label << " rank " << std::setw(3) << r.affine_rank << " dim "
                        << std::setw(3) << r.projective_dimension << " expected " << std::setw(3) << r.expected
                        << (r.match ? " ok" : " MISMATCH") << "\n";
                }
            } else {
                print_json(out, arr);
            }
            return ok ? kOk : kVerifyFailed;
        }
        if (syzygy->parsed()) {
            nlohmann::json j = syzygy_document();
            print_json(out, j);
            return j["2x2x2"]["residual_is_zero"].get<bool>() && j["binary_cubic"]["residual_is_zero"].get<bool>()
                       ? kOk
                       : kVerifyFailed;
        }
        if (hilbert->parsed()) {
            const Shape s = Shape::parse(hil_shape);
            const SeriesSpec* spec = &printed_series(s);
            if (hil_series == "corrected") {
                if (!(s == k223)) {
                    err << "error: --series corrected exists only for 2x2x3\n";
                    return kUsage;
                }
                spec = &series223_corrected();
            }
            if (hil_d0 > default_d0_bound(s)) {
                throw ResourceError("--d0 " + std::to_string(hil_d0) + " exceeds the kernel bound " +
                                    std::to_string(default_d0_bound(s)) + " for " + s.str());
            }
            // Default degree: the one the printed series is known to satisfy for every format.
            const unsigned d0 = hil_d0 != 0 ? hil_d0 : s == k222 ? 4 : s == k223 ? 3 : 2;
            HilbertReport r = verify_hilbert(s, d0, spec);
            if (pretty) {
                out << r.series << ", d0 <= " << r.d0_bound << "\n";
                for (const auto& row : r.rows) {
                    out << "t^" << row.degree.d0 << " u^(" << row.degree.d[0] << "," << row.degree.d[1] << ","
                        << row.degree.d[2] << ")  series " << std::setw(3) << row.series.get_str() << "  kernel "
                        << std::setw(3) << row.kernel << (row.match ? "" : "  MISMATCH") << "\n";
                }
            } else {
                print_json(out, to_json(r));
            }
            return r.all_match ? kOk : kVerifyFailed;
        }
        if (verify->parsed()) {
            if (verify_n != 0) {
                if (verify_n < 3) {
                    err << "error: --n must be at least 3\n";
                    return kUsage;
                }
                vopt.n = verify_n;
            }
            vopt.threads = thread_count_from_env();
            nlohmann::json doc = verify_suite(suite, vopt);
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                f << doc.dump(2) << "\n";
            }
            if (pretty) {
                print_checks(out, doc);
            } else {
                print_json(out, doc);
            }
            return doc["pass"].get<bool>() ? kOk : kVerifyFailed;
        }
        if (conformance->parsed()) {
            print_json(out, conformance_report());
            return kOk;
        }
    } catch (const std::exception& e) {
        return report_exception(e, err);
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace slocc::cli
