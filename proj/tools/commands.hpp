#pragma once

#include "slocc/forms.hpp"

#include <json.hpp>

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>

namespace slocc::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kZeroState = 2,
    kUnsupported = 3,  // unsupported shape or unknown orbit label
    kParseError = 4,
    kUsage = 5,        // bad flags, or a request above a resource bound
    kInternal = 6,     // a nullity vector matched no orbit: a defect
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    unsigned trials = 100;
    std::optional<unsigned> n;  // 2x2x(n+1) member for `dims`; all of 3, 4, 5 when absent
    unsigned threads = 1;
};

// Dispatches on the shape. Throws ShapeError for shapes without classifiers.
nlohmann::json classify_document(const Hypermatrix& h);
nlohmann::json covariants_document(const Hypermatrix& h);

// {"suite", "checks": [{"check", "pass", ...}], "pass"}.
nlohmann::json verify_suite(const std::string& suite, const VerifyOptions& options);

// Writes the diagnostic for an exception escaping a subcommand and returns its exit code.
int report_exception(const std::exception& e, std::ostream& err);

// SLOCC_THREADS, clamped to at least 1.
unsigned thread_count_from_env();

// Whole command line; never throws. Returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slocc::cli
