#pragma once

// Report documents emitted by the command-line tool, with deterministic JSON
// and plain-text renderings.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spcppt/canonical.hpp"
#include "spcppt/classify.hpp"

namespace spcppt {

enum class AssertionStatus {
    Pass,
    Fail,     // artifact bug or violated precondition
    Finding,  // a claim the code checks numerically turned out false
};

std::string_view to_string(AssertionStatus s) noexcept;

struct Assertion {
    std::string name;
    std::string reference;  // which claim the check exercises
    AssertionStatus status = AssertionStatus::Pass;
    std::string detail;
};

Assertion check(std::string name, std::string reference, bool ok, std::string detail = {});

struct ReportDocument {
    std::string command;
    std::string input_digest;  // "sha256:<hex>"
    double tolerance = kDefaultTol;
    nlohmann::json params = nlohmann::json::object();
    std::optional<ClassificationReport> classification;
    std::optional<SchmidtDecomposition> schmidt;
    std::optional<CanonicalFormSPC2> canonical;
    std::optional<ReductionChain> reduction;
    nlohmann::json results = nlohmann::json::object();  // target-specific numbers
    std::vector<Assertion> assertions;
    std::optional<double> elapsed_ms;

    /// 0 when every assertion passed, 1 otherwise.
    int exit_code() const;
};

nlohmann::json to_json(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);
std::string render_text(const ReportDocument& doc);

/// Exit code for an error raised while building a report: 2 parse errors,
/// 3 violated preconditions, 4 algorithm-specific failures.
int exit_code_for(ErrorCode code) noexcept;

std::string sha256_digest(std::string_view bytes);

nlohmann::json matrix_json(const ComplexMatrix& m);
nlohmann::json classification_json(const ClassificationReport& r);

}  // namespace spcppt
