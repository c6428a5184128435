#pragma once

// Report builders behind the command-line subcommands. Each returns a
// ReportDocument or throws spcppt::Error; exit_code_for maps the error code.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spcppt/report.hpp"
#include "spcppt/sweep.hpp"

namespace spcppt {

/// Classification, tensor rank and Hermitian Schmidt terms for a matrix file.
/// Throws ParseError, or NotHermitian for non-Hermitian input.
ReportDocument analyze_report(std::string_view file_text, double tol = kDefaultTol);

enum class CanonicalMode { Canonical, Reduce };

/// Canonical mode runs spc_canonical_2x2; reduce mode runs rank3_reduce.
ReportDocument canonical_report(std::string_view file_text, CanonicalMode mode, double tol = kDefaultTol,
                                double epsilon = 1e-3);

struct ReproduceParams {
    std::string target;
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    std::optional<int> samples;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> m;
    std::optional<double> alpha;
    unsigned threads = default_threads();
};

const std::vector<std::string>& reproduce_targets();

/// Throws UnknownTarget or BadParams.
ReportDocument reproduce(const ReproduceParams& params);

}  // namespace spcppt
