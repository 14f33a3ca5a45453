#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcg/spectral.hpp"

namespace tcg {

struct VerifyCaps {
    int max_exact_clique = 64;
    int max_exact_kappa = 128;
    int max_matrix = kMaxMatrixOrder;
    double eigen_tol = 1e-12;       // Jacobi convergence factor
    double cluster_tol = 1e-6;      // floating multiplicity clustering
    std::uint64_t seed = kDefaultSeed;
};

enum class CheckStatus { pass, fail, not_applicable };
enum class Tightness { tight, slack, na };

std::string to_string(CheckStatus s);
std::string to_string(Tightness t);

struct CheckResult {
    std::string name;
    std::string claim;
    nlohmann::ordered_json computed;
    nlohmann::ordered_json bound_or_expected;
    CheckStatus status = CheckStatus::not_applicable;
    Tightness tightness = Tightness::na;
};

struct TheoremReport {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<double> spectrum; // empty when n exceeds the matrix cap

    bool all_passed() const;
    int failures() const;
    const CheckResult* find(const std::string& name) const;
    nlohmann::ordered_json to_json() const;
};

/// Every structural and spectral claim applicable at this n, each checked
/// against independently computed values. Caps never abort the report; a
/// skipped check is reported as not-applicable.
TheoremReport check_all(int n, const VerifyCaps& caps = {});

/// Reports for each n in [from, to], evaluated independently.
std::vector<TheoremReport> range_verify(int from, int to, const VerifyCaps& caps = {});

/// Reference spectra (two-decimal values) for 3 <= n <= 15, used as the
/// regression oracle for the eigensolver.
const std::vector<std::pair<int, std::vector<double>>>& expected_spectra();

struct SpectrumTableRow {
    int n = 0;
    double max_deviation = 0.0;
    bool pass = false;
    int worst_index = -1;
    double computed = 0.0, expected = 0.0; // worst entry when failing
};

struct SpectrumTableResult {
    std::vector<SpectrumTableRow> rows;
    bool all_pass = false;
    nlohmann::ordered_json to_json() const;
};

/// Compares computed spectra against expected_spectra() as multisets, with a
/// per-entry tolerance.
SpectrumTableResult verify_reference_spectra(double tol = 0.01, const VerifyCaps& caps = {});

} // namespace tcg
