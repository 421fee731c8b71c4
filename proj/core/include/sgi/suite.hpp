#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgi/checks.hpp"

namespace sgi {

struct SuiteOptions {
    bool connected_only = true;
    int union_samples = 32;   // random disjoint unions run as an additivity guard
    int lemma_stride = 50;    // deletion-lemma spot check every N-th signature; 0 disables
    std::uint64_t seed = 20240901;
    int threads = 1;          // worker count; <= 1 runs inline
    long max_graphs = 0;      // 0 = unlimited; else stop after this many signatures (truncated)
    bool collect_equality_examples = false;
};

/// Counts for one bound's equality census, crossed against the extremal
/// recognizer. Anything in the off-diagonal cells is also a violation.
struct EqualityCensusRow {
    long equal_and_extremal = 0;
    long equal_not_extremal = 0;
    long extremal_not_equal = 0;
};

struct SuiteLevel {
    int n = 0;
    long skeletons = 0;
    long signatures = 0;
    long violations = 0;
};

struct SuiteSummary {
    int max_n = 0;
    bool connected_only = true;
    bool truncated = false;
    long skeletons_checked = 0;
    long signatures_checked = 0;
    long unions_checked = 0;
    long lemma_checks = 0;
    std::vector<SuiteLevel> levels;
    EqualityCensusRow census_positive;  // i+ = (n-p)/2 - theta vs extremal verdict
    EqualityCensusRow census_negative;
    EqualityCensusRow census_nullity;   // eta = p + 2*theta vs extremal verdict
    long strict_equality_positive = 0;  // equality in the strict bound, reported as data
    long strict_equality_negative = 0;
    std::vector<TheoremReport> violations;        // deterministic order
    std::vector<TheoremReport> equality_examples; // filled when requested in options
    std::vector<std::string> lemma_failures;

    bool pass() const { return violations.empty() && lemma_failures.empty(); }
};

/// Runs every bound and the full equality reconciliation over all underlying
/// graphs with 2..max_n vertices (connected classes by default) and all their
/// switching-class signature representatives, plus seeded disjoint-union
/// samples and strided deletion-lemma checks. 2 <= max_n <= kEnumerationCap.
/// Deterministic for fixed options, including the thread count.
SuiteSummary run_suite(int max_n, const SuiteOptions& options = {});

std::string human_summary(const SuiteSummary& s);
std::string machine_summary(const SuiteSummary& s);  // line-oriented key=value records

}  // namespace sgi
