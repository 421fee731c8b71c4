#include "sgi/suite.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sgi/enumerate.hpp"
#include "sgi/random.hpp"
#include "sgi/sg_format.hpp"

namespace sgi {

namespace {

struct WorkItem {
    int level_index = 0;
    SignedGraph skeleton;
    int theta = 0;
    long signature_offset = 0;  // global index of this skeleton's first signature
};

struct LocalTally {
    long skeletons = 0;
    long signatures = 0;
    long unjudged = 0;
    long lemma_checks = 0;
    std::vector<SuiteLevel> levels;
    EqualityCensusRow census_positive, census_negative, census_nullity;
    long strict_equality_positive = 0, strict_equality_negative = 0;
    std::vector<TheoremReport> violations;
    std::vector<TheoremReport> equality_examples;
    std::vector<std::string> lemma_failures;
};

void tally_census(EqualityCensusRow& row, bool equal, bool extremal) {
    if (equal && extremal)
        ++row.equal_and_extremal;
    else if (equal)
        ++row.equal_not_extremal;
    else if (extremal)
        ++row.extremal_not_equal;
}

void absorb_report(LocalTally& local, SuiteLevel* level, const TheoremReport& r, bool collect_examples) {
    ++local.signatures;
    if (level) ++level->signatures;
    if (!r.judged) {
        ++local.unjudged;
        return;
    }
    if (!r.all_ok()) {
        local.violations.push_back(r);
        if (level) ++level->violations;
    }
    tally_census(local.census_positive, r.equality_positive(), r.extremal_verdict);
    tally_census(local.census_negative, r.equality_negative(), r.extremal_verdict);
    tally_census(local.census_nullity, r.equality_nullity(), r.extremal_verdict);
    if (r.strict_equality_positive()) ++local.strict_equality_positive;
    if (r.strict_equality_negative()) ++local.strict_equality_negative;
    if (collect_examples && (r.equality_positive() || r.equality_negative() || r.equality_nullity()))
        local.equality_examples.push_back(r);
}

void sort_reports(std::vector<TheoremReport>& reports) {
    std::sort(reports.begin(), reports.end(), [](const TheoremReport& a, const TheoremReport& b) {
        if (a.n != b.n) return a.n < b.n;
        return to_sg_record(a.graph) < to_sg_record(b.graph);
    });
}

}  // namespace

SuiteSummary run_suite(int max_n, const SuiteOptions& options) {
    if (max_n < 2 || max_n > kEnumerationCap)
        throw std::invalid_argument("run_suite: max_n must lie in 2.." + std::to_string(kEnumerationCap));

    SuiteSummary summary;
    summary.max_n = max_n;
    summary.connected_only = options.connected_only;
    summary.levels.resize(max_n - 1);
    for (int n = 2; n <= max_n; ++n) summary.levels[n - 2].n = n;

    std::vector<WorkItem> items;
    long planned = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (auto& skeleton : enumerate_underlying_graphs(n, options.connected_only)) {
            WorkItem item;
            item.level_index = n - 2;
            item.theta = cyclomatic_number(skeleton);
            item.signature_offset = planned;
            planned += long{1} << item.theta;
            item.skeleton = std::move(skeleton);
            items.push_back(std::move(item));
        }
    }
    const long cap = options.max_graphs > 0 ? options.max_graphs : planned;
    summary.truncated = planned > cap;

    const int workers = std::max(1, options.threads);
    std::vector<LocalTally> locals(workers);

    auto run_worker = [&](int w) {
        LocalTally& local = locals[w];
        local.levels.resize(summary.levels.size());
        for (std::size_t idx = w; idx < items.size(); idx += workers) {
            const WorkItem& item = items[idx];
            if (item.signature_offset >= cap) continue;
            const long budget = cap - item.signature_offset;
            ++local.skeletons;
            SuiteLevel& level = local.levels[item.level_index];
            ++level.skeletons;
            long mask = 0;
            for_each_signature_representative(item.skeleton, [&](const SignedGraph& s) {
                absorb_report(local, &level, check_bounds(s), options.collect_equality_examples);
                if (options.lemma_stride > 0 &&
                    (item.signature_offset + mask) % options.lemma_stride == 0) {
                    ++local.lemma_checks;
                    auto lemmas = check_deletion_lemmas(s);
                    if (!lemmas.pass)
                        local.lemma_failures.insert(local.lemma_failures.end(), lemmas.failures.begin(),
                                                    lemmas.failures.end());
                }
                return ++mask < budget;
            });
        }
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& t : pool) t.join();
    }

    for (const auto& local : locals) {
        summary.skeletons_checked += local.skeletons;
        summary.signatures_checked += local.signatures;
        summary.lemma_checks += local.lemma_checks;
        for (std::size_t l = 0; l < local.levels.size(); ++l) {
            summary.levels[l].skeletons += local.levels[l].skeletons;
            summary.levels[l].signatures += local.levels[l].signatures;
            summary.levels[l].violations += local.levels[l].violations;
        }
        auto add_row = [](EqualityCensusRow& into, const EqualityCensusRow& from) {
            into.equal_and_extremal += from.equal_and_extremal;
            into.equal_not_extremal += from.equal_not_extremal;
            into.extremal_not_equal += from.extremal_not_equal;
        };
        add_row(summary.census_positive, local.census_positive);
        add_row(summary.census_negative, local.census_negative);
        add_row(summary.census_nullity, local.census_nullity);
        summary.strict_equality_positive += local.strict_equality_positive;
        summary.strict_equality_negative += local.strict_equality_negative;
        summary.violations.insert(summary.violations.end(), local.violations.begin(), local.violations.end());
        summary.equality_examples.insert(summary.equality_examples.end(), local.equality_examples.begin(),
                                         local.equality_examples.end());
        summary.lemma_failures.insert(summary.lemma_failures.end(), local.lemma_failures.begin(),
                                      local.lemma_failures.end());
    }

    // Seeded disjoint unions guard the additivity paths that the connected
    // universe never exercises.
    if (options.union_samples > 0 && max_n >= 2) {
        SplitMix64 rng(options.seed);
        std::vector<SignedGraph> pool;
        for (int n = 2; n <= std::min(max_n, 5); ++n)
            for (auto& g : enumerate_underlying_graphs(n, true)) pool.push_back(std::move(g));
        for (int k = 0; k < options.union_samples; ++k) {
            const int parts = 2 + static_cast<int>(rng.below(2));
            SignedGraph combined;
            for (int part = 0; part < parts; ++part) {
                const SignedGraph& skeleton = pool[rng.below(pool.size())];
                const auto reps = signature_representatives(skeleton);
                const SignedGraph& chosen = reps[rng.below(reps.size())];
                combined = part == 0 ? chosen : disjoint_union(combined, chosen);
            }
            ++summary.unions_checked;
            TheoremReport r = check_bounds(combined);
            if (r.judged && !r.all_ok()) summary.violations.push_back(r);
            ++summary.lemma_checks;
            auto lemmas = check_deletion_lemmas(combined);
            if (!lemmas.pass)
                summary.lemma_failures.insert(summary.lemma_failures.end(), lemmas.failures.begin(),
                                              lemmas.failures.end());
        }
    }

    sort_reports(summary.violations);
    sort_reports(summary.equality_examples);
    std::sort(summary.lemma_failures.begin(), summary.lemma_failures.end());
    return summary;
}

std::string human_summary(const SuiteSummary& s) {
    std::ostringstream out;
    out << "verification universe: " << (s.connected_only ? "connected" : "all")
        << " underlying graphs, 2 <= n <= " << s.max_n << "\n";
    out << "  n  skeletons  signatures  violations\n";
    for (const auto& level : s.levels) {
        out << "  " << level.n << "  " << level.skeletons << "  " << level.signatures << "  "
            << level.violations << "\n";
    }
    out << "totals: " << s.skeletons_checked << " skeletons, " << s.signatures_checked
        << " signature representatives, " << s.unions_checked << " sampled unions, " << s.lemma_checks
        << " deletion-lemma checks\n";
    if (s.truncated) out << "NOTE: truncated by the graph cap; this summary is partial\n";
    auto census_line = [&](const char* name, const EqualityCensusRow& row) {
        out << "equality census " << name << ": " << row.equal_and_extremal << " equal+extremal, "
            << row.equal_not_extremal << " equal only, " << row.extremal_not_equal << " extremal only\n";
    };
    census_line("i+ ", s.census_positive);
    census_line("i- ", s.census_negative);
    census_line("eta", s.census_nullity);
    out << "strict-bound equality (reported as data): i+ " << s.strict_equality_positive << ", i- "
        << s.strict_equality_negative << "\n";
    for (const auto& v : s.violations) out << "VIOLATION " << machine_record(v) << "\n";
    for (const auto& f : s.lemma_failures) out << "LEMMA FAILURE " << f << "\n";
    out << "result: " << (s.pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string machine_summary(const SuiteSummary& s) {
    std::ostringstream out;
    const auto flag = [](bool b) { return b ? '1' : '0'; };
    out << "summary max_n=" << s.max_n << " connected_only=" << flag(s.connected_only)
        << " skeletons=" << s.skeletons_checked << " signatures=" << s.signatures_checked
        << " unions=" << s.unions_checked << " lemma_checks=" << s.lemma_checks
        << " truncated=" << flag(s.truncated) << " violations=" << s.violations.size()
        << " lemma_failures=" << s.lemma_failures.size() << " pass=" << flag(s.pass()) << "\n";
    auto census_line = [&](const char* name, const EqualityCensusRow& row) {
        out << "census bound=" << name << " equal_and_extremal=" << row.equal_and_extremal
            << " equal_not_extremal=" << row.equal_not_extremal
            << " extremal_not_equal=" << row.extremal_not_equal << "\n";
    };
    census_line("ipos", s.census_positive);
    census_line("ineg", s.census_negative);
    census_line("eta", s.census_nullity);
    out << "strict_equality ipos=" << s.strict_equality_positive << " ineg=" << s.strict_equality_negative
        << "\n";
    for (const auto& level : s.levels)
        out << "level n=" << level.n << " skeletons=" << level.skeletons
            << " signatures=" << level.signatures << " violations=" << level.violations << "\n";
    for (const auto& v : s.violations) out << "violation " << machine_record(v) << "\n";
    for (const auto& f : s.lemma_failures) out << "lemma_failure " << f << "\n";
    return out.str();
}

}  // namespace sgi
