#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "moodflow/series.hpp"
#include "moodflow/types.hpp"

namespace moodflow {

/// Average ranks (1-based); tied values share the mean of their ranks.
std::vector<double> average_ranks(const std::vector<double>& values);

struct SpearmanResult {
    double rho = 0.0;
    bool defined = false; // false when either input has zero rank variance
    double p = 1.0;       // t-approximation, N-2 dof; approximate by nature
};

/// Pearson correlation of average-ranked data. Throws on length mismatch
/// or n < 3.
SpearmanResult spearman_rho(const std::vector<double>& x,
                            const std::vector<double>& y);

struct CorrelationMatrix {
    double rho[kNumDimensions][kNumDimensions] = {};
    double p[kNumDimensions][kNumDimensions] = {};
    bool defined[kNumDimensions][kNumDimensions] = {};
    std::size_t n = 0; // non-empty days used
};

/// Pairwise Spearman over per-day values of each dimension pair, computed
/// on the non-empty days of the series. Diagonal is exactly 1; the matrix
/// is symmetric by construction.
CorrelationMatrix correlation_matrix(const MoodSeries& series);

void write_matrix_csv(const CorrelationMatrix& m, std::ostream& out);
void write_matrix_csv(const CorrelationMatrix& m, const std::string& path);

struct MannWhitneyResult {
    double u = 0.0; // min(U1, U2)
    double p = 1.0; // two-sided
    bool exact = false;
};

/// U from rank sums with average ranks for ties, reported as min(U1, U2).
/// Exact p when n1+n2 <= 16: the fraction of all C(n1+n2, n1) labelings of
/// the pooled values whose min-U is <= the observed one. Otherwise normal
/// approximation with tie-corrected variance and 0.5 continuity
/// correction. Throws on an empty sample.
MannWhitneyResult mann_whitney(const std::vector<double>& a,
                               const std::vector<double>& b);

struct PeriodComparison {
    MoodDimension dimension;
    std::string period_a;
    std::string period_b;
    double median_a = 0.0;
    double median_b = 0.0;
    double u = 0.0;
    double p = 1.0;
    bool significant = false;
};

/// One comparison per (dimension x unordered period pair), ordered by
/// dimension index then pair position in `periods`. Values are the
/// series' per-day components over each period's non-empty days.
/// Throws when a period falls outside the series range or has no
/// non-empty day, naming the period.
std::vector<PeriodComparison> compare_periods(const MoodSeries& series,
                                              const std::vector<Period>& periods,
                                              double threshold = 0.05);

/// CSV: dimension,period_a,period_b,median_a,median_b,U,p,significant.
void write_comparisons_csv(const std::vector<PeriodComparison>& rows,
                           std::ostream& out);
void write_comparisons_csv(const std::vector<PeriodComparison>& rows,
                           const std::string& path);

double median(std::vector<double> values); // throws on empty

} // namespace moodflow
