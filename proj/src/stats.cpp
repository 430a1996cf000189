#include "moodflow/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "moodflow/error.hpp"

namespace moodflow {

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (0-based) share the average 1-based rank
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = avg;
        i = j + 1;
    }
    return ranks;
}

SpearmanResult spearman_rho(const std::vector<double>& x,
                            const std::vector<double>& y) {
    if (x.size() != y.size())
        throw_data("spearman: length mismatch (" + std::to_string(x.size()) +
                   " vs " + std::to_string(y.size()) + ")");
    const std::size_t n = x.size();
    if (n < 3) throw_data("spearman: need at least 3 observations");

    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);

    const double mean = (static_cast<double>(n) + 1.0) / 2.0; // rank mean
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = rx[i] - mean;
        const double dy = ry[i] - mean;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }

    SpearmanResult result;
    if (sxx == 0.0 || syy == 0.0) return result; // zero rank variance

    result.defined = true;
    result.rho = sxy / std::sqrt(sxx * syy);
    result.rho = std::clamp(result.rho, -1.0, 1.0);

    const double denom = 1.0 - result.rho * result.rho;
    if (denom <= 0.0) {
        result.p = 0.0;
    } else {
        const double dof = static_cast<double>(n) - 2.0;
        const double t = result.rho * std::sqrt(dof / denom);
        boost::math::students_t dist(dof);
        result.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
        result.p = std::clamp(result.p, 0.0, 1.0);
    }
    return result;
}

CorrelationMatrix correlation_matrix(const MoodSeries& series) {
    std::vector<std::vector<double>> per_dim(kNumDimensions);
    for (const DailySlice& s : series.slices) {
        if (s.empty()) continue;
        for (int d = 0; d < kNumDimensions; ++d)
            per_dim[d].push_back(s.aggregate.component(d));
    }
    const std::size_t n = per_dim[0].size();
    if (n < 3) throw_data("correlation matrix needs >= 3 non-empty days");

    CorrelationMatrix m;
    m.n = n;
    for (int i = 0; i < kNumDimensions; ++i) {
        m.rho[i][i] = 1.0;
        m.p[i][i] = 0.0;
        m.defined[i][i] = true;
        for (int j = i + 1; j < kNumDimensions; ++j) {
            const SpearmanResult r = spearman_rho(per_dim[i], per_dim[j]);
            m.rho[i][j] = m.rho[j][i] = r.rho;
            m.p[i][j] = m.p[j][i] = r.p;
            m.defined[i][j] = m.defined[j][i] = r.defined;
        }
    }
    return m;
}

namespace {

std::string format_stat(double v, const char* fmt) {
    if (v == 0.0) v = 0.0; // collapse -0.0
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

} // namespace

void write_matrix_csv(const CorrelationMatrix& m, std::ostream& out) {
    out << "dimension";
    for (int j = 0; j < kNumDimensions; ++j) out << "," << kDimensionNames[j];
    out << ",n\n";
    for (int i = 0; i < kNumDimensions; ++i) {
        out << kDimensionNames[i];
        for (int j = 0; j < kNumDimensions; ++j) {
            out << ",";
            if (m.defined[i][j])
                out << format_stat(m.rho[i][j], "%.9f");
        }
        out << "," << m.n << "\n";
    }
}

void write_matrix_csv(const CorrelationMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("cannot write matrix file: " + path);
    write_matrix_csv(m, out);
    if (!out) throw_data("write failed: " + path);
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Exact two-sided p by dynamic programming over doubled ranks: counts the
// labelings (subsets of size n1) whose min-U is at most the observed one.
// Doubled average ranks are integers, so subset sums index an array.
double exact_p(const std::vector<double>& pooled_ranks, std::size_t n1,
               double u_obs) {
    const std::size_t n = pooled_ranks.size();
    const std::size_t n2 = n - n1;
    std::vector<int> doubled(n);
    for (std::size_t i = 0; i < n; ++i)
        doubled[i] = static_cast<int>(std::lround(2.0 * pooled_ranks[i]));

    const int max_sum = std::accumulate(doubled.begin(), doubled.end(), 0);
    // ways[j][s] = number of size-j subsets with doubled-rank sum s
    std::vector<std::vector<double>> ways(
        n1 + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const int d = doubled[i];
        const std::size_t jmax = std::min(i + 1, n1);
        for (std::size_t j = jmax; j >= 1; --j)
            for (int s = max_sum; s >= d; --s)
                ways[j][static_cast<std::size_t>(s)] +=
                    ways[j - 1][static_cast<std::size_t>(s - d)];
    }

    const double pairs = static_cast<double>(n1) * static_cast<double>(n2);
    double matched = 0.0, total = 0.0;
    for (int s = 0; s <= max_sum; ++s) {
        const double count = ways[n1][static_cast<std::size_t>(s)];
        if (count == 0.0) continue;
        total += count;
        const double r1 = static_cast<double>(s) / 2.0;
        const double u1 =
            r1 - static_cast<double>(n1) * (static_cast<double>(n1) + 1.0) / 2.0;
        const double umin = std::min(u1, pairs - u1);
        if (umin <= u_obs + 1e-9) matched += count;
    }
    return matched / total;
}

} // namespace

MannWhitneyResult mann_whitney(const std::vector<double>& a,
                               const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw_data("mann-whitney: empty sample");
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;

    std::vector<double> pooled;
    pooled.reserve(n);
    pooled.insert(pooled.end(), a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = average_ranks(pooled);

    double r1 = 0.0;
    for (std::size_t i = 0; i < n1; ++i) r1 += ranks[i];
    const double pairs = static_cast<double>(n1) * static_cast<double>(n2);
    const double u1 =
        r1 - static_cast<double>(n1) * (static_cast<double>(n1) + 1.0) / 2.0;
    const double u2 = pairs - u1;

    MannWhitneyResult result;
    result.u = std::min(u1, u2);

    if (n <= 16) {
        result.exact = true;
        result.p = exact_p(ranks, n1, result.u);
        return result;
    }

    // Normal approximation, tie-corrected variance, continuity correction.
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_sum += t * t * t - t;
        i = j + 1;
    }
    const double nd = static_cast<double>(n);
    const double var =
        pairs / 12.0 * ((nd + 1.0) - tie_sum / (nd * (nd - 1.0)));
    if (var <= 0.0) {
        result.p = 1.0; // every pooled value tied
        return result;
    }
    const double mean = pairs / 2.0;
    const double z = (result.u - mean + 0.5) / std::sqrt(var);
    result.p = std::clamp(2.0 * normal_cdf(z), 0.0, 1.0);
    return result;
}

double median(std::vector<double> values) {
    if (values.empty()) throw_data("median of empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<PeriodComparison> compare_periods(const MoodSeries& series,
                                              const std::vector<Period>& periods,
                                              double threshold) {
    if (periods.size() < 2)
        throw_usage("compare_periods needs at least 2 periods");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw_usage("significance threshold must lie in (0,1)");

    // values[p][d]: per-day components over the period's non-empty days
    std::vector<std::array<std::vector<double>, kNumDimensions>> values(
        periods.size());
    for (std::size_t pi = 0; pi < periods.size(); ++pi) {
        const Period& period = periods[pi];
        if (series.slices.empty() || period.end < series.start() ||
            period.start > series.end())
            throw_data("period " + period.name + " (" +
                       period.start.to_string() + " .. " +
                       period.end.to_string() + ") outside series range");
        const Date lo = std::max(period.start, series.start());
        const Date hi = std::min(period.end, series.end());
        for (Date d = lo; d <= hi; ++d) {
            const DailySlice& s = series.at(d);
            if (s.empty()) continue;
            for (int dim = 0; dim < kNumDimensions; ++dim)
                values[pi][dim].push_back(s.aggregate.component(dim));
        }
        if (values[pi][0].empty())
            throw_data("period " + period.name +
                       " has no non-empty days in the series");
    }

    std::vector<PeriodComparison> rows;
    rows.reserve(kNumDimensions * periods.size() * (periods.size() - 1) / 2);
    for (int dim = 0; dim < kNumDimensions; ++dim) {
        for (std::size_t i = 0; i < periods.size(); ++i) {
            for (std::size_t j = i + 1; j < periods.size(); ++j) {
                const MannWhitneyResult mw =
                    mann_whitney(values[i][dim], values[j][dim]);
                PeriodComparison row;
                row.dimension = static_cast<MoodDimension>(dim);
                row.period_a = periods[i].name;
                row.period_b = periods[j].name;
                row.median_a = median(values[i][dim]);
                row.median_b = median(values[j][dim]);
                row.u = mw.u;
                row.p = mw.p;
                row.significant = mw.p < threshold;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_comparisons_csv(const std::vector<PeriodComparison>& rows,
                           std::ostream& out) {
    out << "dimension,period_a,period_b,median_a,median_b,U,p,significant\n";
    for (const PeriodComparison& r : rows) {
        out << dimension_name(r.dimension) << "," << r.period_a << ","
            << r.period_b << "," << format_stat(r.median_a, "%.9f") << ","
            << format_stat(r.median_b, "%.9f") << ","
            << format_stat(r.u, "%.1f") << "," << format_stat(r.p, "%.9g")
            << "," << (r.significant ? 1 : 0) << "\n";
    }
}

void write_comparisons_csv(const std::vector<PeriodComparison>& rows,
                           const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("cannot write comparison file: " + path);
    write_comparisons_csv(rows, out);
    if (!out) throw_data("write failed: " + path);
}

} // namespace moodflow
