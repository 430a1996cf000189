#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace moodflow::kernels {

/// 6-lane mood vector padded to 8 doubles so one AVX2 op pair covers it.
/// Lanes 6 and 7 must stay zero; every kernel preserves that invariant.
struct alignas(64) Vec8d {
    double v[8];

    static Vec8d zero() { return Vec8d{{0, 0, 0, 0, 0, 0, 0, 0}}; }

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
};

/// Kernel function table. Scalar and AVX2 implementations perform the same
/// IEEE-754 operations in the same order, so results are bitwise identical
/// across backends (equivalence is enforced by tests, not assumed).
struct Ops {
    const char* name;

    void (*add)(Vec8d& acc, const Vec8d& x);
    void (*sub)(Vec8d& out, const Vec8d& a, const Vec8d& b);
    void (*mul)(Vec8d& out, const Vec8d& a, const Vec8d& b);
    void (*scale)(Vec8d& out, const Vec8d& a, double s);
    void (*div_scalar)(Vec8d& out, const Vec8d& a, double s);
    void (*sqrt_lanes)(Vec8d& out, const Vec8d& a);

    /// Sum of squares of lanes 0..5 with a fixed reduction tree:
    /// ((v0*v0 + v1*v1) + (v2*v2 + v3*v3)) + (v4*v4 + v5*v5).
    double (*sumsq6)(const Vec8d& a);

    /// out = a / sqrt(sumsq6(a)); returns false (out untouched) when the
    /// norm is zero.
    bool (*unit6)(Vec8d& out, const Vec8d& a);

    /// Lane-wise (x - mean) / sigma over lanes 0..5; lanes with sigma == 0
    /// produce 0.
    void (*zscore6)(Vec8d& out, const Vec8d& x, const Vec8d& mean,
                    const Vec8d& sigma);

    /// Lane-wise x / sigma over lanes 0..5; lanes with sigma == 0 produce 0.
    void (*sigdiv6)(Vec8d& out, const Vec8d& x, const Vec8d& sigma);
};

enum class Backend { Scalar, Avx2 };

/// Backends compiled into this binary, scalar first.
std::vector<Backend> available_backends();

const Ops& ops_for(Backend b);

/// Runtime-selected table: AVX2 when the CPU supports it, else scalar.
/// `select` pins a specific backend (tests use it); returns false if the
/// backend is unavailable on this machine.
const Ops& active_ops();
bool select(Backend b);
Backend active_backend();

std::string_view backend_name(Backend b);

/// Streaming pairwise (binary-counter) summation of Vec8d values. The
/// reduction tree depends only on the order of pushes, so totals are
/// reproducible across runs and worker counts as long as push order is
/// fixed. Error grows O(log n) rather than O(n) for naive accumulation.
class PairwiseAccumulator {
public:
    PairwiseAccumulator() : count_(0) {}

    void push(const Vec8d& x);
    Vec8d total() const;
    std::uint64_t count() const { return count_; }

private:
    // levels_[i] holds a pending partial sum of 2^i pushed values; bit i of
    // count_ says whether it is occupied.
    std::vector<Vec8d> levels_;
    std::uint64_t count_;
};

} // namespace moodflow::kernels
