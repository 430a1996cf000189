// Scalar reference kernels. Each op touches all 8 lanes so the AVX2 variant
// can mirror it one instruction per 4 lanes; lane math must stay a single
// correctly-rounded IEEE op per lane (this TU builds with -ffp-contract=off).
#include "moodflow/kernels.hpp"

#include <cmath>

namespace moodflow::kernels {

namespace scalar {

void add(Vec8d& acc, const Vec8d& x) {
    for (int i = 0; i < 8; ++i) acc.v[i] += x.v[i];
}

void sub(Vec8d& out, const Vec8d& a, const Vec8d& b) {
    for (int i = 0; i < 8; ++i) out.v[i] = a.v[i] - b.v[i];
}

void mul(Vec8d& out, const Vec8d& a, const Vec8d& b) {
    for (int i = 0; i < 8; ++i) out.v[i] = a.v[i] * b.v[i];
}

void scale(Vec8d& out, const Vec8d& a, double s) {
    for (int i = 0; i < 8; ++i) out.v[i] = a.v[i] * s;
}

void div_scalar(Vec8d& out, const Vec8d& a, double s) {
    for (int i = 0; i < 8; ++i) out.v[i] = a.v[i] / s;
}

void sqrt_lanes(Vec8d& out, const Vec8d& a) {
    for (int i = 0; i < 8; ++i) out.v[i] = std::sqrt(a.v[i]);
}

double sumsq6(const Vec8d& a) {
    const double s01 = a.v[0] * a.v[0] + a.v[1] * a.v[1];
    const double s23 = a.v[2] * a.v[2] + a.v[3] * a.v[3];
    const double s45 = a.v[4] * a.v[4] + a.v[5] * a.v[5];
    return (s01 + s23) + s45;
}

bool unit6(Vec8d& out, const Vec8d& a) {
    const double ss = sumsq6(a);
    if (ss == 0.0) return false;
    const double norm = std::sqrt(ss);
    for (int i = 0; i < 8; ++i) out.v[i] = a.v[i] / norm;
    return true;
}

void zscore6(Vec8d& out, const Vec8d& x, const Vec8d& mean, const Vec8d& sigma) {
    for (int i = 0; i < 8; ++i) {
        const double d = x.v[i] - mean.v[i];
        out.v[i] = sigma.v[i] != 0.0 ? d / sigma.v[i] : 0.0;
    }
}

void sigdiv6(Vec8d& out, const Vec8d& x, const Vec8d& sigma) {
    for (int i = 0; i < 8; ++i)
        out.v[i] = sigma.v[i] != 0.0 ? x.v[i] / sigma.v[i] : 0.0;
}

} // namespace scalar

extern const Ops kScalarOps;
const Ops kScalarOps = {
    "scalar",        scalar::add,    scalar::sub,     scalar::mul,
    scalar::scale,   scalar::div_scalar, scalar::sqrt_lanes, scalar::sumsq6,
    scalar::unit6,   scalar::zscore6, scalar::sigdiv6,
};

void PairwiseAccumulator::push(const Vec8d& x) {
    Vec8d carry = x;
    std::uint64_t c = count_;
    std::size_t level = 0;
    // Binary-counter merge: combine equal-size partial sums while the
    // corresponding count bit is set.
    while (c & 1u) {
        active_ops().add(carry, levels_[level]);
        c >>= 1;
        ++level;
    }
    if (level >= levels_.size()) levels_.resize(level + 1, Vec8d::zero());
    levels_[level] = carry;
    ++count_;
}

Vec8d PairwiseAccumulator::total() const {
    Vec8d sum = Vec8d::zero();
    bool seeded = false;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (!(count_ & (std::uint64_t{1} << i))) continue;
        if (!seeded) {
            sum = levels_[i];
            seeded = true;
        } else {
            active_ops().add(sum, levels_[i]);
        }
    }
    return sum;
}

} // namespace moodflow::kernels
