#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "moodflow/date.hpp"
#include "moodflow/kernels.hpp"

namespace moodflow {

/// The six mood dimensions, fixed order. This index order is used in every
/// vector, matrix, CSV column block and report row.
enum class MoodDimension : int {
    Tension = 0,
    Depression = 1,
    Anger = 2,
    Vigour = 3,
    Fatigue = 4,
    Confusion = 5,
};

inline constexpr int kNumDimensions = 6;

inline constexpr std::array<std::string_view, kNumDimensions> kDimensionNames = {
    "tension", "depression", "anger", "vigour", "fatigue", "confusion",
};

std::string_view dimension_name(MoodDimension d);
bool parse_dimension(std::string_view name, MoodDimension& out);

enum class VectorKind { RawCounts, Unit };

/// Six mood components in a padded 8-lane carrier (lanes 6..7 stay zero).
/// RawCounts vectors hold non-negative integers stored as doubles; Unit
/// vectors have Euclidean norm 1 within 1e-9.
struct MoodVector {
    kernels::Vec8d lanes = kernels::Vec8d::zero();
    VectorKind kind = VectorKind::RawCounts;

    double& operator[](MoodDimension d) { return lanes[static_cast<int>(d)]; }
    double operator[](MoodDimension d) const {
        return lanes[static_cast<int>(d)];
    }
    double& component(int i) { return lanes[i]; }
    double component(int i) const { return lanes[i]; }
};

/// A message that survived candidate filtering and scored at least one
/// lexicon match; vector is unit-normalized.
struct ScoredMessage {
    Date day;                  // UTC calendar day of the timestamp
    MoodVector vector;         // kind == Unit
    std::uint32_t match_count; // total matched distinct stems, >= 1
};

/// Named inclusive date interval for comparative statistics.
struct Period {
    std::string name;
    Date start;
    Date end;
};

} // namespace moodflow
