#include "moodflow/types.hpp"

namespace moodflow {

std::string_view dimension_name(MoodDimension d) {
    return kDimensionNames[static_cast<int>(d)];
}

bool parse_dimension(std::string_view name, MoodDimension& out) {
    for (int i = 0; i < kNumDimensions; ++i) {
        if (kDimensionNames[i] == name) {
            out = static_cast<MoodDimension>(i);
            return true;
        }
    }
    return false;
}

} // namespace moodflow
