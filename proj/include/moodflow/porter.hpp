#pragma once

#include <string>
#include <string_view>

namespace moodflow {

/// Porter (1980) suffix-stripping stemmer, matching the maintained
/// reference implementation: words of length <= 2 are returned unchanged,
/// step 2 maps "bli" -> "ble" (not "abli" -> "able") and adds
/// "logi" -> "log". Input is expected lowercase; non-letters are treated
/// as consonants, so digit-bearing tokens pass through deterministically.
/// Not idempotent (e.g. stems of stems may differ); callers stem raw forms.
std::string porter_stem(std::string_view term);

} // namespace moodflow
