#pragma once

#include <string>
#include <string_view>

namespace textrank {

/// Porter stemming algorithm (1980), matching the behavior of the classic
/// reference implementation: step-2 rules BLI->BLE and LOGI->LOG, and words
/// of length <= 2 returned unchanged. Input is expected to be lowercase;
/// non-alphabetic characters are treated as consonants.
std::string porter_stem(std::string_view token);

} // namespace textrank
