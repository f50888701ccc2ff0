#pragma once

#include <string_view>
#include <vector>

namespace kscontext::data {

extern const std::vector<std::string_view> kPeres33;
extern const std::vector<std::string_view> kCabello18;
extern const std::vector<std::string_view> kPeresMermin24;
extern const std::vector<std::string_view> kStabilizer2q;
extern const std::vector<std::string_view> kE8Signs;

}  // namespace kscontext::data
