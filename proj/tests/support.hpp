// Shorthands shared by the test binaries.
#pragma once

#include "openpi/parse.hpp"
#include "openpi/syntax.hpp"

namespace testing_support {

inline openpi::Process P(const char* s) { return openpi::parse_process(s); }
inline openpi::Formula F(const char* s) { return openpi::parse_formula(s); }
inline openpi::Name N(const char* s) { return openpi::Name(s); }

}  // namespace testing_support
