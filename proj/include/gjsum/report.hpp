#pragma once

#include <string>

#include "gjsum/descriptor.hpp"

namespace gjsum {

// Invariant report for one descriptor: deterministic text rendering plus a
// structured (JSON) mirror of the same fields.
struct Report {
    std::string text;
    std::string structured;  // serialized JSON
    bool all_checks_passed = true;
};

Report run_report(const Descriptor& d, unsigned sign_cap_bits = 4096);

}  // namespace gjsum
