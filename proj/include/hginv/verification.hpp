#pragma once
/// Shared result record for the named machine checks.

#include <string>

namespace hginv {

struct VerificationReport {
    std::string name;
    bool pass = false;
    std::string detail;  // human-readable diagnostic when a check fails
};

}  // namespace hginv
