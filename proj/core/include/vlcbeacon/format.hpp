#pragma once

#include <cstdio>
#include <string>

namespace vlcb {

/// Shortest decimal form that parses back to the same double. Keeps CSV
/// round trips exact.
inline std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == value) {
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[64];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, value);
            std::sscanf(shorter, "%lf", &back);
            if (back == value) return shorter;
        }
    }
    return buf;
}

}  // namespace vlcb
