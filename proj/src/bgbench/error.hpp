#pragma once

#include <stdexcept>
#include <string>

namespace bgbench {

// Single exception type for all toolkit failures. The CLI maps it to exit 1;
// argument problems are handled separately and exit 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace bgbench
