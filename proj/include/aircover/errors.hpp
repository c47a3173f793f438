#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace aircover {

/// Scenario/configuration rejection. Carries one message per invalid field so
/// callers can report every problem at once instead of stopping at the first.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    explicit ConfigError(const std::string& issue)
        : ConfigError(std::vector<std::string>{issue}) {}

    const std::vector<std::string>& issues() const { return issues_; }

  private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string msg;
        for (const auto& s : issues) {
            if (!msg.empty()) {
                msg += "; ";
            }
            msg += s;
        }
        return msg.empty() ? std::string("invalid configuration") : msg;
    }

    std::vector<std::string> issues_;
};

/// File read/write failure (exit code 2 territory, as opposed to bad input).
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace aircover
