#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace breakeven {

/// Parameter validation failure; carries one message per violated constraint.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(std::vector<std::string> issues)
        : std::invalid_argument(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string msg;
        for (const auto& issue : issues) {
            if (!msg.empty()) msg += "; ";
            msg += issue;
        }
        return msg;
    }

    std::vector<std::string> issues_;
};

/// Inverse problem queried below its domain (quantity at or below Q_c).
class inverse_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iteration limit exceeded in a solver (unreachable on valid inputs).
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace breakeven
