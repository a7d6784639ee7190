#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rsw {

// A query whose mathematical preconditions do not hold (wrong domain kind,
// characteristic, degree pattern, ...). CLI exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& reason) : std::runtime_error(reason) {}
};

// A query whose enumeration cost exceeds the configured budget. CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::uint64_t required, std::uint64_t limit)
        : std::runtime_error("enumeration budget exceeded: needs about " + std::to_string(required) +
                             " steps, limit " + std::to_string(limit)),
          required_(required),
          limit_(limit) {}
    std::uint64_t required() const { return required_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

// Enumeration step limit. Defaults to 1e7 steps; RSWEIGHT_BUDGET overrides the
// default and an explicit --budget flag overrides both.
struct Budget {
    std::uint64_t max_steps = 10'000'000;

    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("RSWEIGHT_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && v > 0) b.max_steps = v;
        }
        return b;
    }

    void check(std::uint64_t required) const {
        if (required > max_steps) throw BudgetError(required, max_steps);
    }
};

}  // namespace rsw
