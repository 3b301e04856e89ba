#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace coxlab {

// Raised when a configured size/memory cap would be exceeded.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& w) : std::runtime_error(w) {}
};

// Outcome of a verification. A discrepancy is data, not an exception: the
// payload always carries the first differing coefficient with both values.
struct CheckReport {
    bool ok = true;
    std::string what;  // empty when ok
    std::map<std::string, std::string> details;

    static CheckReport pass() { return {}; }
    static CheckReport fail(std::string w, std::map<std::string, std::string> d = {}) {
        CheckReport r;
        r.ok = false;
        r.what = std::move(w);
        r.details = std::move(d);
        return r;
    }
};

}  // namespace coxlab
