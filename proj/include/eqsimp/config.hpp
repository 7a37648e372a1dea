#pragma once
// Resource caps and error types shared by every operation.
//
// All search kernels charge against an explicit budget so that a runaway
// enumeration aborts with a named cap instead of hanging.  The defaults are
// sized for interactive desk work.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqsimp {

struct Caps {
    std::int64_t simplex_budget = 100000;    // max simplices materialized per complex
    std::int64_t order_cap      = 100;       // max group order realized from a presentation
    std::int64_t enum_budget    = 10000000;  // max nodes explored per search
};

inline Caps& global_caps() {
    static Caps caps;
    return caps;
}

// Inputs that violate a documented precondition.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A named resource cap was exceeded; .cap_name says which one.
struct cap_exceeded : std::runtime_error {
    std::string cap_name;
    cap_exceeded(const std::string& cap, const std::string& what)
        : std::runtime_error(what), cap_name(cap) {}
};

// Internal consistency failure: a structural invariant did not hold.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

class BudgetMeter {
public:
    explicit BudgetMeter(std::int64_t budget, std::string cap_name)
        : left_(budget), name_(std::move(cap_name)) {}
    void charge(std::int64_t n = 1) {
        left_ -= n;
        if (left_ < 0)
            throw cap_exceeded(name_, "budget '" + name_ + "' exhausted");
    }
private:
    std::int64_t left_;
    std::string name_;
};

}  // namespace eqsimp
