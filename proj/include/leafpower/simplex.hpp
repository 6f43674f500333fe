#pragma once

// Exact rational linear feasibility with support for strict inequalities.
// All strict constraints share one margin variable that the solver pushes
// as high as possible (capped at 1); the system counts as feasible only
// when the margin comes out strictly positive, so any returned assignment
// satisfies every strict constraint with room to spare.

#include <optional>
#include <utility>
#include <vector>

#include "leafpower/rational.hpp"

namespace leafpower {

class FeasibilitySystem {
public:
    explicit FeasibilitySystem(int vars);

    // Terms are (variable index, coefficient) pairs; repeated indices are
    // summed. Variables are unbounded unless constrained.
    using Terms = std::vector<std::pair<int, Rat>>;

    void add_le(const Terms& terms, const Rat& rhs);
    void add_ge(const Terms& terms, const Rat& rhs);
    void add_eq(const Terms& terms, const Rat& rhs);
    void add_lt(const Terms& terms, const Rat& rhs);
    void add_gt(const Terms& terms, const Rat& rhs);

    // A satisfying assignment for the declared variables, or nothing when
    // the system has no solution.
    std::optional<std::vector<Rat>> solve() const;

private:
    struct Row {
        std::vector<std::pair<int, Rat>> terms;  // accumulated, one per var
        Rat rhs;
        bool with_margin = false;  // terms + margin <= rhs
    };

    void push(const Terms& terms, const Rat& rhs, int sign, bool with_margin);

    int vars_;
    std::vector<Row> rows_;  // all normalized to "<="
};

}  // namespace leafpower
