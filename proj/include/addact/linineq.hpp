#pragma once

#include <optional>
#include <vector>

#include "addact/matrix.hpp"

namespace addact {

// Conjunction of conditions a . x <= b over Q^n, solved exactly by
// Fourier-Motzkin elimination.  Sizes here are tiny (n <= 5, tens of rows),
// so the doubly exponential worst case never bites; duplicates are pruned
// after each elimination anyway.
class IneqSystem {
public:
    explicit IneqSystem(size_t nvars) : nvars_(nvars) {}

    size_t nvars() const { return nvars_; }
    void add_le(std::vector<Q> a, Q b);
    void add_ge(std::vector<Q> a, Q b);  // a . x >= b
    void add_eq(std::vector<Q> a, Q b);

    bool feasible() const;

    struct Interval {
        bool empty = false;
        std::optional<Q> lo, hi;  // nullopt side is unbounded
    };
    Interval variable_range(size_t var) const;

private:
    size_t nvars_;
    std::vector<std::pair<std::vector<Q>, Q>> ineqs_;
};

// Is v a nonnegative combination of the given generators?
bool in_cone(const std::vector<std::vector<Z>>& generators, const std::vector<Q>& v);

// Does a functional w exist with w . z = 0 on `zero`, w . p >= 1 on
// `positive`, w . m <= -1 on `negative`?  Since the constraints are
// homogeneous apart from the normalization, this decides the existence of a
// strict separating functional.
bool separating_functional_exists(size_t dim, const std::vector<std::vector<Z>>& zero,
                                  const std::vector<std::vector<Z>>& positive,
                                  const std::vector<std::vector<Z>>& negative);

}  // namespace addact
