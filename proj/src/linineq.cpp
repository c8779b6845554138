#include "addact/linineq.hpp"

#include <algorithm>
#include <set>

#include "addact/error.hpp"

namespace addact {

namespace {

using Row = std::pair<std::vector<Q>, Q>;

// Scale so the first nonzero entry of (a, b) has absolute value 1; positive
// scaling only, so the inequality is unchanged.
Row normalized(Row r) {
    Q scale = 0;
    for (const Q& x : r.first)
        if (x != 0) { scale = abs(x); break; }
    if (scale == 0 && r.second != 0) scale = abs(r.second);
    if (scale != 0 && scale != 1) {
        for (Q& x : r.first) x /= scale;
        r.second /= scale;
    }
    return r;
}

struct RowLess {
    bool operator()(const Row& a, const Row& b) const {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    }
};

std::vector<Row> dedupe(const std::vector<Row>& rows) {
    std::set<Row, RowLess> seen;
    for (const Row& r : rows) seen.insert(normalized(r));
    return {seen.begin(), seen.end()};
}

// Eliminate x_var; surviving rows have coefficient zero there.
std::vector<Row> eliminate(const std::vector<Row>& rows, size_t var) {
    std::vector<Row> lower, upper, flat;
    for (const Row& r : rows) {
        const Q& c = r.first[var];
        if (c == 0) flat.push_back(r);
        else if (c > 0) upper.push_back(r);   // x_var <= (b - rest)/c
        else lower.push_back(r);
    }
    for (const Row& lo : lower)
        for (const Row& up : upper) {
            // Combine so x_var cancels: up/c_up + lo/(-c_lo).
            Q cu = up.first[var], cl = -lo.first[var];
            Row combined;
            combined.first.resize(up.first.size());
            for (size_t j = 0; j < combined.first.size(); ++j)
                combined.first[j] = up.first[j] / cu + lo.first[j] / cl;
            combined.second = up.second / cu + lo.second / cl;
            combined.first[var] = 0;
            flat.push_back(std::move(combined));
        }
    return dedupe(flat);
}

bool constants_consistent(const std::vector<Row>& rows) {
    for (const Row& r : rows) {
        bool all_zero = std::all_of(r.first.begin(), r.first.end(), [](const Q& x) { return x == 0; });
        if (all_zero && r.second < 0) return false;
    }
    return true;
}

}  // namespace

void IneqSystem::add_le(std::vector<Q> a, Q b) {
    if (a.size() != nvars_) fail(ErrorCode::Internal, "inequality arity mismatch");
    ineqs_.emplace_back(std::move(a), std::move(b));
}

void IneqSystem::add_ge(std::vector<Q> a, Q b) {
    for (Q& x : a) x = -x;
    add_le(std::move(a), -b);
}

void IneqSystem::add_eq(std::vector<Q> a, Q b) {
    add_le(a, b);
    add_ge(std::move(a), std::move(b));
}

bool IneqSystem::feasible() const {
    std::vector<Row> rows = dedupe(ineqs_);
    for (size_t v = 0; v < nvars_; ++v) {
        rows = eliminate(rows, v);
        if (!constants_consistent(rows)) return false;
    }
    return constants_consistent(rows);
}

IneqSystem::Interval IneqSystem::variable_range(size_t var) const {
    std::vector<Row> rows = dedupe(ineqs_);
    for (size_t v = 0; v < nvars_; ++v) {
        if (v == var) continue;
        rows = eliminate(rows, v);
        if (!constants_consistent(rows)) return {.empty = true};
    }
    Interval out;
    for (const Row& r : rows) {
        const Q& c = r.first[var];
        if (c == 0) {
            if (r.second < 0) return {.empty = true};
            continue;
        }
        Q bound = r.second / c;
        if (c > 0) {
            if (!out.hi || bound < *out.hi) out.hi = bound;
        } else {
            if (!out.lo || bound > *out.lo) out.lo = bound;
        }
    }
    if (out.lo && out.hi && *out.lo > *out.hi) return {.empty = true};
    return out;
}

bool in_cone(const std::vector<std::vector<Z>>& generators, const std::vector<Q>& v) {
    size_t dim = v.size();
    if (generators.empty()) return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
    IneqSystem sys(generators.size());
    for (size_t i = 0; i < dim; ++i) {
        std::vector<Q> a(generators.size());
        for (size_t g = 0; g < generators.size(); ++g) a[g] = Q(generators[g][i]);
        sys.add_eq(std::move(a), v[i]);
    }
    for (size_t g = 0; g < generators.size(); ++g) {
        std::vector<Q> a(generators.size(), Q(0));
        a[g] = 1;
        sys.add_ge(std::move(a), Q(0));
    }
    return sys.feasible();
}

bool separating_functional_exists(size_t dim, const std::vector<std::vector<Z>>& zero,
                                  const std::vector<std::vector<Z>>& positive,
                                  const std::vector<std::vector<Z>>& negative) {
    IneqSystem sys(dim);
    for (const auto& z : zero) sys.add_eq(q_vector(z), Q(0));
    for (const auto& p : positive) sys.add_ge(q_vector(p), Q(1));
    for (const auto& m : negative) sys.add_le(q_vector(m), Q(-1));
    return sys.feasible();
}

}  // namespace addact
