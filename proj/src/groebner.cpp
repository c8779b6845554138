#include "addact/groebner.hpp"

#include <algorithm>
#include <set>

#include "addact/error.hpp"

namespace addact {

namespace {

MultiPoly reduce_fully(MultiPoly f, const std::vector<MultiPoly>& basis, MonoOrder order) {
    // Division algorithm: cancel the leading term when some basis leading
    // monomial divides it, otherwise move it to the remainder.  The leading
    // monomial strictly drops each step, so this terminates.
    std::vector<std::pair<Expo, Q>> leads;
    leads.reserve(basis.size());
    for (const MultiPoly& g : basis) leads.push_back({g.leading_monomial(order), g.leading_coeff(order)});

    MultiPoly remainder(f.nvars());
    while (!f.is_zero()) {
        Expo e = f.leading_monomial(order);
        Q c = f.leading_coeff(order);
        bool cancelled = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!mono_divides(leads[k].first, e)) continue;
            Expo shift(e.size());
            for (size_t i = 0; i < e.size(); ++i) shift[i] = e[i] - leads[k].first[i];
            f = f - basis[k] * MultiPoly::monomial(f.nvars(), shift, c / leads[k].second);
            cancelled = true;
            break;
        }
        if (!cancelled) {
            remainder.add_term(e, c);
            f.add_term(e, -c);
        }
    }
    return remainder;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonoOrder order) {
    Expo lf = f.leading_monomial(order), lg = g.leading_monomial(order);
    Expo l = mono_lcm(lf, lg);
    Expo sf(l.size()), sg(l.size());
    for (size_t i = 0; i < l.size(); ++i) {
        sf[i] = l[i] - lf[i];
        sg[i] = l[i] - lg[i];
    }
    MultiPoly a = f * MultiPoly::monomial(f.nvars(), sf, 1 / f.leading_coeff(order));
    MultiPoly b = g * MultiPoly::monomial(g.nvars(), sg, 1 / g.leading_coeff(order));
    return a - b;
}

}  // namespace

GroebnerBasis groebner(std::vector<MultiPoly> gens, MonoOrder order, unsigned degree_cap) {
    std::vector<MultiPoly> basis;
    for (MultiPoly& g : gens) {
        if (g.is_zero()) continue;
        if (g.total_degree() > static_cast<int>(degree_cap))
            fail(ErrorCode::DegreeBlowup, "generator degree exceeds cap " + std::to_string(degree_cap));
        basis.push_back(g.scaled(1 / g.leading_coeff(order)));
    }
    if (basis.empty()) fail(ErrorCode::DegenerateInput, "no nonzero generators");

    // Interreduce the input by ascending leading monomial.  Spanning sets
    // arriving from kernel computations carry hundreds of redundant rows;
    // only remainders the kept set cannot cancel survive.
    std::sort(basis.begin(), basis.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return mono_less(a.leading_monomial(order), b.leading_monomial(order), order);
    });
    std::vector<MultiPoly> kept;
    for (MultiPoly& g : basis) {
        MultiPoly r = reduce_fully(std::move(g), kept, order);
        if (!r.is_zero()) kept.push_back(r.scaled(1 / r.leading_coeff(order)));
    }
    basis = std::move(kept);

    struct Pending {
        size_t i, j;
        Expo lcm;
    };
    std::vector<Expo> lms;
    for (const MultiPoly& g : basis) lms.push_back(g.leading_monomial(order));

    std::vector<Pending> pairs;
    std::set<std::pair<size_t, size_t>> queued;
    auto push_pair = [&](size_t i, size_t j) {
        pairs.push_back({i, j, mono_lcm(lms[i], lms[j])});
        queued.insert({i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    while (!pairs.empty()) {
        // Normal strategy: treat the pair with the smallest lcm first.
        size_t best = 0;
        for (size_t t = 1; t < pairs.size(); ++t)
            if (mono_less(pairs[t].lcm, pairs[best].lcm, order)) best = t;
        Pending p = pairs[best];
        pairs[best] = std::move(pairs.back());
        pairs.pop_back();
        queued.erase({p.i, p.j});

        // Product criterion: coprime leading monomials reduce to zero.
        bool coprime = true;
        for (size_t k = 0; k < p.lcm.size() && coprime; ++k)
            coprime = p.lcm[k] == lms[p.i][k] + lms[p.j][k];
        if (coprime) continue;

        // Chain criterion: a third element dividing the lcm whose own pairs
        // with both ends have already left the queue makes this pair redundant.
        auto settled = [&](size_t a, size_t b) {
            return !queued.count(a < b ? std::pair(a, b) : std::pair(b, a));
        };
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k)
            chained = k != p.i && k != p.j && mono_divides(lms[k], p.lcm) &&
                      settled(p.i, k) && settled(p.j, k);
        if (chained) continue;

        MultiPoly r = reduce_fully(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
        if (r.is_zero()) continue;
        if (r.total_degree() > static_cast<int>(degree_cap))
            fail(ErrorCode::DegreeBlowup,
                 "basis element degree " + std::to_string(r.total_degree()) + " exceeds cap " +
                     std::to_string(degree_cap));
        r = r.scaled(1 / r.leading_coeff(order));
        lms.push_back(r.leading_monomial(order));
        basis.push_back(std::move(r));
        for (size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }

    // Minimize: drop elements whose leading term another leading term divides.
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Expo li = basis[i].leading_monomial(order);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            Expo lj = basis[j].leading_monomial(order);
            if (mono_divides(lj, li) && (lj != li || j < i)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Auto-reduce tails against the rest.
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : reduce_fully(minimal[i], others, order);
        reduced.push_back(r.scaled(1 / r.leading_coeff(order)));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return mono_less(b.leading_monomial(order), a.leading_monomial(order), order);
    });
    return {order, std::move(reduced)};
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
    return reduce_fully(f, gb.gens, gb.order);
}

bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& f) {
    return normal_form(f, gb).is_zero();
}

std::vector<Expo> standard_monomials(const GroebnerBasis& gb, size_t cap) {
    size_t n = gb.nvars();
    std::vector<Expo> lts;
    for (const MultiPoly& g : gb.gens) lts.push_back(g.leading_monomial(gb.order));

    std::vector<Expo> out;
    for (int degree = 0;; ++degree) {
        // All exponent vectors of this total degree, descending lex.
        std::vector<Expo> level;
        Expo e(n, 0);
        auto emit = [&](auto&& self, size_t pos, int remaining) -> void {
            if (pos + 1 == n) {
                e[pos] = remaining;
                level.push_back(e);
                return;
            }
            for (int k = remaining; k >= 0; --k) {
                e[pos] = k;
                self(self, pos + 1, remaining - k);
            }
        };
        if (n == 0) {
            if (degree == 0) level.push_back(e);
        } else {
            emit(emit, 0, degree);
        }

        bool any = false;
        for (const Expo& m : level) {
            bool excluded = false;
            for (const Expo& lt : lts)
                if (mono_divides(lt, m)) { excluded = true; break; }
            if (excluded) continue;
            out.push_back(m);
            any = true;
            if (out.size() > cap)
                fail(ErrorCode::NotFiniteCodimension,
                     "more than " + std::to_string(cap) + " standard monomials");
        }
        if (!any) break;
    }
    return out;
}

std::vector<MultiPoly> minimal_generators(const GroebnerBasis& gb) {
    std::vector<MultiPoly> kept = gb.gens;
    // Try discarding in ascending leading-term order.
    for (size_t pos = kept.size(); pos-- > 0;) {
        if (kept.size() == 1) break;
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != pos) others.push_back(kept[j]);
        GroebnerBasis sub = groebner(others, gb.order);
        if (ideal_contains(sub, kept[pos])) kept.erase(kept.begin() + pos);
    }
    return kept;
}

}  // namespace addact
