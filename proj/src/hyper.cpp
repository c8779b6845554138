#include "addact/hyper.hpp"

#include <string>

#include "addact/error.hpp"

namespace addact {

namespace {

Q small_factorial(size_t k) {
    Q out(1);
    for (size_t i = 2; i <= k; ++i) out *= Q(static_cast<unsigned long>(i));
    return out;
}

std::vector<Q> basis_vector(size_t m, size_t i) {
    std::vector<Q> e(m, Q(0));
    e[i] = 1;
    return e;
}

// Complement basis of span(u) in m, drawn from the radical powers: scan the
// deepest nonzero power first so each pick is as deep as possible, then list
// the picks by ascending power.  For codimension one this selects the first
// reduced-basis vector of m^d outside U, matching make_h_pair.
std::vector<std::vector<Q>> radical_complement(const Algebra& a,
                                               const std::vector<std::vector<Q>>& u) {
    size_t m = a.dim();
    auto chain = radical_chain(a);
    Subspace span = Subspace::span(m, u);
    std::vector<std::vector<std::vector<Q>>> picks(chain.size());
    for (size_t k = chain.size(); k-- > 1;) {
        const QMatrix& rows = chain[k].basis();
        for (size_t r = 0; r < rows.rows(); ++r)
            if (!span.contains(rows.row(r))) {
                picks[k].push_back(rows.row(r));
                span = span.sum(Subspace::span(m, {rows.row(r)}));
            }
    }
    std::vector<std::vector<Q>> out;
    for (size_t k = 1; k < picks.size(); ++k)
        for (auto& v : picks[k]) out.push_back(std::move(v));
    return out;
}

// z = sum of z_{shift+i} b_i inside A tensor Q[z], as a coefficient vector.
std::vector<MultiPoly> coordinate_vector(size_t m, size_t nvars, size_t shift,
                                         const std::vector<std::vector<Q>>& basis) {
    std::vector<MultiPoly> v(m, MultiPoly(nvars));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t k = 0; k < m; ++k)
            if (basis[i][k] != 0)
                v[k] += MultiPoly::variable(nvars, shift + i).scaled(basis[i][k]);
    return v;
}

// log(1 + z) for z with nilpotent coefficients; the series stops by z^dim.
std::vector<MultiPoly> tensor_log(const Algebra& a, const std::vector<MultiPoly>& z,
                                  size_t nvars) {
    size_t m = a.dim();
    std::vector<MultiPoly> acc(m, MultiPoly(nvars));
    std::vector<MultiPoly> pw = z;
    for (size_t j = 1; j <= m; ++j) {
        if (j > 1) pw = tensor_multiply(a, pw, z, nvars);
        bool zero = true;
        for (const auto& c : pw)
            if (!c.is_zero()) {
                zero = false;
                break;
            }
        if (zero) break;
        Q c = Q(1) / Q(static_cast<unsigned long>(j));
        if (j % 2 == 0) c = -c;
        for (size_t k = 0; k < m; ++k) acc[k] += pw[k].scaled(c);
    }
    return acc;
}

MultiPoly apply_functional(const std::vector<Q>& pi, const std::vector<MultiPoly>& x,
                           size_t nvars) {
    MultiPoly out(nvars);
    for (size_t k = 0; k < pi.size(); ++k)
        if (pi[k] != 0) out += x[k].scaled(pi[k]);
    return out;
}

Subspace largest_ideal_inside(const Algebra& a, const Subspace& u) {
    size_t m = a.dim();
    Subspace j = u;
    for (;;) {
        // membership in j as a kernel condition, then pull back along each
        // multiplication operator
        QMatrix memb = j.basis().kernel_basis();
        QMatrix sys(0, m);
        for (size_t r = 0; r < memb.rows(); ++r) sys.append_row(memb.row(r));
        for (size_t i = 1; i < m; ++i) {
            QMatrix pulled = memb * a.mult_operator(basis_vector(m, i));
            for (size_t r = 0; r < pulled.rows(); ++r) sys.append_row(pulled.row(r));
        }
        QMatrix kb = sys.kernel_basis();
        Subspace next = Subspace::span(m, kb.data());
        if (next == j) return j;
        j = next;
    }
}

}  // namespace

HPair make_h_pair(const GaPair& p) {
    if (!validate_pair(p))
        fail(ErrorCode::DegenerateInput, "subspace does not generate the algebra");
    size_t m = p.m();
    if (p.n() + 2 != m)
        fail(ErrorCode::DegenerateInput, "subspace must have codimension one in the maximal ideal");
    const Algebra& a = p.qp.algebra;
    Subspace u = Subspace::span(m, p.u_basis);

    auto chain = radical_chain(a);
    size_t d = 0;
    for (size_t k = 1; k < chain.size(); ++k)
        if (!u.contains(chain[k])) d = k;
    if (d == 0) fail(ErrorCode::Internal, "no radical power escapes the subspace");

    std::vector<Q> s;
    const QMatrix& top = chain[d].basis();
    for (size_t r = 0; r < top.rows(); ++r)
        if (!u.contains(top.row(r))) {
            s = top.row(r);
            break;
        }

    std::vector<std::vector<Q>> rows;
    rows.push_back(a.unit());
    for (const auto& ub : p.u_basis) rows.push_back(ub);
    rows.push_back(s);
    std::vector<Q> rhs(m, Q(0));
    rhs[m - 1] = 1;
    auto pi = QMatrix::from_rows(rows).solve(rhs);
    if (!pi) fail(ErrorCode::Internal, "projection functional system is inconsistent");
    return HPair{p, std::move(s), std::move(*pi), d};
}

HomogEquation equation(const HPair& h) {
    const Algebra& a = h.pair.qp.algebra;
    size_t m = h.pair.m(), n = h.pair.n();
    size_t nv = n + 2;

    std::vector<std::vector<Q>> dirs = h.pair.u_basis;
    dirs.push_back(h.complement);
    std::vector<MultiPoly> v = coordinate_vector(m, nv, 1, dirs);

    MultiPoly z0 = MultiPoly::variable(nv, 0);
    MultiPoly out(nv);
    std::vector<MultiPoly> pw = v;
    for (size_t j = 1; j <= h.degree; ++j) {
        if (j > 1) pw = tensor_multiply(a, pw, v, nv);
        MultiPoly piece = apply_functional(h.pi, pw, nv);
        Q c = Q(1) / Q(static_cast<unsigned long>(j));
        if (j % 2 == 0) c = -c;
        for (size_t t = j; t < h.degree; ++t) piece = piece * z0;
        out += piece.scaled(c);
    }
    return HomogEquation{h.degree, std::move(out)};
}

std::vector<MultiPoly> chart_equations(const GaPair& p) {
    if (!validate_pair(p))
        fail(ErrorCode::DegenerateInput, "subspace does not generate the algebra");
    const Algebra& a = p.qp.algebra;
    size_t m = p.m(), n = p.n();

    std::vector<std::vector<Q>> basis = p.u_basis;
    auto complement = radical_complement(a, p.u_basis);
    for (auto& v : complement) basis.push_back(std::move(v));
    if (basis.size() + 1 != m) fail(ErrorCode::Internal, "chart basis does not span");

    size_t nv = m - 1;
    std::vector<MultiPoly> z = coordinate_vector(m, nv, 0, basis);
    std::vector<MultiPoly> lg = tensor_log(a, z, nv);

    std::vector<std::vector<Q>> rows;
    rows.push_back(a.unit());
    for (const auto& b : basis) rows.push_back(b);
    QMatrix frame = QMatrix::from_rows(rows);
    std::vector<MultiPoly> eqs;
    for (size_t j = n; j < nv; ++j) {
        std::vector<Q> rhs(m, Q(0));
        rhs[1 + j] = 1;
        auto pij = frame.solve(rhs);
        if (!pij) fail(ErrorCode::Internal, "chart frame is singular");
        eqs.push_back(apply_functional(*pij, lg, nv));
    }
    return eqs;
}

Q InvariantForm::value(const std::vector<std::vector<Q>>& args) const {
    if (args.size() != degree)
        fail(ErrorCode::DegenerateInput, "form expects exactly " + std::to_string(degree) +
                                             " arguments");
    size_t d = degree;
    // unit coordinate is the leading one on every presentation basis
    std::vector<Q> units(d);
    std::vector<std::vector<Q>> nil = args;
    for (size_t i = 0; i < d; ++i) {
        units[i] = args[i][0];
        nil[i][0] = 0;
    }
    Q total(0);
    for (unsigned mask = 0; mask + 1 < (1u << d); ++mask) {
        Q scalar(1);
        size_t k = 0;
        for (size_t i = 0; i < d; ++i)
            if (mask >> i & 1u) {
                scalar *= units[i];
                ++k;
            }
        if (scalar == 0) continue;
        std::vector<Q> prod = algebra.unit();
        for (size_t i = 0; i < d; ++i)
            if (!(mask >> i & 1u)) prod = algebra.multiply(prod, nil[i]);
        Q pv = dot(pi, prod);
        if (pv == 0) continue;
        Q coeff = small_factorial(k) * small_factorial(d - k - 1);
        if (k % 2 == 1) coeff = -coeff;
        total += scalar * coeff * pv;
    }
    return total;
}

InvariantForm invariant_form(const HPair& h) {
    return InvariantForm{h.degree, h.pair.qp.algebra, h.pi};
}

Subspace form_kernel(const HPair& h) {
    const Algebra& a = h.pair.qp.algebra;
    size_t m = a.dim(), d = h.degree;
    InvariantForm f = invariant_form(h);

    // contract all slots but the first against every multiset of basis vectors
    std::vector<std::vector<Q>> elems;
    for (size_t i = 0; i < m; ++i) elems.push_back(basis_vector(m, i));
    QMatrix sys(0, m);
    std::vector<size_t> tuple(d - 1, 0);
    for (;;) {
        std::vector<std::vector<Q>> args(d);
        for (size_t t = 0; t + 1 < d; ++t) args[t + 1] = elems[tuple[t]];
        std::vector<Q> row(m);
        for (size_t c = 0; c < m; ++c) {
            args[0] = elems[c];
            row[c] = f.value(args);
        }
        sys.append_row(std::move(row));
        // next nondecreasing tuple
        size_t pos = tuple.size();
        while (pos > 0 && tuple[pos - 1] == m - 1) --pos;
        if (pos == 0) break;
        size_t v = ++tuple[pos - 1];
        for (size_t t = pos; t < tuple.size(); ++t) tuple[t] = v;
    }
    Subspace kernel = Subspace::span(m, sys.kernel_basis().data());

    Subspace ideal = largest_ideal_inside(a, Subspace::span(m, h.pair.u_basis));
    if (!(kernel == ideal))
        fail(ErrorCode::Internal, "form kernel disagrees with the largest ideal inside U");
    return kernel;
}

bool is_nondegenerate(const HPair& h) { return form_kernel(h).dim() == 0; }

HPair reduce(const HPair& h) {
    Subspace ker = form_kernel(h);
    if (ker.dim() == 0) return h;
    const Algebra& a = h.pair.qp.algebra;
    size_t m = a.dim();

    // standard basis vectors surviving modulo the kernel, unit always first
    std::vector<size_t> picked;
    Subspace span = ker;
    for (size_t i = 0; i < m; ++i) {
        std::vector<Q> e = basis_vector(m, i);
        if (!span.contains(e)) {
            picked.push_back(i);
            span = span.sum(Subspace::span(m, {e}));
        }
    }
    size_t q = picked.size();

    QMatrix frame(m, m);
    for (size_t j = 0; j < q; ++j) frame.at(picked[j], j) = 1;
    for (size_t r = 0; r < ker.dim(); ++r)
        for (size_t i = 0; i < m; ++i) frame.at(i, q + r) = ker.basis().at(r, i);
    QMatrix frame_inv = frame.inverse();
    auto project = [&](const std::vector<Q>& x) {
        std::vector<Q> c = frame_inv.apply(x);
        return std::vector<Q>(c.begin(), c.begin() + static_cast<long>(q));
    };

    std::vector<std::vector<std::vector<Q>>> sc(
        q, std::vector<std::vector<Q>>(q, std::vector<Q>(q, Q(0))));
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j)
            sc[i][j] = project(a.multiply(basis_vector(m, picked[i]), basis_vector(m, picked[j])));
    std::vector<std::string> labels;
    for (size_t j : picked) labels.push_back(a.basis_labels()[j]);
    Algebra quotient(std::move(labels), std::move(sc), project(a.unit()));

    std::vector<std::vector<Q>> u2;
    Subspace got(q);
    for (const auto& ub : h.pair.u_basis) {
        std::vector<Q> v = project(ub);
        if (!got.contains(v)) {
            got = got.sum(Subspace::span(q, {v}));
            u2.push_back(std::move(v));
        }
    }

    GroebnerBasis ideal = presentation_ideal(quotient, u2);
    QuotientPresentation qp = quotient_presentation(u2.size(), ideal.gens);
    std::vector<std::vector<Q>> u3;
    for (size_t i = 0; i < u2.size(); ++i)
        u3.push_back(qp.project(MultiPoly::variable(u2.size(), i)));
    HPair out = make_h_pair(pair_with_u(std::move(qp), std::move(u3)));
    if (out.degree != h.degree) fail(ErrorCode::Internal, "reduction changed the degree");
    return out;
}

bool gorenstein_certificate(const HPair& h) {
    const Algebra& a = h.pair.qp.algebra;
    if (!invariants(a).is_gorenstein) return false;
    auto chain = radical_chain(a);
    if (h.degree >= chain.size()) return false;
    const Subspace& top = chain[h.degree];
    if (!(socle(a) == top)) return false;
    Subspace u = Subspace::span(a.dim(), h.pair.u_basis);
    if (u.intersect(top).dim() != 0) return false;
    return u.sum(top).dim() + 1 == a.dim();
}

HPair quadric_pair(size_t n) {
    if (n == 0) fail(ErrorCode::DegenerateInput, "quadric dimension must be positive");
    std::vector<MultiPoly> gens;
    if (n == 1) {
        MultiPoly s = MultiPoly::variable(1, 0);
        gens.push_back(s * s * s);
    } else {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                gens.push_back(MultiPoly::variable(n, i) * MultiPoly::variable(n, j));
        MultiPoly head = MultiPoly::variable(n, 0) * MultiPoly::variable(n, 0);
        for (size_t i = 1; i < n; ++i)
            gens.push_back(head - MultiPoly::variable(n, i) * MultiPoly::variable(n, i));
    }
    QuotientPresentation qp = quotient_presentation(n, std::move(gens));
    std::vector<std::vector<Q>> u;
    for (size_t i = 0; i < n; ++i) u.push_back(qp.project(MultiPoly::variable(n, i)));
    return make_h_pair(pair_with_u(std::move(qp), std::move(u)));
}

size_t quadratic_rank(const HomogEquation& e) {
    if (e.degree != 2)
        fail(ErrorCode::NotQuadratic, "equation has degree " + std::to_string(e.degree));
    size_t nv = e.poly.nvars();
    QMatrix sym(nv, nv);
    for (const auto& [expo, c] : e.poly.terms()) {
        size_t i = nv, j = nv;
        for (size_t k = 0; k < nv; ++k) {
            if (expo[k] == 2) i = j = k;
            if (expo[k] == 1) (i == nv ? i : j) = k;
        }
        if (i == j)
            sym.at(i, i) = c;
        else {
            sym.at(i, j) = c / 2;
            sym.at(j, i) = c / 2;
        }
    }
    return sym.rank();
}

bool boundary_test(const HPair& h, const std::vector<Q>& z) {
    const Algebra& a = h.pair.qp.algebra;
    if (z.size() != a.dim() || z[0] != 0)
        fail(ErrorCode::DegenerateInput, "direction must lie in the maximal ideal");
    std::vector<Q> p = a.power(z, static_cast<unsigned>(h.degree));
    return Subspace::span(a.dim(), h.pair.u_basis).contains(p);
}

}  // namespace addact
