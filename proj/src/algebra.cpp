#include "addact/algebra.hpp"

#include <algorithm>
#include <random>

#include "addact/error.hpp"

namespace addact {

namespace {

// Univariate polynomials over Q, coefficients ascending.
using UniPoly = std::vector<Q>;

UniPoly trim(UniPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

UniPoly derivative(const UniPoly& p) {
    UniPoly out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Q(static_cast<long>(i)));
    return trim(out);
}

UniPoly remainder(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Q f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = trim(std::move(a));
    }
    return a;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        UniPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Q lead = a.back();
        for (Q& c : a) c /= lead;
    }
    return a;
}

UniPoly quotient(UniPoly a, const UniPoly& b) {
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Q(0));
    while (a.size() >= b.size() && !a.empty()) {
        Q f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = trim(std::move(a));
    }
    return trim(std::move(q));
}

// Faddeev-LeVerrier; returns char poly of m, monic, ascending coefficients.
UniPoly char_poly(const QMatrix& m) {
    size_t n = m.rows();
    std::vector<Q> c(n + 1, Q(0));
    c[n] = 1;
    QMatrix mk = QMatrix::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Q tr = 0;
        for (size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        Q ck = -tr / Q(static_cast<long>(k));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return c;
}

std::vector<Q> square_free_rational_roots(const UniPoly& p) {
    UniPoly sf = trim(p);
    UniPoly d = derivative(sf);
    if (!d.empty()) sf = quotient(sf, poly_gcd(sf, d));
    return rational_roots(sf);
}

}  // namespace

Algebra::Algebra(std::vector<std::string> basis_labels,
                 std::vector<std::vector<std::vector<Q>>> structure, std::vector<Q> unit)
    : labels_(std::move(basis_labels)), structure_(std::move(structure)), unit_(std::move(unit)) {
    size_t m = labels_.size();
    if (structure_.size() != m || unit_.size() != m)
        fail(ErrorCode::Internal, "algebra tensor shape mismatch");
    for (const auto& row : structure_) {
        if (row.size() != m) fail(ErrorCode::Internal, "algebra tensor shape mismatch");
        for (const auto& cell : row)
            if (cell.size() != m) fail(ErrorCode::Internal, "algebra tensor shape mismatch");
    }
}

std::vector<Q> Algebra::multiply(const std::vector<Q>& x, const std::vector<Q>& y) const {
    size_t m = dim();
    if (x.size() != m || y.size() != m) fail(ErrorCode::Internal, "element length mismatch");
    std::vector<Q> out(m, Q(0));
    for (size_t i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < m; ++j) {
            if (y[j] == 0) continue;
            Q f = x[i] * y[j];
            for (size_t k = 0; k < m; ++k) out[k] += f * structure_[i][j][k];
        }
    }
    return out;
}

QMatrix Algebra::mult_operator(const std::vector<Q>& x) const {
    size_t m = dim();
    if (x.size() != m) fail(ErrorCode::Internal, "element length mismatch");
    QMatrix l(m, m);
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i) {
            if (x[i] == 0) continue;
            for (size_t k = 0; k < m; ++k) l.at(k, j) += x[i] * structure_[i][j][k];
        }
    return l;
}

std::vector<Q> Algebra::power(const std::vector<Q>& x, unsigned k) const {
    std::vector<Q> acc = unit_;
    for (unsigned t = 0; t < k; ++t) acc = multiply(acc, x);
    return acc;
}

std::vector<Q> Algebra::basis_element(size_t i) const {
    std::vector<Q> e(dim(), Q(0));
    e[i] = 1;
    return e;
}

bool Algebra::validate() const {
    size_t m = dim();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < i; ++j)
            if (structure_[i][j] != structure_[j][i]) return false;
    for (size_t i = 0; i < m; ++i) {
        if (multiply(unit_, basis_element(i)) != basis_element(i)) return false;
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                auto left = multiply(multiply(basis_element(i), basis_element(j)), basis_element(k));
                auto right = multiply(basis_element(i), multiply(basis_element(j), basis_element(k)));
                if (left != right) return false;
            }
    }
    return true;
}

bool Algebra::is_nilpotent(const std::vector<Q>& x) const {
    return mult_operator(x).power(static_cast<unsigned>(dim())).is_zero();
}

std::vector<Q> Algebra::exp_nilpotent(const std::vector<Q>& z) const {
    if (!is_nilpotent(z)) fail(ErrorCode::NotNilpotent, "exp argument is not nilpotent");
    std::vector<Q> acc = unit_;
    std::vector<Q> term = unit_;
    for (size_t k = 1; k <= dim(); ++k) {
        term = multiply(term, z);
        bool zero = std::all_of(term.begin(), term.end(), [](const Q& c) { return c == 0; });
        if (zero) break;
        Q inv_fact = Q(1) / Q(factorial(static_cast<unsigned>(k)));
        for (size_t i = 0; i < dim(); ++i) acc[i] += inv_fact * term[i];
    }
    return acc;
}

std::vector<Q> Algebra::log_one_plus(const std::vector<Q>& z) const {
    if (!is_nilpotent(z)) fail(ErrorCode::NotNilpotent, "log argument is not 1 + nilpotent");
    std::vector<Q> acc(dim(), Q(0));
    std::vector<Q> term = unit_;
    for (size_t k = 1; k <= dim(); ++k) {
        term = multiply(term, z);
        bool zero = std::all_of(term.begin(), term.end(), [](const Q& c) { return c == 0; });
        if (zero) break;
        Q coeff = Q(k % 2 == 1 ? 1 : -1) / Q(static_cast<long>(k));
        for (size_t i = 0; i < dim(); ++i) acc[i] += coeff * term[i];
    }
    return acc;
}

MultiPoly QuotientPresentation::lift(const std::vector<Q>& element) const {
    if (element.size() != basis_monomials.size())
        fail(ErrorCode::Internal, "element length mismatch");
    MultiPoly out(nvars);
    for (size_t i = 0; i < element.size(); ++i) out.add_term(basis_monomials[i], element[i]);
    return out;
}

std::vector<Q> QuotientPresentation::project(const MultiPoly& f) const {
    MultiPoly nf = normal_form(f.widened(nvars), gb);
    std::vector<Q> out(basis_monomials.size(), Q(0));
    for (const auto& [e, c] : nf.terms()) {
        auto it = std::find(basis_monomials.begin(), basis_monomials.end(), e);
        if (it == basis_monomials.end())
            fail(ErrorCode::Internal, "normal form left the standard-monomial span");
        out[static_cast<size_t>(it - basis_monomials.begin())] = c;
    }
    return out;
}

std::vector<MultiPoly> tensor_multiply(const Algebra& a, const std::vector<MultiPoly>& x,
                                       const std::vector<MultiPoly>& y, size_t nvars) {
    size_t m = a.dim();
    const auto& c = a.structure();
    std::vector<MultiPoly> out(m, MultiPoly(nvars));
    for (size_t i = 0; i < m; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < m; ++j) {
            if (y[j].is_zero()) continue;
            MultiPoly prod = x[i] * y[j];
            for (size_t k = 0; k < m; ++k)
                if (c[i][j][k] != 0) out[k] += prod.scaled(c[i][j][k]);
        }
    }
    return out;
}

QuotientPresentation quotient_presentation(size_t nvars, std::vector<MultiPoly> gens,
                                           MonoOrder order, unsigned degree_cap, size_t dim_cap,
                                           bool require_origin_support) {
    for (MultiPoly& g : gens) g = g.widened(nvars);
    GroebnerBasis gb = groebner(std::move(gens), order, degree_cap);
    std::vector<Expo> mono = standard_monomials(gb, dim_cap);
    if (mono.empty()) fail(ErrorCode::DegenerateInput, "ideal contains 1, quotient is zero");

    size_t m = mono.size();
    // The basis starts at the unit monomial by construction (degree 0 first).
    if (require_origin_support) {
        for (size_t v = 0; v < nvars; ++v) {
            Expo p(nvars, 0);
            p[v] = static_cast<int>(m);
            if (!ideal_contains(gb, MultiPoly::monomial(nvars, p)))
                fail(ErrorCode::NotSupportedAtOrigin,
                     "no power of variable " + std::to_string(v + 1) + " lies in the ideal");
        }
    }

    std::vector<std::string> names = default_names(nvars, "S");
    std::vector<std::string> labels;
    for (const Expo& e : mono)
        labels.push_back(mono_degree(e) == 0 ? "1"
                                             : poly_to_string(MultiPoly::monomial(nvars, e), names, order));

    QuotientPresentation out;
    out.nvars = nvars;
    out.gb = std::move(gb);
    out.basis_monomials = std::move(mono);

    std::vector<std::vector<std::vector<Q>>> structure(
        m, std::vector<std::vector<Q>>(m, std::vector<Q>(m, Q(0))));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= i; ++j) {
            Expo prod(nvars);
            for (size_t v = 0; v < nvars; ++v)
                prod[v] = out.basis_monomials[i][v] + out.basis_monomials[j][v];
            MultiPoly nf = normal_form(MultiPoly::monomial(nvars, prod), out.gb);
            std::vector<Q> coeffs(m, Q(0));
            for (const auto& [e, c] : nf.terms()) {
                auto it = std::find(out.basis_monomials.begin(), out.basis_monomials.end(), e);
                if (it == out.basis_monomials.end())
                    fail(ErrorCode::Internal, "normal form left the standard-monomial span");
                coeffs[static_cast<size_t>(it - out.basis_monomials.begin())] = c;
            }
            structure[i][j] = coeffs;
            structure[j][i] = std::move(coeffs);
        }
    std::vector<Q> unit(m, Q(0));
    unit[0] = 1;
    out.algebra = Algebra(std::move(labels), std::move(structure), std::move(unit));
    return out;
}

Algebra from_presentation(size_t nvars, std::vector<MultiPoly> gens) {
    return quotient_presentation(nvars, std::move(gens)).algebra;
}

Subspace maximal_ideal(const Algebra& a) {
    size_t m = a.dim();
    // For a local algebra with rational residue field, the nilpotents are
    // exactly the trace-zero elements of the regular representation.
    QMatrix trace_row(1, m);
    for (size_t i = 0; i < m; ++i) {
        QMatrix l = a.mult_operator(a.basis_element(i));
        Q tr = 0;
        for (size_t k = 0; k < m; ++k) tr += l.at(k, k);
        trace_row.at(0, i) = tr;
    }
    QMatrix ker = trace_row.kernel_basis();
    if (ker.rows() != m - 1)
        fail(ErrorCode::NotLocal, "trace form does not leave a hyperplane of candidates");
    for (size_t i = 0; i < ker.rows(); ++i)
        if (!a.is_nilpotent(ker.row(i)))
            fail(ErrorCode::NotLocal,
                 "algebra is not local with rational residue field: non-nilpotent trace-zero element");
    std::vector<std::vector<Q>> rows;
    for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
    return Subspace::span(m, rows);
}

namespace {

// Products of subspace elements, as a subspace.
Subspace subspace_product(const Algebra& a, const Subspace& x, const Subspace& y) {
    std::vector<std::vector<Q>> vecs;
    for (size_t i = 0; i < x.dim(); ++i)
        for (size_t j = 0; j < y.dim(); ++j)
            vecs.push_back(a.multiply(x.basis().row(i), y.basis().row(j)));
    return Subspace::span(a.dim(), vecs);
}

Algebra restrict_to_block(const Algebra& a, const std::vector<std::vector<Q>>& block_basis,
                          std::vector<std::string> labels) {
    size_t d = block_basis.size();
    QMatrix basis_t(a.dim(), d);
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < a.dim(); ++i) basis_t.at(i, j) = block_basis[j][i];

    auto coords = [&](const std::vector<Q>& v) {
        auto sol = basis_t.solve(v);
        if (!sol) fail(ErrorCode::Internal, "block is not closed under multiplication");
        return *sol;
    };

    std::vector<std::vector<std::vector<Q>>> structure(
        d, std::vector<std::vector<Q>>(d, std::vector<Q>(d)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            structure[i][j] = coords(a.multiply(block_basis[i], block_basis[j]));

    // Block unit: u with u * b_j = b_j for all j, solved in block coordinates.
    QMatrix sys(d * d, d);
    std::vector<Q> target(d * d, Q(0));
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < d; ++i) {
            std::vector<Q> prod = structure[i][j];
            for (size_t k = 0; k < d; ++k) sys.at(j * d + k, i) = prod[k];
        }
        target[j * d + j] = 1;
    }
    auto u = sys.solve(target);
    if (!u) fail(ErrorCode::Internal, "block has no unit");
    return Algebra(std::move(labels), std::move(structure), *u);
}

}  // namespace

std::vector<LocalBlock> local_blocks(const Algebra& a) {
    if (a.dim() == 0) fail(ErrorCode::DegenerateInput, "zero algebra");

    std::vector<std::vector<std::vector<Q>>> blocks;
    {
        std::vector<std::vector<Q>> whole;
        for (size_t i = 0; i < a.dim(); ++i) whole.push_back(a.basis_element(i));
        blocks.push_back(std::move(whole));
    }

    bool split_happened = true;
    while (split_happened) {
        split_happened = false;
        std::vector<std::vector<std::vector<Q>>> next;
        for (auto& block : blocks) {
            size_t d = block.size();
            if (d == 1) {
                next.push_back(std::move(block));
                continue;
            }
            QMatrix basis_t(a.dim(), d);
            for (size_t j = 0; j < d; ++j)
                for (size_t i = 0; i < a.dim(); ++i) basis_t.at(i, j) = block[j][i];

            bool this_split = false;
            for (size_t gen = 0; gen < d && !this_split; ++gen) {
                // L_b restricted to the block, in block coordinates.
                QMatrix l(d, d);
                for (size_t j = 0; j < d; ++j) {
                    std::vector<Q> prod = a.multiply(block[gen], block[j]);
                    auto sol = basis_t.solve(prod);
                    if (!sol) fail(ErrorCode::Internal, "block not closed under multiplication");
                    for (size_t k = 0; k < d; ++k) l.at(k, j) = (*sol)[k];
                }
                std::vector<Q> roots = square_free_rational_roots(char_poly(l));
                // Generalized eigenspaces must fill the block, else the
                // characteristic polynomial has an irrational factor.
                std::vector<std::vector<std::vector<Q>>> pieces;
                size_t total = 0;
                for (const Q& lambda : roots) {
                    QMatrix shifted = l;
                    for (size_t k = 0; k < d; ++k) shifted.at(k, k) -= lambda;
                    QMatrix ker = shifted.power(static_cast<unsigned>(d)).kernel_basis();
                    std::vector<std::vector<Q>> piece;
                    for (size_t r = 0; r < ker.rows(); ++r) {
                        // back to ambient coordinates
                        std::vector<Q> v(a.dim(), Q(0));
                        for (size_t j = 0; j < d; ++j)
                            for (size_t i = 0; i < a.dim(); ++i)
                                v[i] += ker.at(r, j) * block[j][i];
                        piece.push_back(std::move(v));
                    }
                    total += piece.size();
                    pieces.push_back(std::move(piece));
                }
                if (total != d)
                    fail(ErrorCode::IrrationalSplitting,
                         "multiplication operator has an irrational eigenvalue");
                if (pieces.size() > 1) {
                    for (auto& piece : pieces) next.push_back(std::move(piece));
                    this_split = true;
                    split_happened = true;
                }
            }
            if (!this_split) next.push_back(std::move(block));
        }
        blocks = std::move(next);
    }

    // Canonicalize each block basis and order blocks deterministically.
    std::vector<LocalBlock> out;
    for (auto& block : blocks) {
        Subspace s = Subspace::span(a.dim(), block);
        std::vector<std::vector<Q>> rows;
        for (size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis().row(i));
        std::vector<std::string> labels;
        for (size_t i = 0; i < rows.size(); ++i) labels.push_back("b" + std::to_string(i + 1));
        LocalBlock lb{rows, restrict_to_block(a, rows, std::move(labels))};
        out.push_back(std::move(lb));
    }
    std::sort(out.begin(), out.end(), [](const LocalBlock& x, const LocalBlock& y) {
        if (x.embedding.size() != y.embedding.size())
            return x.embedding.size() < y.embedding.size();
        return x.embedding < y.embedding;
    });
    return out;
}

std::vector<Algebra> local_decomposition(const Algebra& a) {
    std::vector<Algebra> out;
    for (auto& block : local_blocks(a)) out.push_back(std::move(block.algebra));
    return out;
}

std::vector<Subspace> radical_chain(const Algebra& a) {
    // Radical = direct sum of the maximal ideals of the local blocks, pulled
    // back to ambient coordinates.
    std::vector<std::vector<Q>> radical_vecs;
    for (const LocalBlock& block : local_blocks(a)) {
        Subspace mi = maximal_ideal(block.algebra);
        for (size_t r = 0; r < mi.dim(); ++r) {
            std::vector<Q> v(a.dim(), Q(0));
            for (size_t j = 0; j < block.embedding.size(); ++j)
                for (size_t i = 0; i < a.dim(); ++i)
                    v[i] += mi.basis().at(r, j) * block.embedding[j][i];
            radical_vecs.push_back(std::move(v));
        }
    }
    Subspace radical = Subspace::span(a.dim(), radical_vecs);

    std::vector<Subspace> chain;
    chain.push_back(Subspace::full(a.dim()));
    Subspace power = radical;
    while (power.dim() > 0) {
        chain.push_back(power);
        power = subspace_product(a, power, radical);
    }
    chain.push_back(Subspace(a.dim()));
    return chain;
}

Subspace socle(const Algebra& a) {
    std::vector<Subspace> chain = radical_chain(a);
    const Subspace& radical = chain.size() > 1 ? chain[1] : chain[0];
    if (radical.dim() == 0) return Subspace::full(a.dim());
    QMatrix stacked(0, a.dim());
    for (size_t r = 0; r < radical.dim(); ++r) {
        QMatrix l = a.mult_operator(radical.basis().row(r));
        for (size_t i = 0; i < l.rows(); ++i) stacked.append_row(l.row(i));
    }
    QMatrix ker = stacked.kernel_basis();
    std::vector<std::vector<Q>> rows;
    for (size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
    return Subspace::span(a.dim(), rows);
}

AlgebraInvariants invariants(const Algebra& a) {
    AlgebraInvariants out;
    out.dim = a.dim();
    out.num_maximal_ideals = local_blocks(a).size();
    out.is_local = out.num_maximal_ideals == 1;

    std::vector<Subspace> chain = radical_chain(a);
    // chain = A = J^0, J^1, ..., J^{l-1}, 0
    out.nilpotency_index = chain.size() - 1;
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        out.hilbert_samuel.push_back(chain[i].dim() - chain[i + 1].dim());
    out.socle_dim = socle(a).dim();
    out.is_gorenstein = out.socle_dim == 1;
    return out;
}

std::optional<Z> orbit_count_projective(const Algebra& a) {
    Z count = 1;
    for (const LocalBlock& block : local_blocks(a)) {
        const Algebra& b = block.algebra;
        Subspace mi = maximal_ideal(b);
        Subspace mi2 = subspace_product(b, mi, mi);
        if (mi.dim() - mi2.dim() > 1) return std::nullopt;
        count *= Z(static_cast<long>(b.dim()) + 1);
    }
    return count - 1;
}

namespace {

Subspace krylov_span(const std::vector<QMatrix>& matrices, const std::vector<Q>& v) {
    size_t m = v.size();
    Subspace span = Subspace::span(m, {v});
    bool grew = true;
    while (grew) {
        grew = false;
        for (const QMatrix& mat : matrices) {
            for (size_t r = 0; r < span.dim(); ++r) {
                std::vector<Q> w = mat.apply(span.basis().row(r));
                if (!span.contains(w)) {
                    span = span.sum(Subspace::span(m, {w}));
                    grew = true;
                }
            }
        }
    }
    return span;
}

}  // namespace

std::optional<std::vector<Q>> cyclic_vector(const std::vector<QMatrix>& matrices) {
    if (matrices.empty()) fail(ErrorCode::DegenerateInput, "no matrices given");
    size_t m = matrices.front().rows();
    for (const QMatrix& mat : matrices)
        if (mat.rows() != m || mat.cols() != m)
            fail(ErrorCode::Internal, "matrices must be square of equal size");
    for (size_t i = 0; i < matrices.size(); ++i)
        for (size_t j = i + 1; j < matrices.size(); ++j)
            if (!(matrices[i] * matrices[j] == matrices[j] * matrices[i]))
                fail(ErrorCode::NotCommuting, "matrices do not commute");

    bool all_nilpotent = std::all_of(matrices.begin(), matrices.end(), [&](const QMatrix& mat) {
        return mat.power(static_cast<unsigned>(m)).is_zero();
    });

    if (all_nilpotent) {
        // Nakayama: v is cyclic iff it spans K^m modulo W = sum of images, so
        // cyclic vectors exist iff dim W = m - 1; any v outside W works.
        std::vector<std::vector<Q>> image_vecs;
        for (const QMatrix& mat : matrices)
            for (size_t j = 0; j < m; ++j) {
                std::vector<Q> col(m);
                for (size_t i = 0; i < m; ++i) col[i] = mat.at(i, j);
                image_vecs.push_back(std::move(col));
            }
        Subspace w = Subspace::span(m, image_vecs);
        if (w.dim() != m - 1) return std::nullopt;
        for (size_t i = 0; i < m; ++i) {
            std::vector<Q> e(m, Q(0));
            e[i] = 1;
            if (!w.contains(e)) {
                if (krylov_span(matrices, e).dim() != m)
                    fail(ErrorCode::Internal, "span certificate failed for a Nakayama witness");
                return e;
            }
        }
        fail(ErrorCode::Internal, "no coordinate vector escapes a proper subspace");
    }

    // General case: certified search.  Basis vectors first, then a fixed-seed
    // sweep of small rational combinations.
    for (size_t i = 0; i < m; ++i) {
        std::vector<Q> e(m, Q(0));
        e[i] = 1;
        if (krylov_span(matrices, e).dim() == m) return e;
    }
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Q> v(m);
        for (size_t i = 0; i < m; ++i) v[i] = Q(pick(rng));
        if (std::all_of(v.begin(), v.end(), [](const Q& c) { return c == 0; })) continue;
        if (krylov_span(matrices, v).dim() == m) return v;
    }
    return std::nullopt;
}

size_t kravchuk_number(const std::vector<QMatrix>& matrices) {
    if (matrices.empty()) fail(ErrorCode::DegenerateInput, "no matrices given");
    size_t m = matrices.front().rows();
    std::vector<std::vector<Q>> image_vecs;
    for (const QMatrix& mat : matrices)
        for (size_t j = 0; j < m; ++j) {
            std::vector<Q> col(m);
            for (size_t i = 0; i < m; ++i) col[i] = mat.at(i, j);
            image_vecs.push_back(std::move(col));
        }
    return m - Subspace::span(m, image_vecs).dim();
}

}  // namespace addact
