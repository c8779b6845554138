#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "addact/error.hpp"
#include "addact/hyper.hpp"
#include "doctest.h"

using namespace addact;

namespace {

QuotientPresentation present(size_t nvars, const std::vector<std::string>& gens) {
    std::vector<MultiPoly> polys;
    auto names = default_names(nvars, "S");
    for (const auto& g : gens) polys.push_back(poly_parse(g, names));
    return quotient_presentation(nvars, polys);
}

std::vector<Q> var_class(const QuotientPresentation& qp, size_t i) {
    return qp.project(MultiPoly::variable(qp.nvars, i));
}

std::vector<Q> cls(const QuotientPresentation& qp, const std::string& text) {
    return qp.project(poly_parse(text, default_names(qp.nvars, "S")));
}

std::vector<std::string> znames(size_t count) {
    std::vector<std::string> out;
    for (size_t i = 0; i < count; ++i) out.push_back("z" + std::to_string(i));
    return out;
}

// chart polynomials use variable k for the coordinate z_{k+1}
std::vector<std::string> chart_znames(size_t count) {
    std::vector<std::string> out;
    for (size_t i = 1; i <= count; ++i) out.push_back("z" + std::to_string(i));
    return out;
}

std::vector<Q> unit_vec(size_t m, size_t i) {
    std::vector<Q> e(m, Q(0));
    e[i] = 1;
    return e;
}

// Ideal no. 30 in the classification order: the smallest non-quadric
// hypersurface example, K[S1,S2,S3]/(S1^2, S2^2, S1 S3, S2 S3, S1 S2 - S3^3)
// with U = <S1, S2, S3, S3^2>.
GaPair cubic_pair() {
    auto qp = present(3, {"S1^2", "S2^2", "S1*S3", "S2*S3", "S1*S2 - S3^3"});
    std::vector<std::vector<Q>> u = {var_class(qp, 0), var_class(qp, 1), var_class(qp, 2),
                                     cls(qp, "S3^2")};
    return pair_with_u(std::move(qp), std::move(u));
}

// Corank-one quadric pairs: kernel of dimension one, rank 3 equations.
GaPair corank_spur_pair() {
    auto qp = present(2, {"S1^3", "S1*S2", "S2^2"});
    std::vector<std::vector<Q>> u = {var_class(qp, 0), var_class(qp, 1)};
    return pair_with_u(std::move(qp), std::move(u));
}

GaPair corank_chain_pair() {
    auto qp = present(1, {"S1^4"});
    std::vector<std::vector<Q>> u = {unit_vec(4, 1), unit_vec(4, 3)};
    return pair_with_u(std::move(qp), std::move(u));
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const AddactError& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

Q rnd_q(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    return Q(num(rng));
}

std::vector<Q> rnd_vec(std::mt19937& rng, size_t m, bool in_max_ideal) {
    std::vector<Q> v(m);
    for (size_t i = 0; i < m; ++i) v[i] = rnd_q(rng);
    if (in_max_ideal) v[0] = 0;
    return v;
}

MultiPoly without_z0(const MultiPoly& p) {
    MultiPoly out(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) out.add_term(Expo(e.begin() + 1, e.end()), c);
    return out;
}

}  // namespace

TEST_CASE("h-pair construction fixes degree and projection data") {
    HPair cubic = make_h_pair(cubic_pair());
    CHECK(cubic.degree == 3);
    // basis (1, S1, S2, S3, S1*S2, S3^2); m^3 is spanned by the class of S1*S2
    CHECK(cubic.complement == unit_vec(6, 4));
    CHECK(cubic.pi == std::vector<Q>{Q(0), Q(0), Q(0), Q(0), Q(1), Q(0)});

    HPair chain = make_h_pair(corank_chain_pair());
    CHECK(chain.degree == 2);
    CHECK(chain.complement == unit_vec(4, 2));
    CHECK(chain.pi == std::vector<Q>{Q(0), Q(0), Q(1), Q(0)});

    auto qp = present(1, {"S1^4"});
    CHECK(code_of([&] { make_h_pair(pair_with_u(qp, {unit_vec(4, 1)})); }) ==
          ErrorCode::DegenerateInput);  // codimension two
    CHECK(code_of([&] { make_h_pair(pair_with_u(qp, {unit_vec(4, 2), unit_vec(4, 3)})); }) ==
          ErrorCode::DegenerateInput);  // right codimension, does not generate
}

TEST_CASE("chart equations of exponential images") {
    auto chain4 = present(1, {"S1^4"});
    auto eqs = chart_equations(pair_with_u(chain4, {unit_vec(4, 1)}));
    auto names3 = chart_znames(3);
    REQUIRE(eqs.size() == 2);
    CHECK(eqs[0] == poly_parse("1 * z2 - 1/2 * z1^2", names3));
    CHECK(eqs[1] == poly_parse("1 * z3 - 1 * z1*z2 + 1/3 * z1^3", names3));

    auto chain3 = present(1, {"S1^3"});
    auto eqs3 = chart_equations(pair_with_u(chain3, {unit_vec(3, 1)}));
    REQUIRE(eqs3.size() == 1);
    CHECK(eqs3[0] == poly_parse("1 * z2 - 1/2 * z1^2", chart_znames(2)));

    CHECK(chart_equations(pair_with_maximal_ideal(chain3)).empty());

    // exp(t S) has chart coordinates (t, t^2/2, t^3/6); both equations vanish
    // there and fail off the image
    std::vector<Q> samples = {Q(1), Q(-2), Q(2) / 3, Q(7) / 5};
    for (const Q& t : samples) {
        std::vector<Q> pt = {t, t * t / 2, t * t * t / 6};
        CHECK(poly_eval(eqs[0], pt) == 0);
        CHECK(poly_eval(eqs[1], pt) == 0);
    }
    CHECK(poly_eval(eqs[0], {Q(0), Q(1), Q(0)}) == 1);

    // same vanishing for a two-generator subspace of the quadric pair
    HPair quad = quadric_pair(2);
    auto qeqs = chart_equations(quad.pair);
    REQUIRE(qeqs.size() == 1);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Q> arg(4, Q(0));
        for (size_t i = 0; i < 2; ++i) {
            Q c = rnd_q(rng);
            for (size_t k = 0; k < 4; ++k) arg[k] += c * quad.pair.u_basis[i][k];
        }
        std::vector<Q> pt = quad.pair.qp.algebra.exp_nilpotent(arg);
        pt[0] -= 1;
        // chart coordinates against (u_1, u_2, complement)
        std::vector<std::vector<Q>> frame = quad.pair.u_basis;
        frame.push_back(quad.complement);
        auto coords = QMatrix::from_rows(frame).transpose().solve(pt);
        REQUIRE(coords.has_value());
        CHECK(poly_eval(qeqs[0], *coords) == 0);
    }
}

TEST_CASE("equations of the worked pairs") {
    HPair cubic = make_h_pair(cubic_pair());
    HomogEquation ce = equation(cubic);
    CHECK(ce.degree == 3);
    CHECK(poly_to_string(ce.poly, znames(6)) ==
          "1 * z0^2*z5 - 1 * z0*z1*z2 - 1 * z0*z3*z4 + 1/3 * z3^3");

    CHECK(poly_to_string(equation(quadric_pair(2)).poly, znames(4)) ==
          "1 * z0*z3 - 1/2 * z1^2 - 1/2 * z2^2");
    CHECK(poly_to_string(equation(make_h_pair(corank_spur_pair())).poly, znames(4)) ==
          "1 * z0*z3 - 1/2 * z1^2");
    CHECK(poly_to_string(equation(make_h_pair(corank_chain_pair())).poly, znames(4)) ==
          "1 * z0*z3 - 1/2 * z1^2");

    std::vector<HPair> pairs = {cubic, quadric_pair(2), quadric_pair(3),
                                make_h_pair(corank_spur_pair()), make_h_pair(corank_chain_pair())};
    for (const HPair& h : pairs) {
        HomogEquation e = equation(h);
        size_t n = h.pair.n();
        Expo norm(n + 2, 0);
        norm[0] = static_cast<int>(e.degree) - 1;
        norm[n + 1] = 1;
        CHECK(e.poly.coeff(norm) == 1);
        for (const auto& [expo, c] : e.poly.terms()) {
            CHECK(mono_degree(expo) == static_cast<int>(e.degree));
            // the cone coordinate only ever multiplies z0^(d-1)
            if (expo[n + 1] != 0) CHECK(expo == norm);
        }
        // setting z0 = 1 recovers the one chart equation of the pair
        auto charts = chart_equations(h.pair);
        REQUIRE(charts.size() == 1);
        CHECK(without_z0(e.poly) == charts[0]);
    }
}

TEST_CASE("invariant form values and identities") {
    HPair cubic = make_h_pair(cubic_pair());
    InvariantForm f = invariant_form(cubic);
    size_t m = 6;
    CHECK(f.value({unit_vec(m, 3), unit_vec(m, 3), unit_vec(m, 3)}) == 2);
    CHECK(f.value({unit_vec(m, 0), unit_vec(m, 0), unit_vec(m, 0)}) == 0);
    CHECK(code_of([&] { f.value({unit_vec(m, 3)}); }) == ErrorCode::DegenerateInput);

    std::mt19937 rng(417);
    std::vector<HPair> pairs = {cubic, quadric_pair(2), make_h_pair(corank_chain_pair())};
    for (const HPair& h : pairs) {
        InvariantForm g = invariant_form(h);
        const Algebra& a = h.pair.qp.algebra;
        size_t dim = a.dim(), d = g.degree;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::vector<Q>> args;
            for (size_t i = 0; i < d; ++i) args.push_back(rnd_vec(rng, dim, false));

            // symmetry under swapping the first two slots
            auto swapped = args;
            std::swap(swapped[0], swapped[1]);
            CHECK(g.value(args) == g.value(swapped));

            // linearity in slot 0
            std::vector<Q> extra = rnd_vec(rng, dim, false);
            Q lambda = rnd_q(rng);
            auto shifted = args;
            for (size_t k = 0; k < dim; ++k) shifted[0][k] += lambda * extra[k];
            auto other = args;
            other[0] = extra;
            CHECK(g.value(shifted) == g.value(args) + lambda * g.value(other));

            // derivation identity for u in U
            std::vector<Q> u(dim, Q(0));
            for (const auto& ub : h.pair.u_basis) {
                Q c = rnd_q(rng);
                for (size_t k = 0; k < dim; ++k) u[k] += c * ub[k];
            }
            Q total(0);
            for (size_t slot = 0; slot < d; ++slot) {
                auto acted = args;
                acted[slot] = a.multiply(u, acted[slot]);
                total += g.value(acted);
            }
            CHECK(total == 0);
        }
    }
}

TEST_CASE("polarization recovers the equation") {
    std::mt19937 rng(5151);
    std::vector<HPair> pairs = {make_h_pair(cubic_pair()), quadric_pair(2),
                                make_h_pair(corank_spur_pair()), make_h_pair(corank_chain_pair())};
    for (const HPair& h : pairs) {
        InvariantForm f = invariant_form(h);
        HomogEquation e = equation(h);
        size_t m = h.pair.m(), d = h.degree;
        std::vector<std::vector<Q>> frame;
        frame.push_back(h.pair.qp.algebra.unit());
        for (const auto& ub : h.pair.u_basis) frame.push_back(ub);
        frame.push_back(h.complement);
        QMatrix cols = QMatrix::from_rows(frame).transpose();
        // diagonal values recover the equation up to the factor d! (-1)^(d+1)
        Q factor = (d % 2 == 0) ? Q(-1) : Q(1);
        for (size_t i = 2; i <= d; ++i) factor *= Q(static_cast<unsigned long>(i));
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Q> w = rnd_vec(rng, m, false);
            auto coords = cols.solve(w);
            REQUIRE(coords.has_value());
            std::vector<std::vector<Q>> diag(d, w);
            CHECK(f.value(diag) == factor * poly_eval(e.poly, *coords));
        }
    }
}

TEST_CASE("form kernels, certificates and reduction") {
    HPair cubic = make_h_pair(cubic_pair());
    CHECK(form_kernel(cubic).dim() == 0);
    CHECK(is_nondegenerate(cubic));
    CHECK(gorenstein_certificate(cubic));
    CHECK(poly_to_string(equation(reduce(cubic)).poly, znames(6)) ==
          poly_to_string(equation(cubic).poly, znames(6)));

    HPair spur = make_h_pair(corank_spur_pair());
    CHECK(form_kernel(spur) == Subspace::span(4, {unit_vec(4, 2)}));  // the S2 line
    CHECK(!is_nondegenerate(spur));
    CHECK(!gorenstein_certificate(spur));
    HPair spur_red = reduce(spur);
    CHECK(spur_red.degree == 2);
    CHECK(spur_red.pair.m() == 3);
    CHECK(is_nondegenerate(spur_red));
    CHECK(gorenstein_certificate(spur_red));
    CHECK(poly_to_string(equation(spur_red).poly, znames(3)) == "1 * z0*z2 - 1/2 * z1^2");

    HPair chain = make_h_pair(corank_chain_pair());
    CHECK(form_kernel(chain) == Subspace::span(4, {unit_vec(4, 3)}));  // the S^3 line
    HPair chain_red = reduce(chain);
    CHECK(poly_to_string(equation(chain_red).poly, znames(3)) == "1 * z0*z2 - 1/2 * z1^2");

    // Gorenstein algebra, subspace missing the socle: K[S]/(S^5) with
    // U = <S, S^2, S^4>; the kernel is the socle line, the quotient is clean.
    auto c5 = present(1, {"S1^5"});
    HPair deep = make_h_pair(
        pair_with_u(c5, {unit_vec(5, 1), unit_vec(5, 2), unit_vec(5, 4)}));
    CHECK(deep.degree == 3);
    CHECK(form_kernel(deep) == Subspace::span(5, {unit_vec(5, 4)}));
    CHECK(!gorenstein_certificate(deep));
    HPair deep_red = reduce(deep);
    CHECK(deep_red.degree == 3);
    CHECK(is_nondegenerate(deep_red));
    CHECK(gorenstein_certificate(deep_red));
    // the dropped direction is a cone coordinate of the input equation: the
    // input never mentions z3, and renaming hides it exactly
    CHECK(poly_to_string(equation(deep).poly, {"z0", "z1", "z2", "cone", "z3"}) ==
          poly_to_string(equation(deep_red).poly, znames(4)));
}

TEST_CASE("reduction strips a square-zero cone direction") {
    auto qp = present(4, {"S1^2", "S2^2", "S1*S3", "S2*S3", "S1*S2 - S3^3", "S4^2", "S1*S4",
                          "S2*S4", "S3*S4"});
    // basis (1, S1, S2, S3, S4, S1*S2, S3^2); epsilon = S4 sits inside U
    std::vector<std::vector<Q>> u = {var_class(qp, 0), var_class(qp, 1), var_class(qp, 2),
                                     cls(qp, "S3^2"), var_class(qp, 3)};
    HPair wide = make_h_pair(pair_with_u(std::move(qp), std::move(u)));
    CHECK(wide.degree == 3);
    CHECK(wide.complement == unit_vec(7, 5));
    CHECK(form_kernel(wide) == Subspace::span(7, {unit_vec(7, 4)}));
    CHECK(!is_nondegenerate(wide));
    CHECK(!gorenstein_certificate(wide));

    const std::string golden = "1 * z0^2*z5 - 1 * z0*z1*z2 - 1 * z0*z3*z4 + 1/3 * z3^3";
    CHECK(poly_to_string(equation(wide).poly, {"z0", "z1", "z2", "z3", "z4", "eps", "z5"}) ==
          golden);

    HPair red = reduce(wide);
    CHECK(red.degree == 3);
    CHECK(red.pair.m() == 6);
    CHECK(is_nondegenerate(red));
    CHECK(gorenstein_certificate(red));
    CHECK(poly_to_string(equation(red).poly, znames(6)) == golden);
}

TEST_CASE("quadric pairs and quadratic ranks") {
    for (size_t n = 1; n <= 4; ++n) {
        HPair q = quadric_pair(n);
        CHECK(q.degree == 2);
        HomogEquation e = equation(q);
        CHECK(quadratic_rank(e) == n + 2);
        CHECK(is_nondegenerate(q));
        CHECK(gorenstein_certificate(q));
    }
    CHECK(quadratic_rank(equation(make_h_pair(corank_spur_pair()))) == 3);
    CHECK(quadratic_rank(equation(make_h_pair(corank_chain_pair()))) == 3);
    CHECK(code_of([] { quadratic_rank(equation(make_h_pair(cubic_pair()))); }) ==
          ErrorCode::NotQuadratic);
    CHECK(code_of([] { quadric_pair(0); }) == ErrorCode::DegenerateInput);
}

TEST_CASE("random hyperplanes agree on degeneracy and the certificate") {
    struct Base {
        size_t nvars;
        std::vector<std::string> gens;
    };
    std::vector<Base> bases = {
        {1, {"S1^5"}},
        {2, {"S1^3", "S2^2"}},
        {3, {"S1*S2", "S1*S3", "S2*S3", "S1^2 - S2^2", "S1^2 - S3^2"}},
        {3, {"S1^2", "S2^2", "S1*S3", "S2*S3", "S1*S2 - S3^3"}},
        {2, {"S1^3", "S1*S2", "S2^2"}},  // not Gorenstein: both sides must say no
    };
    std::mt19937 rng(90210);
    for (const Base& b : bases) {
        auto qp = present(b.nvars, b.gens);
        size_t m = qp.algebra.dim();
        int accepted = 0;
        for (int attempt = 0; attempt < 200 && accepted < 12; ++attempt) {
            std::vector<std::vector<Q>> u;
            for (size_t r = 0; r + 2 < m; ++r) u.push_back(rnd_vec(rng, m, true));
            GaPair p = pair_with_u(qp, u);
            if (!validate_pair(p)) continue;
            ++accepted;
            HPair h = make_h_pair(p);
            CHECK(is_nondegenerate(h) == gorenstein_certificate(h));
        }
        CHECK(accepted >= 8);
    }
}

TEST_CASE("boundary directions") {
    HPair cubic = make_h_pair(cubic_pair());
    CHECK(!boundary_test(cubic, unit_vec(6, 3)));  // S3 cubes to S1*S2, outside U
    CHECK(boundary_test(cubic, unit_vec(6, 1)));   // S1 cubes to zero
    CHECK(boundary_test(cubic, unit_vec(6, 4)));

    HPair quad = quadric_pair(2);
    CHECK(!boundary_test(quad, unit_vec(4, 1)));
    CHECK(boundary_test(quad, unit_vec(4, 3)));
    CHECK(code_of([&] { boundary_test(quad, unit_vec(4, 0)); }) == ErrorCode::DegenerateInput);

    // matches vanishing of the equation at the point at infinity in that
    // direction
    std::mt19937 rng(808);
    for (const HPair& h : {cubic, quad}) {
        HomogEquation e = equation(h);
        size_t m = h.pair.m(), n = h.pair.n();
        for (int trial = 0; trial < 15; ++trial) {
            std::vector<Q> coords(n + 2, Q(0));
            for (size_t i = 1; i < n + 2; ++i) coords[i] = rnd_q(rng);
            std::vector<Q> z(m, Q(0));
            for (size_t i = 0; i < n; ++i)
                for (size_t k = 0; k < m; ++k) z[k] += coords[i + 1] * h.pair.u_basis[i][k];
            for (size_t k = 0; k < m; ++k) z[k] += coords[n + 1] * h.complement[k];
            CHECK(boundary_test(h, z) == (poly_eval(e.poly, coords) == 0));
        }
    }
}
