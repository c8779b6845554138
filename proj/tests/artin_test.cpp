#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "addact/algebra.hpp"
#include "addact/error.hpp"
#include "doctest.h"

using namespace addact;

namespace {

Algebra truncated(unsigned top) {
    // K[S]/(S^top)
    Expo e = {static_cast<int>(top)};
    return from_presentation(1, {MultiPoly::monomial(1, e)});
}

Algebra parse_algebra(size_t nvars, const std::vector<std::string>& gens) {
    std::vector<MultiPoly> polys;
    auto names = default_names(nvars, "S");
    for (const auto& g : gens) polys.push_back(poly_parse(g, names));
    return from_presentation(nvars, polys);
}

// K[S1]/(gen) without the origin-support requirement, for split algebras.
Algebra univariate_quotient(const std::string& gen) {
    return quotient_presentation(1, {poly_parse(gen, {"S1"})}, MonoOrder::GrLex,
                                 kDefaultDegreeCap, 4096, false)
        .algebra;
}

std::vector<Q> random_element(std::mt19937& rng, size_t dim) {
    std::uniform_int_distribution<int> c(-3, 3);
    std::vector<Q> v(dim);
    for (auto& x : v) x = Q(c(rng));
    return v;
}

}  // namespace

TEST_CASE("quotient by a principal power") {
    Algebra a = truncated(3);
    CHECK(a.dim() == 3);
    CHECK(a.validate());
    CHECK(a.basis_labels()[0] == "1");
    CHECK(a.basis_labels()[1] == "1 * S1");
    CHECK(a.basis_labels()[2] == "1 * S1^2");

    // L_S is the nilpotent shift
    QMatrix ls = a.mult_operator(a.basis_element(1));
    CHECK(ls.at(1, 0) == 1);
    CHECK(ls.at(2, 1) == 1);
    CHECK(ls.power(3).is_zero());
}

TEST_CASE("quotient presentation basics") {
    Algebra a = parse_algebra(2, {"S1^2", "S1*S2", "S2^2"});
    CHECK(a.dim() == 3);
    CHECK(a.validate());

    Algebra k = parse_algebra(2, {"S1", "S2"});
    CHECK(k.dim() == 1);

    CHECK_THROWS_WITH_AS(parse_algebra(2, {"S1"}), doctest::Contains("NOT_FINITE"),
                         AddactError);
    CHECK_THROWS_WITH_AS(parse_algebra(1, {"S1^2 - S1"}), doctest::Contains("NOT_SUPPORTED"),
                         AddactError);
    CHECK_THROWS_WITH_AS(parse_algebra(1, {"S1 - 1", "S1"}), doctest::Contains("DEGENERATE"),
                         AddactError);
}

TEST_CASE("validate rejects broken tensors") {
    // commutativity broken
    std::vector<std::vector<std::vector<Q>>> c(2, std::vector<std::vector<Q>>(2, std::vector<Q>(2, Q(0))));
    auto unit = std::vector<Q>{Q(1), Q(0)};
    c[0][0] = {Q(1), Q(0)};
    c[0][1] = {Q(0), Q(1)};
    c[1][0] = {Q(0), Q(0)};  // e2*e1 != e1*e2
    c[1][1] = {Q(0), Q(0)};
    Algebra bad({"1", "e"}, c, unit);
    CHECK(!bad.validate());

    c[1][0] = {Q(0), Q(1)};
    Algebra good({"1", "e"}, c, unit);
    CHECK(good.validate());
}

TEST_CASE("multiplication is commutative and unital on quotients") {
    std::mt19937 rng(88);
    Algebra a = parse_algebra(2, {"S1^3", "S1*S2", "S2^2"});
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_element(rng, a.dim());
        auto y = random_element(rng, a.dim());
        CHECK(a.multiply(x, y) == a.multiply(y, x));
        CHECK(a.multiply(a.unit(), x) == x);
        // L_x as a matrix agrees with multiply
        CHECK(a.mult_operator(x).apply(y) == a.multiply(x, y));
    }
}

TEST_CASE("maximal ideal of local quotients") {
    Algebra a = truncated(3);
    Subspace m = maximal_ideal(a);
    CHECK(m.dim() == 2);
    CHECK(m.contains({Q(0), Q(1), Q(0)}));
    CHECK(m.contains({Q(0), Q(0), Q(1)}));
    CHECK(!m.contains(a.unit()));

    Algebra k = parse_algebra(1, {"S1"});
    CHECK(maximal_ideal(k).dim() == 0);
}

TEST_CASE("maximal ideal rejects split and irrational algebras") {
    // K[S]/(S^2-1) = K x K
    Algebra split = univariate_quotient("S1^2 - 1");
    CHECK_THROWS_WITH_AS(maximal_ideal(split), doctest::Contains("NOT_LOCAL"), AddactError);

    // K[S]/(S^2+1) is a field but not with rational residue; rejected too
    Algebra gauss = univariate_quotient("S1^2 + 1");
    CHECK_THROWS_WITH_AS(maximal_ideal(gauss), doctest::Contains("NOT_LOCAL"), AddactError);
}

TEST_CASE("local decomposition splits products of fields") {
    Algebra split = univariate_quotient("S1^2 - 1");
    auto parts = local_decomposition(split);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].dim() == 1);
    CHECK(parts[1].dim() == 1);

    Algebra dual = univariate_quotient("S1^2");
    CHECK(local_decomposition(dual).size() == 1);

    // K^3 via (S1^2 - S1) x ... use S(S-1)(S-2)
    Algebra k3 = univariate_quotient("S1^3 - 3 * S1^2 + 2 * S1");
    auto three = local_decomposition(k3);
    REQUIRE(three.size() == 3);
    for (const auto& part : three) CHECK(part.dim() == 1);

    Algebra gauss = univariate_quotient("S1^2 + 1");
    CHECK_THROWS_WITH_AS(local_decomposition(gauss), doctest::Contains("IRRATIONAL"),
                         AddactError);
}

TEST_CASE("mixed split keeps block structure") {
    // K[S]/(S^2 (S-1)) = K[S]/(S^2) x K
    Algebra a = univariate_quotient("S1^3 - S1^2");
    auto blocks = local_blocks(a);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].algebra.dim() == 1);
    CHECK(blocks[1].algebra.dim() == 2);
    CHECK(blocks[1].algebra.validate());
    // the 2-dim block is local with 1-dim maximal ideal
    CHECK(maximal_ideal(blocks[1].algebra).dim() == 1);
}

TEST_CASE("invariants of small quotients") {
    AlgebraInvariants inv3 = invariants(truncated(3));
    CHECK(inv3.dim == 3);
    CHECK(inv3.is_local);
    CHECK(inv3.hilbert_samuel == std::vector<size_t>{1, 1, 1});
    CHECK(inv3.socle_dim == 1);
    CHECK(inv3.is_gorenstein);
    CHECK(inv3.nilpotency_index == 3);
    CHECK(inv3.num_maximal_ideals == 1);

    AlgebraInvariants inv4 = invariants(parse_algebra(2, {"S1^2", "S1*S2", "S2^2"}));
    CHECK(inv4.hilbert_samuel == std::vector<size_t>{1, 2});
    CHECK(inv4.socle_dim == 2);
    CHECK(!inv4.is_gorenstein);

    AlgebraInvariants invk = invariants(parse_algebra(1, {"S1"}));
    CHECK(invk.hilbert_samuel == std::vector<size_t>{1});
    CHECK(invk.is_gorenstein);
    CHECK(invk.nilpotency_index == 1);
}

TEST_CASE("socle contains the last nonzero radical power") {
    for (const auto& gens :
         std::vector<std::vector<std::string>>{{"S1^2", "S1*S2", "S2^2"},
                                               {"S1^3", "S1*S2", "S2^2"},
                                               {"S1^2 - S2", "S1*S2"},
                                               {"S1^2 - S2^2", "S1*S2"}}) {
        Algebra a = parse_algebra(2, gens);
        auto chain = radical_chain(a);
        Subspace soc = socle(a);
        // chain: A, J, ..., J^{l-1}, 0
        const Subspace& last = chain[chain.size() - 2];
        CHECK(soc.contains(last));
    }
}

TEST_CASE("exp and log are inverse on the maximal ideal") {
    std::mt19937 rng(515);
    for (unsigned top : {2u, 3u, 4u, 5u}) {
        Algebra a = truncated(top);
        for (int trial = 0; trial < 10; ++trial) {
            auto z = random_element(rng, a.dim());
            z[0] = 0;  // into the maximal ideal
            auto e = a.exp_nilpotent(z);
            std::vector<Q> em1 = e;
            em1[0] -= 1;
            CHECK(a.log_one_plus(em1) == z);
        }
    }
}

TEST_CASE("exp of the running example matches the closed form") {
    Algebra a = truncated(3);
    // z = x1 S + x2 S^2 at sampled rationals
    for (auto [x1, x2] : std::vector<std::pair<Q, Q>>{{Q(1), Q(0)}, {Q(2), Q(3)}, {Q(1, 2), Q(-1)}}) {
        std::vector<Q> z = {Q(0), x1, x2};
        std::vector<Q> e = a.exp_nilpotent(z);
        CHECK(e[0] == 1);
        CHECK(e[1] == x1);
        CHECK(e[2] == x2 + x1 * x1 / 2);
    }
}

TEST_CASE("exp turns sums into products") {
    std::mt19937 rng(626);
    Algebra a = parse_algebra(2, {"S1^3", "S1*S2", "S2^2"});
    for (int trial = 0; trial < 15; ++trial) {
        auto z = random_element(rng, a.dim());
        auto w = random_element(rng, a.dim());
        z[0] = w[0] = 0;
        std::vector<Q> sum(a.dim());
        for (size_t i = 0; i < a.dim(); ++i) sum[i] = z[i] + w[i];
        CHECK(a.exp_nilpotent(sum) == a.multiply(a.exp_nilpotent(z), a.exp_nilpotent(w)));
    }
}

TEST_CASE("exp rejects non-nilpotent arguments") {
    Algebra a = truncated(2);
    CHECK_THROWS_WITH_AS(a.exp_nilpotent(a.unit()), doctest::Contains("NOT_NILPOTENT"),
                         AddactError);
}

TEST_CASE("orbit counts for chains and products") {
    for (unsigned n = 1; n <= 6; ++n) {
        auto count = orbit_count_projective(truncated(n + 1));
        REQUIRE(count.has_value());
        CHECK(*count == Z(n + 1));
    }

    // K x K x K: (S)(S-1)(S-2)
    Algebra k3 = univariate_quotient("S1^3 - 3 * S1^2 + 2 * S1");
    auto count = orbit_count_projective(k3);
    REQUIRE(count.has_value());
    CHECK(*count == Z(7));

    // row 4 has a 2-dim cotangent space: infinite orbits
    CHECK(!orbit_count_projective(parse_algebra(2, {"S1^2", "S1*S2", "S2^2"})).has_value());
}

TEST_CASE("cyclic vectors for regular representations") {
    // restriction of the regular representation of K[S]/(S^4) to its maximal ideal
    Algebra a = truncated(4);
    std::vector<QMatrix> mats;
    for (size_t i = 1; i < a.dim(); ++i) mats.push_back(a.mult_operator(a.basis_element(i)));
    auto v = cyclic_vector(mats);
    REQUIRE(v.has_value());
    CHECK(kravchuk_number(mats) == 1);
}

TEST_CASE("column span subalgebra of 4x4 matrices has no cyclic vector") {
    // span{E31, E32, E41, E42}: maps e1,e2 into <e3,e4>; kills e3,e4
    auto unitmat = [](int r, int c) {
        QMatrix m(4, 4);
        m.at(r, c) = 1;
        return m;
    };
    std::vector<QMatrix> mats = {unitmat(2, 0), unitmat(2, 1), unitmat(3, 0), unitmat(3, 1)};
    CHECK(!cyclic_vector(mats).has_value());
    CHECK(kravchuk_number(mats) == 2);
}

TEST_CASE("lower triangular shift family is cyclic") {
    // a(E21+E32+E43) + b(E31+E42) + c E41 is multiplication by aS+bS^2+cS^3
    QMatrix s1(4, 4), s2(4, 4), s3(4, 4);
    s1.at(1, 0) = s1.at(2, 1) = s1.at(3, 2) = 1;
    s2.at(2, 0) = s2.at(3, 1) = 1;
    s3.at(3, 0) = 1;
    std::vector<QMatrix> mats = {s1, s2, s3};
    auto v = cyclic_vector(mats);
    REQUIRE(v.has_value());
    CHECK((*v)[0] == 1);
    CHECK(kravchuk_number(mats) == 1);
}

TEST_CASE("cyclic vector demands commuting matrices") {
    QMatrix a(2, 2), b(2, 2);
    a.at(0, 1) = 1;
    b.at(1, 0) = 1;
    CHECK_THROWS_WITH_AS(cyclic_vector({a, b}), doctest::Contains("NOT_COMMUTING"), AddactError);
}

TEST_CASE("non-nilpotent families fall back to search") {
    // identity alone: every nonzero vector has 1-dim span; cyclic only in dim 1
    QMatrix id = QMatrix::identity(3);
    CHECK(!cyclic_vector({id}).has_value());

    // diag(1,2,3) has cyclic vectors (distinct eigenvalues)
    QMatrix d(3, 3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 2;
    d.at(2, 2) = 3;
    CHECK(cyclic_vector({d}).has_value());
}
