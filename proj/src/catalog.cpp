#include "addact/catalog.hpp"

#include <charconv>

#include "addact/error.hpp"

namespace addact {

namespace {

CatalogEntry entry(size_t id, size_t nvars, std::vector<std::string> gens,
                   std::vector<size_t> hs, bool gorenstein) {
    size_t dim = 0;
    for (size_t r : hs) dim += r;
    return {id, {nvars, std::move(gens)}, {dim, std::move(hs), gorenstein}};
}

// Quadratic monomial relations shared by the "all products vanish" rows:
// every square and every product of distinct variables.
std::vector<std::string> square_zero_ideal(size_t nvars) {
    std::vector<std::string> gens;
    for (size_t i = 1; i <= nvars; ++i)
        gens.push_back("x" + std::to_string(i) + "^2");
    for (size_t i = 1; i <= nvars; ++i)
        for (size_t j = i + 1; j <= nvars; ++j)
            gens.push_back("x" + std::to_string(i) + "*x" + std::to_string(j));
    return gens;
}

std::vector<CatalogEntry> build_table() {
    std::vector<CatalogEntry> t;
    t.reserve(42);

    // dim 1
    t.push_back(entry(1, 0, {}, {1}, true));

    // dim 2
    t.push_back(entry(2, 1, {"x1^2"}, {1, 1}, true));

    // dim 3
    t.push_back(entry(3, 1, {"x1^3"}, {1, 1, 1}, true));
    t.push_back(entry(4, 2, square_zero_ideal(2), {1, 2}, false));

    // dim 4
    t.push_back(entry(5, 1, {"x1^4"}, {1, 1, 1, 1}, true));
    t.push_back(entry(6, 2, {"x1*x2", "x1^2 - x2^2"}, {1, 2, 1}, true));
    t.push_back(entry(7, 2, {"x1^3", "x1*x2", "x2^2"}, {1, 2, 1}, false));
    t.push_back(entry(8, 3, square_zero_ideal(3), {1, 3}, false));

    // dim 5
    t.push_back(entry(9, 1, {"x1^5"}, {1, 1, 1, 1, 1}, true));
    t.push_back(entry(10, 2, {"x1*x2", "x1^3 - x2^2"}, {1, 2, 1, 1}, true));
    t.push_back(entry(11, 2, {"x1^3", "x2^3", "x1*x2"}, {1, 2, 2}, false));
    t.push_back(entry(12, 2, {"x1^4", "x2^2", "x1*x2"}, {1, 2, 1, 1}, false));
    t.push_back(entry(13, 2, {"x1^3", "x2^2", "x1^2*x2"}, {1, 2, 2}, false));
    t.push_back(entry(14, 3,
                      {"x1*x2", "x1*x3", "x2*x3", "x1^2 - x2^2", "x1^2 - x3^2"},
                      {1, 3, 1}, true));
    t.push_back(entry(15, 3,
                      {"x1^2", "x1*x2", "x1*x3", "x2*x3", "x2^2 - x3^2"},
                      {1, 3, 1}, false));
    t.push_back(entry(16, 3,
                      {"x1^3", "x2^2", "x3^2", "x1*x2", "x1*x3", "x2*x3"},
                      {1, 3, 1}, false));
    t.push_back(entry(17, 4, square_zero_ideal(4), {1, 4}, false));

    // dim 6
    t.push_back(entry(18, 1, {"x1^6"}, {1, 1, 1, 1, 1, 1}, true));
    t.push_back(entry(19, 2, {"x1*x2", "x1^4 - x2^2"}, {1, 2, 1, 1, 1}, true));
    t.push_back(entry(20, 2, {"x1*x2", "x1^3 - x2^3"}, {1, 2, 2, 1}, true));
    t.push_back(entry(21, 2, {"x1^3", "x2^2"}, {1, 2, 2, 1}, true));
    t.push_back(entry(22, 2, {"x1^5", "x1*x2", "x2^2"}, {1, 2, 1, 1, 1}, false));
    t.push_back(entry(23, 2, {"x1^4", "x1*x2", "x2^3"}, {1, 2, 2, 1}, false));
    t.push_back(entry(24, 2, {"x1^3", "x1^2*x2", "x1*x2^2", "x2^3"}, {1, 2, 3},
                      false));
    t.push_back(entry(25, 2, {"x1^4", "x1^2*x2", "x1^3 - x2^2"}, {1, 2, 2, 1},
                      false));
    t.push_back(entry(26, 2, {"x1^4", "x1^2*x2", "x2^2"}, {1, 2, 2, 1}, false));
    t.push_back(entry(27, 3, {"x1^2", "x2^2", "x3^2", "x1*x2 - x1*x3"},
                      {1, 3, 2}, false));
    t.push_back(entry(28, 3, {"x2^2", "x3^2", "x1*x2", "x1^2 - x2*x3"},
                      {1, 3, 2}, false));
    t.push_back(entry(29, 3, {"x1^2", "x2^2", "x3^2", "x2*x3"}, {1, 3, 2},
                      false));
    t.push_back(entry(30, 3,
                      {"x1^2", "x2^2", "x1*x3", "x2*x3", "x1*x2 - x3^3"},
                      {1, 3, 1, 1}, true));
    t.push_back(entry(31, 3,
                      {"x1^2 - x3^3", "x2^2", "x1*x2", "x1*x3", "x2*x3"},
                      {1, 3, 1, 1}, false));
    t.push_back(entry(32, 3, {"x1^3", "x2^2", "x3^2", "x1*x2", "x1*x3"},
                      {1, 3, 2}, false));
    t.push_back(entry(33, 3, {"x1^2", "x2^2", "x3^2", "x1*x2 - x1*x3 - x2*x3"},
                      {1, 3, 2}, false));
    t.push_back(entry(34, 3,
                      {"x1^3", "x2^2", "x1*x3", "x2*x3", "x1*x2 - x3^2"},
                      {1, 3, 2}, false));
    t.push_back(entry(35, 3,
                      {"x1^4", "x2^2", "x3^2", "x1*x2", "x1*x3", "x2*x3"},
                      {1, 3, 1, 1}, false));
    t.push_back(entry(36, 3,
                      {"x1^3", "x2^3", "x3^2", "x1*x2", "x1*x3", "x2*x3"},
                      {1, 3, 2}, false));
    t.push_back(entry(37, 3,
                      {"x1^3", "x2^2", "x3^2", "x1^2*x2", "x1*x3", "x2*x3"},
                      {1, 3, 2}, false));
    t.push_back(entry(38, 4,
                      {"x1^2 - x2^2", "x1^2 - x3^2", "x1^2 - x4^2",
                       "x2^2 - x3^2", "x2^2 - x4^2", "x3^2 - x4^2", "x1*x2",
                       "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"},
                      {1, 4, 1}, true));
    t.push_back(entry(39, 4,
                      {"x1^2", "x2^2", "x4^2", "x1*x3", "x1*x4", "x2*x3",
                       "x2*x4", "x3*x4", "x1*x2 - x3^2"},
                      {1, 4, 1}, false));
    t.push_back(entry(40, 4,
                      {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x3", "x1*x4",
                       "x2*x3", "x2*x4", "x3*x4"},
                      {1, 4, 1}, false));
    t.push_back(entry(41, 4,
                      {"x1^3", "x2^2", "x3^2", "x4^2", "x1*x2", "x1*x3",
                       "x1*x4", "x2*x3", "x2*x4", "x3*x4"},
                      {1, 4, 1}, false));
    t.push_back(entry(42, 5, square_zero_ideal(5), {1, 5}, false));

    return t;
}

QuotientPresentation trivial_presentation() {
    QuotientPresentation qp;
    qp.nvars = 0;
    qp.basis_monomials = {Expo{}};
    qp.algebra = Algebra({"1"}, {{{Q(1)}}}, {Q(1)});
    return qp;
}

std::optional<size_t> parse_index(const std::string& text) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::optional<std::vector<Z>> parse_weights(const std::string& text) {
    std::vector<Z> weights;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        auto part = parse_index(text.substr(pos, comma - pos));
        if (!part) return std::nullopt;
        weights.push_back(Z(static_cast<unsigned long>(*part)));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return weights;
}

GaPair twisted_cubic_pair() {
    auto qp = realize({1, {"S1^4"}});
    auto u = qp.project(MultiPoly::variable(1, 0));
    return pair_with_u(std::move(qp), {std::move(u)});
}

HPair cubic_surface_pair() {
    const auto& row30 = table1()[29];
    auto qp = realize(row30.presentation);
    auto names = default_names(3, "x");
    std::vector<std::vector<Q>> u;
    for (const char* s : {"x1", "x2", "x3", "x3^2"})
        u.push_back(qp.project(poly_parse(s, names)));
    return make_h_pair(pair_with_u(std::move(qp), std::move(u)));
}

}  // namespace

const std::vector<CatalogEntry>& table1() {
    static const std::vector<CatalogEntry> table = build_table();
    return table;
}

QuotientPresentation realize(const Presentation& p, unsigned degree_cap) {
    if (p.nvars == 0 && p.generators.empty()) return trivial_presentation();
    std::vector<MultiPoly> gens;
    gens.reserve(p.generators.size());
    for (const char* stem : {"x", "S"}) {
        gens.clear();
        auto names = default_names(p.nvars, stem);
        try {
            for (const auto& text : p.generators)
                gens.push_back(poly_parse(text, names));
        } catch (const AddactError&) {
            if (stem[0] == 'S') throw;
            continue;
        }
        break;
    }
    return quotient_presentation(p.nvars, std::move(gens), MonoOrder::GrLex,
                                 degree_cap);
}

Fixture named_fixture(const std::string& name) {
    if (name == "P2") return projective_space_fan(2);
    if (name == "P1xP1") return hirzebruch_fan(0);
    if (name == "dP6") {
        Fan f;
        f.rank = 2;
        f.rays = {{Z(1), Z(0)}, {Z(1), Z(1)}, {Z(0), Z(1)},
                  {Z(-1), Z(0)}, {Z(-1), Z(-1)}, {Z(0), Z(-1)}};
        f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
        return f;
    }
    if (name == "hyp-no30") return cubic_surface_pair();
    if (name == "twisted-cubic-pair") return twisted_cubic_pair();
    if (name.rfind("Fd:", 0) == 0) {
        if (auto d = parse_index(name.substr(3)))
            return hirzebruch_fan(static_cast<unsigned>(*d));
    }
    if (name.rfind("quadric:", 0) == 0) {
        if (auto n = parse_index(name.substr(8))) return quadric_pair(*n);
    }
    if (name.rfind("wps:", 0) == 0) {
        if (auto w = parse_weights(name.substr(4)))
            return weighted_projective_fan(*w);
    }
    fail(ErrorCode::UnknownFixture, "no fixture named '" + name + "'");
}

}  // namespace addact
