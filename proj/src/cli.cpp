#include "addact/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "addact/catalog.hpp"
#include "addact/error.hpp"

namespace addact {

namespace {

using ordered_json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::UnknownFixture:
        case ErrorCode::MalformedFan:
            return 2;
        default:
            return 1;
    }
}

std::vector<std::string> numbered_names(const char* stem, size_t count,
                                        size_t first) {
    std::vector<std::string> names;
    names.reserve(count);
    for (size_t i = 0; i < count; ++i)
        names.push_back(stem + std::to_string(first + i));
    return names;
}

// ---- json scalars ----

ordered_json q_json(const Q& v) {
    if (v.get_den() == 1 && v.get_num().fits_slong_p())
        return v.get_num().get_si();
    return to_string(v);
}

ordered_json z_json(const Z& v) {
    if (v.fits_slong_p()) return v.get_si();
    return to_string(v);
}

Q q_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_number_integer()) return Q(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail(ErrorCode::ParseError, where + " must be a rational number");
}

Z z_from_json(const ordered_json& j, const std::string& where) {
    Q v = q_from_json(j, where);
    if (v.get_den() != 1) fail(ErrorCode::ParseError, where + " must be an integer");
    return v.get_num();
}

size_t index_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        fail(ErrorCode::ParseError, where + " must be a nonnegative integer");
    return static_cast<size_t>(j.get<long long>());
}

const ordered_json& field(const ordered_json& j, const char* key,
                          const std::string& what) {
    if (!j.is_object() || !j.contains(key))
        fail(ErrorCode::ParseError, what + " needs a '" + key + "' field");
    return j.at(key);
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    ordered_json doc = ordered_json::parse(in, nullptr, false);
    if (doc.is_discarded())
        fail(ErrorCode::ParseError, "invalid JSON in '" + path + "'");
    return doc;
}

// ---- fan and polytope documents ----

Fan fan_from_json(const ordered_json& j) {
    Fan f;
    f.rank = index_from_json(field(j, "rank", "fan document"), "fan rank");
    for (const auto& row : field(j, "rays", "fan document")) {
        std::vector<Z> ray;
        for (const auto& c : row) ray.push_back(z_from_json(c, "ray entry"));
        f.rays.push_back(std::move(ray));
    }
    for (const auto& cone : field(j, "max_cones", "fan document")) {
        std::vector<size_t> idx;
        for (const auto& c : cone) idx.push_back(index_from_json(c, "cone index"));
        f.max_cones.push_back(std::move(idx));
    }
    return f;
}

ordered_json fan_json(const Fan& f) {
    ordered_json j;
    j["rank"] = f.rank;
    j["rays"] = ordered_json::array();
    for (const auto& ray : f.rays) {
        ordered_json row = ordered_json::array();
        for (const auto& c : ray) row.push_back(z_json(c));
        j["rays"].push_back(std::move(row));
    }
    j["max_cones"] = f.max_cones;
    return j;
}

LatticePolytope polytope_from_json(const ordered_json& j) {
    LatticePolytope p;
    p.rank = index_from_json(field(j, "rank", "polytope document"), "polytope rank");
    for (const auto& row : field(j, "vertices", "polytope document")) {
        std::vector<Z> v;
        for (const auto& c : row) v.push_back(z_from_json(c, "vertex entry"));
        p.vertices.push_back(std::move(v));
    }
    return p;
}

ordered_json polytope_json(const LatticePolytope& p) {
    ordered_json j;
    j["rank"] = p.rank;
    j["vertices"] = ordered_json::array();
    for (const auto& v : p.vertices) {
        ordered_json row = ordered_json::array();
        for (const auto& c : v) row.push_back(z_json(c));
        j["vertices"].push_back(std::move(row));
    }
    return j;
}

// ---- algebra and pair documents ----

struct LoadedAlgebra {
    std::optional<QuotientPresentation> qp;
    Algebra algebra;
    std::vector<std::vector<Q>> u_basis;
    std::optional<std::vector<Q>> complement;
};

std::vector<Q> q_vector_from_json(const ordered_json& j, size_t length,
                                  const std::string& what) {
    if (!j.is_array() || j.size() != length)
        fail(ErrorCode::ParseError,
             what + " must be an array of " + std::to_string(length) + " rationals");
    std::vector<Q> v;
    for (const auto& c : j) v.push_back(q_from_json(c, what));
    return v;
}

// Accepts a coordinate vector or a polynomial in the presentation variables.
std::vector<Q> basis_vector_from_json(const ordered_json& j,
                                      const LoadedAlgebra& la) {
    if (j.is_string()) {
        if (!la.qp)
            fail(ErrorCode::ParseError,
                 "polynomial u-vectors need a presentation document");
        const std::string text = j.get<std::string>();
        for (const char* stem : {"x", "S"}) {
            try {
                auto poly = poly_parse(text, default_names(la.qp->nvars, stem));
                return la.qp->project(poly);
            } catch (const AddactError& e) {
                if (e.code() != ErrorCode::ParseError || stem[0] == 'S') throw;
            }
        }
    }
    return q_vector_from_json(j, la.algebra.dim(), "u-vector");
}

LoadedAlgebra algebra_from_json(const ordered_json& j, unsigned degree_cap) {
    LoadedAlgebra la;
    if (j.contains("presentation")) {
        const auto& pj = j.at("presentation");
        Presentation p;
        p.nvars = index_from_json(field(pj, "nvars", "presentation"), "nvars");
        for (const auto& g : field(pj, "generators", "presentation")) {
            if (!g.is_string())
                fail(ErrorCode::ParseError, "generators must be strings");
            p.generators.push_back(g.get<std::string>());
        }
        la.qp = realize(p, degree_cap);
        la.algebra = la.qp->algebra;
    } else if (j.contains("structure_constants")) {
        const auto& sj = j.at("structure_constants");
        std::vector<std::string> labels;
        for (const auto& l : field(sj, "basis_labels", "structure constants"))
            labels.push_back(l.get<std::string>());
        size_t m = labels.size();
        std::vector<std::vector<std::vector<Q>>> table;
        for (const auto& plane : field(sj, "structure", "structure constants")) {
            std::vector<std::vector<Q>> rows;
            for (const auto& row : plane)
                rows.push_back(q_vector_from_json(row, m, "structure row"));
            if (rows.size() != m)
                fail(ErrorCode::ParseError, "structure table must be m x m x m");
            table.push_back(std::move(rows));
        }
        if (table.size() != m)
            fail(ErrorCode::ParseError, "structure table must be m x m x m");
        auto unit = q_vector_from_json(field(sj, "unit", "structure constants"), m,
                                       "unit");
        la.algebra = Algebra(std::move(labels), std::move(table), std::move(unit));
        if (!la.algebra.validate())
            fail(ErrorCode::ParseError,
                 "structure constants do not satisfy the algebra laws");
    } else {
        fail(ErrorCode::ParseError,
             "algebra document needs 'presentation' or 'structure_constants'");
    }
    if (j.contains("u_basis"))
        for (const auto& row : j.at("u_basis"))
            la.u_basis.push_back(basis_vector_from_json(row, la));
    if (j.contains("complement"))
        la.complement = q_vector_from_json(j.at("complement"), la.algebra.dim(),
                                           "complement");
    return la;
}

GaPair pair_from_loaded(const LoadedAlgebra& la) {
    if (!la.qp)
        fail(ErrorCode::ParseError, "this verb needs a presentation document");
    if (la.u_basis.empty()) return pair_with_maximal_ideal(*la.qp);
    return pair_with_u(*la.qp, la.u_basis);
}

// Swap in a user-chosen complement vector; pi is rescaled so pi(c) = 1.
HPair with_complement(HPair h, const std::vector<Q>& c) {
    if (c[0] != 0)
        fail(ErrorCode::DegenerateInput,
             "complement vector is not in the maximal ideal");
    Q lambda = 0;
    for (size_t k = 0; k < c.size(); ++k) lambda += h.pi[k] * c[k];
    if (lambda == 0)
        fail(ErrorCode::DegenerateInput,
             "complement vector lies in the span of U");
    for (auto& v : h.pi) v /= lambda;
    h.complement = c;
    return h;
}

HPair resolve_hpair(const std::string& ref, unsigned degree_cap) {
    if (std::filesystem::is_regular_file(ref)) {
        auto la = algebra_from_json(load_json(ref), degree_cap);
        HPair h = make_h_pair(pair_from_loaded(la));
        if (la.complement) h = with_complement(std::move(h), *la.complement);
        return h;
    }
    auto fx = named_fixture(ref);
    if (auto* h = std::get_if<HPair>(&fx)) return *h;
    if (auto* p = std::get_if<GaPair>(&fx)) return make_h_pair(*p);
    fail(ErrorCode::UnknownFixture, "fixture '" + ref + "' is not a pair");
}

Fan resolve_fan(const std::string& ref) {
    if (std::filesystem::is_regular_file(ref))
        return fan_from_json(load_json(ref));
    auto fx = named_fixture(ref);
    if (auto* f = std::get_if<Fan>(&fx)) return *f;
    fail(ErrorCode::UnknownFixture, "fixture '" + ref + "' is not a fan");
}

LatticePolytope resolve_polytope(const std::string& ref) {
    if (std::filesystem::is_regular_file(ref))
        return polytope_from_json(load_json(ref));
    auto fx = named_fixture(ref);
    if (auto* p = std::get_if<LatticePolytope>(&fx)) return *p;
    fail(ErrorCode::UnknownFixture, "fixture '" + ref + "' is not a polytope");
}

// ---- result documents ----

ordered_json presentation_json(size_t nvars, const std::vector<MultiPoly>& gens,
                               const char* stem) {
    ordered_json p;
    p["nvars"] = nvars;
    p["generators"] = ordered_json::array();
    auto names = default_names(nvars, stem);
    for (const auto& g : gens)
        p["generators"].push_back(poly_to_string(g, names));
    return p;
}

ordered_json q_rows_json(const std::vector<std::vector<Q>>& rows) {
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(q_json(v));
        out.push_back(std::move(r));
    }
    return out;
}

ordered_json subspace_json(const Subspace& s) {
    ordered_json j;
    j["ambient"] = s.ambient();
    j["dim"] = s.dim();
    std::vector<std::vector<Q>> rows;
    for (size_t i = 0; i < s.basis().rows(); ++i) rows.push_back(s.basis().row(i));
    j["basis"] = q_rows_json(rows);
    return j;
}

ordered_json pair_json(const GaPair& p) {
    ordered_json j;
    j["presentation"] = presentation_json(p.qp.nvars, p.qp.gb.gens, "S");
    j["u_basis"] = q_rows_json(p.u_basis);
    return j;
}

ordered_json hpair_json(const HPair& h) {
    ordered_json j = pair_json(h.pair);
    ordered_json c = ordered_json::array();
    for (const auto& v : h.complement) c.push_back(q_json(v));
    j["complement"] = std::move(c);
    return j;
}

ordered_json root_json(const DemazureRoot& r) {
    ordered_json j;
    j["e"] = ordered_json::array();
    for (const auto& c : r.e) j["e"].push_back(z_json(c));
    j["distinguished_ray"] = r.distinguished_ray;
    return j;
}

ordered_json entry_json(const CatalogEntry& e) {
    ordered_json j;
    j["id"] = e.id;
    j["presentation"]["nvars"] = e.presentation.nvars;
    j["presentation"]["generators"] = e.presentation.generators;
    j["expected"]["dim"] = e.expected.dim;
    j["expected"]["hilbert_samuel"] = e.expected.hilbert_samuel;
    j["expected"]["gorenstein"] = e.expected.gorenstein;
    return j;
}

ordered_json fixture_json(const Fixture& fx) {
    if (const auto* f = std::get_if<Fan>(&fx)) return fan_json(*f);
    if (const auto* p = std::get_if<LatticePolytope>(&fx))
        return polytope_json(*p);
    if (const auto* g = std::get_if<GaPair>(&fx)) return pair_json(*g);
    return hpair_json(std::get<HPair>(fx));
}

// ---- plain-text rendering ----

bool is_flat(const ordered_json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (!e.is_primitive() || e.is_string()) return false;
    return true;
}

std::string scalar_text(const ordered_json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string joined(const ordered_json& arr) {
    std::string out;
    for (const auto& e : arr) {
        if (!out.empty()) out += ' ';
        out += scalar_text(e);
    }
    return out;
}

void render_block(std::ostream& out, const ordered_json& j,
                  const std::string& indent);

void render_entry(std::ostream& out, const std::string& label,
                  const ordered_json& value, const std::string& indent) {
    if (value.is_primitive()) {
        out << indent << label << ": " << scalar_text(value) << "\n";
    } else if (value.empty()) {
        out << indent << label << ": []\n";
    } else if (is_flat(value)) {
        out << indent << label << ": " << joined(value) << "\n";
    } else {
        out << indent << label << ":\n";
        render_block(out, value, indent + "  ");
    }
}

void render_block(std::ostream& out, const ordered_json& j,
                  const std::string& indent) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_entry(out, key, value, indent);
        return;
    }
    for (const auto& element : j) {
        if (element.is_primitive()) {
            out << indent << scalar_text(element) << "\n";
        } else if (is_flat(element)) {
            out << indent << joined(element) << "\n";
        } else if (element.is_object()) {
            bool first = true;
            for (const auto& [key, value] : element.items()) {
                if (first && (value.is_primitive() || is_flat(value))) {
                    out << indent << "- " << key << ": "
                        << (value.is_primitive() ? scalar_text(value) : joined(value))
                        << "\n";
                } else {
                    render_entry(out, key, value,
                                 indent + (first ? "- " : "  "));
                }
                first = false;
            }
        } else {
            render_block(out, element, indent + "  ");
        }
    }
}

// ---- option plumbing ----

unsigned degree_cap_from_env() {
    const char* v = std::getenv("ADDACT_DEGREE_CAP");
    if (!v) return kDefaultDegreeCap;
    unsigned cap = 0;
    auto [ptr, ec] = std::from_chars(v, v + std::string_view(v).size(), cap);
    if (ec != std::errc{} || *ptr != '\0' || cap == 0)
        fail(ErrorCode::ParseError,
             "ADDACT_DEGREE_CAP must be a positive integer");
    return cap;
}

std::vector<Z> parse_root_vector(const std::string& text) {
    std::vector<Z> v;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string part = text.substr(pos, comma - pos);
        try {
            Q value = parse_rational(part);
            if (value.get_den() != 1) throw AddactError(ErrorCode::ParseError, "");
            v.push_back(value.get_num());
        } catch (const AddactError&) {
            fail(ErrorCode::ParseError,
                 "--root expects comma-separated integers, got '" + text + "'");
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"additive group actions on projective varieties, exactly"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string algebra_path, pair_ref, fan_ref, polytope_ref, show_id,
        root_text;
    size_t ray_index = 0;

    ordered_json doc;
    std::function<ordered_json()> action;

    auto leaf = [&](CLI::App* parent, const char* name, const char* desc,
                    std::function<ordered_json()> fn) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->callback([&action, fn = std::move(fn)] { action = fn; });
        return sub;
    };

    auto* ht = app.add_subcommand("ht", "actions on projective space");
    ht->require_subcommand(1);
    auto with_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", algebra_path, "algebra document path")
            ->required()
            ->check(CLI::ExistingFile);
        return sub;
    };
    with_algebra(leaf(ht, "ideal", "defining ideal of the pair", [&] {
        auto la = algebra_from_json(load_json(algebra_path), degree_cap_from_env());
        auto p = pair_from_loaded(la);
        auto gb = ideal_from_pair(p, degree_cap_from_env());
        ordered_json j;
        j["presentation"] = presentation_json(p.n(), gb.gens, "S");
        return j;
    }));
    with_algebra(leaf(ht, "subspace", "generating subspace of polynomials", [&] {
        auto la = algebra_from_json(load_json(algebra_path), degree_cap_from_env());
        auto v = generating_subspace(pair_from_loaded(la));
        ordered_json j;
        j["nvars"] = v.nvars;
        j["basis"] = ordered_json::array();
        auto names = default_names(v.nvars, "x");
        for (const auto& b : v.basis)
            j["basis"].push_back(poly_to_string(b, names));
        return j;
    }));
    with_algebra(leaf(ht, "representation", "matrix of exp(a . u)", [&] {
        auto la = algebra_from_json(load_json(algebra_path), degree_cap_from_env());
        auto rho = representation(pair_from_loaded(la));
        ordered_json j;
        j["size"] = rho.size;
        j["nparams"] = rho.nparams;
        j["entries"] = ordered_json::array();
        auto names = numbered_names("a", rho.nparams, 1);
        for (const auto& row : rho.entries) {
            ordered_json r = ordered_json::array();
            for (const auto& e : row) r.push_back(poly_to_string(e, names));
            j["entries"].push_back(std::move(r));
        }
        return j;
    }));
    with_algebra(leaf(ht, "action", "translation action on the projectivization", [&] {
        auto la = algebra_from_json(load_json(algebra_path), degree_cap_from_env());
        if (!la.u_basis.empty())
            fail(ErrorCode::ParseError,
                 "ht action always uses the full maximal ideal; drop u_basis");
        auto forms = projective_action(la.algebra);
        size_t m = la.algebra.dim();
        auto names = numbered_names("a", m - 1, 1);
        auto zs = numbered_names("z", m, 0);
        names.insert(names.end(), zs.begin(), zs.end());
        ordered_json j;
        j["coordinates"] = ordered_json::array();
        for (const auto& f : forms)
            j["coordinates"].push_back(poly_to_string(f, names));
        return j;
    }));
    with_algebra(leaf(ht, "fixed-locus", "fixed points of the translation action", [&] {
        auto la = algebra_from_json(load_json(algebra_path), degree_cap_from_env());
        if (!la.u_basis.empty())
            fail(ErrorCode::ParseError,
                 "ht fixed-locus always uses the full maximal ideal; drop u_basis");
        return subspace_json(fixed_locus(la.algebra));
    }));

    auto* hyp = app.add_subcommand("hyp", "induced actions on hypersurfaces");
    hyp->require_subcommand(1);
    auto with_pair = [&](CLI::App* sub) {
        sub->add_option("--pair", pair_ref, "H-pair document path or fixture name")
            ->required();
        return sub;
    };
    with_pair(leaf(hyp, "equation", "homogeneous hypersurface equation", [&] {
        auto h = resolve_hpair(pair_ref, degree_cap_from_env());
        auto e = equation(h);
        ordered_json j;
        j["degree"] = e.degree;
        j["poly"] = poly_to_string(e.poly, numbered_names("z", h.pair.n() + 2, 0));
        return j;
    }));
    with_pair(leaf(hyp, "form", "invariant multilinear form", [&] {
        auto h = resolve_hpair(pair_ref, degree_cap_from_env());
        auto f = invariant_form(h);
        ordered_json j;
        j["degree"] = f.degree;
        j["pi"] = ordered_json::array();
        for (const auto& v : f.pi) j["pi"].push_back(q_json(v));
        return j;
    }));
    with_pair(leaf(hyp, "reduce", "quotient by the kernel of the form", [&] {
        return hpair_json(reduce(resolve_hpair(pair_ref, degree_cap_from_env())));
    }));
    with_pair(leaf(hyp, "certify", "Gorenstein certificate for the pair", [&] {
        auto h = resolve_hpair(pair_ref, degree_cap_from_env());
        ordered_json j;
        j["certified"] = gorenstein_certificate(h);
        j["form_kernel_dim"] = form_kernel(h).dim();
        return j;
    }));

    auto* toric = app.add_subcommand("toric", "additive actions on toric varieties");
    toric->require_subcommand(1);
    auto with_fan = [&](CLI::App* sub) {
        sub->add_option("--fan", fan_ref, "fan document path or fixture name")
            ->required();
        return sub;
    };
    with_fan(leaf(toric, "roots", "Demazure roots of the fan", [&] {
        ordered_json j;
        j["roots"] = ordered_json::array();
        for (const auto& r : demazure_roots(resolve_fan(fan_ref)))
            j["roots"].push_back(root_json(r));
        return j;
    }));
    with_fan(leaf(toric, "collections", "complete collections of roots", [&] {
        ordered_json j;
        j["collections"] = ordered_json::array();
        for (const auto& c : complete_collections(resolve_fan(fan_ref))) {
            ordered_json cj;
            cj["basis_rays"] = c.basis_rays;
            cj["roots"] = ordered_json::array();
            for (const auto& r : c.roots) cj["roots"].push_back(root_json(r));
            j["collections"].push_back(std::move(cj));
        }
        return j;
    }));
    with_fan(leaf(toric, "exists", "does the variety admit an additive action", [&] {
        ordered_json j;
        j["exists"] = has_additive_action(resolve_fan(fan_ref));
        return j;
    }));
    with_fan(leaf(toric, "count", "number of surface actions up to equivalence", [&] {
        ordered_json j;
        j["count"] = surface_action_count(resolve_fan(fan_ref));
        return j;
    }));
    with_fan(leaf(toric, "unique", "is the additive action unique", [&] {
        ordered_json j;
        j["unique"] = uniqueness_check(resolve_fan(fan_ref));
        return j;
    }));
    with_fan(leaf(toric, "cox", "Cox ring grading data", [&] {
        auto cd = cox_data(resolve_fan(fan_ref));
        ordered_json j;
        j["variables"] = cd.variables;
        j["free_rank"] = cd.class_group.free_rank;
        j["torsion"] = ordered_json::array();
        for (const auto& t : cd.class_group.torsion)
            j["torsion"].push_back(z_json(t));
        j["degrees"] = ordered_json::array();
        for (const auto& row : cd.degrees) {
            ordered_json r = ordered_json::array();
            for (const auto& d : row) r.push_back(z_json(d));
            j["degrees"].push_back(std::move(r));
        }
        return j;
    }));
    {
        auto* lnd = with_fan(leaf(toric, "lnd", "derivation attached to a root", [&] {
            Fan f = resolve_fan(fan_ref);
            DemazureRoot r{parse_root_vector(root_text), ray_index};
            auto d = root_lnd(f, r);
            auto cd = cox_data(f);
            ordered_json j;
            j["target"] = d.target;
            j["exponents"] = ordered_json::array();
            for (const auto& e : d.exponents) j["exponents"].push_back(z_json(e));
            std::string monomial;
            for (size_t i = 0; i < d.exponents.size(); ++i) {
                if (d.exponents[i] == 0) continue;
                if (!monomial.empty()) monomial += "*";
                monomial += cd.variables[i];
                if (d.exponents[i] != 1) monomial += "^" + to_string(d.exponents[i]);
            }
            if (monomial.empty()) monomial = "1";
            j["derivation"] = monomial + " d/d" + cd.variables[d.target];
            return j;
        }));
        lnd->add_option("--root", root_text, "root vector, comma-separated")
            ->required();
        lnd->add_option("--ray", ray_index, "distinguished ray index")->required();
    }

    auto* polytope = app.add_subcommand("polytope", "polytopes and their normal fans");
    polytope->require_subcommand(1);
    auto with_polytope = [&](CLI::App* sub) {
        sub->add_option("--polytope", polytope_ref, "polytope document path")
            ->required();
        return sub;
    };
    with_polytope(leaf(polytope, "inscribed", "inscribed-in-rectangle witness", [&] {
        auto w = inscribed_in_rectangle(resolve_polytope(polytope_ref));
        ordered_json j;
        j["inscribed"] = w.has_value();
        if (w) {
            j["vertex"] = ordered_json::array();
            for (const auto& c : *w) j["vertex"].push_back(z_json(c));
        }
        return j;
    }));
    with_polytope(leaf(polytope, "normal-fan", "inner normal fan", [&] {
        return fan_json(normal_fan(resolve_polytope(polytope_ref)));
    }));
    with_polytope(leaf(polytope, "points", "lattice points of the polytope", [&] {
        ordered_json j;
        j["points"] = ordered_json::array();
        for (const auto& p : lattice_points(resolve_polytope(polytope_ref))) {
            ordered_json row = ordered_json::array();
            for (const auto& c : p) row.push_back(z_json(c));
            j["points"].push_back(std::move(row));
        }
        return j;
    }));

    auto* catalog = app.add_subcommand("catalog", "built-in algebras and fixtures");
    catalog->require_subcommand(1);
    leaf(catalog, "list", "all catalogued local algebras", [&] {
        ordered_json j;
        j["entries"] = ordered_json::array();
        for (const auto& e : table1()) j["entries"].push_back(entry_json(e));
        return j;
    });
    {
        auto* show = leaf(catalog, "show", "one catalog entry or named fixture", [&] {
            size_t id = 0;
            auto [ptr, ec] = std::from_chars(show_id.data(),
                                             show_id.data() + show_id.size(), id);
            if (ec == std::errc{} && ptr == show_id.data() + show_id.size()) {
                if (id < 1 || id > table1().size())
                    fail(ErrorCode::UnknownFixture,
                         "no table entry with id '" + show_id + "'");
                return entry_json(table1()[id - 1]);
            }
            return fixture_json(named_fixture(show_id));
        });
        show->add_option("id", show_id, "row number 1-42 or fixture name")
            ->required();
    }

    auto* artin = app.add_subcommand("artin", "local algebra invariants");
    artin->require_subcommand(1);
    with_algebra(leaf(artin, "invariants", "dimension, Hilbert-Samuel, socle", [&] {
        auto la = algebra_from_json(load_json(algebra_path), degree_cap_from_env());
        auto inv = invariants(la.algebra);
        ordered_json j;
        j["dim"] = inv.dim;
        j["is_local"] = inv.is_local;
        j["hilbert_samuel"] = inv.hilbert_samuel;
        j["socle_dim"] = inv.socle_dim;
        j["is_gorenstein"] = inv.is_gorenstein;
        j["nilpotency_index"] = inv.nilpotency_index;
        j["num_maximal_ideals"] = inv.num_maximal_ideals;
        return j;
    }));

    try {
        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            int rc = app.exit(e, out, err);
            return rc == 0 ? 0 : 2;
        }
        doc = action();
    } catch (const AddactError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }

    if (format == "json")
        out << doc.dump(2) << "\n";
    else
        render_block(out, doc, "");
    return 0;
}

}  // namespace addact
