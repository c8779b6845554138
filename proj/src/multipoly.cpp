#include "addact/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "addact/error.hpp"

namespace addact {

int mono_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool mono_less(const Expo& a, const Expo& b, MonoOrder order) {
    if (a.size() != b.size()) fail(ErrorCode::Internal, "comparing exponent vectors of different arity");
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    switch (order) {
        case MonoOrder::GrLex:
            // first differing exponent decides, larger wins
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        case MonoOrder::GrevLex:
            // last differing exponent decides, smaller wins
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] > b[i];
            return false;
    }
    return false;
}

bool mono_divides(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo mono_lcm(const Expo& a, const Expo& b) {
    Expo out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

MultiPoly MultiPoly::constant(size_t nvars, const Q& c) {
    MultiPoly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(size_t nvars, Expo e, const Q& c) {
    if (e.size() != nvars) fail(ErrorCode::Internal, "monomial exponent arity mismatch");
    MultiPoly p(nvars);
    p.add_term(std::move(e), c);
    return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t index) {
    Expo e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, std::move(e));
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, mono_degree(e));
    return d;
}

Q MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Q(0) : it->second;
}

void MultiPoly::add_term(const Expo& e, const Q& c) {
    if (c == 0) return;
    if (e.size() != nvars_) fail(ErrorCode::Internal, "term exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    MultiPoly out = *this;
    out += other;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (nvars_ != other.nvars_) fail(ErrorCode::Internal, "polynomial arity mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    return *this + other.scaled(Q(-1));
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) fail(ErrorCode::Internal, "polynomial arity mismatch");
    MultiPoly out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            Expo e(nvars_);
            for (size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

MultiPoly MultiPoly::scaled(const Q& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
    return out;
}

Expo MultiPoly::leading_monomial(MonoOrder order) const {
    if (terms_.empty()) fail(ErrorCode::Internal, "leading monomial of zero polynomial");
    const Expo* best = nullptr;
    for (const auto& [e, c] : terms_)
        if (!best || mono_less(*best, e, order)) best = &e;
    return *best;
}

Q MultiPoly::leading_coeff(MonoOrder order) const { return coeff(leading_monomial(order)); }

Q MultiPoly::constant_term() const { return coeff(Expo(nvars_, 0)); }

MultiPoly MultiPoly::widened(size_t new_nvars) const {
    if (new_nvars < nvars_) fail(ErrorCode::Internal, "widened would drop variables");
    MultiPoly out(new_nvars);
    for (const auto& [e, c] : terms_) {
        Expo w = e;
        w.resize(new_nvars, 0);
        out.add_term(w, c);
    }
    return out;
}

Q poly_eval(const MultiPoly& p, const std::vector<Q>& point) {
    if (point.size() != p.nvars()) fail(ErrorCode::Internal, "evaluation point arity mismatch");
    Q out = 0;
    for (const auto& [e, c] : p.terms()) {
        Q term = c;
        for (size_t k = 0; k < point.size(); ++k)
            for (int t = 0; t < e[k]; ++t) term *= point[k];
        out += term;
    }
    return out;
}

MultiPoly derivative(const MultiPoly& f, size_t var) {
    return apply_diffop(MultiPoly::variable(f.nvars(), var), f);
}

std::vector<Expo> monomials_up_to(size_t nvars, int max_degree) {
    std::vector<Expo> out;
    if (nvars == 0) {
        out.push_back({});
        return out;
    }
    Expo cur(nvars, 0);
    auto emit = [&](auto&& self, size_t pos, int left) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        // descending lex within the degree level
        for (int k = left; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    for (int deg = 0; deg <= max_degree; ++deg) emit(emit, 0, deg);
    return out;
}

Q pairing(const MultiPoly& g, const MultiPoly& f) {
    if (g.nvars() != f.nvars()) fail(ErrorCode::Internal, "pairing arity mismatch");
    Q out = 0;
    for (const auto& [e, cg] : g.terms()) {
        Q cf = f.coeff(e);
        if (cf == 0) continue;
        Q scale = 1;
        for (int k : e) scale *= Q(factorial(static_cast<unsigned>(k)));
        out += cg * cf * scale;
    }
    return out;
}

MultiPoly apply_diffop(const MultiPoly& g, const MultiPoly& f) {
    if (g.nvars() != f.nvars()) fail(ErrorCode::Internal, "diffop arity mismatch");
    size_t n = f.nvars();
    MultiPoly out(n);
    for (const auto& [i, cg] : g.terms())
        for (const auto& [j, cf] : f.terms()) {
            if (!mono_divides(i, j)) continue;
            Q scale = 1;
            Expo e(n);
            for (size_t k = 0; k < n; ++k) {
                e[k] = j[k] - i[k];
                // falling factorial j_k (j_k - 1) ... (j_k - i_k + 1)
                for (int t = 0; t < i[k]; ++t) scale *= j[k] - t;
            }
            out.add_term(e, cg * cf * scale);
        }
    return out;
}

MultiPoly translate(const MultiPoly& f, const std::vector<Q>& beta) {
    if (beta.size() != f.nvars()) fail(ErrorCode::Internal, "translate offset arity mismatch");
    size_t n = f.nvars();
    MultiPoly out(n);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(n, c);
        for (size_t k = 0; k < n; ++k) {
            if (e[k] == 0) continue;
            MultiPoly binom = MultiPoly::variable(n, k) + MultiPoly::constant(n, beta[k]);
            for (int t = 0; t < e[k]; ++t) term = term * binom;
        }
        out += term;
    }
    return out;
}

std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& names, MonoOrder order) {
    if (names.size() != p.nvars()) fail(ErrorCode::Internal, "variable name count mismatch");
    if (p.is_zero()) return "0";

    std::vector<Expo> expos;
    for (const auto& [e, c] : p.terms()) expos.push_back(e);
    std::sort(expos.begin(), expos.end(),
              [&](const Expo& a, const Expo& b) { return mono_less(b, a, order); });

    std::ostringstream out;
    bool first = true;
    for (const Expo& e : expos) {
        Q c = p.coeff(e);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Q a = abs(c);
        out << a.get_str();
        if (mono_degree(e) > 0) {
            out << " * ";
            bool started = false;
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (started) out << "*";
                out << names[k];
                if (e[k] > 1) out << "^" << e[k];
                started = true;
            }
        }
    }
    return out.str();
}

namespace {

struct Tokenizer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail(ErrorCode::ParseError, "expected a number in polynomial");
        return std::string(text.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) fail(ErrorCode::ParseError, "expected a variable name in polynomial");
        return std::string(text.substr(start, pos - start));
    }
};

}  // namespace

MultiPoly poly_parse(const std::string& text, const std::vector<std::string>& names) {
    size_t n = names.size();
    auto var_index = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < n; ++i)
            if (names[i] == name) return i;
        fail(ErrorCode::ParseError, "unknown variable '" + name + "'");
    };

    Tokenizer tok{text};
    MultiPoly out(n);
    if (tok.done()) fail(ErrorCode::ParseError, "empty polynomial");

    bool negative = tok.accept('-');
    if (!negative) tok.accept('+');
    while (true) {
        Q coeff = 1;
        Expo e(n, 0);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            if (std::isdigit(static_cast<unsigned char>(tok.peek()))) {
                std::string num = tok.number();
                if (tok.accept('/')) {
                    std::string den = tok.number();
                    coeff *= parse_rational(num + "/" + den);
                } else {
                    coeff *= parse_rational(num);
                }
            } else {
                size_t idx = var_index(tok.identifier());
                int power = 1;
                if (tok.accept('^')) power = std::stoi(tok.number());
                if (power < 0) fail(ErrorCode::ParseError, "negative exponent");
                e[idx] += power;
            }
            saw_factor = true;
            expect_factor = tok.accept('*');
        }
        if (!saw_factor) fail(ErrorCode::ParseError, "empty term in polynomial");
        out.add_term(e, negative ? -coeff : coeff);

        if (tok.done()) break;
        if (tok.accept('+')) negative = false;
        else if (tok.accept('-')) negative = true;
        else fail(ErrorCode::ParseError, "unexpected character in polynomial");
        if (tok.done()) fail(ErrorCode::ParseError, "dangling sign in polynomial");
    }
    return out;
}

std::vector<std::string> default_names(size_t nvars, const std::string& stem) {
    std::vector<std::string> out;
    out.reserve(nvars);
    for (size_t i = 1; i <= nvars; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

}  // namespace addact
