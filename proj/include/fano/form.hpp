#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fano/monomial.hpp"
#include "fano/numeric.hpp"
#include "fano/prime_field.hpp"

namespace fano {

// Homogeneous polynomial of a declared degree; the zero form is allowed at any
// degree.  Zero coefficients are never stored.
template <typename T>
class GradedForm {
public:
    GradedForm() = default;
    GradedForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        if (nvars < 1) throw std::domain_error("GradedForm: nvars must be >= 1");
        if (degree < 0) throw std::domain_error("GradedForm: negative degree");
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<Monomial, T>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    T coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? T() : it->second;
    }

    void add_term(const Monomial& m, const T& c) {
        if (sc_is_zero(c)) return;
        if (m.nvars() != nvars_) throw std::invalid_argument("GradedForm: variable count mismatch");
        if (m.degree() != degree_) throw std::invalid_argument("GradedForm: monomial degree mismatch");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sc_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend GradedForm operator+(const GradedForm& a, const GradedForm& b) {
        check_compatible(a, b);
        GradedForm out(a.nvars_, a.degree_);
        out.terms_ = a.terms_;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend GradedForm operator-(const GradedForm& a, const GradedForm& b) {
        check_compatible(a, b);
        GradedForm out(a.nvars_, a.degree_);
        out.terms_ = a.terms_;
        for (const auto& [m, c] : b.terms_) out.add_term(m, T() - c);
        return out;
    }

    friend GradedForm operator*(const T& s, const GradedForm& a) {
        GradedForm out(a.nvars_, a.degree_);
        if (sc_is_zero(s)) return out;
        for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
        return out;
    }

    friend GradedForm operator*(const GradedForm& a, const GradedForm& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("GradedForm: variable count mismatch");
        GradedForm out(a.nvars_, a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend bool operator==(const GradedForm& a, const GradedForm& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedForm& a, const GradedForm& b) { return !(a == b); }

private:
    static void check_compatible(const GradedForm& a, const GradedForm& b) {
        if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_)
            throw std::invalid_argument("GradedForm: mixed rings in one sum");
    }

    int nvars_ = 1;
    int degree_ = 0;
    std::map<Monomial, T> terms_;
};

template <typename T>
GradedForm<T> derivative(const GradedForm<T>& f, int var) {
    if (var < 0 || var >= f.nvars()) throw std::domain_error("derivative: variable out of range");
    if (f.degree() == 0) throw std::domain_error("derivative: form of degree 0");
    GradedForm<T> out(f.nvars(), f.degree() - 1);
    for (const auto& [m, c] : f.terms()) {
        int e = m[var];
        if (e == 0) continue;
        std::vector<int> exps(m.exponents());
        exps[var] -= 1;
        out.add_term(Monomial(std::move(exps)), sc_scale(c, e));
    }
    return out;
}

// Substitute each variable by a linear form in a common target ring.
template <typename T>
GradedForm<T> substitute_linear(const GradedForm<T>& f, const std::vector<GradedForm<T>>& images) {
    if (static_cast<int>(images.size()) != f.nvars())
        throw std::invalid_argument("substitute_linear: one image per variable required");
    int target_vars = images.empty() ? 1 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != target_vars || g.degree() != 1)
            throw std::invalid_argument("substitute_linear: images must be linear forms in one ring");
    GradedForm<T> out(target_vars, f.degree());
    for (const auto& [m, c] : f.terms()) {
        GradedForm<T> prod(target_vars, 0);
        prod.add_term(Monomial::one(target_vars), c);
        for (int v = 0; v < f.nvars(); ++v)
            for (int k = 0; k < m[v]; ++k) prod = prod * images[v];
        out = out + prod;
    }
    return out;
}

// Variable naming for the text grammar.  A plain scheme is a single-letter ring
// t0..t_{n-1} (x/u accepted as synonyms on input); an ambient scheme splits the
// ring into Veronese coordinates x0..x_{k-1} followed by span complements
// y0..y_{m-1}.
struct VarScheme {
    enum class Kind { Plain, Ambient };
    Kind kind = Kind::Plain;
    int nvars = 0;
    char letter = 't';
    int n_x = 0;

    static VarScheme plain(int nvars, char letter = 't') {
        VarScheme s;
        s.kind = Kind::Plain;
        s.nvars = nvars;
        s.letter = letter;
        return s;
    }

    static VarScheme ambient(int n_x, int n_y) {
        VarScheme s;
        s.kind = Kind::Ambient;
        s.nvars = n_x + n_y;
        s.n_x = n_x;
        return s;
    }

    // Ring index for a parsed variable, or -1 if it does not belong here.
    int resolve(char name, long long index) const {
        if (index < 0) return -1;
        if (kind == Kind::Plain) {
            if (name != 't' && name != 'x' && name != 'u') return -1;
            return index < nvars ? static_cast<int>(index) : -1;
        }
        if (name == 'x') return index < n_x ? static_cast<int>(index) : -1;
        if (name == 'y') return index < nvars - n_x ? static_cast<int>(n_x + index) : -1;
        return -1;
    }

    std::string name(int v) const {
        if (kind == Kind::Plain) return std::string(1, letter) + std::to_string(v);
        if (v < n_x) return "x" + std::to_string(v);
        return "y" + std::to_string(v - n_x);
    }
};

namespace detail {

inline std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string coeff_str(const Rational& c, bool strip_sign) {
    Rational a = strip_sign && c < 0 ? Rational(-c) : c;
    return rational_str(a);
}

inline std::string coeff_str(const Fp& c, bool) { return std::to_string(c.value()); }

inline bool coeff_is_negative(const Rational& c) { return c < 0; }
inline bool coeff_is_negative(const Fp&) { return false; }

inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(const Fp& c) { return c.attached() && c.value() == 1; }

}  // namespace detail

// Render in the shared text grammar: terms joined by " + " / " - ", each term
// "coeff*var^exp*...", coefficient omitted when it is 1.
template <typename T>
std::string to_text(const GradedForm<T>& f, const VarScheme& scheme) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool neg = detail::coeff_is_negative(c);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string cs = detail::coeff_str(c, true);
        bool printed = false;
        if (!detail::coeff_is_one(neg ? T() - c : c) || m.degree() == 0) {
            os << cs;
            printed = true;
        }
        for (int v = 0; v < m.nvars(); ++v) {
            if (m[v] == 0) continue;
            if (printed) os << "*";
            printed = true;
            os << scheme.name(v);
            if (m[v] > 1) os << "^" << m[v];
        }
    }
    return os.str();
}

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    BigInt read_uint() {
        skip_ws();
        if (i >= s.size() || s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("polynomial parse: expected a number at offset " + std::to_string(i));
        std::size_t j = i;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        BigInt v(s.substr(i, j - i));
        i = j;
        return v;
    }
    long long read_uint_small(const char* what) {
        BigInt v = read_uint();
        if (v > 1000000) throw std::invalid_argument(std::string("polynomial parse: ") + what + " too large");
        return static_cast<long long>(v);
    }
};

}  // namespace detail

// Parse the text grammar over the rationals.  All terms must share one degree;
// pass expected_degree >= 0 to pin the degree of a zero polynomial.
inline GradedForm<Rational> parse_form(const std::string& text, const VarScheme& scheme,
                                       int expected_degree = -1) {
    detail::PolyLexer lex(text);
    std::vector<std::pair<Monomial, Rational>> parsed;
    bool first_term = true;
    while (!lex.eof()) {
        int sign = 1;
        if (lex.accept('-')) {
            sign = -1;
        } else if (lex.accept('+')) {
            if (first_term) throw std::invalid_argument("polynomial parse: leading '+'");
        } else if (!first_term) {
            throw std::invalid_argument("polynomial parse: expected '+' or '-' between terms");
        }
        first_term = false;

        Rational coeff(1);
        bool have_coeff = false;
        if (lex.peek() >= '0' && lex.peek() <= '9') {
            BigInt num = lex.read_uint();
            BigInt den = 1;
            if (lex.accept('/')) den = lex.read_uint();
            coeff = make_rational(num, den);
            have_coeff = true;
            if (!lex.accept('*')) {
                char c = lex.peek();
                if (c != 't' && c != 'x' && c != 'y' && c != 'u') {
                    // bare constant term; only the zero form or degree 0 admits one
                    std::vector<int> exps(scheme.nvars, 0);
                    parsed.emplace_back(Monomial(std::move(exps)), sign < 0 ? Rational(-coeff) : coeff);
                    continue;
                }
            }
        }

        std::vector<int> exps(scheme.nvars, 0);
        bool saw_factor = false;
        for (;;) {
            char c = lex.peek();
            if (c == 't' || c == 'x' || c == 'y' || c == 'u') {
                ++lex.i;
                long long idx = lex.read_uint_small("variable index");
                int v = scheme.resolve(c, idx);
                if (v < 0)
                    throw std::invalid_argument(std::string("polynomial parse: unknown variable ") + c +
                                                std::to_string(idx));
                int e = 1;
                if (lex.accept('^')) e = static_cast<int>(lex.read_uint_small("exponent"));
                exps[v] += e;
                saw_factor = true;
                if (lex.accept('*')) continue;
                // implicit product: allow a following variable without '*'
                char nxt = lex.peek();
                if (nxt == 't' || nxt == 'x' || nxt == 'y' || nxt == 'u') continue;
                break;
            }
            break;
        }
        if (!saw_factor && !have_coeff)
            throw std::invalid_argument("polynomial parse: empty term");
        parsed.emplace_back(Monomial(std::move(exps)), sign < 0 ? Rational(-coeff) : coeff);
    }

    int degree = expected_degree;
    for (const auto& [m, c] : parsed) {
        if (sc_is_zero(c)) continue;
        if (m.degree() == 0 && c == 0) continue;
        if (degree < 0) degree = m.degree();
        if (m.degree() != degree)
            throw std::invalid_argument("polynomial parse: inhomogeneous input");
    }
    if (degree < 0) degree = 0;
    GradedForm<Rational> out(scheme.nvars, degree);
    for (const auto& [m, c] : parsed) out.add_term(m, c);
    return out;
}

// Reduce a rational form mod p (fails if p divides any denominator).
inline GradedForm<Fp> to_prime_field(const GradedForm<Rational>& f, const FpCtx& F) {
    GradedForm<Fp> out(f.nvars(), f.degree());
    for (const auto& [m, c] : f.terms()) out.add_term(m, F.from_rational(c));
    return out;
}

}  // namespace fano
