#include "scrollreg/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace scrollreg {

namespace {

const PrimeField& fld(const RingPtr& r) { return r->field(); }

} // namespace

Polynomial Polynomial::constant(RingPtr ring, long long c) {
    std::uint32_t v = ring->field().reduce_int(c);
    Polynomial out(ring);
    if (v != 0) out.terms_.push_back({Monomial(ring->nvars()), v});
    return out;
}

Polynomial Polynomial::variable(RingPtr ring, int i, int power) {
    Polynomial out(ring);
    if (power < 0) throw DimensionError("negative power");
    Monomial m(ring->nvars());
    m.set(i, power);
    out.terms_.push_back({m, 1});
    return out;
}

Polynomial Polynomial::from_term(RingPtr ring, Monomial m, std::uint32_t c) {
    Polynomial out(ring);
    if (m.nvars() != ring->nvars()) throw DimensionError("term from wrong ring");
    if (c % ring->field().modulus() != 0) {
        out.terms_.push_back({m, c % ring->field().modulus()});
    }
    return out;
}

Polynomial Polynomial::collect(RingPtr ring, std::vector<Term> terms) {
    const TermOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.mono, b.mono) == Ordering::GT;
    });
    Polynomial out(ring);
    const PrimeField& F = ring->field();
    for (auto& t : terms) {
        std::uint32_t c = t.coeff % F.modulus();
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            std::uint32_t s = F.add(out.terms_.back().coeff, c);
            if (s == 0) {
                out.terms_.pop_back();
            } else {
                out.terms_.back().coeff = s;
            }
        } else if (c != 0) {
            out.terms_.push_back({t.mono, c});
        }
    }
    return out;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
    return terms_[0];
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_) {
        if (t.mono.degree() != d) return false;
    }
    return true;
}

int Polynomial::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return -1;
    return terms_[0].mono.degree();
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, fld(ring_).neg(t.coeff)});
    return out;
}

// Merge two descending term lists, combining equal monomials via op.
template <typename CoeffOp>
static std::vector<Term> merge_terms(const RingPtr& ring, const std::vector<Term>& a,
                                     const std::vector<Term>& b, CoeffOp op_b) {
    const TermOrder& ord = ring->order();
    const PrimeField& F = ring->field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Ordering c = ord.compare(a[i].mono, b[j].mono);
        if (c == Ordering::GT) {
            out.push_back(a[i++]);
        } else if (c == Ordering::LT) {
            out.push_back({b[j].mono, op_b(b[j].coeff)});
            ++j;
        } else {
            std::uint32_t s = F.add(a[i].coeff, op_b(b[j].coeff));
            if (s != 0) out.push_back({a[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, op_b(b[j].coeff)});
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out(ring_);
    out.terms_ = merge_terms(ring_, terms_, o.terms_, [](std::uint32_t c) { return c; });
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    const PrimeField& F = fld(ring_);
    Polynomial out(ring_);
    out.terms_ = merge_terms(ring_, terms_, o.terms_, [&](std::uint32_t c) { return F.neg(c); });
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    const PrimeField& F = fld(ring_);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            acc.push_back({s.mono * t.mono, F.mul(s.coeff, t.coeff)});
        }
    }
    return collect(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    const PrimeField& F = fld(ring_);
    c %= F.modulus();
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, F.mul(t.coeff, c)});
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
    const PrimeField& F = fld(ring_);
    c %= F.modulus();
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
    return out;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(fld(ring_).inv(terms_[0].coeff));
}

Polynomial Polynomial::sub_mult(const Polynomial& g, const Monomial& m, std::uint32_t c) const {
    const PrimeField& F = fld(ring_);
    const TermOrder& ord = ring_->order();
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * m;
        Ordering cmp = ord.compare(terms_[i].mono, gm);
        if (cmp == Ordering::GT) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp == Ordering::LT) {
            out.terms_.push_back({gm, F.neg(F.mul(g.terms_[j].coeff, c))});
            ++j;
        } else {
            std::uint32_t s = F.sub(terms_[i].coeff, F.mul(g.terms_[j].coeff, c));
            if (s != 0) out.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) {
        out.terms_.push_back({g.terms_[j].mono * m, F.neg(F.mul(g.terms_[j].coeff, c))});
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
    }
    return true;
}

Polynomial Polynomial::in_ring(const RingPtr& other) const {
    if (!ring_->compatible(*other)) throw DimensionError("ring variant mismatch");
    Polynomial out(other);
    out.terms_ = terms_;
    const TermOrder& ord = other->order();
    std::sort(out.terms_.begin(), out.terms_.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.mono, b.mono) == Ordering::GT;
    });
    return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars()) {
        throw DimensionError("substitution must cover all variables");
    }
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    Polynomial out = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial factor = Polynomial::constant(target, 1).scaled(t.coeff);
        for (int i = 0; i < ring_->nvars(); ++i) {
            for (int k = 0; k < t.mono[i]; ++k) factor = factor * images[i];
        }
        out = out + factor;
    }
    return out;
}

Polynomial Polynomial::embedded(const RingPtr& target, const std::vector<int>& var_map) const {
    Polynomial out(target);
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (int i = 0; i < ring_->nvars(); ++i) m.set(var_map[i], t.mono[i]);
        acc.push_back({m, t.coeff});
    }
    return collect(target, std::move(acc));
}

Polynomial Polynomial::extracted(const RingPtr& target, const std::vector<int>& source_vars) const {
    std::vector<bool> used(ring_->nvars(), false);
    for (int v : source_vars) used[v] = true;
    Polynomial out(target);
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (!used[i] && t.mono[i] != 0) {
                throw DimensionError("polynomial involves a variable outside the subring");
            }
        }
        for (std::size_t i = 0; i < source_vars.size(); ++i) m.set(static_cast<int>(i), t.mono[source_vars[i]]);
        acc.push_back({m, t.coeff});
    }
    return collect(target, std::move(acc));
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    const PrimeField& F = fld(ring_);
    Polynomial rem = *this;
    std::vector<Term> quot;
    const Monomial& dm = divisor.leading_monomial();
    std::uint32_t dinv = F.inv(divisor.leading_coeff());
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!dm.divides(lt.mono)) throw DivisionByZeroError("inexact polynomial division");
        Monomial q = lt.mono / dm;
        std::uint32_t c = F.mul(lt.coeff, dinv);
        quot.push_back({q, c});
        rem = rem.sub_mult(divisor, q, c);
    }
    return collect(ring_, std::move(quot));
}

int Polynomial::min_exponent(int i) const {
    if (terms_.empty()) return 0;
    int m = 255;
    for (const auto& t : terms_) m = std::min(m, t.mono[i]);
    return m;
}

Polynomial Polynomial::div_variable_power(int i, int k) const {
    if (k == 0) return *this;
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        m.set(i, m[i] - k);
        out.terms_.push_back({m, t.coeff});
    }
    // Dividing by a variable power preserves the grevlex-class relative order
    // only when the exponent drop is uniform, which it is here.
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const std::uint32_t p = ring_->field().modulus();
    bool first = true;
    for (const auto& t : terms_) {
        // Print small negatives as subtraction for readability.
        std::uint32_t c = t.coeff;
        bool negative = c > p / 2;
        std::uint32_t mag = negative ? p - c : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? "-" : "+";
        }
        bool printed_coeff = false;
        if (mag != 1 || t.mono.is_one()) {
            out += std::to_string(mag);
            printed_coeff = true;
        }
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (printed_coeff || out.size() > 0) {
                if (!out.empty() && out.back() != '+' && out.back() != '-') out += "*";
            }
            out += ring_->name(i);
            if (t.mono[i] > 1) out += "^" + std::to_string(t.mono[i]);
            printed_coeff = true;
        }
    }
    return out;
}

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error("polynomial parse error at position " + std::to_string(pos) + ": " + what +
                    " in \"" + s + "\"");
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }

    /// Longest-prefix variable match so that juxtaposed names like x0x2 split.
    int parse_var() {
        skip_ws();
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < ring->nvars(); ++i) {
            const std::string& n = ring->name(i);
            if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
                best = i;
                best_len = n.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (eat('(')) {
            Polynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return parse_power(inner);
        }
        if (peek() == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            return parse_power(Polynomial::constant(ring, parse_int()));
        }
        int v = parse_var();
        if (v < 0) fail("expected variable, number or '('");
        return parse_power(Polynomial::variable(ring, v));
    }

    Polynomial parse_power(Polynomial base) {
        if (eat('^')) {
            long long e = parse_int();
            Polynomial out = Polynomial::constant(ring, 1);
            for (long long k = 0; k < e; ++k) out = out * base;
            return out;
        }
        return base;
    }

    bool starts_factor() {
        char c = peek();
        if (c == '(' ) return true;
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        // A variable must start here for implicit multiplication.
        std::size_t save = pos;
        int v = parse_var();
        pos = save;
        return v >= 0;
    }

    Polynomial parse_term() {
        Polynomial out = parse_factor();
        for (;;) {
            if (eat('*')) {
                out = out * parse_factor();
            } else if (starts_factor()) {
                out = out * parse_factor();
            } else {
                return out;
            }
        }
    }

    Polynomial parse_expr() {
        Polynomial out = peek() == '-' ? (eat('-'), -parse_term()) : parse_term();
        for (;;) {
            if (eat('+')) {
                out = out + parse_term();
            } else if (eat('-')) {
                out = out - parse_term();
            } else {
                return out;
            }
        }
    }
};

} // namespace

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    Polynomial out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

} // namespace scrollreg
