#include "scrollreg/term_order.hpp"

namespace scrollreg {

TermOrder TermOrder::grevlex_with_last(int nvars, int var) {
    std::array<std::uint8_t, Monomial::kMaxVars> ranking{};
    int k = 0;
    for (int i = 0; i < nvars; ++i) {
        if (i != var) ranking[k++] = static_cast<std::uint8_t>(i);
    }
    ranking[k] = static_cast<std::uint8_t>(var);
    for (int i = nvars; i < Monomial::kMaxVars; ++i) ranking[i] = static_cast<std::uint8_t>(i);
    return TermOrder::grevlex().ranked(ranking, nvars);
}

Ordering TermOrder::grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
    int da = 0, db = 0;
    if (!permuted_ && lo == 0 && hi == a.nvars()) {
        da = a.degree();
        db = b.degree();
    } else {
        for (int k = lo; k < hi; ++k) {
            da += a[perm_[k]];
            db += b[perm_[k]];
        }
    }
    if (da != db) return da > db ? Ordering::GT : Ordering::LT;
    // Reverse lexicographic tie-break: scan from the cheapest position; the
    // monomial with the smaller exponent at the last difference is larger.
    for (int k = hi - 1; k >= lo; --k) {
        int ea = a[perm_[k]], eb = b[perm_[k]];
        if (ea != eb) return ea < eb ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

Ordering TermOrder::lex_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
    for (int k = lo; k < hi; ++k) {
        int ea = a[perm_[k]], eb = b[perm_[k]];
        if (ea != eb) return ea > eb ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

Ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw DimensionError("monomial comparison across rings");
    int n = a.nvars();
    switch (kind_) {
        case Kind::Grevlex:
            return grevlex_range(a, b, 0, n);
        case Kind::Lex:
            return lex_range(a, b, 0, n);
        case Kind::Block: {
            Ordering first = grevlex_range(a, b, 0, std::min<int>(elim_, n));
            if (first != Ordering::EQ) return first;
            return grevlex_range(a, b, std::min<int>(elim_, n), n);
        }
    }
    return Ordering::EQ;
}

std::string TermOrder::key(int nvars) const {
    std::string k;
    switch (kind_) {
        case Kind::Grevlex: k = "grevlex"; break;
        case Kind::Lex: k = "lex"; break;
        case Kind::Block: k = "block" + std::to_string(elim_); break;
    }
    if (permuted_) {
        k += ":";
        for (int i = 0; i < nvars; ++i) k += std::to_string(perm_[i]) + ".";
    }
    return k;
}

bool TermOrder::operator<(const TermOrder& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (elim_ != o.elim_) return elim_ < o.elim_;
    return perm_ < o.perm_;
}

bool TermOrder::operator==(const TermOrder& o) const {
    return kind_ == o.kind_ && elim_ == o.elim_ && perm_ == o.perm_;
}

} // namespace scrollreg
