#ifndef SCROLLREG_TERM_ORDER_HPP
#define SCROLLREG_TERM_ORDER_HPP

#include <array>
#include <cstdint>
#include <string>

#include "scrollreg/monomial.hpp"

namespace scrollreg {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// Term order on monomials: graded reverse lexicographic, lexicographic, or a
/// block/elimination order whose leading block is compared first (grevlex
/// within each block). An optional variable ranking permutes positions before
/// comparing, so "grevlex with x_i cheapest" is just a ranked grevlex.
class TermOrder {
public:
    enum class Kind : std::uint8_t { Grevlex, Lex, Block };

    TermOrder() : kind_(Kind::Grevlex), elim_(0) { identity(); }

    static TermOrder grevlex() { return TermOrder(); }

    static TermOrder lex() {
        TermOrder t;
        t.kind_ = Kind::Lex;
        return t;
    }

    /// Block order eliminating the first elim_vars (ranked) variables.
    static TermOrder block(int elim_vars) {
        TermOrder t;
        t.kind_ = Kind::Block;
        t.elim_ = static_cast<std::uint8_t>(elim_vars);
        return t;
    }

    /// Same order with positions permuted: ranking[k] = original variable
    /// compared at position k. For grevlex, position nvars-1 is the cheapest.
    TermOrder ranked(const std::array<std::uint8_t, Monomial::kMaxVars>& ranking, int nvars) const {
        TermOrder t = *this;
        t.perm_ = ranking;
        t.permuted_ = false;
        for (int i = 0; i < nvars; ++i) {
            if (t.perm_[i] != i) t.permuted_ = true;
        }
        return t;
    }

    /// Grevlex in which variable var is compared cheapest (moved to the last slot).
    static TermOrder grevlex_with_last(int nvars, int var);

    Kind kind() const { return kind_; }
    int elim_vars() const { return elim_; }
    bool is_permuted() const { return permuted_; }
    int ranked_var(int pos) const { return perm_[pos]; }

    Ordering compare(const Monomial& a, const Monomial& b) const;

    /// True iff every monomial containing a leading-block variable exceeds
    /// every monomial free of them (always true for Block with elim > 0).
    bool is_elimination_order_for(int block_size) const {
        return kind_ == Kind::Block && elim_ >= block_size && !permuted_;
    }

    /// Stable identity for Gröbner basis caches.
    std::string key(int nvars) const;

    bool operator<(const TermOrder& o) const;
    bool operator==(const TermOrder& o) const;

private:
    void identity() {
        for (int i = 0; i < Monomial::kMaxVars; ++i) perm_[i] = static_cast<std::uint8_t>(i);
    }

    Ordering grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const;
    Ordering lex_range(const Monomial& a, const Monomial& b, int lo, int hi) const;

    Kind kind_;
    std::uint8_t elim_;
    bool permuted_ = false;
    std::array<std::uint8_t, Monomial::kMaxVars> perm_;
};

} // namespace scrollreg

#endif
