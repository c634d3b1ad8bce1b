#include "scrollreg/groebner.hpp"

#include <algorithm>

#include "scrollreg/util.hpp"

namespace scrollreg {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    if (f.is_zero() || divisors.empty()) return f;
    const RingPtr& ring = f.ring();
    const PrimeField& F = ring->field();
    Polynomial h = f;
    std::vector<Term> remainder;
    long long steps = 0;
    while (!h.is_zero()) {
        if (((++steps) & 0x3ff) == 0) poll_deadline("normal form");
        const Term& lt = h.leading_term();
        const Polynomial* divisor = nullptr;
        for (const auto& g : divisors) {
            if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Monomial q = lt.mono / divisor->leading_monomial();
            std::uint32_t c = F.div(lt.coeff, divisor->leading_coeff());
            h = h.sub_mult(*divisor, q, c);
        } else {
            remainder.push_back(lt);
            Polynomial rest(ring);
            std::vector<Term> tail(h.terms().begin() + 1, h.terms().end());
            rest = Polynomial::collect(ring, std::move(tail));
            h = std::move(rest);
        }
    }
    return Polynomial::collect(ring, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const RingPtr& ring = f.ring();
    const PrimeField& F = ring->field();
    Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = lcm / f.leading_monomial();
    Monomial mg = lcm / g.leading_monomial();
    Polynomial a = f.times_term(mf, F.inv(f.leading_coeff()));
    return a.sub_mult(g, mg, F.inv(g.leading_coeff()));
}

namespace {

struct CriticalPair {
    std::size_t i, j;
    int sugar;
    int lcm_deg;
};

struct Engine {
    std::vector<Polynomial> basis;
    std::vector<int> sugar;
    std::vector<CriticalPair> pairs;

    const Monomial& lm(std::size_t i) const { return basis[i].leading_monomial(); }

    // Gebauer-Moller update: prune old pairs by the chain criterion, keep only
    // divisibility-minimal new pairs, then apply the coprime-lead criterion.
    void update(Polynomial h, int h_sugar) {
        std::size_t t = basis.size();
        const Monomial& lmh = h.leading_monomial();

        std::vector<CriticalPair> surviving;
        surviving.reserve(pairs.size());
        for (const auto& cp : pairs) {
            Monomial lij = Monomial::lcm(lm(cp.i), lm(cp.j));
            if (lmh.divides(lij) && Monomial::lcm(lm(cp.i), lmh) != lij &&
                Monomial::lcm(lm(cp.j), lmh) != lij) {
                continue;
            }
            surviving.push_back(cp);
        }
        pairs = std::move(surviving);

        std::vector<std::pair<Monomial, CriticalPair>> fresh;
        fresh.reserve(t);
        for (std::size_t k = 0; k < t; ++k) {
            Monomial l = Monomial::lcm(lm(k), lmh);
            int s = std::max(sugar[k] + l.degree() - lm(k).degree(),
                             h_sugar + l.degree() - lmh.degree());
            fresh.push_back({l, {k, t, s, l.degree()}});
        }
        std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) {
            return a.first.degree() < b.first.degree();
        });
        std::vector<std::pair<Monomial, CriticalPair>> minimal;
        for (auto& cand : fresh) {
            bool dominated = false;
            for (auto& kept : minimal) {
                if (kept.first.divides(cand.first)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) minimal.push_back(cand);
        }
        for (auto& cand : minimal) {
            if (Monomial::coprime(lm(cand.second.i), lmh)) continue;
            pairs.push_back(cand.second);
        }
        basis.push_back(std::move(h));
        sugar.push_back(h_sugar);
    }

    Polynomial reduce_with_sugar(Polynomial h, int& h_sugar) const {
        const RingPtr ring = h.ring();
        const PrimeField& F = ring->field();
        std::vector<Term> remainder;
        long long steps = 0;
        while (!h.is_zero()) {
            if (((++steps) & 0x3ff) == 0) poll_deadline("buchberger reduction");
            const Term& lt = h.leading_term();
            const Polynomial* divisor = nullptr;
            int div_index = -1;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (basis[k].leading_monomial().divides(lt.mono)) {
                    divisor = &basis[k];
                    div_index = static_cast<int>(k);
                    break;
                }
            }
            if (divisor) {
                Monomial q = lt.mono / divisor->leading_monomial();
                std::uint32_t c = F.div(lt.coeff, divisor->leading_coeff());
                h_sugar = std::max(h_sugar, sugar[div_index] + q.degree());
                h = h.sub_mult(*divisor, q, c);
            } else {
                remainder.push_back(lt);
                std::vector<Term> tail(h.terms().begin() + 1, h.terms().end());
                h = Polynomial::collect(ring, std::move(tail));
            }
        }
        return Polynomial::collect(ring, std::move(remainder));
    }
};

} // namespace

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Polynomial& f) { return f.is_zero(); }),
                basis.end());
    // Drop elements whose lead is divisible by another element's lead.
    for (std::size_t i = 0; i < basis.size();) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial()) &&
                !(basis[j].leading_monomial() == basis[i].leading_monomial() && j > i)) {
                redundant = true;
                break;
            }
        }
        if (redundant) {
            basis.erase(basis.begin() + i);
        } else {
            ++i;
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(basis.size() - 1);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j != i) others.push_back(basis[j]);
        }
        basis[i] = normal_form(basis[i], others).monic();
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Polynomial& f) { return f.is_zero(); }),
                basis.end());
    // Canonical element order: ascending leads.
    if (!basis.empty()) {
        const TermOrder& ord = basis[0].ring()->order();
        std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ord.compare(a.leading_monomial(), b.leading_monomial()) == Ordering::LT;
        });
    }
    return basis;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens) {
    Engine eng;
    for (auto& f : gens) {
        if (!f.is_zero()) eng.update(f.monic(), f.degree());
    }
    while (!eng.pairs.empty()) {
        poll_deadline("buchberger");
        auto best = std::min_element(eng.pairs.begin(), eng.pairs.end(),
                                     [](const CriticalPair& a, const CriticalPair& b) {
                                         if (a.sugar != b.sugar) return a.sugar < b.sugar;
                                         if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
                                         if (a.j != b.j) return a.j < b.j;
                                         return a.i < b.i;
                                     });
        CriticalPair cp = *best;
        eng.pairs.erase(best);
        Polynomial s = s_polynomial(eng.basis[cp.i], eng.basis[cp.j]);
        int s_sugar = cp.sugar;
        Polynomial h = eng.reduce_with_sugar(std::move(s), s_sugar);
        if (!h.is_zero()) {
            eng.update(h.monic(), s_sugar);
        }
    }
    return interreduce(std::move(eng.basis));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
    return scrollreg::normal_form(f.in_ring(ring_), elements_);
}

bool GroebnerBasis::is_one() const {
    return elements_.size() == 1 && !elements_[0].is_zero() &&
           elements_[0].leading_monomial().is_one();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (const auto& g : elements_) out.push_back(g.leading_monomial());
    return out;
}

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw DimensionError("graded ideal requires homogeneous generators");
        gens_.push_back(g.in_ring(ring_));
    }
}

GroebnerPtr GradedIdeal::groebner(const TermOrder& order) const {
    std::string key = order.key(ring_->nvars());
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    RingPtr variant = order == ring_->order() ? ring_ : ring_->with_order(order);
    std::vector<Polynomial> input;
    input.reserve(gens_.size());
    for (const auto& g : gens_) input.push_back(g.in_ring(variant));
    auto gb = std::make_shared<GroebnerBasis>(variant, buchberger(std::move(input)));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(key, gb);
    return it->second;
}

bool GradedIdeal::is_zero_ideal() const { return groebner()->elements().empty(); }

std::vector<Polynomial> GradedIdeal::minimal_generators() const {
    std::vector<Polynomial> sorted = gens_;
    std::sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.degree() < b.degree();
    });
    std::vector<Polynomial> kept;
    std::vector<Polynomial> kept_gb;
    for (auto& g : sorted) {
        if (normal_form(g, kept_gb).is_zero()) continue;
        kept.push_back(g.monic());
        kept_gb.push_back(kept.back());
        kept_gb = buchberger(std::move(kept_gb));
    }
    return kept;
}

GradedIdeal GradedIdeal::truncated(int cap) const {
    std::vector<Polynomial> low;
    for (const auto& g : minimal_generators()) {
        if (g.degree() <= cap) low.push_back(g);
    }
    return GradedIdeal(ring_, std::move(low));
}

IdealPtr make_ideal(RingPtr ring, std::vector<Polynomial> gens) {
    return std::make_shared<GradedIdeal>(std::move(ring), std::move(gens));
}

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b) {
    auto ga = a.groebner();
    auto gb = b.groebner();
    if (ga->size() != gb->size()) return false;
    for (std::size_t i = 0; i < ga->size(); ++i) {
        if (!(ga->elements()[i] == gb->elements()[i].in_ring(ga->ring()))) return false;
    }
    return true;
}

IdealPtr ideal_sum(const GradedIdeal& a, const GradedIdeal& b) {
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g.in_ring(a.ring()));
    return make_ideal(a.ring(), std::move(gens));
}

IdealPtr eliminate(const GradedIdeal& ideal, const std::vector<int>& block) {
    if (block.empty()) return make_ideal(ideal.ring(), ideal.generators());
    int n = ideal.ring()->nvars();
    std::array<std::uint8_t, Monomial::kMaxVars> ranking{};
    std::vector<bool> in_block(n, false);
    for (int v : block) in_block[v] = true;
    int k = 0;
    for (int v : block) ranking[k++] = static_cast<std::uint8_t>(v);
    for (int i = 0; i < n; ++i) {
        if (!in_block[i]) ranking[k++] = static_cast<std::uint8_t>(i);
    }
    for (int i = n; i < Monomial::kMaxVars; ++i) ranking[i] = static_cast<std::uint8_t>(i);
    TermOrder ord = TermOrder::block(static_cast<int>(block.size())).ranked(ranking, n);
    auto gb = ideal.groebner(ord);
    std::vector<Polynomial> kept;
    for (const auto& g : gb->elements()) {
        bool free_of_block = true;
        for (const auto& t : g.terms()) {
            for (int v : block) {
                if (t.mono[v] != 0) {
                    free_of_block = false;
                    break;
                }
            }
            if (!free_of_block) break;
        }
        if (free_of_block) kept.push_back(g.in_ring(ideal.ring()));
    }
    return make_ideal(ideal.ring(), std::move(kept));
}

/// Shared core for intersections: eliminate t from t*A + (1-t)*B in K[t, x].
static std::vector<Polynomial> intersect_generators(const RingPtr& ring,
                                                    const std::vector<Polynomial>& a,
                                                    const std::vector<Polynomial>& b) {
    int n = ring->nvars();
    std::vector<std::string> names;
    names.reserve(n + 1);
    names.push_back("@t");
    for (const auto& nm : ring->names()) names.push_back(nm);
    RingPtr big = Ring::make_named(ring->field().modulus(), names, TermOrder::block(1));
    std::vector<int> shift(n);
    for (int i = 0; i < n; ++i) shift[i] = i + 1;
    Polynomial t = Polynomial::variable(big, 0);
    Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
    std::vector<Polynomial> gens;
    gens.reserve(a.size() + b.size());
    for (const auto& f : a) gens.push_back(t * f.embedded(big, shift));
    for (const auto& g : b) gens.push_back(one_minus_t * g.embedded(big, shift));
    std::vector<Polynomial> gb = buchberger(std::move(gens));
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        bool free_of_t = true;
        for (const auto& term : g.terms()) {
            if (term.mono[0] != 0) {
                free_of_t = false;
                break;
            }
        }
        if (free_of_t) {
            std::vector<int> source(ring->nvars());
            for (int i = 0; i < ring->nvars(); ++i) source[i] = i + 1;
            kept.push_back(g.extracted(ring, source));
        }
    }
    return kept;
}

IdealPtr intersect(const GradedIdeal& a, const GradedIdeal& b) {
    auto gens = intersect_generators(a.ring(), a.generators(), b.generators());
    return make_ideal(a.ring(), std::move(gens));
}

IdealPtr colon(const GradedIdeal& ideal, const Polynomial& f) {
    if (f.is_zero()) throw DivisionByZeroError("colon by the zero polynomial");
    if (!f.is_homogeneous()) throw DimensionError("colon by an inhomogeneous polynomial");
    std::vector<Polynomial> fgen{f.in_ring(ideal.ring())};
    auto meet = intersect_generators(ideal.ring(), ideal.generators(), fgen);
    std::vector<Polynomial> quotients;
    quotients.reserve(meet.size());
    for (const auto& g : meet) quotients.push_back(g.exact_div(fgen[0]));
    return make_ideal(ideal.ring(), std::move(quotients));
}

IdealPtr colon_ideal(const GradedIdeal& ideal, const GradedIdeal& j) {
    IdealPtr out;
    for (const auto& f : j.generators()) {
        IdealPtr single = colon(ideal, f);
        out = out ? intersect(*out, *single) : single;
    }
    if (!out) throw DimensionError("colon by the zero ideal");
    return out;
}

IdealPtr saturate(const GradedIdeal& ideal, const GradedIdeal& j) {
    IdealPtr current = make_ideal(ideal.ring(), ideal.generators());
    for (;;) {
        poll_deadline("saturation");
        IdealPtr next = colon_ideal(*current, j);
        if (ideal_equal(*next, *current)) return current;
        current = next;
    }
}

IdealPtr saturate_variable(const GradedIdeal& ideal, int var) {
    int n = ideal.ring()->nvars();
    TermOrder ord = TermOrder::grevlex_with_last(n, var);
    auto gb = ideal.groebner(ord);
    std::vector<Polynomial> divided;
    divided.reserve(gb->size());
    bool changed = false;
    for (const auto& g : gb->elements()) {
        int k = g.min_exponent(var);
        if (k > 0) changed = true;
        divided.push_back(g.div_variable_power(var, k).in_ring(ideal.ring()));
    }
    if (!changed) return make_ideal(ideal.ring(), ideal.generators());
    return make_ideal(ideal.ring(), std::move(divided));
}

IdealPtr saturate_irrelevant(const GradedIdeal& ideal) {
    int n = ideal.ring()->nvars();
    std::vector<IdealPtr> per_var;
    for (int v = n - 1; v >= 0; --v) {
        IdealPtr sat = saturate_variable(ideal, v);
        // If saturating by one variable changes nothing, the ideal is already
        // saturated with respect to the whole irrelevant ideal.
        if (ideal_equal(*sat, ideal)) return sat;
        per_var.push_back(sat);
    }
    IdealPtr out = per_var[0];
    for (std::size_t i = 1; i < per_var.size(); ++i) {
        out = intersect(*out, *per_var[i]);
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
    std::vector<Monomial> out;
    Monomial work(ring->nvars());
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == ring->nvars() - 1) {
            work.set(var, remaining);
            out.push_back(work);
            work.set(var, 0);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            work.set(var, e);
            rec(var + 1, remaining - e);
        }
        work.set(var, 0);
    };
    if (ring->nvars() == 0) return out;
    rec(0, d);
    const TermOrder& ord = ring->order();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ord.compare(a, b) == Ordering::GT;
    });
    return out;
}

std::vector<Polynomial> ideal_degree_piece(const GradedIdeal& ideal, int degree) {
    std::vector<Polynomial> out;
    for (const auto& g : ideal.generators()) {
        int d = g.homogeneous_degree();
        if (d < 0 || d > degree) continue;
        for (const auto& m : monomials_of_degree(ideal.ring(), degree - d)) {
            out.push_back(g.times_term(m, 1));
        }
    }
    return out;
}

} // namespace scrollreg
