#include "scrollreg/free_module.hpp"

#include <algorithm>
#include <limits>

#include "scrollreg/util.hpp"

namespace scrollreg {

Ordering FreeModule::compare(const Monomial& m1, std::uint32_t c1, const Monomial& m2,
                             std::uint32_t c2) const {
    if (!is_schreyer()) {
        if (plain_order_ == PlainOrder::POT) {
            if (c1 != c2) return c1 < c2 ? Ordering::GT : Ordering::LT;
            return ring_->order().compare(m1, m2);
        }
        // TOP: total degree with twists, then the ring order, then position.
        int d1 = m1.degree() + twists_[c1];
        int d2 = m2.degree() + twists_[c2];
        if (d1 != d2) return d1 > d2 ? Ordering::GT : Ordering::LT;
        Ordering by_mono = ring_->order().compare(m1, m2);
        if (by_mono != Ordering::EQ) return by_mono;
        if (c1 != c2) return c1 < c2 ? Ordering::GT : Ordering::LT;
        return Ordering::EQ;
    }
    // Fast path: if the cumulative images differ as ring monomials, that
    // comparison is the answer; ties never reach deeper levels.
    Monomial full1 = m1 * cumulative_[c1];
    Monomial full2 = m2 * cumulative_[c2];
    Ordering by_image = ring_->order().compare(full1, full2);
    if (by_image != Ordering::EQ) return by_image;
    // Equal cumulative images: walk down until the (monomial, component)
    // pairs coincide; break the tie by the component index one level up.
    const FreeModule* level = this;
    Monomial a = m1, b = m2;
    std::uint32_t ca = c1, cb = c2;
    while (level->is_schreyer()) {
        const auto& ta = level->tags_[ca];
        const auto& tb = level->tags_[cb];
        Monomial na = a * ta.mono;
        Monomial nb = b * tb.mono;
        if (ta.comp == tb.comp && na == nb) {
            if (ca == cb) return Ordering::EQ;
            return ca < cb ? Ordering::GT : Ordering::LT;
        }
        a = std::move(na);
        b = std::move(nb);
        ca = ta.comp;
        cb = tb.comp;
        level = level->parent_.get();
    }
    // Base module with equal monomials: tie on components.
    if (ca == cb) return Ordering::EQ;
    return ca < cb ? Ordering::GT : Ordering::LT;
}

ModulePoly ModulePoly::collect(FreeModulePtr module, std::vector<ModTerm> terms) {
    const FreeModule& M = *module;
    const PrimeField& F = module->ring()->field();
    std::sort(terms.begin(), terms.end(), [&](const ModTerm& x, const ModTerm& y) {
        return M.compare(x.mono, x.comp, y.mono, y.comp) == Ordering::GT;
    });
    ModulePoly out(std::move(module));
    for (auto& t : terms) {
        std::uint32_t c = t.coeff % F.modulus();
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono &&
            out.terms_.back().comp == t.comp) {
            std::uint32_t s = F.add(out.terms_.back().coeff, c);
            if (s == 0) {
                out.terms_.pop_back();
            } else {
                out.terms_.back().coeff = s;
            }
        } else if (c != 0) {
            out.terms_.push_back({t.mono, t.comp, c});
        }
    }
    return out;
}

ModulePoly ModulePoly::basis_element(FreeModulePtr module, std::uint32_t comp) {
    ModulePoly out(module);
    out.terms_.push_back({Monomial(module->ring()->nvars()), comp, 1});
    return out;
}

ModulePoly ModulePoly::from_polynomial(FreeModulePtr module, const Polynomial& f,
                                       std::uint32_t comp) {
    std::vector<ModTerm> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) terms.push_back({t.mono, comp, t.coeff});
    return collect(std::move(module), std::move(terms));
}

const ModTerm& ModulePoly::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero module element");
    return terms_[0];
}

int ModulePoly::degree() const {
    // Twists can be negative, so the zero sentinel must sit below any real degree.
    int d = std::numeric_limits<int>::min();
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.degree() + module_->twist(t.comp));
    }
    return d;
}

bool ModulePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].mono.degree() + module_->twist(terms_[0].comp);
    for (const auto& t : terms_) {
        if (t.mono.degree() + module_->twist(t.comp) != d) return false;
    }
    return true;
}

ModulePoly ModulePoly::sub_mult(const ModulePoly& g, const Monomial& m, std::uint32_t c) const {
    const FreeModule& M = *module_;
    const PrimeField& F = module_->ring()->field();
    ModulePoly out(module_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * m;
        Ordering cmp = M.compare(terms_[i].mono, terms_[i].comp, gm, g.terms_[j].comp);
        if (cmp == Ordering::GT) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp == Ordering::LT) {
            out.terms_.push_back({gm, g.terms_[j].comp, F.neg(F.mul(g.terms_[j].coeff, c))});
            ++j;
        } else {
            std::uint32_t s = F.sub(terms_[i].coeff, F.mul(g.terms_[j].coeff, c));
            if (s != 0) out.terms_.push_back({terms_[i].mono, terms_[i].comp, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) {
        out.terms_.push_back(
            {g.terms_[j].mono * m, g.terms_[j].comp, F.neg(F.mul(g.terms_[j].coeff, c))});
    }
    return out;
}

ModulePoly ModulePoly::times_term(const Monomial& m, std::uint32_t c) const {
    const PrimeField& F = module_->ring()->field();
    ModulePoly out(module_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        out.terms_.push_back({t.mono * m, t.comp, F.mul(t.coeff, c)});
    }
    return out;
}

ModulePoly ModulePoly::monic() const {
    if (terms_.empty()) return *this;
    const PrimeField& F = module_->ring()->field();
    std::uint32_t inv = F.inv(terms_[0].coeff);
    ModulePoly out(module_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.comp, F.mul(t.coeff, inv)});
    return out;
}

ModulePoly ModulePoly::operator+(const ModulePoly& o) const {
    std::vector<ModTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return collect(module_, std::move(all));
}

ModulePoly ModulePoly::operator-(const ModulePoly& o) const {
    const PrimeField& F = module_->ring()->field();
    std::vector<ModTerm> all = terms_;
    all.reserve(terms_.size() + o.terms_.size());
    for (const auto& t : o.terms_) all.push_back({t.mono, t.comp, F.neg(t.coeff)});
    return collect(module_, std::move(all));
}

bool ModulePoly::operator==(const ModulePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].comp != o.terms_[i].comp ||
            terms_[i].mono != o.terms_[i].mono) {
            return false;
        }
    }
    return true;
}

Polynomial ModulePoly::component(std::uint32_t comp, const RingPtr& ring) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        if (t.comp == comp) terms.push_back({t.mono, t.coeff});
    }
    return Polynomial::collect(ring, std::move(terms));
}

ModulePoly module_normal_form(const ModulePoly& f, const std::vector<ModulePoly>& divisors,
                              std::vector<ReductionStep>* steps) {
    if (f.is_zero()) return f;
    const FreeModulePtr& M = f.module();
    const PrimeField& F = M->ring()->field();
    ModulePoly h = f;
    std::vector<ModTerm> remainder;
    long long iter = 0;
    while (!h.is_zero()) {
        if (((++iter) & 0x3ff) == 0) poll_deadline("module normal form");
        const ModTerm& lt = h.leading_term();
        const ModulePoly* divisor = nullptr;
        std::size_t index = 0;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (divisors[k].is_zero()) continue;
            const ModTerm& dl = divisors[k].leading_term();
            if (dl.comp == lt.comp && dl.mono.divides(lt.mono)) {
                divisor = &divisors[k];
                index = k;
                break;
            }
        }
        if (divisor) {
            Monomial q = lt.mono / divisor->leading_term().mono;
            std::uint32_t c = F.div(lt.coeff, divisor->leading_term().coeff);
            if (steps) steps->push_back({index, q, c});
            h = h.sub_mult(*divisor, q, c);
        } else {
            remainder.push_back(lt);
            std::vector<ModTerm> tail(h.terms().begin() + 1, h.terms().end());
            h = ModulePoly::collect(M, std::move(tail));
        }
    }
    return ModulePoly::collect(M, std::move(remainder));
}

namespace {

struct ModPair {
    std::size_t i, j;
    int sugar;
    int lcm_deg;
};

struct ModEngine {
    std::vector<ModulePoly> basis;
    std::vector<int> sugar;
    std::vector<ModPair> pairs;

    const ModTerm& lt(std::size_t i) const { return basis[i].leading_term(); }

    // Gebauer-Moller update, componentwise (no coprime criterion: it is not
    // valid for modules).
    void update(ModulePoly h, int h_sugar) {
        std::size_t t = basis.size();
        const ModTerm& lh = h.leading_term();

        std::vector<ModPair> surviving;
        surviving.reserve(pairs.size());
        for (const auto& cp : pairs) {
            if (lt(cp.i).comp == lh.comp) {
                Monomial lij = Monomial::lcm(lt(cp.i).mono, lt(cp.j).mono);
                if (lh.mono.divides(lij) && Monomial::lcm(lt(cp.i).mono, lh.mono) != lij &&
                    Monomial::lcm(lt(cp.j).mono, lh.mono) != lij) {
                    continue;
                }
            }
            surviving.push_back(cp);
        }
        pairs = std::move(surviving);

        std::vector<std::pair<Monomial, ModPair>> fresh;
        for (std::size_t k = 0; k < t; ++k) {
            if (lt(k).comp != lh.comp) continue;
            Monomial l = Monomial::lcm(lt(k).mono, lh.mono);
            int s = std::max(sugar[k] + l.degree() - lt(k).mono.degree(),
                             h_sugar + l.degree() - lh.mono.degree());
            fresh.push_back({l, {k, t, s, l.degree()}});
        }
        std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) {
            return a.first.degree() < b.first.degree();
        });
        std::vector<std::pair<Monomial, ModPair>> minimal;
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
        for (auto& cand : minimal) pairs.push_back(cand.second);
        basis.push_back(std::move(h));
        sugar.push_back(h_sugar);
    }
};

ModulePoly module_s_pair(const ModulePoly& f, const ModulePoly& g) {
    const PrimeField& F = f.module()->ring()->field();
    const ModTerm& lf = f.leading_term();
    const ModTerm& lg = g.leading_term();
    Monomial lcm = Monomial::lcm(lf.mono, lg.mono);
    ModulePoly a = f.times_term(lcm / lf.mono, F.inv(lf.coeff));
    return a.sub_mult(g, lcm / lg.mono, F.inv(lg.coeff));
}

} // namespace

std::vector<ModulePoly> module_interreduce(std::vector<ModulePoly> basis) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const ModulePoly& f) { return f.is_zero(); }),
                basis.end());
    for (std::size_t i = 0; i < basis.size();) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const ModTerm& li = basis[i].leading_term();
            const ModTerm& lj = basis[j].leading_term();
            if (lj.comp == li.comp && lj.mono.divides(li.mono) &&
                !(lj.mono == li.mono && j > i)) {
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
        std::vector<ModulePoly> others;
        others.reserve(basis.size() - 1);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j != i) others.push_back(basis[j]);
        }
        basis[i] = module_normal_form(basis[i], others).monic();
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const ModulePoly& f) { return f.is_zero(); }),
                basis.end());
    return basis;
}

std::vector<ModulePoly> module_buchberger(std::vector<ModulePoly> gens, int max_degree) {
    ModEngine eng;
    for (auto& f : gens) {
        if (!f.is_zero()) eng.update(f.monic(), f.degree());
    }
    while (!eng.pairs.empty()) {
        poll_deadline("module buchberger");
        auto best = std::min_element(eng.pairs.begin(), eng.pairs.end(),
                                     [](const ModPair& a, const ModPair& b) {
                                         if (a.sugar != b.sugar) return a.sugar < b.sugar;
                                         if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
                                         if (a.j != b.j) return a.j < b.j;
                                         return a.i < b.i;
                                     });
        if (max_degree >= 0 && best->sugar > max_degree) break;
        ModPair cp = *best;
        eng.pairs.erase(best);
        ModulePoly s = module_s_pair(eng.basis[cp.i], eng.basis[cp.j]);
        ModulePoly h = module_normal_form(s, eng.basis);
        if (!h.is_zero()) {
            eng.update(h.monic(), std::max(cp.sugar, h.degree()));
        }
    }
    return module_interreduce(std::move(eng.basis));
}

std::vector<ModulePoly> syzygies(const std::vector<ModulePoly>& gens) {
    if (gens.empty()) return {};
    const FreeModulePtr& F = gens[0].module();
    const RingPtr& ring = F->ring();
    std::size_t m = F->rank();
    std::size_t s = gens.size();
    // Augmented module F ⊕ S^s with the F part dominant (POT).
    std::vector<int> twists = F->twists();
    std::vector<int> syz_twists;
    for (const auto& g : gens) {
        twists.push_back(g.is_zero() ? 0 : g.degree());
        syz_twists.push_back(g.is_zero() ? 0 : g.degree());
    }
    auto big = std::make_shared<FreeModule>(ring, twists);
    std::vector<ModulePoly> aug;
    aug.reserve(s);
    for (std::size_t k = 0; k < s; ++k) {
        std::vector<ModTerm> terms;
        for (const auto& t : gens[k].terms()) terms.push_back(t);
        terms.push_back({Monomial(ring->nvars()), static_cast<std::uint32_t>(m + k), 1});
        aug.push_back(ModulePoly::collect(big, std::move(terms)));
    }
    auto gb = module_buchberger(std::move(aug));
    auto syz_module = std::make_shared<FreeModule>(ring, syz_twists);
    std::vector<ModulePoly> out;
    for (const auto& g : gb) {
        bool in_kernel = true;
        for (const auto& t : g.terms()) {
            if (t.comp < m) {
                in_kernel = false;
                break;
            }
        }
        if (!in_kernel) continue;
        std::vector<ModTerm> shifted;
        shifted.reserve(g.terms().size());
        for (const auto& t : g.terms()) {
            shifted.push_back({t.mono, static_cast<std::uint32_t>(t.comp - m), t.coeff});
        }
        out.push_back(ModulePoly::collect(syz_module, std::move(shifted)));
    }
    return out;
}

std::vector<ModulePoly> syzygies(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return {};
    const RingPtr& ring = gens[0].ring();
    auto base = std::make_shared<FreeModule>(ring, std::vector<int>{0});
    std::vector<ModulePoly> lifted;
    lifted.reserve(gens.size());
    for (const auto& g : gens) lifted.push_back(ModulePoly::from_polynomial(base, g, 0));
    return syzygies(lifted);
}

std::vector<ModulePoly> minimalize_module_generators(std::vector<ModulePoly> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const ModulePoly& f) { return f.is_zero(); }),
               gens.end());
    std::stable_sort(gens.begin(), gens.end(), [](const ModulePoly& a, const ModulePoly& b) {
        return a.degree() < b.degree();
    });
    std::vector<ModulePoly> kept;
    std::vector<ModulePoly> kept_gb;
    for (auto& g : gens) {
        if (!kept_gb.empty() && module_normal_form(g, kept_gb).is_zero()) continue;
        kept.push_back(g.monic());
        kept_gb.push_back(kept.back());
        kept_gb = module_buchberger(std::move(kept_gb));
    }
    return kept;
}

} // namespace scrollreg
