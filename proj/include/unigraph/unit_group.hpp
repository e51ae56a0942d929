#pragma once

// Structure of the unit group R^x of a finite chain ring as an abelian group
// with a full discrete-log table, plus multiplicative and additive characters
// with their valuations.
//
// Generators: g_1 lifts a residue-field generator and has order exactly q-1
// (it is the chosen unit raised to |1+(pi)|); the remaining generators form a
// basis of the p-group 1+(pi), extracted greedily by maximal order in the
// quotient, with the classical basis-theorem adjustment so the decomposition
// u = prod g_i^{a_i} is unique.  The construction asserts prod d_i = |R^x|.

#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>

#include "extension.hpp"

namespace unigraph {

class UnitGroupStructure;
using UnitGroupPtr = std::shared_ptr<const UnitGroupStructure>;

class UnitGroupStructure : public std::enable_shared_from_this<UnitGroupStructure> {
    struct Private {};

public:
    UnitGroupStructure(Private) {}

    /// Builds generators, orders and the complete dlog table.  `perm_seed`
    /// permutes the candidate scan order; every predicted quantity must be
    /// (and is, per the test suite) independent of that choice.
    static UnitGroupPtr build(const RingPtr& ring, std::uint64_t enum_cap = kDefaultEnumCap,
                              std::optional<std::uint64_t> perm_seed = std::nullopt);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Code>& generators() const { return generators_; }
    const std::vector<std::uint64_t>& orders() const { return orders_; }
    std::uint64_t character_modulus() const { return lcm_; }

    const std::vector<Code>& units() const { return units_; }
    /// Index of a unit in units(), or -1.
    long long unit_index(Code u) const { return unit_index_[static_cast<std::size_t>(u)]; }

    const std::vector<std::uint64_t>& dlog(Code u) const {
        if (!ring_->is_unit(u)) throw not_a_unit_error("dlog: not a unit");
        return dlog_[static_cast<std::size_t>(u)];
    }

    /// Units of the subgroup 1+(pi^k); k = 0 designates all of R^x.
    const std::vector<Code>& one_plus_pik(int k) const { return one_plus_pik_.at(static_cast<std::size_t>(k)); }

    const std::complex<double>& root_of_unity(std::uint64_t t) const { return roots_[static_cast<std::size_t>(t % lcm_)]; }

private:
    RingPtr ring_;
    std::vector<Code> generators_;
    std::vector<std::uint64_t> orders_;
    std::uint64_t lcm_ = 1;
    std::vector<Code> units_;
    std::vector<long long> unit_index_;
    std::vector<std::vector<std::uint64_t>> dlog_;   // indexed by code; empty for non-units
    std::vector<std::vector<Code>> one_plus_pik_;    // k = 0..l
    std::vector<std::complex<double>> roots_;        // lcm-th roots of unity
};

inline UnitGroupPtr UnitGroupStructure::build(const RingPtr& ring, std::uint64_t enum_cap,
                                              std::optional<std::uint64_t> perm_seed) {
    if (!ring->is_chain()) throw type_error("unit_group_structure: chain rings only");
    if (ring->unit_count() > enum_cap) throw resource_error("unit_group_structure: |R^x| exceeds cap");
    auto U = std::make_shared<UnitGroupStructure>(Private{});
    U->ring_ = ring;
    U->units_ = ring->units(enum_cap);
    U->unit_index_.assign(static_cast<std::size_t>(ring->size()), -1);
    for (std::size_t i = 0; i < U->units_.size(); ++i) U->unit_index_[static_cast<std::size_t>(U->units_[i])] = static_cast<long long>(i);

    const RingPtr F = ring->residue_field();
    const std::uint64_t q = ring->q();
    const int ell = ring->ell();

    auto mult_order = [&](const Ring& A, Code x) {
        std::uint64_t o = 1;
        Code y = x;
        while (y != A.one()) {
            y = A.mul(y, x);
            ++o;
            if (o > A.size()) throw structure_error("unit_group_structure: order runaway");
        }
        return o;
    };

    // residue-field generator, first hit in (possibly permuted) scan order
    std::vector<Code> scan(static_cast<std::size_t>(F->size()));
    for (Code i = 0; i < F->size(); ++i) scan[static_cast<std::size_t>(i)] = i;
    if (perm_seed) {
        std::mt19937_64 rng(*perm_seed);
        std::shuffle(scan.begin(), scan.end(), rng);
    }
    Code res_gen = 0;
    bool found = false;
    for (Code c : scan) {
        if (!F->is_unit(c)) continue;
        if (mult_order(*F, c) == q - 1) {
            res_gen = c;
            found = true;
            break;
        }
    }
    if (!found) throw structure_error("unit_group_structure: residue field has no generator");

    // Teichmueller-type generator of order exactly q-1
    Code g1;
    if (ell == 1) {
        g1 = res_gen;
    } else {
        const std::uint64_t exp = detail::ipow(q, static_cast<unsigned>(ell - 1));   // |1+(pi)|
        g1 = ring->pow(ring->lift(res_gen), exp);
    }
    if (mult_order(*ring, g1) != q - 1 || ring->reduce(g1) != res_gen)
        throw structure_error("unit_group_structure: bad Teichmueller generator");

    U->generators_ = {g1};
    U->orders_ = {q - 1};
    U->dlog_.assign(static_cast<std::size_t>(ring->size()), {});
    {
        Code pw = ring->one();
        for (std::uint64_t a = 0; a < q - 1; ++a) {
            U->dlog_[static_cast<std::size_t>(pw)] = {a};
            pw = ring->mul(pw, g1);
        }
    }

    // greedy basis of the p-group 1+(pi)
    if (ell >= 2) {
        std::vector<Code> P;
        for (Code i : ring->ideal(1)) P.push_back(ring->add(ring->one(), i));
        if (perm_seed) {
            std::mt19937_64 rng(*perm_seed + 1);
            std::shuffle(P.begin(), P.end(), rng);
        }
        const std::uint64_t p = static_cast<std::uint64_t>(ring->p());
        std::uint64_t covered = q - 1;
        std::vector<Code> ppart = {ring->one()};   // current subgroup of 1+(pi)

        auto in_table = [&](Code c) { return !U->dlog_[static_cast<std::size_t>(c)].empty(); };

        while (covered < ring->unit_count()) {
            Code best = 0;
            std::uint64_t best_t = 0;
            for (Code x : P) {
                if (in_table(x)) continue;
                std::uint64_t t = 1;
                Code y = x;
                while (!in_table(y)) {
                    y = ring->pow(y, p);
                    t *= p;
                }
                if (t > best_t) {
                    best_t = t;
                    best = x;
                }
            }
            if (best_t == 0) throw structure_error("unit_group_structure: p-group scan exhausted");
            Code x = best;
            const Code z = ring->pow(x, best_t);
            if (z != ring->one()) {
                bool adjusted = false;
                for (Code y : ppart)
                    if (ring->pow(y, best_t) == z) {
                        x = ring->mul(x, ring->inv(y));
                        adjusted = true;
                        break;
                    }
                if (!adjusted) throw structure_error("unit_group_structure: basis adjustment failed");
                if (ring->pow(x, best_t) != ring->one())
                    throw structure_error("unit_group_structure: adjusted generator has wrong order");
            }
            // extend the dlog table by the new independent generator
            std::vector<std::pair<Code, std::vector<std::uint64_t>>> snapshot;
            for (Code u : U->units_)
                if (in_table(u)) snapshot.emplace_back(u, U->dlog_[static_cast<std::size_t>(u)]);
            std::vector<Code> new_ppart = ppart;
            Code xj = ring->one();
            for (std::uint64_t j = 1; j < best_t; ++j) {
                xj = ring->mul(xj, x);
                for (auto& [u, vec] : snapshot) {
                    const Code nu = ring->mul(u, xj);
                    if (in_table(nu)) throw structure_error("unit_group_structure: dlog collision");
                    auto nv = vec;
                    nv.push_back(j);
                    U->dlog_[static_cast<std::size_t>(nu)] = std::move(nv);
                }
                for (Code y : ppart) new_ppart.push_back(ring->mul(y, xj));
            }
            for (auto& [u, vec] : snapshot) U->dlog_[static_cast<std::size_t>(u)].push_back(0);
            ppart = std::move(new_ppart);
            U->generators_.push_back(x);
            U->orders_.push_back(best_t);
            covered *= best_t;
        }
    }

    // sanity: the order product and decomposition uniqueness
    std::uint64_t prod = 1;
    for (auto d : U->orders_) prod *= d;
    if (prod != ring->unit_count()) throw structure_error("unit_group_structure: order product mismatch");
    for (Code u : U->units_) {
        const auto& v = U->dlog_[static_cast<std::size_t>(u)];
        if (v.size() != U->generators_.size())
            throw structure_error("unit_group_structure: incomplete dlog table");
        Code acc = ring->one();
        for (std::size_t i = 0; i < v.size(); ++i) acc = ring->mul(acc, ring->pow(U->generators_[i], v[i]));
        if (acc != u) throw structure_error("unit_group_structure: dlog verification failed");
    }

    // subgroup chain 1+(pi^k) and the character root table
    U->one_plus_pik_.resize(static_cast<std::size_t>(ell) + 1);
    U->one_plus_pik_[0] = U->units_;
    for (int k = 1; k <= ell; ++k) {
        std::vector<Code> sub;
        for (Code i : ring->ideal(k)) sub.push_back(ring->add(ring->one(), i));
        std::sort(sub.begin(), sub.end());
        const std::uint64_t expect = detail::ipow(q, static_cast<unsigned>(ell - k));
        if (sub.size() != expect) throw structure_error("unit_group_structure: 1+(pi^k) has wrong size");
        U->one_plus_pik_[static_cast<std::size_t>(k)] = std::move(sub);
    }
    U->lcm_ = 1;
    for (auto d : U->orders_) U->lcm_ = std::lcm(U->lcm_, d);
    U->roots_.resize(static_cast<std::size_t>(U->lcm_));
    for (std::uint64_t t = 0; t < U->lcm_; ++t)
        U->roots_[static_cast<std::size_t>(t)] =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(U->lcm_));
    return U;
}

inline UnitGroupPtr unit_group_structure(const RingPtr& ring, std::uint64_t enum_cap = kDefaultEnumCap,
                                         std::optional<std::uint64_t> perm_seed = std::nullopt) {
    return UnitGroupStructure::build(ring, enum_cap, perm_seed);
}

// ---------------------------------------------------------------------------
// multiplicative characters
// ---------------------------------------------------------------------------

class MultCharacter {
public:
    MultCharacter(UnitGroupPtr owner, std::vector<std::uint64_t> exps)
        : owner_(std::move(owner)), exps_(std::move(exps)) {
        const auto& d = owner_->orders();
        if (exps_.size() != d.size()) throw type_error("MultCharacter: exponent vector has wrong length");
        for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] %= d[i];
        valuation_ = compute_valuation();
    }

    const UnitGroupPtr& owner() const { return owner_; }
    const std::vector<std::uint64_t>& exponents() const { return exps_; }

    bool is_trivial() const {
        return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
    }

    /// Exact phase of chi(u) as a multiple of 1/L turns, L = lcm of orders.
    std::uint64_t phase(Code u) const {
        const auto& a = owner_->dlog(u);
        const auto& d = owner_->orders();
        const std::uint64_t L = owner_->character_modulus();
        std::uint64_t ph = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) ph = (ph + exps_[i] * a[i] % L * (L / d[i])) % L;
        return ph;
    }

    std::complex<double> value(Code u) const { return owner_->root_of_unity(phase(u)); }

    /// Smallest k with chi trivial on 1+(pi^k); 0 iff chi is trivial.
    int valuation() const { return valuation_; }

    bool is_even() const { return phase(owner_->ring()->neg(owner_->ring()->one())) == 0; }

    MultCharacter conjugate() const {
        const auto& d = owner_->orders();
        std::vector<std::uint64_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = (d[i] - exps_[i]) % d[i];
        return {owner_, e};
    }

    friend bool operator==(const MultCharacter& a, const MultCharacter& b) {
        return a.owner_ == b.owner_ && a.exps_ == b.exps_;
    }

private:
    int compute_valuation() const {
        for (int k = 0; k <= owner_->ring()->ell(); ++k) {
            bool trivial = true;
            for (Code u : owner_->one_plus_pik(k))
                if (phase(u) != 0) {
                    trivial = false;
                    break;
                }
            if (trivial) return k;
        }
        throw structure_error("MultCharacter: no valuation (impossible)");
    }

    UnitGroupPtr owner_;
    std::vector<std::uint64_t> exps_;
    int valuation_ = 0;
};

inline std::vector<MultCharacter> all_mult_characters(const UnitGroupPtr& U) {
    const auto& d = U->orders();
    std::vector<MultCharacter> out;
    out.reserve(static_cast<std::size_t>(U->ring()->unit_count()));
    std::vector<std::uint64_t> e(d.size(), 0);
    while (true) {
        out.emplace_back(U, e);
        std::size_t i = 0;
        while (i < d.size()) {
            if (++e[i] < d[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == d.size()) break;
    }
    return out;
}

/// The unique order-2 character: e_1 = d_1/2, all other orders are odd.
inline MultCharacter quadratic_character(const UnitGroupPtr& U) {
    const auto& d = U->orders();
    if (d[0] % 2 != 0) throw structure_error("quadratic_character: q-1 must be even");
    std::vector<std::uint64_t> e(d.size(), 0);
    e[0] = d[0] / 2;
    MultCharacter eps(U, e);
    if (eps.valuation() != 1) throw structure_error("quadratic_character: valuation must be 1");
    return eps;
}

/// chi restricted along R^x -> S^x for the extension that built S.
inline MultCharacter restrict_character(const MultCharacter& chi, const Extension& ext, const UnitGroupPtr& UR) {
    if (chi.owner()->ring() != ext.top() || UR->ring() != ext.base())
        throw type_error("restrict_character: extension does not connect the owners");
    const std::uint64_t LS = chi.owner()->character_modulus();
    const std::uint64_t LR = UR->character_modulus();
    const auto& d = UR->orders();
    std::vector<std::uint64_t> e(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        const std::uint64_t ph = chi.phase(ext.embed(UR->generators()[i]));
        if (ph * d[i] % LS != 0) throw structure_error("restrict_character: phase not divisible");
        e[i] = ph * d[i] / LS % d[i];
    }
    MultCharacter res(UR, e);
    // the restriction identity, exactly: phases agree as fractions of a turn
    for (Code u : UR->units())
        if (res.phase(u) * LS != chi.phase(ext.embed(u)) * LR)
            throw structure_error("restrict_character: identity failed");
    return res;
}

// ---------------------------------------------------------------------------
// additive characters
// ---------------------------------------------------------------------------

/// psi_a(x) = e(Lambda(a x) / p^t) through the ring's canonical pairing.
class AddCharacter {
public:
    AddCharacter(RingPtr ring, Code index) : ring_(std::move(ring)), index_(index) {
        if (!ring_->is_chain()) throw type_error("AddCharacter: chain rings only");
        valuation_ = compute_valuation();
    }

    const RingPtr& ring() const { return ring_; }
    Code index() const { return index_; }
    bool is_trivial() const { return index_ == 0; }

    long long phase(Code x) const { return ring_->add_pairing(ring_->mul(index_, x)); }

    std::complex<double> value(Code x) const {
        const double den = static_cast<double>(ring_->add_pairing_modulus());
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase(x)) / den);
    }

    /// Smallest k with psi trivial on (pi^k).
    int valuation() const { return valuation_; }

    friend bool operator==(const AddCharacter& a, const AddCharacter& b) {
        return a.ring_ == b.ring_ && a.index_ == b.index_;
    }

private:
    int compute_valuation() const {
        for (int k = 0; k <= ring_->ell(); ++k) {
            bool trivial = true;
            for (Code x : ring_->ideal(k))
                if (phase(x) != 0) {
                    trivial = false;
                    break;
                }
            if (trivial) return k;
        }
        throw structure_error("AddCharacter: no valuation (impossible)");
    }

    RingPtr ring_;
    Code index_;
    int valuation_ = 0;
};

inline std::vector<AddCharacter> all_add_characters(const RingPtr& ring, std::uint64_t cap = kDefaultEnumCap) {
    if (ring->size() > cap) throw resource_error("all_add_characters: |R| exceeds cap");
    std::vector<AddCharacter> out;
    out.reserve(static_cast<std::size_t>(ring->size()));
    for (Code a = 0; a < ring->size(); ++a) out.emplace_back(ring, a);
    return out;
}

/// psi^ind(s) = psi(Tr(s)); with the canonical pairings this is the additive
/// character of S indexed by the embedded index.
inline AddCharacter induce_add_char(const AddCharacter& psi, const Extension& ext) {
    if (psi.ring() != ext.base()) throw type_error("induce_add_char: psi does not live on the base");
    return {ext.top(), ext.embed(psi.index())};
}

/// psi_(i)(r) = psi(pi^i r).
inline AddCharacter shift_add_char(const AddCharacter& psi, int i) {
    if (i < 0) throw parameter_error("shift_add_char: i must be >= 0");
    const RingPtr& R = psi.ring();
    Code pi_i = R->one();
    for (int t = 0; t < i; ++t) pi_i = R->mul(pi_i, R->uniformizer());
    return {R, R->mul(psi.index(), pi_i)};
}

} // namespace unigraph
