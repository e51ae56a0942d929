#pragma once

// Arithmetic for finite valuation (chain) rings and products of such.
//
// A chain ring is described by its residue field size q = p^m and the
// nilpotency degree l of its uniformizer pi; |R| = q^l and the ideals form
// the single chain R > (pi) > ... > (pi^l) = 0.  Four concrete backends:
//
//   Zmod       Z/p^l                        (pi = p)
//   Extension  B[X]/(g), g basic irreducible over a chain ring B (pi = pi_B)
//   Series     F[u]/(u^l) for a finite field F (pi = u)
//   Product    R_1 x ... x R_k, componentwise
//
// Galois rings GR(p,l,m) are Extension over Zmod; finite fields are the
// l = 1 case.  Every element is held as its canonical integer encoding
// (mixed-radix over the coefficient vector), so elements double as table
// keys and the enumeration order 0..|R|-1 is the canonical one.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace unigraph {

using Code = std::uint64_t;

inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) {
        if (b != 0 && r > UINT64_MAX / b) throw resource_error("integer power overflow");
        r *= b;
    }
    return r;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingFamily { Zmod, Extension, Series, Product };

class Ring : public std::enable_shared_from_this<Ring> {
    struct Private {};

public:
    Ring(Private) {}

    // ---- factories -------------------------------------------------------

    /// Z/p^l, the base case of the galois-ring family.
    static RingPtr zmod(long long p, int ell);

    /// B[X]/(g) for a chain ring B and monic basic irreducible g.
    /// `poly` holds c_0..c_{n-1} with g = X^n + c_{n-1}X^{n-1} + ... + c_0.
    static RingPtr extension_ring(const RingPtr& base, const std::vector<Code>& poly);

    /// F[u]/(u^l) for a finite field F.
    static RingPtr series_ring(const RingPtr& field, int ell);

    static RingPtr product_ring(const std::vector<RingPtr>& factors);

    // ---- descriptor ------------------------------------------------------

    RingFamily family() const { return family_; }
    bool is_chain() const { return family_ != RingFamily::Product; }
    bool is_field() const { return is_chain() && ell_ == 1; }

    std::uint64_t size() const { return size_; }
    std::uint64_t unit_count() const { return nunits_; }

    long long p() const { require_chain("p"); return p_; }
    int ell() const { require_chain("ell"); return ell_; }
    int m() const { require_chain("m"); return m_; }
    std::uint64_t q() const { require_chain("q"); return q_; }

    const std::string& spec() const { return spec_; }

    int rank() const { return rank_; }
    const RingPtr& base() const { return base_; }
    const std::vector<Code>& defining_poly() const { return poly_; }

    std::size_t factor_count() const { return factors_.size(); }
    const RingPtr& factor(std::size_t i) const { return factors_.at(i); }

    // ---- element arithmetic on canonical codes ---------------------------

    Code zero() const { return 0; }
    Code one() const;
    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code pow(Code a, std::uint64_t e) const;
    Code inv(Code a) const;

    bool is_unit(Code a) const;

    /// nu(x) in {0,...,l}; nu(0) = l.  Chain rings only.
    int valuation(Code a) const;

    /// Canonical uniformizer: p, embedded pi of the base, or u.  0 for fields.
    Code uniformizer() const;

    // ---- residue field, reduction, lifting (chain rings) -----------------

    RingPtr residue_field() const;
    Code reduce(Code a) const;            // R -> F
    Code lift(Code a) const;              // F -> R, canonical representatives

    // ---- module / product coordinate access ------------------------------

    std::vector<Code> coords(Code a) const;            // Extension / Series digits
    Code encode(const std::vector<Code>& c) const;

    Code project(Code a, std::size_t i) const;          // Product factor i
    Code combine(const std::vector<Code>& parts) const;

    /// Trace to the base ring of an Extension (sum of diagonal of the
    /// multiplication matrix in the basis 1, xi, ..., xi^{n-1}).
    Code trace_to_base(Code a) const;

    // ---- additive pairing -------------------------------------------------

    /// Canonical linear functional Lambda: R -> Z/p^t inducing the perfect
    /// pairing (a,x) -> Lambda(ax) behind the additive characters.
    long long add_pairing(Code a) const;
    long long add_pairing_modulus() const { require_chain("add_pairing"); return pairing_mod_; }

    // ---- enumeration ------------------------------------------------------

    std::vector<Code> elements(std::uint64_t cap = kDefaultEnumCap) const;
    std::vector<Code> units(std::uint64_t cap = kDefaultEnumCap) const;
    /// Elements of the ideal (pi^k).
    std::vector<Code> ideal(int k, std::uint64_t cap = kDefaultEnumCap) const;

    std::string element_str(Code a) const;

private:
    void require_chain(const char* what) const {
        if (!is_chain()) throw type_error(std::string(what) + ": product rings are not chain rings");
    }

    RingFamily family_ = RingFamily::Zmod;
    long long p_ = 0;
    int ell_ = 1;
    int m_ = 1;
    std::uint64_t q_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t nunits_ = 0;
    std::uint64_t modulus_ = 0;             // Zmod: p^l
    RingPtr base_;                          // Extension: base chain ring; Series: digit field
    std::vector<Code> poly_;                // Extension: defining polynomial c_0..c_{n-1}
    int rank_ = 1;                          // Extension: module rank; Series: l
    std::vector<RingPtr> factors_;          // Product
    RingPtr residue_;                       // chain rings with l >= 2
    long long pairing_mod_ = 0;             // p^t for add_pairing
    std::string spec_;
};

// ---------------------------------------------------------------------------
// implementation
// ---------------------------------------------------------------------------

inline Code Ring::one() const {
    switch (family_) {
        case RingFamily::Zmod:
        case RingFamily::Extension:
        case RingFamily::Series:
            return 1;   // base/field encodings place 1 at radix digit 0
        case RingFamily::Product: {
            std::vector<Code> parts;
            parts.reserve(factors_.size());
            for (auto& f : factors_) parts.push_back(f->one());
            return combine(parts);
        }
    }
    return 1;
}

inline std::vector<Code> Ring::coords(Code a) const {
    if (family_ != RingFamily::Extension && family_ != RingFamily::Series)
        throw type_error("coords: ring has no coefficient vector");
    const std::uint64_t radix = base_->size();
    std::vector<Code> c(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        c[static_cast<std::size_t>(i)] = a % radix;
        a /= radix;
    }
    return c;
}

inline Code Ring::encode(const std::vector<Code>& c) const {
    if (family_ != RingFamily::Extension && family_ != RingFamily::Series)
        throw type_error("encode: ring has no coefficient vector");
    const std::uint64_t radix = base_->size();
    Code a = 0;
    for (int i = rank_ - 1; i >= 0; --i) a = a * radix + c[static_cast<std::size_t>(i)];
    return a;
}

inline Code Ring::project(Code a, std::size_t i) const {
    if (family_ != RingFamily::Product) throw type_error("project: not a product ring");
    for (std::size_t j = 0; j < i; ++j) a /= factors_[j]->size();
    return a % factors_[i]->size();
}

inline Code Ring::combine(const std::vector<Code>& parts) const {
    if (family_ != RingFamily::Product) throw type_error("combine: not a product ring");
    if (parts.size() != factors_.size()) throw type_error("combine: wrong number of parts");
    Code a = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) a = a * factors_[i]->size() + parts[i];
    return a;
}

inline Code Ring::add(Code a, Code b) const {
    switch (family_) {
        case RingFamily::Zmod:
            return (a + b) % modulus_;
        case RingFamily::Extension:
        case RingFamily::Series: {
            auto ca = coords(a), cb = coords(b);
            for (int i = 0; i < rank_; ++i)
                ca[static_cast<std::size_t>(i)] = base_->add(ca[static_cast<std::size_t>(i)], cb[static_cast<std::size_t>(i)]);
            return encode(ca);
        }
        case RingFamily::Product: {
            std::vector<Code> parts(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                parts[i] = factors_[i]->add(project(a, i), project(b, i));
            return combine(parts);
        }
    }
    return 0;
}

inline Code Ring::neg(Code a) const {
    switch (family_) {
        case RingFamily::Zmod:
            return a == 0 ? 0 : modulus_ - a;
        case RingFamily::Extension:
        case RingFamily::Series: {
            auto c = coords(a);
            for (auto& x : c) x = base_->neg(x);
            return encode(c);
        }
        case RingFamily::Product: {
            std::vector<Code> parts(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i) parts[i] = factors_[i]->neg(project(a, i));
            return combine(parts);
        }
    }
    return 0;
}

inline Code Ring::sub(Code a, Code b) const { return add(a, neg(b)); }

inline Code Ring::mul(Code a, Code b) const {
    switch (family_) {
        case RingFamily::Zmod:
            return (a * b) % modulus_;
        case RingFamily::Extension: {
            const auto ca = coords(a), cb = coords(b);
            const std::size_t n = static_cast<std::size_t>(rank_);
            std::vector<Code> prod(2 * n - 1, 0);
            for (std::size_t i = 0; i < n; ++i) {
                if (ca[i] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (cb[j] == 0) continue;
                    prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
                }
            }
            // reduce modulo the monic defining polynomial: X^n = -sum c_j X^j
            for (std::size_t i = 2 * n - 2; i >= n; --i) {
                const Code t = prod[i];
                if (t != 0) {
                    prod[i] = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        prod[i - n + j] = base_->sub(prod[i - n + j], base_->mul(t, poly_[j]));
                }
            }
            prod.resize(n);
            return encode(prod);
        }
        case RingFamily::Series: {
            const auto ca = coords(a), cb = coords(b);
            const std::size_t n = static_cast<std::size_t>(rank_);
            std::vector<Code> prod(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                if (ca[i] == 0) continue;
                for (std::size_t j = 0; i + j < n; ++j) {
                    if (cb[j] == 0) continue;
                    prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
                }
            }
            return encode(prod);
        }
        case RingFamily::Product: {
            std::vector<Code> parts(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                parts[i] = factors_[i]->mul(project(a, i), project(b, i));
            return combine(parts);
        }
    }
    return 0;
}

inline Code Ring::pow(Code a, std::uint64_t e) const {
    Code r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

inline bool Ring::is_unit(Code a) const {
    switch (family_) {
        case RingFamily::Zmod:
            return a % static_cast<std::uint64_t>(p_) != 0;
        case RingFamily::Extension: {
            auto c = coords(a);
            for (auto x : c)
                if (base_->is_unit(x)) return true;
            return false;
        }
        case RingFamily::Series:
            return base_->is_unit(a % base_->size());
        case RingFamily::Product: {
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i]->is_unit(project(a, i))) return false;
            return true;
        }
    }
    return false;
}

inline int Ring::valuation(Code a) const {
    require_chain("valuation");
    if (a == 0) return ell_;
    switch (family_) {
        case RingFamily::Zmod: {
            int k = 0;
            while (a % static_cast<std::uint64_t>(p_) == 0) {
                a /= static_cast<std::uint64_t>(p_);
                ++k;
            }
            return k;
        }
        case RingFamily::Extension: {
            int k = ell_;
            for (auto x : coords(a)) k = std::min(k, base_->valuation(x));
            return k;
        }
        case RingFamily::Series: {
            const auto c = coords(a);
            for (int i = 0; i < rank_; ++i)
                if (c[static_cast<std::size_t>(i)] != 0) return i;
            return ell_;
        }
        default:
            return 0;
    }
}

inline Code Ring::inv(Code a) const {
    if (!is_unit(a)) throw not_a_unit_error("inv: " + element_str(a) + " is not a unit of " + spec_);
    const Code r = pow(a, nunits_ - 1);
    return r;
}

inline Code Ring::uniformizer() const {
    require_chain("uniformizer");
    if (ell_ == 1) return 0;
    switch (family_) {
        case RingFamily::Zmod:
            return static_cast<Code>(p_);
        case RingFamily::Extension:
            return base_->uniformizer();   // embedded at radix digit 0
        case RingFamily::Series:
            return base_->size();          // the element u
        default:
            return 0;
    }
}

inline RingPtr Ring::residue_field() const {
    require_chain("residue_field");
    if (ell_ == 1) return shared_from_this();
    return residue_;
}

inline Code Ring::reduce(Code a) const {
    require_chain("reduce");
    if (ell_ == 1) return a;
    switch (family_) {
        case RingFamily::Zmod:
            return a % static_cast<std::uint64_t>(p_);
        case RingFamily::Extension: {
            auto c = coords(a);
            for (auto& x : c) x = base_->reduce(x);
            return residue_->encode(c);
        }
        case RingFamily::Series:
            return a % base_->size();
        default:
            return 0;
    }
}

inline Code Ring::lift(Code a) const {
    require_chain("lift");
    if (ell_ == 1) return a;
    switch (family_) {
        case RingFamily::Zmod:
            return a;
        case RingFamily::Extension: {
            auto c = residue_->coords(a);
            for (auto& x : c) x = base_->lift(x);
            return encode(c);
        }
        case RingFamily::Series:
            return a;   // digit 0
        default:
            return 0;
    }
}

inline Code Ring::trace_to_base(Code a) const {
    if (family_ != RingFamily::Extension) throw type_error("trace_to_base: not an extension ring");
    const std::uint64_t radix = base_->size();
    Code tr = 0;
    Code xi_j = 1;   // xi^j has code radix^j
    for (int j = 0; j < rank_; ++j) {
        const Code prod = mul(a, xi_j);
        tr = base_->add(tr, coords(prod)[static_cast<std::size_t>(j)]);
        if (j + 1 < rank_) xi_j *= radix;
    }
    return tr;
}

inline long long Ring::add_pairing(Code a) const {
    require_chain("add_pairing");
    switch (family_) {
        case RingFamily::Zmod:
            return static_cast<long long>(a);
        case RingFamily::Extension:
            return base_->add_pairing(trace_to_base(a));
        case RingFamily::Series: {
            long long s = 0;
            for (auto d : coords(a)) s += base_->add_pairing(d);
            return s % pairing_mod_;
        }
        default:
            return 0;
    }
}

inline std::vector<Code> Ring::elements(std::uint64_t cap) const {
    if (size_ > cap) throw resource_error("elements: |R| = " + std::to_string(size_) + " exceeds cap");
    std::vector<Code> v(size_);
    for (Code i = 0; i < size_; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

inline std::vector<Code> Ring::units(std::uint64_t cap) const {
    if (size_ > cap) throw resource_error("units: |R| exceeds cap");
    std::vector<Code> v;
    v.reserve(static_cast<std::size_t>(nunits_));
    for (Code i = 0; i < size_; ++i)
        if (is_unit(i)) v.push_back(i);
    return v;
}

inline std::vector<Code> Ring::ideal(int k, std::uint64_t cap) const {
    require_chain("ideal");
    if (k < 0 || k > ell_) throw parameter_error("ideal: k out of range");
    if (size_ > cap) throw resource_error("ideal: |R| exceeds cap");
    std::vector<Code> v;
    for (Code i = 0; i < size_; ++i)
        if (valuation(i) >= k) v.push_back(i);
    return v;
}

inline std::string Ring::element_str(Code a) const {
    switch (family_) {
        case RingFamily::Zmod:
            return std::to_string(a);
        case RingFamily::Extension:
        case RingFamily::Series: {
            std::string s = "(";
            const auto c = coords(a);
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += base_->element_str(c[i]);
            }
            return s + ")";
        }
        case RingFamily::Product: {
            std::string s = "<";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) s += ",";
                s += factors_[i]->element_str(project(a, i));
            }
            return s + ">";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// factories
// ---------------------------------------------------------------------------

inline RingPtr Ring::zmod(long long p, int ell) {
    if (!detail::is_prime(p) || p == 2) throw parameter_error("zmod: p must be an odd prime");
    if (ell < 1) throw parameter_error("zmod: ell must be >= 1");
    auto r = std::make_shared<Ring>(Private{});
    r->family_ = RingFamily::Zmod;
    r->p_ = p;
    r->ell_ = ell;
    r->m_ = 1;
    r->q_ = static_cast<std::uint64_t>(p);
    r->modulus_ = detail::ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(ell));
    // products of two codes must fit in 64 bits
    if (r->modulus_ > (std::uint64_t{1} << 31)) throw resource_error("zmod: modulus too large");
    r->size_ = r->modulus_;
    r->nunits_ = r->size_ - r->size_ / static_cast<std::uint64_t>(p);
    r->pairing_mod_ = static_cast<long long>(r->modulus_);
    if (ell >= 2) r->residue_ = zmod(p, 1);
    r->spec_ = (ell == 1) ? "GF(" + std::to_string(p) + ")" : "Zmod(" + std::to_string(r->modulus_) + ")";
    return r;
}

inline RingPtr Ring::extension_ring(const RingPtr& base, const std::vector<Code>& poly) {
    if (!base || !base->is_chain()) throw parameter_error("extension_ring: base must be a chain ring");
    if (poly.size() < 2) throw parameter_error("extension_ring: degree must be >= 2");
    auto r = std::make_shared<Ring>(Private{});
    r->family_ = RingFamily::Extension;
    r->base_ = base;
    r->poly_ = poly;
    r->rank_ = static_cast<int>(poly.size());
    r->p_ = base->p();
    r->ell_ = base->ell();
    r->m_ = base->m() * r->rank_;
    r->q_ = detail::ipow(base->q(), static_cast<unsigned>(r->rank_));
    r->size_ = detail::ipow(base->size(), static_cast<unsigned>(r->rank_));
    r->nunits_ = r->size_ - r->size_ / r->q_;
    r->pairing_mod_ = base->add_pairing_modulus();
    if (r->ell_ >= 2) {
        std::vector<Code> rpoly(poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) rpoly[i] = base->reduce(poly[i]);
        r->residue_ = extension_ring(base->residue_field(), rpoly);
    }
    r->spec_ = (r->ell_ == 1) ? "GF(" + std::to_string(r->q_) + ")"
                              : "GR(" + std::to_string(r->p_) + "," + std::to_string(r->ell_) + "," +
                                    std::to_string(r->m_) + ")";
    return r;
}

inline RingPtr Ring::series_ring(const RingPtr& field, int ell) {
    if (!field || !field->is_field()) throw parameter_error("series_ring: coefficients must form a field");
    if (ell < 1) throw parameter_error("series_ring: ell must be >= 1");
    auto r = std::make_shared<Ring>(Private{});
    r->family_ = RingFamily::Series;
    r->base_ = field;
    r->rank_ = ell;
    r->p_ = field->p();
    r->ell_ = ell;
    r->m_ = field->m();
    r->q_ = field->size();
    r->size_ = detail::ipow(r->q_, static_cast<unsigned>(ell));
    r->nunits_ = r->size_ - r->size_ / r->q_;
    r->pairing_mod_ = r->p_;
    if (ell >= 2) r->residue_ = field;
    r->spec_ = "EC(" + std::to_string(r->p_) + "," + std::to_string(ell) + "," + std::to_string(r->m_) + ")";
    return r;
}

inline RingPtr Ring::product_ring(const std::vector<RingPtr>& factors) {
    if (factors.empty()) throw parameter_error("product_ring: empty factor list");
    for (auto& f : factors) {
        if (!f || !f->is_chain()) throw parameter_error("product_ring: factors must be chain rings");
        if (f->p() == 2) throw parameter_error("product_ring: factors must have odd residue characteristic");
    }
    if (factors.size() == 1) return factors[0];
    auto r = std::make_shared<Ring>(Private{});
    r->family_ = RingFamily::Product;
    r->factors_ = factors;
    r->size_ = 1;
    r->nunits_ = 1;
    bool zmod_like = true;
    bool distinct_primes = true;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        r->size_ *= factors[i]->size();
        r->nunits_ *= factors[i]->unit_count();
        if (factors[i]->family() != RingFamily::Zmod) zmod_like = false;
        for (std::size_t j = 0; j < i; ++j)
            if (factors[j]->p() == factors[i]->p()) distinct_primes = false;
    }
    if (zmod_like && distinct_primes) {
        r->spec_ = "Zmod(" + std::to_string(r->size_) + ")";
    } else {
        std::string s = "Product(";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ",";
            s += factors[i]->spec();
        }
        r->spec_ = s + ")";
    }
    return r;
}

// ---------------------------------------------------------------------------
// polynomials over a finite field (irreducibility scans)
// ---------------------------------------------------------------------------

/// Polynomial over a ring, coefficients c_0..c_deg in canonical codes.
struct Polynomial {
    RingPtr ring;
    std::vector<Code> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool monic() const { return !coeffs.empty() && coeffs.back() == ring->one(); }
};

namespace detail {

using Poly = std::vector<Code>;   // over a field ring, trailing zeros stripped

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Ring& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    return c;
}

/// Remainder of a modulo monic f.
inline Poly poly_mod(const Ring& F, Poly a, const Poly& f) {
    const std::size_t n = f.size() - 1;
    while (a.size() > n) {
        const Code t = a.back();
        const std::size_t sh = a.size() - 1 - n;
        if (t != 0)
            for (std::size_t j = 0; j < n; ++j) a[sh + j] = F.sub(a[sh + j], F.mul(t, f[j]));
        a.pop_back();
        poly_trim(a);
        if (a.size() <= n) break;
    }
    poly_trim(a);
    return a;
}

inline Poly poly_powmod(const Ring& F, Poly base, std::uint64_t e, const Poly& f) {
    Poly r = {1};
    base = poly_mod(F, std::move(base), f);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), f);
        base = poly_mod(F, poly_mul(F, base, base), f);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(const Ring& F, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // monicize b for division
        Poly bm = b;
        const Code lc_inv = F.inv(bm.back());
        for (auto& x : bm) x = F.mul(x, lc_inv);
        a = poly_mod(F, std::move(a), bm);
        std::swap(a, b);
    }
    return a;
}

inline Poly poly_sub(const Ring& F, Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    poly_trim(a);
    return a;
}

/// Rabin irreducibility test for a monic polynomial over a finite field.
inline bool irreducible_over_field(const Ring& F, const Poly& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint64_t q = F.size();
    const Poly x = {0, 1};
    // frob[i] = X^{q^i} mod f
    std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
    frob[1] = poly_powmod(F, x, q, f);
    for (int i = 2; i <= n; ++i) frob[static_cast<std::size_t>(i)] = poly_powmod(F, frob[static_cast<std::size_t>(i - 1)], q, f);
    if (frob[static_cast<std::size_t>(n)] != x) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime(r)) continue;
        Poly g = poly_gcd(F, poly_sub(F, frob[static_cast<std::size_t>(n / r)], x), f);
        if (g.size() > 1) return false;
    }
    return true;
}

} // namespace detail

/// Monic lift of the lexicographically-smallest monic irreducible of degree n
/// over the residue field, scanning constant-first coefficient encodings in
/// increasing order.  Deterministic across runs.
inline Polynomial find_basic_irreducible(const RingPtr& ring, int n) {
    if (n < 2) throw parameter_error("find_basic_irreducible: degree must be >= 2");
    const RingPtr F = ring->residue_field();
    const std::uint64_t q = F->size();
    const std::uint64_t total = detail::ipow(q, static_cast<unsigned>(n));
    for (std::uint64_t k = 0; k < total; ++k) {
        detail::Poly f(static_cast<std::size_t>(n) + 1, 0);
        std::uint64_t t = k;
        for (int i = 0; i < n; ++i) {
            f[static_cast<std::size_t>(i)] = t % q;
            t /= q;
        }
        f[static_cast<std::size_t>(n)] = 1;
        if (detail::irreducible_over_field(*F, f)) {
            std::vector<Code> lifted(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) lifted[i] = ring->lift(f[i]);
            return Polynomial{ring, lifted};
        }
    }
    throw structure_error("find_basic_irreducible: no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// user-facing constructors and parsing
// ---------------------------------------------------------------------------

/// galois-ring family: GR(p^l, m) = (Z/p^l)[X]/(f) for a basic irreducible f.
inline RingPtr make_galois_ring(long long p, int ell, int m) {
    if (!detail::is_prime(p) || p == 2) throw parameter_error("make_galois_ring: p must be an odd prime");
    if (ell < 1 || m < 1) throw parameter_error("make_galois_ring: ell and m must be >= 1");
    RingPtr zm = Ring::zmod(p, ell);
    if (m == 1) return zm;
    const Polynomial f = find_basic_irreducible(zm, m);
    std::vector<Code> poly(f.coeffs.begin(), f.coeffs.end() - 1);
    return Ring::extension_ring(zm, poly);
}

/// equal-char family: GF(p^m)[u]/(u^l).
inline RingPtr make_equal_char_ring(long long p, int ell, int m) {
    if (ell < 1) throw parameter_error("make_equal_char_ring: ell must be >= 1");
    RingPtr field = make_galois_ring(p, 1, m);
    if (ell == 1) return field;
    return Ring::series_ring(field, ell);
}

inline RingPtr make_product_ring(const std::vector<RingPtr>& factors) { return Ring::product_ring(factors); }

/// Z/N as the product of Z/p^l over the prime factorization of odd N.
inline RingPtr make_zmod_n(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw parameter_error("Zmod(N): N must be odd and >= 3");
    std::vector<RingPtr> factors;
    std::uint64_t rem = n;
    for (std::uint64_t d = 3; d * d <= rem; d += 2) {
        if (rem % d) continue;
        int e = 0;
        while (rem % d == 0) {
            rem /= d;
            ++e;
        }
        factors.push_back(Ring::zmod(static_cast<long long>(d), e));
    }
    if (rem > 1) factors.push_back(Ring::zmod(static_cast<long long>(rem), 1));
    return make_product_ring(factors);
}

namespace detail {

inline std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline long long parse_ll(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw parameter_error("ring spec: bad integer '" + s + "'");
    }
    if (pos != s.size()) throw parameter_error("ring spec: bad integer '" + s + "'");
    return v;
}

} // namespace detail

/// Parses "GR(p,l,m)", "GF(q)", "EC(p,l,m)", "Zmod(N)", "Product(a,b,...)".
inline RingPtr parse_ring(const std::string& spec_in) {
    std::string s;
    for (char c : spec_in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw parameter_error("ring spec: expected NAME(args), got '" + spec_in + "'");
    const std::string name = s.substr(0, open);
    const std::string inner = s.substr(open + 1, s.size() - open - 2);
    const auto args = detail::split_args(inner);
    if (name == "GF") {
        if (args.size() != 1) throw parameter_error("GF(q): one argument expected");
        const long long qv = detail::parse_ll(args[0]);
        if (qv < 3) throw parameter_error("GF(q): q must be an odd prime power >= 3");
        long long p = 0;
        for (long long d = 2; d * d <= qv; ++d)
            if (qv % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = qv;
        int m = 0;
        long long t = qv;
        while (t > 1) {
            if (t % p) throw parameter_error("GF(q): q must be a prime power");
            t /= p;
            ++m;
        }
        return make_galois_ring(p, 1, m);
    }
    if (name == "GR" || name == "EC") {
        if (args.size() != 3) throw parameter_error(name + "(p,l,m): three arguments expected");
        const long long p = detail::parse_ll(args[0]);
        const int ell = static_cast<int>(detail::parse_ll(args[1]));
        const int m = static_cast<int>(detail::parse_ll(args[2]));
        return name == "GR" ? make_galois_ring(p, ell, m) : make_equal_char_ring(p, ell, m);
    }
    if (name == "Zmod") {
        if (args.size() != 1) throw parameter_error("Zmod(N): one argument expected");
        const long long nv = detail::parse_ll(args[0]);
        if (nv < 3) throw parameter_error("Zmod(N): N must be odd and >= 3");
        return make_zmod_n(static_cast<std::uint64_t>(nv));
    }
    if (name == "Product") {
        std::vector<RingPtr> factors;
        for (auto& a : args) factors.push_back(parse_ring(a));
        return make_product_ring(factors);
    }
    throw parameter_error("ring spec: unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// RingElement: a code bound to its owner
// ---------------------------------------------------------------------------

class RingElement {
public:
    RingElement() = default;
    RingElement(RingPtr ring, Code code) : ring_(std::move(ring)), code_(code) {}

    const RingPtr& ring() const { return ring_; }
    Code code() const { return code_; }

    bool is_unit() const { return ring_->is_unit(code_); }
    int valuation() const { return ring_->valuation(code_); }
    RingElement inverse() const { return {ring_, ring_->inv(code_)}; }
    RingElement pow(std::uint64_t e) const { return {ring_, ring_->pow(code_, e)}; }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        a.check(b);
        return {a.ring_, a.ring_->add(a.code_, b.code_)};
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        a.check(b);
        return {a.ring_, a.ring_->sub(a.code_, b.code_)};
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        a.check(b);
        return {a.ring_, a.ring_->mul(a.code_, b.code_)};
    }
    RingElement operator-() const { return {ring_, ring_->neg(code_)}; }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.code_ == b.code_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string str() const { return ring_->element_str(code_); }

private:
    void check(const RingElement& other) const {
        if (ring_ != other.ring_) throw type_error("ring elements have different owners");
    }

    RingPtr ring_;
    Code code_ = 0;
};

} // namespace unigraph
