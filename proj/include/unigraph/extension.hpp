#pragma once

// Standard unramified extensions S = R[X]/(g) of a finite valuation ring R,
// their trace map (diagonal of the multiplication matrix in the module basis
// 1, xi, ..., xi^{n-1}), trace fibers, quadratic conjugation/norm, and linear
// algebra over R (unit-pivot elimination, dual-basis maps).

#include <optional>
#include <set>

#include "ring.hpp"

namespace unigraph {

// ---------------------------------------------------------------------------
// matrices over a ring
// ---------------------------------------------------------------------------

/// Dense n x n matrix over a chain ring; entries in row-major canonical codes.
/// Represents an R-linear map S -> S in the module basis when used with an
/// Extension: column j holds the coordinates of the image of xi^j.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(RingPtr ring, int n) : ring_(std::move(ring)), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    static RingMatrix identity(const RingPtr& ring, int n) {
        RingMatrix m(ring, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring->one();
        return m;
    }

    int dim() const { return n_; }
    const RingPtr& ring() const { return ring_; }

    Code& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    Code at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    std::vector<Code> apply(const std::vector<Code>& v) const {
        std::vector<Code> out(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                out[static_cast<std::size_t>(i)] =
                    ring_->add(out[static_cast<std::size_t>(i)], ring_->mul(at(i, j), v[static_cast<std::size_t>(j)]));
        return out;
    }

    RingMatrix mul(const RingMatrix& o) const {
        RingMatrix out(ring_, n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Code aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n_; ++j)
                    out.at(i, j) = ring_->add(out.at(i, j), ring_->mul(aik, o.at(k, j)));
            }
        return out;
    }

    /// Determinant by permutation expansion (dimensions here are tiny).
    Code det() const {
        std::vector<int> perm(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) perm[static_cast<std::size_t>(i)] = i;
        Code d = 0;
        int sign = 1;
        // iterate permutations in lexicographic order, tracking parity
        std::vector<int> p = perm;
        while (true) {
            Code term = ring_->one();
            for (int i = 0; i < n_; ++i) term = ring_->mul(term, at(i, p[static_cast<std::size_t>(i)]));
            d = (sign > 0) ? ring_->add(d, term) : ring_->sub(d, term);
            // next_permutation with parity tracking: each adjacent swap flips sign
            int i = n_ - 2;
            while (i >= 0 && p[static_cast<std::size_t>(i)] >= p[static_cast<std::size_t>(i + 1)]) --i;
            if (i < 0) break;
            int j = n_ - 1;
            while (p[static_cast<std::size_t>(j)] <= p[static_cast<std::size_t>(i)]) --j;
            std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
            sign = -sign;
            for (int l = i + 1, r = n_ - 1; l < r; ++l, --r) {
                std::swap(p[static_cast<std::size_t>(l)], p[static_cast<std::size_t>(r)]);
                sign = -sign;
            }
        }
        return d;
    }

    bool is_invertible() const { return ring_->is_unit(det()); }

    /// Gauss-Jordan with unit pivots; nullopt when no unit pivot exists in
    /// some column (determinant is then a non-unit).
    std::optional<RingMatrix> inverse() const {
        RingMatrix a = *this;
        RingMatrix inv = identity(ring_, n_);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (ring_->is_unit(a.at(r, col))) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return std::nullopt;
            if (pivot != col)
                for (int j = 0; j < n_; ++j) {
                    std::swap(a.at(pivot, j), a.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            const Code s = ring_->inv(a.at(col, col));
            for (int j = 0; j < n_; ++j) {
                a.at(col, j) = ring_->mul(a.at(col, j), s);
                inv.at(col, j) = ring_->mul(inv.at(col, j), s);
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col) continue;
                const Code f = a.at(r, col);
                if (f == 0) continue;
                for (int j = 0; j < n_; ++j) {
                    a.at(r, j) = ring_->sub(a.at(r, j), ring_->mul(f, a.at(col, j)));
                    inv.at(r, j) = ring_->sub(inv.at(r, j), ring_->mul(f, inv.at(col, j)));
                }
            }
        }
        return inv;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.ring_ == b.ring_ && a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    RingPtr ring_;
    int n_ = 0;
    std::vector<Code> a_;
};

// ---------------------------------------------------------------------------
// extensions
// ---------------------------------------------------------------------------

class Extension {
public:
    Extension(RingPtr base, const Polynomial& g) : base_(std::move(base)), poly_(g) {
        if (g.ring != base_) throw type_error("Extension: defining polynomial has wrong owner");
        std::vector<Code> low(g.coeffs.begin(), g.coeffs.end() - 1);
        top_ = Ring::extension_ring(base_, low);
        degree_ = static_cast<int>(low.size());
        if (top_->size() <= kEagerTraceCap) {
            trace_table_.resize(static_cast<std::size_t>(top_->size()));
            fibers_.resize(static_cast<std::size_t>(base_->size()));
            unit_fibers_.resize(static_cast<std::size_t>(base_->size()));
            for (Code s = 0; s < top_->size(); ++s) {
                const Code t = top_->trace_to_base(s);
                trace_table_[static_cast<std::size_t>(s)] = t;
                fibers_[static_cast<std::size_t>(t)].push_back(s);
                if (top_->is_unit(s)) unit_fibers_[static_cast<std::size_t>(t)].push_back(s);
            }
        }
    }

    const RingPtr& base() const { return base_; }
    const RingPtr& top() const { return top_; }
    int degree() const { return degree_; }
    const Polynomial& defining_poly() const { return poly_; }

    /// r as the constant coordinate vector (r, 0, ..., 0); the canonical
    /// encoding makes this the identity on codes.
    Code embed(Code r) const {
        if (r >= base_->size()) throw type_error("embed: code out of range");
        return r;
    }

    Code trace(Code s) const {
        if (!trace_table_.empty()) return trace_table_[static_cast<std::size_t>(s)];
        return top_->trace_to_base(s);
    }

    /// All s in S with Tr(s) = r.
    const std::vector<Code>& fiber(Code r) const {
        require_tables();
        return fibers_[static_cast<std::size_t>(r)];
    }

    /// All units s in S^x with Tr(s) = r.
    const std::vector<Code>& unit_fiber(Code r) const {
        require_tables();
        return unit_fibers_[static_cast<std::size_t>(r)];
    }

    /// Frobenius-sum trace, only meaningful for l = 1; used as a cross-check
    /// against the multiplication-matrix definition.
    Code frobenius_trace(Code s) const {
        if (base_->ell() != 1) throw unsupported_extension_error("frobenius_trace: base must be a field");
        Code sum = 0, t = s;
        for (int i = 0; i < degree_; ++i) {
            sum = top_->add(sum, t);
            t = top_->pow(t, base_->size());
        }
        return sum;
    }

private:
    void require_tables() const {
        if (trace_table_.empty()) throw resource_error("extension too large for trace fiber tables");
    }

    static constexpr std::uint64_t kEagerTraceCap = 1u << 16;

    RingPtr base_;
    RingPtr top_;
    Polynomial poly_;
    int degree_ = 0;
    std::vector<Code> trace_table_;
    std::vector<std::vector<Code>> fibers_;
    std::vector<std::vector<Code>> unit_fibers_;
};

using ExtensionPtr = std::shared_ptr<const Extension>;

/// Standard extension of degree n with the deterministic defining polynomial.
inline ExtensionPtr make_extension(const RingPtr& ring, int n) {
    if (n < 2) throw parameter_error("make_extension: degree must be >= 2");
    return std::make_shared<Extension>(ring, find_basic_irreducible(ring, n));
}

inline ExtensionPtr make_extension_with_poly(const RingPtr& ring, const Polynomial& g) {
    return std::make_shared<Extension>(ring, g);
}

// ---------------------------------------------------------------------------
// quadratic extensions S = R[sqrt(j)]
// ---------------------------------------------------------------------------

/// View of a degree-2 extension with defining polynomial X^2 - j, where j is
/// a unit lifting a residue non-square.  Construction verifies the shape and
/// that the norm maps S^x onto R^x.
class QuadraticView {
public:
    explicit QuadraticView(ExtensionPtr ext) : ext_(std::move(ext)) {
        const auto& E = *ext_;
        if (E.degree() != 2) throw unsupported_extension_error("QuadraticView: degree must be 2");
        const auto& c = E.top()->defining_poly();
        if (c[1] != 0) throw unsupported_extension_error("QuadraticView: defining polynomial must be X^2 - j");
        j_ = E.base()->neg(c[0]);
        if (!E.base()->is_unit(j_)) throw unsupported_extension_error("QuadraticView: j must be a unit");
        const RingPtr F = E.base()->residue_field();
        const Code jr = E.base()->reduce(j_);
        bool square = false;
        for (Code x = 0; x < F->size(); ++x)
            if (F->mul(x, x) == jr) square = true;
        if (square) throw unsupported_extension_error("QuadraticView: j must lift a residue non-square");
        // norm surjectivity onto R^x, by enumeration
        std::set<Code> image;
        for (Code u : E.top()->units()) image.insert(norm(u));
        const auto runits = E.base()->units();
        if (image.size() != runits.size() || !std::includes(image.begin(), image.end(), runits.begin(), runits.end()))
            throw structure_error("QuadraticView: norm is not onto R^x");
    }

    Code j() const { return j_; }
    Code sqrt_j() const { return ext_->base()->size(); }   // the element sqrt(j) = xi

    Code conjugate(Code s) const {
        auto c = ext_->top()->coords(s);
        c[1] = ext_->base()->neg(c[1]);
        return ext_->top()->encode(c);
    }

    /// N(s) = s * conj(s), landing in the embedded copy of R.
    Code norm(Code s) const {
        const Code prod = ext_->top()->mul(s, conjugate(s));
        auto c = ext_->top()->coords(prod);
        if (c[1] != 0) throw structure_error("QuadraticView: norm left the base ring");
        return c[0];
    }

private:
    ExtensionPtr ext_;
    Code j_ = 0;
};

/// (conj(s), N(s)) for a quadratic extension R[sqrt(j)].
inline std::pair<Code, Code> conjugate_and_norm(const ExtensionPtr& ext, Code s) {
    QuadraticView view(ext);
    return {view.conjugate(s), view.norm(s)};
}

// ---------------------------------------------------------------------------
// trace form and dual-basis maps
// ---------------------------------------------------------------------------

/// Gram matrix of the trace form, G_ij = Tr(xi^i xi^j).
inline RingMatrix trace_gram(const Extension& E) {
    const int n = E.degree();
    RingMatrix G(E.base(), n);
    const std::uint64_t radix = E.base()->size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Code prod = E.top()->mul(detail::ipow(radix, static_cast<unsigned>(i)),
                                           detail::ipow(radix, static_cast<unsigned>(j)));
            G.at(i, j) = E.trace(prod);
        }
    return G;
}

/// The unique R-linear map phi with beta(t, s) = Tr(phi(t) s), for a bilinear
/// form given by its Gram matrix B_ij = beta(xi^i, xi^j).  Throws
/// degeneracy_error when beta is degenerate.  The defining identity is
/// checked exhaustively on the module basis.
inline RingMatrix dual_basis_map(const Extension& E, const RingMatrix& B) {
    if (B.dim() != E.degree() || B.ring() != E.base()) throw type_error("dual_basis_map: bad Gram matrix");
    const int n = E.degree();
    const RingMatrix G = trace_gram(E);
    const auto Ginv = G.inverse();
    if (!Ginv) throw structure_error("dual_basis_map: trace form is degenerate");
    // column i of phi solves G c = (row i of B)^T
    RingMatrix phi(E.base(), n);
    for (int i = 0; i < n; ++i) {
        std::vector<Code> rhs(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) rhs[static_cast<std::size_t>(j)] = B.at(i, j);
        const auto col = Ginv->apply(rhs);
        for (int k = 0; k < n; ++k) phi.at(k, i) = col[static_cast<std::size_t>(k)];
    }
    if (!phi.inverse()) throw degeneracy_error("dual_basis_map: bilinear form is degenerate");
    // verify Tr(phi(xi^i) xi^j) = B_ij on the whole basis
    const std::uint64_t radix = E.base()->size();
    for (int i = 0; i < n; ++i) {
        std::vector<Code> ei(static_cast<std::size_t>(n), 0);
        ei[static_cast<std::size_t>(i)] = E.base()->one();
        const Code phi_ei = E.top()->encode(phi.apply(ei));
        for (int j = 0; j < n; ++j) {
            const Code xj = detail::ipow(radix, static_cast<unsigned>(j));
            if (E.trace(E.top()->mul(phi_ei, xj)) != B.at(i, j))
                throw structure_error("dual_basis_map: defining identity failed on basis");
        }
    }
    return phi;
}

/// phi applied to an element of S through its coordinate vector.
inline Code apply_linear_map(const Extension& E, const RingMatrix& phi, Code s) {
    return E.top()->encode(phi.apply(E.top()->coords(s)));
}

} // namespace unigraph
