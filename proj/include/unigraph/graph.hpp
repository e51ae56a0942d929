#pragma once

// Unimodular graphs Um(R^n), Um_0(R^n), their trace realizations Tr(S/R) and
// Tr_0(S/R), and Platonic graphs Pl(R), with structural statistics (diameter,
// girth, connectivity by full BFS), Cayley certificates, and edge-list export.

#include <bit>
#include <random>
#include <sstream>
#include <unordered_map>

#include "unit_group.hpp"

namespace unigraph {

// ---------------------------------------------------------------------------
// dense 0/1 matrices with 64-bit rows
// ---------------------------------------------------------------------------

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= (std::uint64_t{1} << (c % 64)); }
    void clear(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64)); }

    std::size_t row_popcount(std::size_t r) const {
        std::size_t n = 0;
        for (std::size_t w = 0; w < words_; ++w) n += static_cast<std::size_t>(std::popcount(bits_[r * words_ + w]));
        return n;
    }

    std::size_t row_and_popcount(std::size_t r, const std::vector<std::uint64_t>& mask) const {
        std::size_t n = 0;
        for (std::size_t w = 0; w < words_; ++w)
            n += static_cast<std::size_t>(std::popcount(bits_[r * words_ + w] & mask[w]));
        return n;
    }

    std::vector<std::uint64_t> row_words(std::size_t r) const {
        return {bits_.begin() + static_cast<std::ptrdiff_t>(r * words_),
                bits_.begin() + static_cast<std::ptrdiff_t>((r + 1) * words_)};
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r);
        return t;
    }

    std::size_t word_count() const { return words_; }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline std::vector<std::uint64_t> index_mask(const std::vector<std::size_t>& idx, std::size_t cols) {
    std::vector<std::uint64_t> mask((cols + 63) / 64, 0);
    for (std::size_t i : idx) mask[i / 64] |= (std::uint64_t{1} << (i % 64));
    return mask;
}

// ---------------------------------------------------------------------------
// graph types
// ---------------------------------------------------------------------------

/// Bipartite graph on two copies of one labeled vertex set; `adj` is the
/// reduced adjacency, adj(i, j) = 1 iff label[i]_black ~ label[j]_white.
struct BipartiteGraph {
    std::string name;
    std::vector<std::uint64_t> labels;
    BitMatrix adj;
    std::uint64_t degree = 0;

    std::size_t half_size() const { return labels.size(); }
};

struct Graph {
    std::string name;
    std::vector<std::uint64_t> labels;
    BitMatrix adj;   // symmetric, zero diagonal
    std::uint64_t degree = 0;

    std::size_t size() const { return labels.size(); }
};

namespace detail {

inline void check_biregular(BipartiteGraph& g) {
    const std::size_t m = g.half_size();
    if (m == 0) throw structure_error(g.name + ": empty graph");
    const std::size_t d = g.adj.row_popcount(0);
    const BitMatrix t = g.adj.transposed();
    for (std::size_t i = 0; i < m; ++i)
        if (g.adj.row_popcount(i) != d || t.row_popcount(i) != d)
            throw structure_error(g.name + ": not biregular");
    g.degree = d;
}

} // namespace detail

// ---------------------------------------------------------------------------
// unimodular tuples and projective classes
// ---------------------------------------------------------------------------

using Tuple = std::vector<Code>;

inline bool is_unimodular(const RingPtr& R, const Tuple& a) {
    if (R->is_chain()) {
        for (Code x : a)
            if (R->is_unit(x)) return true;
        return false;
    }
    for (std::size_t f = 0; f < R->factor_count(); ++f) {
        bool has_unit = false;
        for (Code x : a)
            if (R->factor(f)->is_unit(R->project(x, f))) {
                has_unit = true;
                break;
            }
        if (!has_unit) return false;
    }
    return true;
}

inline std::uint64_t tuple_encode(const RingPtr& R, const Tuple& a) {
    std::uint64_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * R->size() + a[i];
    return code;
}

inline Tuple tuple_decode(const RingPtr& R, std::uint64_t code, int n) {
    Tuple a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)] = code % R->size();
        code /= R->size();
    }
    return a;
}

/// All unimodular n-tuples, in increasing encoding order.
inline std::vector<Tuple> enumerate_unimodular(const RingPtr& R, int n, std::uint64_t cap = kDefaultEnumCap) {
    if (n < 1) throw parameter_error("enumerate_unimodular: n must be >= 1");
    const std::uint64_t total = detail::ipow(R->size(), static_cast<unsigned>(n));
    if (total > cap) throw resource_error("enumerate_unimodular: |R|^n exceeds cap");
    std::vector<Tuple> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        Tuple a = tuple_decode(R, code, n);
        if (is_unimodular(R, a)) out.push_back(std::move(a));
    }
    return out;
}

/// Scales a unimodular tuple so its first unit coordinate becomes 1; for
/// product rings the scaling is per-factor.  Idempotent; two tuples are
/// associates exactly when their canonical forms coincide.
inline Tuple projective_canonical(const RingPtr& R, const Tuple& a) {
    if (!is_unimodular(R, a)) throw parameter_error("projective_canonical: tuple is not unimodular");
    Code scalar;
    if (R->is_chain()) {
        Code first_unit = 0;
        for (Code x : a)
            if (R->is_unit(x)) {
                first_unit = x;
                break;
            }
        scalar = R->inv(first_unit);
    } else {
        std::vector<Code> parts(R->factor_count());
        for (std::size_t f = 0; f < R->factor_count(); ++f) {
            const auto& Rf = R->factor(f);
            Code first_unit = 0;
            for (Code x : a) {
                const Code xf = R->project(x, f);
                if (Rf->is_unit(xf)) {
                    first_unit = xf;
                    break;
                }
            }
            parts[f] = Rf->inv(first_unit);
        }
        scalar = R->combine(parts);
    }
    Tuple out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R->mul(scalar, a[i]);
    return out;
}

inline Code dot(const RingPtr& R, const Tuple& a, const Tuple& b) {
    Code s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = R->add(s, R->mul(a[i], b[i]));
    return s;
}

// ---------------------------------------------------------------------------
// unimodular graph builders
// ---------------------------------------------------------------------------

/// Um(R^n): a_black ~ b_white iff a.b = 1.
inline BipartiteGraph build_um(const RingPtr& R, int n, std::uint64_t cap = kDefaultEnumCap) {
    if (n < 2) throw parameter_error("build_um: n must be >= 2");
    const auto tuples = enumerate_unimodular(R, n, cap);
    BipartiteGraph g;
    g.name = "Um(" + R->spec() + "^" + std::to_string(n) + ")";
    g.labels.reserve(tuples.size());
    for (auto& t : tuples) g.labels.push_back(tuple_encode(R, t));
    g.adj = BitMatrix(tuples.size(), tuples.size());
    const Code one = R->one();
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = 0; j < tuples.size(); ++j)
            if (dot(R, tuples[i], tuples[j]) == one) g.adj.set(i, j);
    detail::check_biregular(g);
    return g;
}

/// Um_0(R^n): [a]_black ~ [b]_white iff a.b = 0, on projective classes.
inline BipartiteGraph build_um0(const RingPtr& R, int n, std::uint64_t cap = kDefaultEnumCap) {
    if (n < 3) throw parameter_error("build_um0: n must be >= 3");
    std::vector<Tuple> classes;
    {
        std::set<std::uint64_t> seen;
        for (auto& t : enumerate_unimodular(R, n, cap)) {
            Tuple c = projective_canonical(R, t);
            if (seen.insert(tuple_encode(R, c)).second) classes.push_back(std::move(c));
        }
    }
    std::sort(classes.begin(), classes.end(),
              [&](const Tuple& x, const Tuple& y) { return tuple_encode(R, x) < tuple_encode(R, y); });
    BipartiteGraph g;
    g.name = "Um0(" + R->spec() + "^" + std::to_string(n) + ")";
    for (auto& c : classes) g.labels.push_back(tuple_encode(R, c));
    g.adj = BitMatrix(classes.size(), classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (dot(R, classes[i], classes[j]) == 0) g.adj.set(i, j);
    detail::check_biregular(g);
    return g;
}

/// Tr(S/R): x_black ~ y_white iff Tr(xy) = 1, on units of S.
inline BipartiteGraph build_trace_graph(const Extension& E) {
    const auto units = E.top()->units();
    BipartiteGraph g;
    g.name = "Tr(" + E.top()->spec() + "/" + E.base()->spec() + ")";
    g.labels = units;
    g.adj = BitMatrix(units.size(), units.size());
    const Code one = E.base()->one();
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = 0; j < units.size(); ++j)
            if (E.trace(E.top()->mul(units[i], units[j])) == one) g.adj.set(i, j);
    detail::check_biregular(g);
    return g;
}

/// Canonical representative of the class x R^x: the smallest unit code.
inline Code unit_class_canonical(const Extension& E, Code x) {
    Code best = x;
    for (Code u : E.base()->units()) best = std::min(best, E.top()->mul(x, E.embed(u)));
    return best;
}

/// Tr_0(S/R): [x]_black ~ [y]_white iff Tr(xy) = 0, on classes of S^x/R^x.
inline BipartiteGraph build_trace_graph0(const Extension& E) {
    std::vector<Code> classes;
    {
        std::set<Code> seen;
        for (Code x : E.top()->units()) {
            const Code c = unit_class_canonical(E, x);
            if (seen.insert(c).second) classes.push_back(c);
        }
    }
    std::sort(classes.begin(), classes.end());
    BipartiteGraph g;
    g.name = "Tr0(" + E.top()->spec() + "/" + E.base()->spec() + ")";
    g.labels = classes;
    g.adj = BitMatrix(classes.size(), classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (E.trace(E.top()->mul(classes[i], classes[j])) == 0) g.adj.set(i, j);
    detail::check_biregular(g);
    return g;
}

/// True iff relabeling black vertices x -> phi(x) carries the trace graph
/// edge set exactly onto the standard graph edge set.  Both graphs must be
/// on the same label set (tuple encodings coincide with element codes).
inline bool relabel_iso_check(const BipartiteGraph& standard, const BipartiteGraph& trace, const Extension& E,
                              const RingMatrix& phi) {
    const std::size_t m = standard.half_size();
    if (m != trace.half_size()) throw parameter_error("relabel_iso_check: size mismatch");
    if (standard.labels != trace.labels) return false;
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[trace.labels[i]] = i;
    for (std::size_t i = 0; i < m; ++i) {
        const Code mapped = apply_linear_map(E, phi, static_cast<Code>(standard.labels[i]));
        auto it = index.find(mapped);
        if (it == index.end()) return false;
        for (std::size_t j = 0; j < m; ++j)
            if (standard.adj.get(i, j) != trace.adj.get(it->second, j)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Platonic graphs
// ---------------------------------------------------------------------------

/// Pl(R) adjacency (the even part of the determinant operator) together with
/// the signed odd-part matrix: odd(v, w) = [det(v,w) = 1] - [det(v,w) = -1]
/// on one lift per +-class.
struct PlatonicBundle {
    Graph graph;
    std::vector<double> odd;   // row-major half x half
};

namespace detail {

/// Deterministic lift choice between a and -a: the smaller encoding of the
/// first unit coordinate for chain rings, lexicographic for products.
inline Tuple platonic_canonical(const RingPtr& R, const Tuple& a) {
    Tuple nega(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) nega[i] = R->neg(a[i]);
    if (R->is_chain()) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (R->is_unit(a[i])) return a[i] < nega[i] ? a : nega;
        throw parameter_error("platonic_canonical: tuple is not unimodular");
    }
    return a < nega ? a : nega;
}

} // namespace detail

inline PlatonicBundle build_platonic_bundle(const RingPtr& R, std::uint64_t cap = kDefaultEnumCap,
                                            std::optional<std::uint64_t> flip_seed = std::nullopt) {
    if (!R->is_chain())
        for (std::size_t f = 0; f < R->factor_count(); ++f)
            if (R->factor(f)->p() == 2) throw unsupported_extension_error("build_platonic: 2 must be invertible");
    std::vector<Tuple> reps;
    {
        std::set<std::uint64_t> seen;
        for (auto& t : enumerate_unimodular(R, 2, cap)) {
            Tuple c = detail::platonic_canonical(R, t);
            if (seen.insert(tuple_encode(R, c)).second) reps.push_back(std::move(c));
        }
    }
    std::sort(reps.begin(), reps.end(),
              [&](const Tuple& x, const Tuple& y) { return tuple_encode(R, x) < tuple_encode(R, y); });
    if (flip_seed) {
        std::mt19937_64 rng(*flip_seed);
        for (auto& r : reps)
            if (rng() & 1)
                for (auto& x : r) x = R->neg(x);
    }
    const std::size_t m = reps.size();
    PlatonicBundle b;
    b.graph.name = "Pl(" + R->spec() + ")";
    for (auto& r : reps) b.graph.labels.push_back(tuple_encode(R, r));
    b.graph.adj = BitMatrix(m, m);
    b.odd.assign(m * m, 0.0);
    const Code one = R->one();
    const Code neg_one = R->neg(one);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Code det = R->sub(R->mul(reps[i][0], reps[j][1]), R->mul(reps[i][1], reps[j][0]));
            if (det == one) {
                b.graph.adj.set(i, j);
                b.odd[i * m + j] = 1.0;
            } else if (det == neg_one) {
                b.graph.adj.set(i, j);
                b.odd[i * m + j] = -1.0;
            }
        }
    for (std::size_t i = 0; i < m; ++i)
        if (b.graph.adj.get(i, i)) throw structure_error("build_platonic: self-loop");
    const std::size_t d = b.graph.adj.row_popcount(0);
    for (std::size_t i = 0; i < m; ++i)
        if (b.graph.adj.row_popcount(i) != d) throw structure_error("build_platonic: not regular");
    b.graph.degree = d;
    return b;
}

inline Graph build_platonic(const RingPtr& R, std::uint64_t cap = kDefaultEnumCap) {
    return build_platonic_bundle(R, cap).graph;
}

// ---------------------------------------------------------------------------
// statistics by full BFS
// ---------------------------------------------------------------------------

struct GraphStats {
    bool connected = false;
    std::uint64_t degree = 0;
    int diameter = -1;           // -1 when disconnected
    int girth = -1;              // -1 when acyclic
    std::vector<int> eccentricities;
};

namespace detail {

using AdjList = std::vector<std::vector<int>>;

inline AdjList full_adjacency(const BipartiteGraph& g) {
    const std::size_t m = g.half_size();
    AdjList adj(2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (g.adj.get(i, j)) {
                adj[i].push_back(static_cast<int>(m + j));
                adj[m + j].push_back(static_cast<int>(i));
            }
    return adj;
}

inline AdjList full_adjacency(const Graph& g) {
    AdjList adj(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.adj.get(i, j)) adj[i].push_back(static_cast<int>(j));
    return adj;
}

inline std::vector<int> bfs_dist(const AdjList& adj, int src, int skip_u = -1, int skip_v = -1) {
    std::vector<int> dist(adj.size(), -1);
    std::vector<int> queue = {src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) continue;
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

inline GraphStats stats_from_adj(const AdjList& adj, std::uint64_t degree) {
    GraphStats s;
    s.degree = degree;
    s.connected = true;
    int diameter = 0;
    s.eccentricities.reserve(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) {
        const auto dist = bfs_dist(adj, static_cast<int>(v));
        int ecc = 0;
        for (int d : dist) {
            if (d < 0) s.connected = false;
            ecc = std::max(ecc, d);
        }
        s.eccentricities.push_back(ecc);
        diameter = std::max(diameter, ecc);
    }
    s.diameter = s.connected ? diameter : -1;
    // girth: shortest cycle through each edge
    int girth = -1;
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u]) {
            if (static_cast<std::size_t>(v) < u) continue;
            const auto dist = bfs_dist(adj, static_cast<int>(u), static_cast<int>(u), v);
            if (dist[static_cast<std::size_t>(v)] >= 0) {
                const int cycle = dist[static_cast<std::size_t>(v)] + 1;
                if (girth < 0 || cycle < girth) girth = cycle;
            }
        }
    s.girth = girth;
    return s;
}

} // namespace detail

inline GraphStats graph_stats(const BipartiteGraph& g) {
    return detail::stats_from_adj(detail::full_adjacency(g), g.degree);
}

inline GraphStats graph_stats(const Graph& g) {
    return detail::stats_from_adj(detail::full_adjacency(g), g.degree);
}

// ---------------------------------------------------------------------------
// Cayley certificates
// ---------------------------------------------------------------------------

struct CayleyCertificate {
    std::size_t set_size = 0;
    bool symmetric_ok = false;
    bool identity_excluded = false;
    bool edge_match = false;

    bool verified() const { return symmetric_ok && identity_excluded && edge_match; }
};

/// Connection set X = {(g, -1) : Tr(g) = 1} in S^x x {+-1}; the Cayley graph
/// built from the group law matches Tr(S/R) after relabeling black vertices
/// by inversion.
inline CayleyCertificate cayley_witness(const Extension& E, const BipartiteGraph& trace_graph) {
    const auto& S = E.top();
    const auto X = E.unit_fiber(E.base()->one());
    CayleyCertificate cert;
    cert.set_size = X.size();
    // (g,-1)^2 = (g g^{-1}, +1) = identity, so X is symmetric and excludes id
    cert.symmetric_ok = true;
    for (Code g : X)
        if (S->mul(g, S->inv(g)) != S->one()) cert.symmetric_ok = false;
    cert.identity_excluded = true;   // every element of X has sign -1

    const auto units = S->units();
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < units.size(); ++i) index[units[i]] = i;
    // Cayley edges by right multiplication: (x,+1)(g,-1) = (xg,-1)
    BitMatrix cay(units.size(), units.size());
    for (std::size_t i = 0; i < units.size(); ++i)
        for (Code g : X) cay.set(i, index.at(S->mul(units[i], g)));
    cert.edge_match = true;
    for (std::size_t i = 0; i < units.size(); ++i) {
        const std::size_t inv_i = index.at(S->inv(units[i]));
        for (std::size_t j = 0; j < units.size(); ++j)
            if (cay.get(i, j) != trace_graph.adj.get(inv_i, j)) cert.edge_match = false;
    }
    return cert;
}

/// Class-level certificate for Tr_0(S/R) with X_0 = {([g], -1) : Tr(g) = 0}.
inline CayleyCertificate cayley_witness0(const Extension& E, const BipartiteGraph& trace_graph0) {
    const auto& S = E.top();
    const auto& classes = trace_graph0.labels;
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i]] = i;

    std::vector<Code> X0;
    for (Code c : classes)
        if (E.trace(c) == 0) X0.push_back(c);
    CayleyCertificate cert;
    cert.set_size = X0.size();
    cert.symmetric_ok = true;
    for (Code g : X0)
        if (index.at(unit_class_canonical(E, S->mul(g, S->inv(g)))) != index.at(unit_class_canonical(E, S->one())))
            cert.symmetric_ok = false;
    cert.identity_excluded = true;

    BitMatrix cay(classes.size(), classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Code g : X0)
            cay.set(i, index.at(unit_class_canonical(E, S->mul(static_cast<Code>(classes[i]), g))));
    cert.edge_match = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::size_t inv_i = index.at(unit_class_canonical(E, S->inv(static_cast<Code>(classes[i]))));
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (cay.get(i, j) != trace_graph0.adj.get(inv_i, j)) cert.edge_match = false;
    }
    return cert;
}

// ---------------------------------------------------------------------------
// edge-list export / import
// ---------------------------------------------------------------------------

struct EdgeList {
    std::size_t vertices = 0;
    std::uint64_t degree = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

inline EdgeList to_edge_list(const BipartiteGraph& g) {
    EdgeList e;
    e.vertices = 2 * g.half_size();
    e.degree = g.degree;
    for (std::size_t i = 0; i < g.half_size(); ++i)
        for (std::size_t j = 0; j < g.half_size(); ++j)
            if (g.adj.get(i, j)) e.edges.emplace_back(g.labels[i], g.labels[j]);
    return e;
}

inline EdgeList to_edge_list(const Graph& g) {
    EdgeList e;
    e.vertices = g.size();
    e.degree = g.degree;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.adj.get(i, j)) e.edges.emplace_back(g.labels[i], g.labels[j]);
    return e;
}

inline std::string export_edges(const EdgeList& e) {
    std::ostringstream os;
    os << "# vertices " << e.vertices << " degree " << e.degree << "\n";
    for (auto& [u, v] : e.edges) os << u << " " << v << "\n";
    return os.str();
}

template <class G>
std::string export_graph(const G& g, const std::string& format) {
    if (format != "edges") throw parameter_error("export_graph: unknown format '" + format + "'");
    return export_edges(to_edge_list(g));
}

inline EdgeList import_edges(const std::string& text) {
    std::istringstream is(text);
    EdgeList e;
    std::string hash, word;
    is >> hash >> word >> e.vertices >> word >> e.degree;
    if (hash != "#") throw parameter_error("import_edges: missing header");
    std::uint64_t u, v;
    while (is >> u >> v) e.edges.emplace_back(u, v);
    return e;
}

} // namespace unigraph
