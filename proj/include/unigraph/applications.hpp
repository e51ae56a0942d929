#pragma once

// Dot-product counting bounds, Alon-Chung edge estimates, isoperimetric
// lower/upper bounds (including the sign-vector partition construction and a
// small exact oracle), and the Ramanujan classification of Pl(Z/N).

#include "spectral.hpp"

namespace unigraph {

// ---------------------------------------------------------------------------
// dot-product counting
// ---------------------------------------------------------------------------

/// N_r(A, B) by exhaustive double loop; the independent oracle for the
/// spectral bound.
inline std::uint64_t count_dot(const RingPtr& R, const std::vector<Tuple>& A, const std::vector<Tuple>& B, Code r) {
    std::uint64_t n = 0;
    for (auto& a : A)
        for (auto& b : B)
            if (dot(R, a, b) == r) ++n;
    return n;
}

struct CountingReport {
    Code r = 0;
    std::size_t a_size = 0;
    std::size_t b_size = 0;
    std::uint64_t count = 0;
    double expected = 0.0;
    double bound = 0.0;
    bool pass = false;
    double density_a = 0.0;
    double density_b = 0.0;
};

/// |N_r - q^{-l}|A||B|| against q^{(n-1)(l-1/2)} sqrt(|A||B|) for unit r,
/// and q^{n(l-1/2)} sqrt(|A||B|) for general r.
inline CountingReport counting_bound_report(const RingPtr& R, int n, const std::vector<Tuple>& A,
                                            const std::vector<Tuple>& B, Code r) {
    if (!R->is_chain()) throw type_error("counting_bound_report: chain rings only");
    if (A.empty() || B.empty()) throw parameter_error("counting_bound_report: empty set");
    const double q = static_cast<double>(R->q());
    const int ell = R->ell();
    CountingReport rep;
    rep.r = r;
    rep.a_size = A.size();
    rep.b_size = B.size();
    rep.count = count_dot(R, A, B, r);
    const double ab = static_cast<double>(A.size()) * static_cast<double>(B.size());
    rep.expected = ab / std::pow(q, ell);
    rep.bound = R->is_unit(r) ? std::pow(q, (n - 1) * (ell - 0.5)) * std::sqrt(ab)
                              : std::pow(q, n * (ell - 0.5)) * std::sqrt(ab);
    rep.pass = std::abs(static_cast<double>(rep.count) - rep.expected) < rep.bound;
    const double total = std::pow(static_cast<double>(R->size()), n);
    rep.density_a = static_cast<double>(A.size()) / total;
    rep.density_b = static_cast<double>(B.size()) / total;
    return rep;
}

/// The proof's embedding: black classes of A x {1} and white classes of
/// B x {-1} in Um_0(R^{n+1}) span exactly N_1(A, B) edges.
inline std::pair<std::uint64_t, std::uint64_t> edge_count_reduction(const RingPtr& R, const std::vector<Tuple>& A,
                                                                    const std::vector<Tuple>& B,
                                                                    const BipartiteGraph& um0_next) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < um0_next.labels.size(); ++i) index[um0_next.labels[i]] = i;
    std::vector<std::size_t> black, white;
    black.reserve(A.size());
    white.reserve(B.size());
    for (auto& a : A) {
        Tuple t(a);
        t.push_back(R->one());
        black.push_back(index.at(tuple_encode(R, projective_canonical(R, t))));
    }
    for (auto& b : B) {
        Tuple t(b);
        t.push_back(R->neg(R->one()));
        white.push_back(index.at(tuple_encode(R, projective_canonical(R, t))));
    }
    const auto mask = index_mask(white, um0_next.half_size());
    std::uint64_t edges = 0;
    for (std::size_t i : black) edges += um0_next.adj.row_and_popcount(i, mask);
    const std::uint64_t n1 = count_dot(R, A, B, R->one());
    return {n1, edges};
}

/// Seeded pseudorandom subsets of R^n at the requested size.
inline std::vector<Tuple> random_tuple_set(const RingPtr& R, int n, std::size_t size, std::mt19937_64& rng) {
    const std::uint64_t total = detail::ipow(R->size(), static_cast<unsigned>(n));
    if (size == 0 || size > total) throw parameter_error("random_tuple_set: bad size");
    std::set<std::uint64_t> codes;
    while (codes.size() < size) codes.insert(rng() % total);
    std::vector<Tuple> out;
    out.reserve(size);
    for (std::uint64_t c : codes) out.push_back(tuple_decode(R, c, n));
    return out;
}

struct CountingTrial {
    CountingReport report;
    std::uint64_t n1 = 0;
    std::uint64_t edges = 0;
    bool edge_identity_ok = false;
};

/// Seeded sweep at densities {delta*/2, delta*, 2 delta*}, delta* = q^{-(n-1)};
/// each trial also checks the Um_0(R^{n+1}) edge-count reduction exactly.
inline std::vector<CountingTrial> counting_sweep(const RingPtr& R, int n, std::size_t trials, std::uint64_t seed,
                                                 std::uint64_t cap = kDefaultEnumCap) {
    const double q = static_cast<double>(R->q());
    const double total = std::pow(static_cast<double>(R->size()), n);
    const double delta_star = std::pow(q, -(n - 1));
    const BipartiteGraph um0 = build_um0(R, n + 1, cap);
    std::mt19937_64 rng(seed);
    std::vector<CountingTrial> out;
    out.reserve(trials);
    static constexpr double kDensitySteps[3] = {0.5, 1.0, 2.0};
    for (std::size_t t = 0; t < trials; ++t) {
        const double density = delta_star * kDensitySteps[t % 3];
        const std::size_t size = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(density * total)));
        CountingTrial trial;
        const auto A = random_tuple_set(R, n, size, rng);
        const auto B = random_tuple_set(R, n, size, rng);
        trial.report = counting_bound_report(R, n, A, B, R->one());
        auto [n1, edges] = edge_count_reduction(R, A, B, um0);
        trial.n1 = n1;
        trial.edges = edges;
        trial.edge_identity_ok = (n1 == edges);
        out.push_back(std::move(trial));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Alon-Chung edge estimate
// ---------------------------------------------------------------------------

struct AlonChungResult {
    std::uint64_t edges = 0;
    double expected = 0.0;
    double residual = 0.0;
    double bound = 0.0;
    bool pass = false;
};

/// |e(U, W) - (d/m)|U||W|| <= (alpha2/m) sqrt(|U||W|(m-|U|)(m-|W|)) for
/// U black, W white.
inline AlonChungResult alon_chung_check(const BipartiteGraph& g, const std::vector<std::size_t>& U,
                                        const std::vector<std::size_t>& W, double alpha2) {
    if (U.empty() || W.empty()) throw parameter_error("alon_chung_check: empty vertex set");
    const double m = static_cast<double>(g.half_size());
    const auto mask = index_mask(W, g.half_size());
    AlonChungResult r;
    for (std::size_t i : U) r.edges += g.adj.row_and_popcount(i, mask);
    const double u = static_cast<double>(U.size()), w = static_cast<double>(W.size());
    r.expected = static_cast<double>(g.degree) / m * u * w;
    r.residual = std::abs(static_cast<double>(r.edges) - r.expected);
    r.bound = alpha2 / m * std::sqrt(u * w * (m - u) * (m - w));
    r.pass = r.residual <= r.bound + 1e-9;
    return r;
}

// ---------------------------------------------------------------------------
// isoperimetric bounds
// ---------------------------------------------------------------------------

struct IsoReport {
    std::string graph;
    std::uint64_t degree = 0;
    double alpha2 = 0.0;
    double lower = 0.0;
    std::optional<double> upper;
    std::optional<double> exact;
    long long blocks[2][2] = {{0, 0}, {0, 0}};   // e(V(s1)_white, V(s2)_black)
    bool blocks_exact = false;
    long long partition_edges = 0;               // e(U, W) = m (d - |alpha|) / 2
};

/// Lower bound (d - alpha2)/2 always; when a {+-1}-valued zero-mean reduced
/// adjacency eigenvector is supplied, the partition it induces gives the
/// upper bound (d - |alpha|)/2 with exact integer block counts m(d+s1*s2*a)/4.
inline IsoReport iso_bounds(const BipartiteGraph& g, double alpha2, const std::vector<int>* sign_vector = nullptr) {
    IsoReport rep;
    rep.graph = g.name;
    rep.degree = g.degree;
    rep.alpha2 = alpha2;
    rep.lower = 0.5 * (static_cast<double>(g.degree) - alpha2);
    if (!sign_vector) return rep;

    const std::size_t m = g.half_size();
    const auto& f = *sign_vector;
    if (f.size() != m) throw invalid_eigenvector_error("iso_bounds: sign vector has wrong length");
    long long mean = 0;
    for (int v : f) {
        if (v != 1 && v != -1) throw invalid_eigenvector_error("iso_bounds: sign vector is not {+-1}-valued");
        mean += v;
    }
    if (mean != 0) throw invalid_eigenvector_error("iso_bounds: sign vector does not have zero mean");
    // recover the eigenvalue by applying the reduced adjacency
    long long alpha = 0;
    for (std::size_t i = 0; i < m; ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (g.adj.get(i, j)) acc += f[j];
        const long long ai = acc * f[i];   // f(i)^2 = 1
        if (i == 0)
            alpha = ai;
        else if (ai != alpha)
            throw invalid_eigenvector_error("iso_bounds: not a reduced adjacency eigenvector");
    }

    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < m; ++i) (f[i] == 1 ? plus : minus).push_back(i);
    const auto mask_plus = index_mask(plus, m);
    const auto mask_minus = index_mask(minus, m);
    rep.blocks_exact = true;
    for (int s2 : {+1, -1}) {
        const auto& rows = (s2 == 1) ? plus : minus;
        for (int s1 : {+1, -1}) {
            const auto& mask = (s1 == 1) ? mask_plus : mask_minus;
            long long e = 0;
            for (std::size_t i : rows) e += static_cast<long long>(g.adj.row_and_popcount(i, mask));
            rep.blocks[s1 == 1 ? 0 : 1][s2 == 1 ? 0 : 1] = e;
            // e(V(s1)_white, V(s2)_black) = m (d + s1 s2 alpha) / 4, exactly
            if (4 * e != static_cast<long long>(m) * (static_cast<long long>(g.degree) + s1 * s2 * alpha))
                rep.blocks_exact = false;
        }
    }
    if (!rep.blocks_exact) throw structure_error("iso_bounds: partition block identity failed");
    // U = V(+1)_white + V(sign(alpha))_black; its cross blocks have s1 s2 = -sign(alpha)
    if (alpha >= 0)
        rep.partition_edges = rep.blocks[0][1] + rep.blocks[1][0];
    else
        rep.partition_edges = rep.blocks[0][0] + rep.blocks[1][1];
    if (2 * rep.partition_edges !=
        static_cast<long long>(m) * (static_cast<long long>(g.degree) - std::abs(alpha)))
        throw structure_error("iso_bounds: partition edge count identity failed");
    rep.upper = 0.5 * (static_cast<double>(g.degree) - std::abs(static_cast<double>(alpha)));
    if (std::abs(*rep.upper - rep.lower) < 1e-9) rep.exact = rep.lower;
    return rep;
}

/// Exact isoperimetric constant by exhaustive bipartition scan; capped at 18
/// vertices.
inline double brute_force_iso(const Graph& g) {
    const std::size_t n = g.size();
    if (n > 18) throw resource_error("brute_force_iso: more than 18 vertices");
    if (n < 2) throw parameter_error("brute_force_iso: need at least 2 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adj.get(i, j)) adj[i] |= (1u << j);
    double best = std::numeric_limits<double>::infinity();
    const std::uint32_t full = (1u << n) - 1;
    // vertex 0 always in U, so each bipartition is visited once
    for (std::uint32_t u = 1; u < full; u += 2) {
        const std::uint32_t w = full & ~u;
        std::uint64_t cross = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (u & (1u << i)) cross += static_cast<std::uint64_t>(std::popcount(adj[i] & w));
        const int usz = std::popcount(u);
        const int wsz = static_cast<int>(n) - usz;
        best = std::min(best, static_cast<double>(cross) / std::min(usz, wsz));
    }
    return best;
}

inline Graph to_full_graph(const BipartiteGraph& g) {
    const std::size_t m = g.half_size();
    Graph full;
    full.name = g.name;
    full.degree = g.degree;
    full.labels.resize(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        full.labels[i] = 2 * g.labels[i];
        full.labels[m + i] = 2 * g.labels[i] + 1;
    }
    full.adj = BitMatrix(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (g.adj.get(i, j)) {
                full.adj.set(i, m + j);
                full.adj.set(m + j, i);
            }
    return full;
}

// ---------------------------------------------------------------------------
// Ramanujan classification of Pl(Z/N)
// ---------------------------------------------------------------------------

struct RamanujanRow {
    std::uint64_t n = 0;
    bool composite = false;
    bool ramanujan = false;
    double max_nontrivial = 0.0;
    double bound = 0.0;        // 2 sqrt(N - 1)
    double iso_lower = 0.0;    // (N/2)(1 - 1/sqrt(p_min))
    bool gunnells_ok = false;  // -N/p in the spectrum for every prime p | N
};

inline std::vector<std::uint64_t> odd_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

/// Verdicts for all odd N in [9, max_n], spectra via the closed-form factor
/// predictions composed over the prime factorization.
inline std::vector<RamanujanRow> ramanujan_classify(std::uint64_t max_n) {
    std::vector<RamanujanRow> rows;
    for (std::uint64_t N = 9; N <= max_n; N += 2) {
        const auto primes = odd_prime_factors(N);
        RamanujanRow row;
        row.n = N;
        row.composite = !(primes.size() == 1 && primes[0] == N);
        const auto pred = predict_platonic_product(make_zmod_n(N));
        Spectrum sp;
        for (auto& e : pred.entries) sp.entries.emplace_back(e.value, e.multiplicity);
        row.max_nontrivial = max_abs_nontrivial(sp, static_cast<double>(N));
        row.bound = 2.0 * std::sqrt(static_cast<double>(N - 1));
        row.ramanujan = row.max_nontrivial <= row.bound + 1e-9;
        row.iso_lower = static_cast<double>(N) / 2.0 * (1.0 - 1.0 / std::sqrt(static_cast<double>(primes.front())));
        row.gunnells_ok = true;
        for (std::uint64_t p : primes) {
            const double want = -static_cast<double>(N) / static_cast<double>(p);
            bool found = false;
            for (auto& e : pred.entries)
                if (std::abs(e.value - want) < 1e-6) found = true;
            if (!found) row.gunnells_ok = false;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace unigraph
