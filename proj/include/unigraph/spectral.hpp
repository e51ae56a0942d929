#pragma once

// Numeric spectra (cyclic Jacobi rotations, dependency-free) and closed-form
// spectrum predictions with multiplicities, for unimodular and Platonic
// graphs, including the tensor composition over product rings.

#include "char_sums.hpp"
#include "graph.hpp"

namespace unigraph {

inline constexpr std::size_t kEigDimCap = 5000;

// ---------------------------------------------------------------------------
// spectra as (value, multiplicity) multisets
// ---------------------------------------------------------------------------

struct Spectrum {
    std::vector<std::pair<double, long long>> entries;   // sorted ascending

    long long total_multiplicity() const {
        long long t = 0;
        for (auto& [v, m] : entries) t += m;
        return t;
    }
};

struct PredictionEntry {
    double value = 0.0;
    long long multiplicity = 0;
};

struct SpectrumPrediction {
    std::vector<PredictionEntry> entries;   // sorted ascending after merging
    std::string provenance;                 // "closed-form" or "census"

    long long total_multiplicity() const {
        long long t = 0;
        for (auto& e : entries) t += e.multiplicity;
        return t;
    }
};

namespace detail {

inline void merge_sorted_values(std::vector<PredictionEntry>& entries, double merge_tol = 1e-9) {
    std::sort(entries.begin(), entries.end(), [](auto& a, auto& b) { return a.value < b.value; });
    std::vector<PredictionEntry> out;
    for (auto& e : entries) {
        if (e.multiplicity == 0) continue;
        if (!out.empty() && std::abs(out.back().value - e.value) <= merge_tol * std::max(1.0, std::abs(e.value)))
            out.back().multiplicity += e.multiplicity;
        else
            out.push_back(e);
    }
    entries = std::move(out);
}

} // namespace detail

// ---------------------------------------------------------------------------
// cyclic Jacobi eigensolver
// ---------------------------------------------------------------------------

/// Eigenvalues of a symmetric matrix (row-major, n x n) by cyclic Jacobi
/// rotations, iterated until the off-diagonal Frobenius norm drops below
/// 1e-10 * ||M||.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    if (n > kEigDimCap) throw resource_error("jacobi_eigenvalues: dimension exceeds cap");
    if (a.size() != n * n) throw parameter_error("jacobi_eigenvalues: bad matrix size");
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(a[i * n + j] - a[j * n + i]) > 1e-12 * std::max(1.0, std::abs(a[i * n + j])))
                throw parameter_error("jacobi_eigenvalues: matrix is not symmetric");
            norm += a[i * n + j] * a[i * n + j];
        }
    norm = std::sqrt(norm);
    if (n <= 1) return n == 1 ? std::vector<double>{a[0]} : std::vector<double>{};

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_norm() <= 1e-10 * std::max(norm, 1e-300)) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double app = a[p * n + p], aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        if (sweep == 99) throw structure_error("jacobi_eigenvalues: did not converge");
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Clusters raw eigenvalues at tolerance 1e-6 * max(1, ||M||) into a Spectrum.
inline Spectrum cluster_eigenvalues(const std::vector<double>& eig, double scale) {
    const double tol = 1e-6 * std::max(1.0, scale);
    Spectrum s;
    std::size_t i = 0;
    while (i < eig.size()) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < eig.size() && eig[j] - eig[i] < tol) sum += eig[j++];
        s.entries.emplace_back(sum / static_cast<double>(j - i), static_cast<long long>(j - i));
        i = j;
    }
    return s;
}

inline Spectrum symmetric_eigs(const std::vector<double>& m, std::size_t n) {
    double norm = 0.0;
    for (double x : m) norm += x * x;
    return cluster_eigenvalues(jacobi_eigenvalues(m, n), std::sqrt(norm));
}

// ---------------------------------------------------------------------------
// graph spectra
// ---------------------------------------------------------------------------

/// Full adjacency spectrum of a bipartite graph: +-sqrt(mu) over the
/// eigenvalues mu of A^T A, with 0 carrying its doubled multiplicity.
inline Spectrum bipartite_spectrum(const BipartiteGraph& g) {
    const std::size_t m = g.half_size();
    const BitMatrix at = g.adj.transposed();
    std::vector<double> gram(m * m);
    std::vector<std::vector<std::uint64_t>> cols(m);
    for (std::size_t i = 0; i < m; ++i) cols[i] = at.row_words(i);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            std::size_t dot = 0;
            for (std::size_t w = 0; w < cols[i].size(); ++w)
                dot += static_cast<std::size_t>(std::popcount(cols[i][w] & cols[j][w]));
            gram[i * m + j] = gram[j * m + i] = static_cast<double>(dot);
        }
    const Spectrum mu = symmetric_eigs(gram, m);
    const double zero_tol = 1e-6 * std::max(1.0, static_cast<double>(g.degree) * static_cast<double>(g.degree));
    Spectrum s;
    long long zeros = 0;
    for (auto& [v, mult] : mu.entries) {
        if (std::abs(v) <= zero_tol) {
            zeros += 2 * mult;
            continue;
        }
        if (v < 0.0) throw structure_error("bipartite_spectrum: negative Gram eigenvalue");
        const double r = std::sqrt(v);
        s.entries.emplace_back(-r, mult);
        s.entries.emplace_back(r, mult);
    }
    if (zeros > 0) s.entries.emplace_back(0.0, zeros);
    std::sort(s.entries.begin(), s.entries.end());
    return s;
}

inline Spectrum graph_spectrum(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adj.get(i, j)) a[i * n + j] = 1.0;
    return symmetric_eigs(a, n);
}

inline Spectrum platonic_spectrum(const RingPtr& R) { return graph_spectrum(build_platonic(R)); }

/// Singular values of the odd determinant operator; the actual eigenvalues
/// are +-i sigma, so each sigma carries the combined multiplicity.
inline Spectrum platonic_odd_singvals(const PlatonicBundle& b) {
    const std::size_t m = b.graph.size();
    std::vector<double> gram(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < m; ++k) dot += b.odd[k * m + i] * b.odd[k * m + j];
            gram[i * m + j] = gram[j * m + i] = dot;
        }
    const Spectrum mu = symmetric_eigs(gram, m);
    const double zero_tol = 1e-6 * std::max(1.0, static_cast<double>(b.graph.degree));
    Spectrum s;
    for (auto& [v, mult] : mu.entries) {
        const double sv = (v <= zero_tol) ? 0.0 : std::sqrt(v);
        if (!s.entries.empty() && std::abs(s.entries.back().first - sv) < 1e-9)
            s.entries.back().second += mult;
        else
            s.entries.emplace_back(sv, mult);
    }
    return s;
}

// ---------------------------------------------------------------------------
// predictions
// ---------------------------------------------------------------------------

/// Um(R^n): closed-form eigenvalue list; multiplicities by the
/// field character count when l = 1, otherwise by the character-valuation
/// census over the extension that realizes the graph.
inline SpectrumPrediction predict_um_spectrum(const RingPtr& R, int n) {
    if (!R->is_chain()) throw type_error("predict_um_spectrum: chain rings only");
    const double q = static_cast<double>(R->q());
    const int ell = R->ell();
    SpectrumPrediction pr;
    const double d = std::pow(q, (n - 1) * ell);
    if (ell == 1) {
        pr.provenance = "closed-form";
        const double qn = std::pow(q, n);
        const long long m_mid = static_cast<long long>((q - 2) * (qn - 1) / (q - 1) + 0.5);
        const long long m_low = static_cast<long long>((qn - q) / (q - 1) + 0.5);
        pr.entries.push_back({d, 1});
        pr.entries.push_back({-d, 1});
        pr.entries.push_back({std::pow(q, (n - 1) / 2.0), m_mid});
        pr.entries.push_back({-std::pow(q, (n - 1) / 2.0), m_mid});
        pr.entries.push_back({std::pow(q, n / 2.0 - 1.0), m_low});
        pr.entries.push_back({-std::pow(q, n / 2.0 - 1.0), m_low});
    } else {
        pr.provenance = "census";
        auto E = make_extension(R, n);
        auto US = unit_group_structure(E->top());
        auto UR = unit_group_structure(R);
        std::vector<PredictionEntry> raw;
        long long zeros = 0;
        for (auto& chi : all_mult_characters(US)) {
            double v;
            if (chi.is_trivial()) {
                v = d;
            } else {
                const auto res = restrict_character(chi, *E, UR);
                const int k = chi.valuation();
                if (!res.is_trivial())
                    v = (res.valuation() == k) ? std::pow(q, (n - 1) * (ell - k / 2.0)) : 0.0;
                else
                    v = (k == 1) ? std::pow(q, (n - 1) * ell - n / 2.0) : 0.0;
            }
            if (v == 0.0)
                zeros += 2;
            else {
                raw.push_back({v, 1});
                raw.push_back({-v, 1});
            }
        }
        if (zeros > 0) raw.push_back({0.0, zeros});
        pr.entries = std::move(raw);
    }
    detail::merge_sorted_values(pr.entries);
    return pr;
}

/// Um_0(R^n): eigenvalues +-|E_0(chi)|/|R^x| over the characters trivial on
/// R^x; every such character contributes a nonzero value.
inline SpectrumPrediction predict_um0_spectrum(const RingPtr& R, int n) {
    if (!R->is_chain()) throw type_error("predict_um0_spectrum: chain rings only");
    const double q = static_cast<double>(R->q());
    const int ell = R->ell();
    SpectrumPrediction pr;
    const double d0 = std::pow(q, (n - 2) * (ell - 1)) * (std::pow(q, n - 1) - 1) / (q - 1);
    if (ell == 1) {
        pr.provenance = "closed-form";
        const long long m_low = static_cast<long long>((std::pow(q, n) - q) / (q - 1) + 0.5);
        pr.entries.push_back({d0, 1});
        pr.entries.push_back({-d0, 1});
        pr.entries.push_back({std::pow(q, n / 2.0 - 1.0), m_low});
        pr.entries.push_back({-std::pow(q, n / 2.0 - 1.0), m_low});
    } else {
        pr.provenance = "census";
        auto E = make_extension(R, n);
        auto US = unit_group_structure(E->top());
        auto UR = unit_group_structure(R);
        for (auto& chi : all_mult_characters(US)) {
            const auto res = restrict_character(chi, *E, UR);
            if (!res.is_trivial()) continue;
            double v;
            if (chi.is_trivial())
                v = d0;
            else
                v = std::pow(q, (n - 2) * (ell - chi.valuation() / 2.0));
            pr.entries.push_back({v, 1});
            pr.entries.push_back({-v, 1});
        }
    }
    detail::merge_sorted_values(pr.entries);
    return pr;
}

/// Pl(R) adjacency spectrum with multiplicities.
inline SpectrumPrediction predict_platonic_spectrum(const RingPtr& R) {
    if (!R->is_chain()) throw type_error("predict_platonic_spectrum: chain rings only (compose products)");
    const double q = static_cast<double>(R->q());
    const long long qi = static_cast<long long>(R->q());
    const int ell = R->ell();
    SpectrumPrediction pr;
    pr.provenance = "closed-form";
    if (ell == 1) {
        pr.entries.push_back({q, 1});
        pr.entries.push_back({-1.0, qi});
        const long long m = (qi + 1) * (qi - 3) / 4;
        if (m > 0) {
            pr.entries.push_back({std::sqrt(q), m});
            pr.entries.push_back({-std::sqrt(q), m});
        }
    } else {
        const long long half = static_cast<long long>((detail::ipow(R->q(), static_cast<unsigned>(2 * ell)) -
                                                       detail::ipow(R->q(), static_cast<unsigned>(2 * ell - 2))) /
                                                      2);
        pr.entries.push_back({std::pow(q, ell), 1});
        const long long m1 = (qi + 1) * (qi - 3) / 4;
        if (m1 > 0) {
            pr.entries.push_back({std::pow(q, ell - 0.5), m1});
            pr.entries.push_back({-std::pow(q, ell - 0.5), m1});
        }
        for (int k = 2; k <= ell; ++k) {
            const long long mk = (qi * qi - 1) * (qi * qi - qi) / 4 *
                                 static_cast<long long>(detail::ipow(R->q(), static_cast<unsigned>(2 * (k - 2))));
            pr.entries.push_back({std::pow(q, ell - k / 2.0), mk});
            // -q^{l-1} (the k = 2 negative branch) gains q extra eigenvectors
            pr.entries.push_back({-std::pow(q, ell - k / 2.0), k == 2 ? mk + qi : mk});
        }
        long long used = 0;
        for (auto& e : pr.entries) used += e.multiplicity;
        pr.entries.push_back({0.0, half - used});
    }
    detail::merge_sorted_values(pr.entries);
    return pr;
}

/// Spectrum of the odd part: entries are +-i sigma, stored as complex values.
struct SignedSpectrum {
    std::vector<std::pair<std::complex<double>, long long>> entries;

    long long total_multiplicity() const {
        long long t = 0;
        for (auto& [v, m] : entries) t += m;
        return t;
    }
};

inline SignedSpectrum signed_even(const SpectrumPrediction& pr) {
    SignedSpectrum s;
    for (auto& e : pr.entries) s.entries.emplace_back(std::complex<double>(e.value, 0.0), e.multiplicity);
    return s;
}

inline SignedSpectrum predict_platonic_odd(const RingPtr& R) {
    if (!R->is_chain()) throw type_error("predict_platonic_odd: chain rings only");
    const double q = static_cast<double>(R->q());
    const long long qi = static_cast<long long>(R->q());
    const int ell = R->ell();
    SignedSpectrum s;
    const long long quarter = (qi * qi - 1) / 4;
    if (ell == 1) {
        s.entries.emplace_back(std::complex<double>(0.0, std::sqrt(q)), quarter);
        s.entries.emplace_back(std::complex<double>(0.0, -std::sqrt(q)), quarter);
        return s;
    }
    const long long half = static_cast<long long>((detail::ipow(R->q(), static_cast<unsigned>(2 * ell)) -
                                                   detail::ipow(R->q(), static_cast<unsigned>(2 * ell - 2))) /
                                                  2);
    s.entries.emplace_back(std::complex<double>(0.0, std::pow(q, ell - 0.5)), quarter);
    s.entries.emplace_back(std::complex<double>(0.0, -std::pow(q, ell - 0.5)), quarter);
    long long used = 2 * quarter;
    for (int k = 2; k <= ell; ++k) {
        const long long mk = (qi * qi - 1) * (qi * qi - qi) / 4 *
                             static_cast<long long>(detail::ipow(R->q(), static_cast<unsigned>(2 * (k - 2))));
        s.entries.emplace_back(std::complex<double>(0.0, std::pow(q, ell - k / 2.0)), mk);
        s.entries.emplace_back(std::complex<double>(0.0, -std::pow(q, ell - k / 2.0)), mk);
        used += 2 * mk;
    }
    s.entries.emplace_back(std::complex<double>(0.0, 0.0), half - used);
    return s;
}

/// Multiset union over all even sign patterns of elementwise products: the
/// spectrum of the even part of a tensor product of determinant operators.
inline SpectrumPrediction compose_product_spectrum(const std::vector<std::pair<SignedSpectrum, SignedSpectrum>>& factors) {
    if (factors.empty()) throw parameter_error("compose_product_spectrum: no factors");
    SpectrumPrediction pr;
    pr.provenance = "closed-form";
    const std::size_t k = factors.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;   // even number of odd parts
        std::vector<std::pair<std::complex<double>, long long>> acc = {{{1.0, 0.0}, 1}};
        for (std::size_t i = 0; i < k; ++i) {
            const SignedSpectrum& part = (mask >> i) & 1 ? factors[i].second : factors[i].first;
            std::vector<std::pair<std::complex<double>, long long>> next;
            next.reserve(acc.size() * part.entries.size());
            for (auto& [va, ma] : acc)
                for (auto& [vb, mb] : part.entries) next.emplace_back(va * vb, ma * mb);
            acc = std::move(next);
        }
        for (auto& [v, m] : acc) {
            if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v)))
                throw structure_error("compose_product_spectrum: non-real product");
            pr.entries.push_back({v.real(), m});
        }
    }
    detail::merge_sorted_values(pr.entries, 1e-9);
    return pr;
}

/// Composed Pl(Z/N)-style prediction for a product of chain rings.
inline SpectrumPrediction predict_platonic_product(const RingPtr& R) {
    if (R->is_chain()) return predict_platonic_spectrum(R);
    std::vector<std::pair<SignedSpectrum, SignedSpectrum>> parts;
    for (std::size_t i = 0; i < R->factor_count(); ++i)
        parts.emplace_back(signed_even(predict_platonic_spectrum(R->factor(i))), predict_platonic_odd(R->factor(i)));
    return compose_product_spectrum(parts);
}

/// Extremal nontrivial eigenvalues of Pl(Z/N) for N = 3^l N', N' > 1 coprime
/// to 3, with p' the smallest prime > 3 dividing N'.
inline std::pair<double, double> extremal_plN(std::uint64_t N) {
    if (N % 2 == 0) throw parameter_error("extremal_plN: N must be odd");
    int ell3 = 0;
    std::uint64_t rest = N;
    while (rest % 3 == 0) {
        rest /= 3;
        ++ell3;
    }
    if (rest <= 1) throw parameter_error("extremal_plN: N must have a prime factor > 3");
    std::uint64_t pprime = 0;
    for (std::uint64_t d = 5; d * d <= rest; d += 2)
        if (rest % d == 0) {
            pprime = d;
            break;
        }
    if (pprime == 0) pprime = rest;
    const double nd = static_cast<double>(N);
    const double sp = std::sqrt(static_cast<double>(pprime));
    const double mn = std::min(3.0, sp);
    if (ell3 == 0) return {nd / sp, -nd / sp};
    if (ell3 == 1) return {nd / sp, -nd / mn};
    return {nd / mn, -nd / mn};
}

// ---------------------------------------------------------------------------
// matching computed spectra against predictions
// ---------------------------------------------------------------------------

struct MatchRow {
    double predicted_value = 0.0;
    long long predicted_mult = 0;
    double computed_value = 0.0;
    long long computed_mult = 0;
    double delta = 0.0;
    bool ok = false;
};

struct MatchReport {
    bool pass = false;
    std::vector<MatchRow> rows;
    std::string detail;
};

/// Greedy nearest matching after merging degenerate predicted branches; PASS
/// iff every predicted (value, multiplicity) is matched within tol and no
/// computed mass is left over.
inline MatchReport multiset_match(const Spectrum& computed, const SpectrumPrediction& predicted, double tol = 1e-5) {
    MatchReport rep;
    std::vector<PredictionEntry> pred = predicted.entries;
    detail::merge_sorted_values(pred);
    // merge computed clusters at the matching tolerance
    std::vector<PredictionEntry> comp;
    for (auto& [v, m] : computed.entries) comp.push_back({v, m});
    detail::merge_sorted_values(comp, tol);

    if (comp.size() != pred.size()) {
        rep.detail = "cluster count mismatch: computed " + std::to_string(comp.size()) + ", predicted " +
                     std::to_string(pred.size());
        rep.pass = false;
        for (auto& p : pred) rep.rows.push_back({p.value, p.multiplicity, 0.0, 0, 0.0, false});
        return rep;
    }
    rep.pass = true;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        MatchRow row;
        row.predicted_value = pred[i].value;
        row.predicted_mult = pred[i].multiplicity;
        row.computed_value = comp[i].value;
        row.computed_mult = comp[i].multiplicity;
        row.delta = std::abs(pred[i].value - comp[i].value);
        row.ok = row.delta <= tol * std::max(1.0, std::abs(pred[i].value)) &&
                 pred[i].multiplicity == comp[i].multiplicity;
        if (!row.ok) rep.pass = false;
        rep.rows.push_back(row);
    }
    if (!rep.pass && rep.detail.empty()) rep.detail = "value or multiplicity mismatch";
    return rep;
}

/// Largest nontrivial eigenvalue: drops one +d (and one -d when bipartite).
inline double largest_nontrivial(const Spectrum& sp, double degree, bool bipartite) {
    double best = -std::numeric_limits<double>::infinity();
    for (auto& [v, m] : sp.entries) {
        long long mult = m;
        if (std::abs(v - degree) < 1e-6 * std::max(1.0, degree)) mult -= 1;
        if (bipartite && std::abs(v + degree) < 1e-6 * std::max(1.0, degree)) mult -= 1;
        if (mult > 0) best = std::max(best, v);
    }
    return best;
}

/// Largest |nontrivial eigenvalue|, dropping a single +d copy (Platonic use).
inline double max_abs_nontrivial(const Spectrum& sp, double degree) {
    double best = 0.0;
    for (auto& [v, m] : sp.entries) {
        long long mult = m;
        if (std::abs(v - degree) < 1e-6 * std::max(1.0, degree)) mult -= 1;
        if (mult > 0) best = std::max(best, std::abs(v));
    }
    return best;
}

} // namespace unigraph
