#pragma once

// Gauss and Eisenstein sums over finite valuation rings, evaluated by direct
// enumeration of fibers, together with the closed-form magnitude predictors
// and sweep verifiers.  The enumeration route never reuses the closed forms.

#include <cmath>
#include <limits>

#include "unit_group.hpp"

namespace unigraph {

struct SumResult {
    std::complex<double> value{0.0, 0.0};
    double abs = 0.0;
    int nu_chi = -1;
    int nu_psi = -1;
    double predicted_abs = std::numeric_limits<double>::quiet_NaN();
    bool match = false;
};

inline bool magnitude_close(double computed, double predicted, double tol) {
    return std::abs(computed - predicted) <= tol * std::max(1.0, std::abs(predicted));
}

// ---------------------------------------------------------------------------
// direct sums
// ---------------------------------------------------------------------------

/// E(chi) = sum over Tr(y) = 1 of chi(y); every such y is a unit (asserted).
inline SumResult eisenstein(const Extension& E, const MultCharacter& chi) {
    if (chi.owner()->ring() != E.top()) throw type_error("eisenstein: chi does not live on S^x");
    const Code one = E.base()->one();
    if (E.fiber(one).size() != E.unit_fiber(one).size())
        throw structure_error("eisenstein: Tr(y) = 1 fiber contains a non-unit");
    SumResult r;
    for (Code y : E.unit_fiber(one)) r.value += chi.value(y);
    r.abs = std::abs(r.value);
    r.nu_chi = chi.valuation();
    return r;
}

/// E_0(chi) = sum over units with Tr(y) = 0 of chi(y).
inline SumResult eisenstein_singular(const Extension& E, const MultCharacter& chi) {
    if (chi.owner()->ring() != E.top()) throw type_error("eisenstein_singular: chi does not live on S^x");
    SumResult r;
    for (Code y : E.unit_fiber(0)) r.value += chi.value(y);
    r.abs = std::abs(r.value);
    r.nu_chi = chi.valuation();
    return r;
}

/// E(chi, pi^i) = sum over units with Tr(y) = pi^i, for the canonical
/// uniformizer of the base; i = 0 reproduces E(chi).
inline SumResult eisenstein_higher(const Extension& E, const MultCharacter& chi, int i) {
    if (i < 0 || i > E.base()->ell() - 1) throw parameter_error("eisenstein_higher: i out of range");
    if (chi.owner()->ring() != E.top()) throw type_error("eisenstein_higher: chi does not live on S^x");
    Code pi_i = E.base()->one();
    for (int t = 0; t < i; ++t) pi_i = E.base()->mul(pi_i, E.base()->uniformizer());
    SumResult r;
    for (Code y : E.unit_fiber(pi_i)) r.value += chi.value(y);
    r.abs = std::abs(r.value);
    r.nu_chi = chi.valuation();
    return r;
}

/// G(psi, chi) = sum over units of psi(u) chi(u).
inline SumResult gauss(const AddCharacter& psi, const MultCharacter& chi) {
    if (psi.ring() != chi.owner()->ring()) throw type_error("gauss: psi and chi live on different rings");
    SumResult r;
    for (Code u : chi.owner()->units()) r.value += psi.value(u) * chi.value(u);
    r.abs = std::abs(r.value);
    r.nu_chi = chi.valuation();
    r.nu_psi = psi.valuation();
    return r;
}

// ---------------------------------------------------------------------------
// predictors
// ---------------------------------------------------------------------------

struct GaussPrediction {
    bool exact = false;                    // trivial cases carry a signed value
    std::complex<double> value{0.0, 0.0};
    double abs = 0.0;
};

/// Trivial Gauss sums exactly; |G| = q^{l-k/2} when nu(psi) = nu(chi) = k >= 1,
/// and 0 when both are nontrivial with different valuations.
inline GaussPrediction predict_gauss(const AddCharacter& psi, const MultCharacter& chi) {
    if (psi.ring() != chi.owner()->ring()) throw type_error("predict_gauss: mismatched owners");
    const RingPtr& R = psi.ring();
    const double q = static_cast<double>(R->q());
    const int ell = R->ell();
    GaussPrediction g;
    if (psi.is_trivial() && chi.is_trivial()) {
        g.exact = true;
        g.value = (q - 1.0) * std::pow(q, ell - 1);
    } else if (psi.is_trivial()) {
        g.exact = true;
        g.value = 0.0;
    } else if (chi.is_trivial()) {
        g.exact = true;
        g.value = (psi.valuation() == 1) ? -std::pow(q, ell - 1) : 0.0;
    } else {
        const int k = chi.valuation();
        g.abs = (psi.valuation() == k) ? std::pow(q, ell - k / 2.0) : 0.0;
        return g;
    }
    g.abs = std::abs(g.value);
    return g;
}

struct EisensteinPrediction {
    double abs_e = 0.0;
    double abs_e0 = 0.0;
    bool exact = false;                    // trivial character: both values exact
    std::complex<double> e_value{0.0, 0.0};
    std::complex<double> e0_value{0.0, 0.0};
    bool e0_exact_zero = false;            // chi_res nontrivial
    bool identity = false;                 // E_0 = -(q-1) E applies
};

/// Magnitudes of E(chi) and E_0(chi) for a degree-n extension, from the
/// restricted character's triviality and the valuations.
inline EisensteinPrediction predict_eisenstein(const Extension& E, const MultCharacter& chi,
                                               const MultCharacter& chi_res) {
    const double q = static_cast<double>(E.base()->q());
    const int ell = E.base()->ell();
    const int n = E.degree();
    EisensteinPrediction pr;
    if (chi.is_trivial()) {
        pr.exact = true;
        pr.e_value = std::pow(q, (n - 1) * ell);
        pr.e0_value = std::pow(q, (n - 1) * ell) - std::pow(q, (n - 1) * (ell - 1));
        pr.abs_e = std::abs(pr.e_value);
        pr.abs_e0 = std::abs(pr.e0_value);
        return pr;
    }
    const int k = chi.valuation();
    if (!chi_res.is_trivial()) {
        pr.abs_e = (chi_res.valuation() == k) ? std::pow(q, (n - 1) * (ell - k / 2.0)) : 0.0;
        pr.abs_e0 = 0.0;
        pr.e0_exact_zero = true;
    } else {
        pr.abs_e = (k == 1) ? std::pow(q, (n - 1) * ell - n / 2.0) : 0.0;
        pr.abs_e0 = (1.0 - 1.0 / q) * std::pow(q, (n - 1) * ell - (n / 2.0 - 1.0) * k);
        pr.identity = (k == 1);
    }
    return pr;
}

// ---------------------------------------------------------------------------
// sweep verifiers
// ---------------------------------------------------------------------------

struct CharRecord {
    std::vector<std::uint64_t> exponents;
    int nu = 0;
    int nu_res = 0;
    bool res_trivial = false;
    std::complex<double> e{0.0, 0.0};
    std::complex<double> e0{0.0, 0.0};
    double abs_e = 0.0;
    double abs_e0 = 0.0;
    double pred_e = 0.0;
    double pred_e0 = 0.0;
    bool pass = true;
    std::string note;
};

struct CharSumReport {
    std::string base_spec;
    std::string top_spec;
    int degree = 0;
    std::vector<CharRecord> records;
    std::size_t relation_checks = 0;
    std::size_t relation_failures = 0;
    std::size_t gauss_checks = 0;
    std::size_t gauss_failures = 0;
    bool zero_pattern_ok = true;
    double max_deviation = 0.0;
    bool all_pass = true;
};

/// Full sweep over every character chi of S^x and every additive psi of R:
///   (a) |E|, |E_0| against the magnitude predictions, including zero pattern;
///   (b) |G(psi^ind, chi)| against the Gauss prediction over S;
///   (c) G(psi^ind, chi) = E_0(chi) + sum_i G(psi_(i), chi_res)/|(pi^{l-i})| E(chi, pi^i);
///   (d) E_0 = -(q-1) E where the prediction says so, and the higher-sum
///       magnitudes e_0 = ... = e_{k-2} = 0, |e_{k-1}| = (1-1/q)(q^n)^{l-k/2}.
inline CharSumReport verify_character_sums(const ExtensionPtr& ext, double tol = 1e-6) {
    const Extension& E = *ext;
    const RingPtr& R = E.base();
    const RingPtr& S = E.top();
    CharSumReport rep;
    rep.base_spec = R->spec();
    rep.top_spec = S->spec();
    rep.degree = E.degree();

    auto US = unit_group_structure(S);
    auto UR = unit_group_structure(R);
    const auto psis = all_add_characters(R);
    const double q = static_cast<double>(R->q());
    const int ell = R->ell();
    const auto& s_units = US->units();
    const auto& r_units = UR->units();

    // psi value tables over R codes, and the induced characters on S
    std::vector<std::vector<std::complex<double>>> psi_tbl(psis.size());
    std::vector<AddCharacter> psis_ind;
    psis_ind.reserve(psis.size());
    for (std::size_t pi = 0; pi < psis.size(); ++pi) {
        psi_tbl[pi].resize(static_cast<std::size_t>(R->size()));
        for (Code x = 0; x < R->size(); ++x) psi_tbl[pi][static_cast<std::size_t>(x)] = psis[pi].value(x);
        psis_ind.push_back(induce_add_char(psis[pi], E));
    }
    // powers of the canonical uniformizer
    std::vector<Code> pi_pow(static_cast<std::size_t>(ell), R->one());
    for (int i = 1; i < ell; ++i) pi_pow[static_cast<std::size_t>(i)] = R->mul(pi_pow[static_cast<std::size_t>(i - 1)], R->uniformizer());

    auto note_fail = [&](CharRecord& rec, const std::string& why) {
        rec.pass = false;
        if (!rec.note.empty()) rec.note += "; ";
        rec.note += why;
        rep.all_pass = false;
    };
    auto track = [&](double dev) { rep.max_deviation = std::max(rep.max_deviation, dev); };

    for (auto& chi : all_mult_characters(US)) {
        CharRecord rec;
        rec.exponents = chi.exponents();
        rec.nu = chi.valuation();
        const auto chi_res = restrict_character(chi, E, UR);
        rec.nu_res = chi_res.valuation();
        rec.res_trivial = chi_res.is_trivial();

        // chi value table over S^x indexed by unit position
        std::vector<std::complex<double>> chi_vals(s_units.size());
        for (std::size_t i = 0; i < s_units.size(); ++i) chi_vals[i] = chi.value(s_units[i]);
        std::vector<std::complex<double>> res_vals(r_units.size());
        for (std::size_t i = 0; i < r_units.size(); ++i) res_vals[i] = chi_res.value(r_units[i]);

        // higher Eisenstein sums E(chi, pi^i), i = 0..l-1, plus E_0
        std::vector<std::complex<double>> e_higher(static_cast<std::size_t>(ell), 0.0);
        for (int i = 0; i < ell; ++i)
            for (Code y : E.unit_fiber(pi_pow[static_cast<std::size_t>(i)]))
                e_higher[static_cast<std::size_t>(i)] += chi_vals[static_cast<std::size_t>(US->unit_index(y))];
        rec.e = e_higher[0];
        for (Code y : E.unit_fiber(0)) rec.e0 += chi_vals[static_cast<std::size_t>(US->unit_index(y))];
        rec.abs_e = std::abs(rec.e);
        rec.abs_e0 = std::abs(rec.e0);

        // (a) magnitude predictions and zero pattern
        const auto pred = predict_eisenstein(E, chi, chi_res);
        rec.pred_e = pred.abs_e;
        rec.pred_e0 = pred.abs_e0;
        if (!magnitude_close(rec.abs_e, pred.abs_e, tol)) note_fail(rec, "|E| mismatch");
        if (!magnitude_close(rec.abs_e0, pred.abs_e0, tol)) note_fail(rec, "|E0| mismatch");
        track(std::abs(rec.abs_e - pred.abs_e));
        track(std::abs(rec.abs_e0 - pred.abs_e0));
        const bool should_be_nonzero = (rec.nu_res == rec.nu) || (rec.res_trivial && rec.nu <= 1);
        if (should_be_nonzero != (rec.abs_e > 0.5)) {
            note_fail(rec, "zero pattern");
            rep.zero_pattern_ok = false;
        }

        // (d) the k = 1 identity and the higher-sum ladder in the trivial-restriction case
        if (pred.identity) {
            const std::complex<double> lhs = rec.e0 + (q - 1.0) * rec.e;
            if (std::abs(lhs) > tol * std::max(1.0, rec.abs_e0)) note_fail(rec, "E0 = -(q-1)E identity");
            track(std::abs(lhs));
        }
        if (!chi.is_trivial() && rec.res_trivial) {
            const int k = rec.nu;
            const double runits = static_cast<double>(R->unit_count());
            for (int i = 0; i <= k - 2 && i < ell; ++i) {
                const double ei = runits / std::pow(q, i) * std::abs(e_higher[static_cast<std::size_t>(i)]);
                if (ei > tol * runits) note_fail(rec, "e_" + std::to_string(i) + " nonzero");
            }
            if (k - 1 < ell) {
                const double ek1 = runits / std::pow(q, k - 1) * std::abs(e_higher[static_cast<std::size_t>(k - 1)]);
                const double expect = (1.0 - 1.0 / q) * std::pow(static_cast<double>(S->q()), ell - k / 2.0);
                if (!magnitude_close(ek1, expect, tol)) note_fail(rec, "|e_{k-1}| mismatch");
                track(std::abs(ek1 - expect));
            }
        }

        // (b) + (c): Gauss magnitudes over S and the trace relation, per psi
        for (std::size_t pi = 0; pi < psis.size(); ++pi) {
            // G(psi^ind, chi) by direct summation over S^x
            std::complex<double> g_ind = 0.0;
            for (std::size_t i = 0; i < s_units.size(); ++i)
                g_ind += psi_tbl[pi][static_cast<std::size_t>(E.trace(s_units[i]))] * chi_vals[i];

            const auto gpred = predict_gauss(psis_ind[pi], chi);
            ++rep.gauss_checks;
            if (gpred.exact ? std::abs(g_ind - gpred.value) > tol * std::max(1.0, gpred.abs)
                            : !magnitude_close(std::abs(g_ind), gpred.abs, tol)) {
                ++rep.gauss_failures;
                rep.all_pass = false;
                rec.note += (rec.note.empty() ? "" : "; ") + std::string("Gauss over S");
            }
            track(std::abs(std::abs(g_ind) - gpred.abs));

            // right-hand side of the trace relation
            std::complex<double> rhs = rec.e0;
            for (int i = 0; i < ell; ++i) {
                std::complex<double> g_shift = 0.0;
                for (std::size_t ui = 0; ui < r_units.size(); ++ui)
                    g_shift += psi_tbl[pi][static_cast<std::size_t>(R->mul(pi_pow[static_cast<std::size_t>(i)], r_units[ui]))] *
                               res_vals[ui];
                const double ideal_size = std::pow(q, i);   // |(pi^{l-i})| = q^i
                rhs += g_shift / ideal_size * e_higher[static_cast<std::size_t>(i)];
            }
            ++rep.relation_checks;
            const double dev = std::abs(g_ind - rhs);
            track(dev);
            if (dev > tol * std::max(1.0, std::abs(g_ind))) {
                ++rep.relation_failures;
                rep.all_pass = false;
                rec.note += (rec.note.empty() ? "" : "; ") + std::string("trace relation");
            }
        }

        rep.records.push_back(std::move(rec));
    }
    return rep;
}

struct GaussRecord {
    Code psi_index = 0;
    std::vector<std::uint64_t> chi_exponents;
    int nu_psi = 0;
    int nu_chi = 0;
    std::complex<double> g{0.0, 0.0};
    double abs_g = 0.0;
    double pred = 0.0;
    bool exact = false;
    bool pass = true;
};

struct GaussSweepReport {
    std::string ring_spec;
    std::vector<GaussRecord> records;
    double max_deviation = 0.0;
    bool all_pass = true;
};

/// All (psi, chi) pairs of one ring against the Gauss predictions: trivial
/// cases exactly, nontrivial magnitudes within tolerance.
inline GaussSweepReport verify_gauss_sums(const RingPtr& R, double tol = 1e-6) {
    GaussSweepReport rep;
    rep.ring_spec = R->spec();
    auto U = unit_group_structure(R);
    const auto chars = all_mult_characters(U);
    for (auto& psi : all_add_characters(R)) {
        std::vector<std::complex<double>> pv(U->units().size());
        for (std::size_t i = 0; i < U->units().size(); ++i) pv[i] = psi.value(U->units()[i]);
        for (auto& chi : chars) {
            GaussRecord rec;
            rec.psi_index = psi.index();
            rec.chi_exponents = chi.exponents();
            rec.nu_psi = psi.valuation();
            rec.nu_chi = chi.valuation();
            std::complex<double> g = 0.0;
            for (std::size_t i = 0; i < U->units().size(); ++i) g += pv[i] * chi.value(U->units()[i]);
            rec.g = g;
            rec.abs_g = std::abs(g);
            const auto pred = predict_gauss(psi, chi);
            rec.pred = pred.abs;
            rec.exact = pred.exact;
            const double dev = pred.exact ? std::abs(g - pred.value) : std::abs(rec.abs_g - pred.abs);
            rep.max_deviation = std::max(rep.max_deviation, dev);
            rec.pass = dev <= tol * std::max(1.0, pred.abs);
            if (!rec.pass) rep.all_pass = false;
            rep.records.push_back(std::move(rec));
        }
    }
    return rep;
}

} // namespace unigraph
