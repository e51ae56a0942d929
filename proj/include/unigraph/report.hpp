#pragma once

// JSON and CSV serialization of reports.  All JSON uses ordered maps and a
// top-level schema marker so that identical inputs produce byte-identical
// output.

#include <map>

#include <json.hpp>

#include "applications.hpp"

namespace unigraph {

using Json = nlohmann::ordered_json;

inline Json json_header(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

inline Json json_ring_info(const RingPtr& R) {
    Json j = json_header("ring-info");
    j["ring"] = R->spec();
    j["size"] = R->size();
    j["units"] = R->unit_count();
    if (R->is_chain()) {
        j["p"] = R->p();
        j["ell"] = R->ell();
        j["m"] = R->m();
        j["q"] = R->q();
        j["field"] = R->is_field();
        Json filt = Json::array();
        for (int k = 0; k <= R->ell(); ++k) filt.push_back(R->ideal(k).size());
        j["filtration"] = filt;
    } else {
        Json factors = Json::array();
        for (std::size_t i = 0; i < R->factor_count(); ++i) factors.push_back(R->factor(i)->spec());
        j["factors"] = factors;
    }
    return j;
}

inline Json json_characters(const RingPtr& R) {
    Json j = json_header("chars");
    j["ring"] = R->spec();
    auto U = unit_group_structure(R);
    j["generators"] = U->orders();
    Json mult = Json::array();
    std::map<int, int> hist;
    for (auto& chi : all_mult_characters(U)) {
        Json c;
        c["exponents"] = chi.exponents();
        c["nu"] = chi.valuation();
        mult.push_back(c);
        hist[chi.valuation()]++;
    }
    j["mult_characters"] = mult;
    Json h = Json::object();
    for (auto& [k, v] : hist) h[std::to_string(k)] = v;
    j["valuation_histogram"] = h;
    Json add = Json::array();
    for (auto& psi : all_add_characters(R)) {
        Json c;
        c["index"] = psi.index();
        c["nu"] = psi.valuation();
        add.push_back(c);
    }
    j["add_characters"] = add;
    return j;
}

inline Json json_char_record(const CharRecord& r) {
    Json j;
    j["exponents"] = r.exponents;
    j["nu"] = r.nu;
    j["nu_res"] = r.nu_res;
    j["res_trivial"] = r.res_trivial;
    j["E"] = {{"re", r.e.real()}, {"im", r.e.imag()}};
    j["absE"] = r.abs_e;
    j["absE_predicted"] = r.pred_e;
    j["absE0"] = r.abs_e0;
    j["absE0_predicted"] = r.pred_e0;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json json_char_sum_report(const CharSumReport& rep) {
    Json j = json_header("sums-verify");
    j["ring"] = rep.base_spec;
    j["extension"] = rep.top_spec;
    j["degree"] = rep.degree;
    j["all_pass"] = rep.all_pass;
    j["zero_pattern_ok"] = rep.zero_pattern_ok;
    j["relation_checks"] = rep.relation_checks;
    j["relation_failures"] = rep.relation_failures;
    j["gauss_checks"] = rep.gauss_checks;
    j["gauss_failures"] = rep.gauss_failures;
    j["max_deviation"] = rep.max_deviation;
    Json cases = Json::array();
    for (auto& r : rep.records) cases.push_back(json_char_record(r));
    j["cases"] = cases;
    return j;
}

inline std::string csv_char_sum_report(const CharSumReport& rep) {
    std::ostringstream os;
    os << "exponents;nu;nu_res;res_trivial;absE;absE_predicted;absE0;absE0_predicted;pass\n";
    for (auto& r : rep.records) {
        os << "[";
        for (std::size_t i = 0; i < r.exponents.size(); ++i) os << (i ? " " : "") << r.exponents[i];
        os << "];" << r.nu << ";" << r.nu_res << ";" << (r.res_trivial ? 1 : 0) << ";" << r.abs_e << ";" << r.pred_e
           << ";" << r.abs_e0 << ";" << r.pred_e0 << ";" << (r.pass ? 1 : 0) << "\n";
    }
    return os.str();
}

inline Json json_gauss_report(const GaussSweepReport& rep) {
    Json j = json_header("gauss-verify");
    j["ring"] = rep.ring_spec;
    j["all_pass"] = rep.all_pass;
    j["max_deviation"] = rep.max_deviation;
    j["pairs"] = rep.records.size();
    Json fails = Json::array();
    for (auto& r : rep.records)
        if (!r.pass) {
            Json f;
            f["psi_index"] = r.psi_index;
            f["chi_exponents"] = r.chi_exponents;
            f["absG"] = r.abs_g;
            f["predicted"] = r.pred;
            fails.push_back(f);
        }
    j["failures"] = fails;
    return j;
}

inline Json json_spectrum(const Spectrum& sp) {
    Json arr = Json::array();
    for (auto& [v, m] : sp.entries) {
        Json e;
        e["value"] = v;
        e["multiplicity"] = m;
        arr.push_back(e);
    }
    return arr;
}

inline Json json_prediction(const SpectrumPrediction& pr) {
    Json j;
    j["provenance"] = pr.provenance;
    Json arr = Json::array();
    for (auto& e : pr.entries) {
        Json x;
        x["value"] = e.value;
        x["multiplicity"] = e.multiplicity;
        arr.push_back(x);
    }
    j["entries"] = arr;
    return j;
}

inline Json json_match(const MatchReport& m) {
    Json j;
    j["pass"] = m.pass;
    if (!m.detail.empty()) j["detail"] = m.detail;
    Json rows = Json::array();
    for (auto& r : m.rows) {
        Json x;
        x["predicted_value"] = r.predicted_value;
        x["predicted_multiplicity"] = r.predicted_mult;
        x["computed_value"] = r.computed_value;
        x["computed_multiplicity"] = r.computed_mult;
        x["delta"] = r.delta;
        x["ok"] = r.ok;
        rows.push_back(x);
    }
    j["rows"] = rows;
    return j;
}

inline std::string csv_match(const MatchReport& m) {
    std::ostringstream os;
    os << "predicted_value;predicted_multiplicity;computed_value;computed_multiplicity;delta;ok\n";
    for (auto& r : m.rows)
        os << r.predicted_value << ";" << r.predicted_mult << ";" << r.computed_value << ";" << r.computed_mult << ";"
           << r.delta << ";" << (r.ok ? 1 : 0) << "\n";
    return os.str();
}

inline Json json_stats(const GraphStats& s, const std::string& name, std::size_t half_or_size, bool bipartite) {
    Json j = json_header("graph-stats");
    j["graph"] = name;
    j[bipartite ? "half_size" : "size"] = half_or_size;
    j["degree"] = s.degree;
    j["diameter"] = s.diameter;
    j["girth"] = s.girth;
    j["connected"] = s.connected;
    return j;
}

inline Json json_iso(const IsoReport& rep) {
    Json j = json_header("iso");
    j["graph"] = rep.graph;
    j["degree"] = rep.degree;
    j["alpha2"] = rep.alpha2;
    j["lower"] = rep.lower;
    if (rep.upper) j["upper"] = *rep.upper;
    if (rep.exact) j["exact"] = *rep.exact;
    if (rep.upper) {
        j["partition_edges"] = rep.partition_edges;
        j["blocks_exact"] = rep.blocks_exact;
    }
    return j;
}

inline Json json_ramanujan(const std::vector<RamanujanRow>& rows) {
    Json j = json_header("ramanujan");
    Json arr = Json::array();
    std::vector<std::uint64_t> rset;
    for (auto& r : rows) {
        Json x;
        x["N"] = r.n;
        x["composite"] = r.composite;
        x["ramanujan"] = r.ramanujan;
        x["max_nontrivial"] = r.max_nontrivial;
        x["bound"] = r.bound;
        x["iso_lower"] = r.iso_lower;
        x["gunnells_ok"] = r.gunnells_ok;
        arr.push_back(x);
        if (r.composite && r.ramanujan) rset.push_back(r.n);
    }
    j["table"] = arr;
    j["composite_ramanujan_set"] = rset;
    return j;
}

inline std::string csv_ramanujan(const std::vector<RamanujanRow>& rows) {
    std::ostringstream os;
    os << "N;composite;ramanujan;max_nontrivial;bound;iso_lower;gunnells_ok\n";
    for (auto& r : rows)
        os << r.n << ";" << (r.composite ? 1 : 0) << ";" << (r.ramanujan ? 1 : 0) << ";" << r.max_nontrivial << ";"
           << r.bound << ";" << r.iso_lower << ";" << (r.gunnells_ok ? 1 : 0) << "\n";
    return os.str();
}

inline Json json_counting(const std::vector<CountingTrial>& trials, const std::string& ring, int n,
                          std::uint64_t seed) {
    Json j = json_header("counting-sweep");
    j["ring"] = ring;
    j["n"] = n;
    j["seed"] = seed;
    bool all = true;
    Json arr = Json::array();
    for (auto& t : trials) {
        Json x;
        x["a_size"] = t.report.a_size;
        x["b_size"] = t.report.b_size;
        x["count"] = t.report.count;
        x["expected"] = t.report.expected;
        x["bound"] = t.report.bound;
        x["pass"] = t.report.pass;
        x["edges"] = t.edges;
        x["edge_identity_ok"] = t.edge_identity_ok;
        arr.push_back(x);
        all = all && t.report.pass && t.edge_identity_ok;
    }
    j["trials"] = arr;
    j["all_pass"] = all;
    return j;
}

inline std::string csv_counting(const std::vector<CountingTrial>& trials) {
    std::ostringstream os;
    os << "trial;a_size;b_size;count;expected;bound;pass;edges;edge_identity_ok\n";
    for (std::size_t i = 0; i < trials.size(); ++i) {
        auto& t = trials[i];
        os << i << ";" << t.report.a_size << ";" << t.report.b_size << ";" << t.report.count << ";" << t.report.expected
           << ";" << t.report.bound << ";" << (t.report.pass ? 1 : 0) << ";" << t.edges << ";"
           << (t.edge_identity_ok ? 1 : 0) << "\n";
    }
    return os.str();
}

} // namespace unigraph
