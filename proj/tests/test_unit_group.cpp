#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "unigraph/unit_group.hpp"

using namespace unigraph;

namespace {

std::map<int, int> mult_valuation_histogram(const UnitGroupPtr& U) {
    std::map<int, int> hist;
    for (auto& chi : all_mult_characters(U)) hist[chi.valuation()]++;
    return hist;
}

} // namespace

TEST_CASE("unit group of Z/9", "[unit_group]") {
    auto U = unit_group_structure(make_galois_ring(3, 2, 1));
    REQUIRE(U->generators() == std::vector<Code>{8, 4});
    REQUIRE(U->orders() == std::vector<std::uint64_t>{2, 3});
    CHECK(U->dlog(1) == std::vector<std::uint64_t>{0, 0});
    CHECK(U->dlog(8) == std::vector<std::uint64_t>{1, 0});
    CHECK(U->dlog(2) == std::vector<std::uint64_t>{1, 2});   // 8 * 4^2 = 128 = 2 mod 9
    REQUIRE_THROWS_AS(U->dlog(3), not_a_unit_error);

    // every unit decomposes uniquely: the dlog map is a bijection onto the box
    std::set<std::vector<std::uint64_t>> seen;
    for (Code u : U->units()) seen.insert(U->dlog(u));
    CHECK(seen.size() == 6);
}

TEST_CASE("unit group of small fields and extensions", "[unit_group]") {
    auto UF9 = unit_group_structure(make_galois_ring(3, 1, 2));
    REQUIRE(UF9->orders() == std::vector<std::uint64_t>{8});

    auto E = make_extension(make_galois_ring(3, 2, 1), 2);
    auto US = unit_group_structure(E->top());
    REQUIRE(US->orders() == std::vector<std::uint64_t>{8, 3, 3});
    std::uint64_t prod = 1;
    for (auto d : US->orders()) prod *= d;
    CHECK(prod == 72);

    // equal-char family gets the same machinery
    auto UEC = unit_group_structure(make_equal_char_ring(3, 2, 1));
    std::uint64_t prod2 = 1;
    for (auto d : UEC->orders()) prod2 *= d;
    CHECK(prod2 == 6);
}

TEST_CASE("character counts and valuation histograms", "[unit_group]") {
    auto UZ9 = unit_group_structure(make_galois_ring(3, 2, 1));
    auto chars = all_mult_characters(UZ9);
    REQUIRE(chars.size() == 6);
    CHECK(mult_valuation_histogram(UZ9) == std::map<int, int>{{0, 1}, {1, 1}, {2, 4}});

    auto UF3 = unit_group_structure(make_galois_ring(3, 1, 1));
    CHECK(mult_valuation_histogram(UF3) == std::map<int, int>{{0, 1}, {1, 1}});
}

TEST_CASE("valuation-count identity #{nu(chi) <= k} = [R^x : 1+(pi^k)]", "[unit_group]") {
    for (auto& R : {make_galois_ring(3, 2, 1), make_galois_ring(3, 3, 1), make_equal_char_ring(3, 2, 1),
                    make_galois_ring(5, 2, 1)}) {
        auto U = unit_group_structure(R);
        INFO(R->spec());
        auto chars = all_mult_characters(U);
        for (int k = 0; k <= R->ell(); ++k) {
            const std::size_t count = static_cast<std::size_t>(
                std::count_if(chars.begin(), chars.end(), [&](auto& c) { return c.valuation() <= k; }));
            REQUIRE(count == R->unit_count() / U->one_plus_pik(k).size());
        }
    }
}

TEST_CASE("characters trivial on the subfield units of GF(9)", "[unit_group]") {
    auto E = make_extension(make_galois_ring(3, 1, 1), 2);
    auto US = unit_group_structure(E->top());
    auto UR = unit_group_structure(E->base());
    std::size_t trivial_on_f = 0;
    for (auto& chi : all_mult_characters(US)) {
        const auto res = restrict_character(chi, *E, UR);
        if (res.is_trivial()) ++trivial_on_f;
    }
    CHECK(trivial_on_f == 4);   // |K^x|/|F^x|, including the trivial character
}

TEST_CASE("orthogonality and completeness", "[unit_group]") {
    for (auto& R : {make_galois_ring(3, 2, 1), make_galois_ring(3, 1, 2), make_equal_char_ring(3, 2, 1),
                    make_galois_ring(5, 2, 1), make_equal_char_ring(3, 3, 1)}) {
        auto U = unit_group_structure(R);
        INFO(R->spec());
        std::set<std::vector<std::uint64_t>> tables;
        for (auto& chi : all_mult_characters(U)) {
            std::complex<double> sum = 0;
            std::vector<std::uint64_t> phases;
            for (Code u : U->units()) {
                sum += chi.value(u);
                phases.push_back(chi.phase(u));
            }
            if (chi.is_trivial())
                REQUIRE(std::abs(sum - static_cast<double>(R->unit_count())) < 1e-8);
            else
                REQUIRE(std::abs(sum) < 1e-8);
            tables.insert(phases);   // distinct characters have distinct tables
        }
        REQUIRE(tables.size() == R->unit_count());
    }
}

TEST_CASE("quadratic character", "[unit_group]") {
    auto UF3 = unit_group_structure(make_galois_ring(3, 1, 1));
    auto eps3 = quadratic_character(UF3);
    CHECK(eps3.value(2).real() == Catch::Approx(-1.0));

    auto UZ9 = unit_group_structure(make_galois_ring(3, 2, 1));
    auto eps = quadratic_character(UZ9);
    REQUIRE(eps.exponents() == std::vector<std::uint64_t>{1, 0});
    CHECK(eps.valuation() == 1);
    CHECK(eps.value(2).real() == Catch::Approx(-1.0));   // 2 is a non-residue mod 3
    std::complex<double> sum = 0;
    for (Code u : UZ9->units()) {
        sum += eps.value(u);
        CHECK(std::abs(std::abs(eps.value(u).real()) - 1.0) < 1e-12);   // values +-1
    }
    CHECK(std::abs(sum) < 1e-12);
}

TEST_CASE("restriction of the quadratic character", "[unit_group]") {
    auto F3 = make_galois_ring(3, 1, 1);
    auto UR = unit_group_structure(F3);

    auto E2 = make_extension(F3, 2);
    auto U2 = unit_group_structure(E2->top());
    auto res_even = restrict_character(quadratic_character(U2), *E2, UR);
    CHECK(res_even.is_trivial());   // n even

    auto E3 = make_extension(F3, 3);
    auto U3 = unit_group_structure(E3->top());
    auto res_odd = restrict_character(quadratic_character(U3), *E3, UR);
    CHECK(res_odd == quadratic_character(UR));   // n odd

    auto triv = MultCharacter(U2, {0});
    CHECK(restrict_character(triv, *E2, UR).is_trivial());

    // extension not connecting the owners
    auto UR5 = unit_group_structure(make_galois_ring(5, 1, 1));
    REQUIRE_THROWS_AS(restrict_character(triv, *E2, UR5), type_error);
}

TEST_CASE("restriction bound and realizability of (nu, nu_res)", "[unit_group]") {
    struct Case { RingPtr ring; int n; };
    for (auto& c : {Case{make_galois_ring(3, 2, 1), 2}, Case{make_equal_char_ring(3, 2, 1), 2},
                    Case{make_galois_ring(3, 1, 1), 2}}) {
        auto E = make_extension(c.ring, c.n);
        auto US = unit_group_structure(E->top());
        auto UR = unit_group_structure(E->base());
        std::set<std::pair<int, int>> realized;
        for (auto& chi : all_mult_characters(US)) {
            const auto res = restrict_character(chi, *E, UR);
            REQUIRE(res.valuation() <= chi.valuation());
            realized.insert({chi.valuation(), res.valuation()});
        }
        // every (k, j) with 1 <= k <= l, 0 <= j <= k occurs
        for (int k = 1; k <= c.ring->ell(); ++k)
            for (int j = 0; j <= k; ++j) REQUIRE(realized.count({k, j}) == 1);
    }
}

TEST_CASE("additive characters", "[unit_group]") {
    auto Z9 = make_galois_ring(3, 2, 1);
    auto psis = all_add_characters(Z9);
    REQUIRE(psis.size() == 9);
    CHECK(psis[0].is_trivial());
    for (Code x = 0; x < 9; ++x) CHECK(psis[0].value(x) == std::complex<double>(1.0, 0.0));

    // psi_1(3) = exp(2 pi i / 3)
    CHECK(psis[1].value(3).real() == Catch::Approx(std::cos(2 * std::numbers::pi / 3)));
    CHECK(psis[1].value(3).imag() == Catch::Approx(std::sin(2 * std::numbers::pi / 3)));

    // nu(psi_3) = 1 = l - nu(3); the general law holds on several rings
    CHECK(psis[3].valuation() == 1);
    for (auto& R : {Z9, make_galois_ring(3, 1, 2), make_equal_char_ring(3, 2, 1), make_galois_ring(3, 2, 2)}) {
        INFO(R->spec());
        for (Code a = 0; a < R->size(); ++a)
            REQUIRE(AddCharacter(R, a).valuation() == R->ell() - R->valuation(a));
    }

    // zero sums for nontrivial psi_a and pairwise-distinct value tables on GF(9)
    auto F9 = make_galois_ring(3, 1, 2);
    std::set<std::vector<long long>> tables;
    for (auto& psi : all_add_characters(F9)) {
        std::complex<double> sum = 0;
        std::vector<long long> phases;
        for (Code x = 0; x < F9->size(); ++x) {
            sum += psi.value(x);
            phases.push_back(psi.phase(x));
        }
        if (!psi.is_trivial()) REQUIRE(std::abs(sum) < 1e-8);
        tables.insert(phases);
    }
    REQUIRE(tables.size() == 9);
}

TEST_CASE("induced and shifted additive characters", "[unit_group]") {
    auto Z9 = make_galois_ring(3, 2, 1);
    auto E = make_extension(Z9, 2);

    // induce trivial -> trivial; valuations preserved for all 9 characters
    for (auto& psi : all_add_characters(Z9)) {
        auto ind = induce_add_char(psi, *E);
        REQUIRE(ind.valuation() == psi.valuation());
        if (psi.is_trivial()) REQUIRE(ind.is_trivial());
        // definition: psi^ind(s) = psi(Tr(s))
        for (Code s = 0; s < E->top()->size(); s += 5)
            REQUIRE(std::abs(ind.value(s) - psi.value(E->trace(s))) < 1e-12);
    }

    // primitive psi on Z/9 shifted by i = 1 has valuation 1
    AddCharacter psi1(Z9, 1);
    REQUIRE(psi1.valuation() == 2);
    CHECK(shift_add_char(psi1, 1).valuation() == 1);
    // general law nu(psi_(i)) = max(nu - i, 0)
    for (Code a = 0; a < 9; ++a)
        for (int i = 0; i <= 2; ++i) {
            AddCharacter psi(Z9, a);
            REQUIRE(shift_add_char(psi, i).valuation() == std::max(psi.valuation() - i, 0));
        }
}

TEST_CASE("mixed-exponent unit groups decompose correctly", "[unit_group]") {
    // for l > p the group 1+(pi) of an equal-char ring is no longer
    // homocyclic; EC(3,4,1) gives Z/9 x Z/3 and EC(3,5,1) gives Z/9 x (Z/3)^2
    auto U4 = unit_group_structure(make_equal_char_ring(3, 4, 1));
    REQUIRE(U4->orders() == std::vector<std::uint64_t>{2, 9, 3});
    auto U5 = unit_group_structure(make_equal_char_ring(3, 5, 1));
    REQUIRE(U5->orders() == std::vector<std::uint64_t>{2, 9, 3, 3});
    for (auto& U : {U4, U5}) {
        const auto R = U->ring();
        auto chars = all_mult_characters(U);
        REQUIRE(chars.size() == R->unit_count());
        for (int k = 0; k <= R->ell(); ++k) {
            const std::size_t count = static_cast<std::size_t>(
                std::count_if(chars.begin(), chars.end(), [&](auto& c) { return c.valuation() <= k; }));
            REQUIRE(count == R->unit_count() / U->one_plus_pik(k).size());
        }
    }
    // the basis-theorem adjustment path under permuted scans
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        auto U = unit_group_structure(make_equal_char_ring(3, 5, 1), kDefaultEnumCap, seed);
        std::uint64_t prod = 1;
        for (auto d : U->orders()) prod *= d;
        REQUIRE(prod == 162);
    }
}

TEST_CASE("generator choice does not affect predicted quantities", "[unit_group]") {
    for (auto& R : {make_galois_ring(3, 2, 1), make_galois_ring(3, 1, 2), make_equal_char_ring(3, 2, 1)}) {
        INFO(R->spec());
        auto U0 = unit_group_structure(R);
        for (std::uint64_t seed : {7u, 99u}) {
            auto U1 = unit_group_structure(R, kDefaultEnumCap, seed);
            std::uint64_t prod = 1;
            for (auto d : U1->orders()) prod *= d;
            REQUIRE(prod == R->unit_count());
            REQUIRE(mult_valuation_histogram(U1) == mult_valuation_histogram(U0));
        }
    }
}
