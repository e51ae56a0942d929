#include <catch2/catch_amalgamated.hpp>

#include "unigraph/graph.hpp"

using namespace unigraph;

TEST_CASE("unimodular tuple enumeration counts", "[graph]") {
    CHECK(enumerate_unimodular(make_galois_ring(3, 1, 1), 2).size() == 8);
    CHECK(enumerate_unimodular(make_galois_ring(3, 2, 1), 2).size() == 72);   // q^{nl} - q^{n(l-1)}
    CHECK(enumerate_unimodular(parse_ring("Zmod(15)"), 2).size() == 192);     // 8 * 24
    REQUIRE_THROWS_AS(enumerate_unimodular(make_galois_ring(3, 2, 1), 2, 50), resource_error);
}

TEST_CASE("projective canonical forms", "[graph]") {
    auto F3 = make_galois_ring(3, 1, 1);
    CHECK(projective_canonical(F3, {2, 1}) == Tuple{1, 2});

    auto Z9 = make_galois_ring(3, 2, 1);
    CHECK(projective_canonical(Z9, {3, 1, 3}) == Tuple{3, 1, 3});   // already canonical

    // idempotent, class size |R^x|, and associate detection on (Z/9)^3
    const auto tuples = enumerate_unimodular(Z9, 3);
    std::map<std::uint64_t, std::size_t> class_sizes;
    for (auto& t : tuples) {
        const Tuple c = projective_canonical(Z9, t);
        REQUIRE(projective_canonical(Z9, c) == c);
        class_sizes[tuple_encode(Z9, c)]++;
    }
    CHECK(class_sizes.size() == 117);   // q^{(n-1)(l-1)} (q^n - 1)/(q - 1)
    for (auto& [c, n] : class_sizes) REQUIRE(n == Z9->unit_count());

    REQUIRE_THROWS_AS(projective_canonical(Z9, {3, 3, 3}), parameter_error);
}

TEST_CASE("Um and Um0 shapes", "[graph]") {
    auto um = build_um(make_galois_ring(3, 1, 1), 2);
    CHECK(um.half_size() == 8);
    CHECK(um.degree == 3);

    auto um0 = build_um0(make_galois_ring(3, 1, 1), 3);
    CHECK(um0.half_size() == 13);   // point-line incidence graph of PG(2,3)
    CHECK(um0.degree == 4);

    auto um9 = build_um(make_galois_ring(3, 2, 1), 2);
    CHECK(um9.half_size() == 72);
    CHECK(um9.degree == 9);

    auto um09 = build_um0(make_galois_ring(3, 2, 1), 3);
    CHECK(um09.half_size() == 117);
    CHECK(um09.degree == 12);   // q^{(n-2)(l-1)} (q^{n-1}-1)/(q-1)

    REQUIRE_THROWS_AS(build_um(make_galois_ring(3, 1, 1), 1), parameter_error);
    REQUIRE_THROWS_AS(build_um0(make_galois_ring(3, 1, 1), 2), parameter_error);
}

TEST_CASE("Um0 adjacency is independent of representatives", "[graph]") {
    for (auto& R : {make_galois_ring(3, 1, 1), make_galois_ring(3, 2, 1)}) {
        INFO(R->spec());
        const auto tuples = enumerate_unimodular(R, 3);
        // pick a handful of class pairs and rescale by every unit pair
        for (std::size_t i = 0; i < tuples.size(); i += 13)
            for (std::size_t j = 0; j < tuples.size(); j += 17) {
                const bool adj = dot(R, tuples[i], tuples[j]) == 0;
                for (Code u : R->units())
                    for (Code v : R->units()) {
                        Tuple a(tuples[i]), b(tuples[j]);
                        for (auto& x : a) x = R->mul(x, u);
                        for (auto& y : b) y = R->mul(y, v);
                        REQUIRE((dot(R, a, b) == 0) == adj);
                    }
            }
    }
}

TEST_CASE("trace graphs match the unimodular shapes", "[graph]") {
    auto E = make_extension(make_galois_ring(3, 1, 1), 2);
    auto tr = build_trace_graph(*E);
    CHECK(tr.half_size() == 8);
    CHECK(tr.degree == 3);

    auto tr0 = build_trace_graph0(*make_extension(make_galois_ring(3, 1, 1), 3));
    CHECK(tr0.half_size() == 13);
    CHECK(tr0.degree == 4);

    auto tr9 = build_trace_graph(*make_extension(make_galois_ring(3, 2, 1), 2));
    CHECK(tr9.half_size() == 72);
    CHECK(tr9.degree == 9);
}

TEST_CASE("relabeling by the dual-basis map identifies Um with Tr", "[graph]") {
    SECTION("GF(3)^2 vs GF(9)/GF(3)") {
        auto F3 = make_galois_ring(3, 1, 1);
        auto E = make_extension(F3, 2);
        auto um = build_um(F3, 2);
        auto tr = build_trace_graph(*E);
        const RingMatrix phi = dual_basis_map(*E, RingMatrix::identity(F3, 2));
        CHECK(relabel_iso_check(um, tr, *E, phi));
        // identity on the trace graph against itself
        CHECK(relabel_iso_check(tr, tr, *E, RingMatrix::identity(F3, 2)));
        // negative control: a deliberately wrong relabeling map
        RingMatrix wrong(F3, 2);
        wrong.at(0, 1) = 2;
        wrong.at(1, 0) = 1;
        CHECK_FALSE(relabel_iso_check(um, tr, *E, wrong));
    }
    SECTION("(Z/9)^2 vs its trace graph") {
        auto Z9 = make_galois_ring(3, 2, 1);
        auto E = make_extension(Z9, 2);
        auto um = build_um(Z9, 2);
        auto tr = build_trace_graph(*E);
        const RingMatrix phi = dual_basis_map(*E, RingMatrix::identity(Z9, 2));
        CHECK(relabel_iso_check(um, tr, *E, phi));
    }
    SECTION("size mismatch is rejected") {
        auto F3 = make_galois_ring(3, 1, 1);
        auto E = make_extension(F3, 2);
        auto um3 = build_um(F3, 3);
        REQUIRE_THROWS_AS(relabel_iso_check(um3, build_trace_graph(*E), *E, RingMatrix::identity(F3, 2)),
                          parameter_error);
    }
}

TEST_CASE("natural embeddings are full", "[graph]") {
    for (auto& R : {make_galois_ring(3, 1, 1), make_galois_ring(3, 2, 1)}) {
        INFO(R->spec());
        const int n = 2;
        const auto small = enumerate_unimodular(R, n);
        const Code one = R->one();

        // a -> (a, 0) into Um(R^{n+1}): adjacency iff
        for (auto& a : small)
            for (auto& b : small) {
                Tuple a3(a), b3(b);
                a3.push_back(0);
                b3.push_back(0);
                REQUIRE(is_unimodular(R, a3));
                REQUIRE((dot(R, a, b) == one) == (dot(R, a3, b3) == one));
            }

        // [a] -> [a, 0] into Um0(R^{n+1}) preserves class distinctness
        std::set<std::uint64_t> images;
        std::set<std::uint64_t> sources;
        for (auto& a : small) {
            Tuple a3(a);
            a3.push_back(0);
            sources.insert(tuple_encode(R, projective_canonical(R, a)));
            images.insert(tuple_encode(R, projective_canonical(R, a3)));
        }
        REQUIRE(images.size() == sources.size());

        // a_black -> [a,1]_black, b_white -> [b,-1]_white into Um0(R^{n+1})
        const Code minus_one = R->neg(one);
        for (auto& a : small)
            for (auto& b : small) {
                Tuple a3(a), b3(b);
                a3.push_back(one);
                b3.push_back(minus_one);
                REQUIRE((dot(R, a, b) == one) == (dot(R, a3, b3) == 0));
            }
    }
}

TEST_CASE("Platonic graphs", "[graph]") {
    SECTION("Pl(Z/3) is K4") {
        auto pl = build_platonic(make_galois_ring(3, 1, 1));
        CHECK(pl.size() == 4);
        CHECK(pl.degree == 3);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) REQUIRE(pl.adj.get(i, j) == (i != j));
    }
    SECTION("Pl(Z/9): 36 vertices, 9-regular") {
        auto pl = build_platonic(make_galois_ring(3, 2, 1));
        CHECK(pl.size() == 36);
        CHECK(pl.degree == 9);
    }
    SECTION("Pl(Z/15): 96 vertices, 15-regular") {
        auto pl = build_platonic(parse_ring("Zmod(15)"));
        CHECK(pl.size() == 96);
        CHECK(pl.degree == 15);
    }
    SECTION("odd part is antisymmetric with entries +-1 on edges") {
        auto b = build_platonic_bundle(make_galois_ring(3, 2, 1));
        const std::size_t m = b.graph.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                REQUIRE(b.odd[i * m + j] == -b.odd[j * m + i]);
                REQUIRE((b.odd[i * m + j] != 0.0) == b.graph.adj.get(i, j));
            }
    }
}

TEST_CASE("graph statistics", "[graph]") {
    SECTION("Um(GF(3)^2): diameter 4, girth 6") {
        const auto s = graph_stats(build_um(make_galois_ring(3, 1, 1), 2));
        CHECK(s.connected);
        CHECK(s.diameter == 4);
        CHECK(s.girth == 6);
    }
    SECTION("Um(Z/9^2): diameter 4, girth 4") {
        const auto s = graph_stats(build_um(make_galois_ring(3, 2, 1), 2));
        CHECK(s.connected);
        CHECK(s.diameter == 4);
        CHECK(s.girth == 4);
    }
    SECTION("Um0(GF(3)^3): diameter 3, girth 6") {
        const auto s = graph_stats(build_um0(make_galois_ring(3, 1, 1), 3));
        CHECK(s.connected);
        CHECK(s.diameter == 3);
        CHECK(s.girth == 6);
    }
    SECTION("K4 girth 3 and vertex-transitive eccentricities") {
        const auto s = graph_stats(build_platonic(make_galois_ring(3, 1, 1)));
        CHECK(s.girth == 3);
        CHECK(s.diameter == 1);
        for (int e : s.eccentricities) REQUIRE(e == s.eccentricities[0]);
    }
}

TEST_CASE("Cayley certificates", "[graph]") {
    SECTION("Tr(GF(9)/GF(3)): |X| = 3") {
        auto E = make_extension(make_galois_ring(3, 1, 1), 2);
        auto cert = cayley_witness(*E, build_trace_graph(*E));
        CHECK(cert.set_size == 3);
        CHECK(cert.verified());
    }
    SECTION("quadratic extension of Z/9") {
        auto E = make_extension(make_galois_ring(3, 2, 1), 2);
        auto cert = cayley_witness(*E, build_trace_graph(*E));
        CHECK(cert.set_size == 9);
        CHECK(cert.verified());
    }
    SECTION("Tr0(GF(27)/GF(3)): |X0| = 4 classes") {
        auto E = make_extension(make_galois_ring(3, 1, 1), 3);
        auto cert = cayley_witness0(*E, build_trace_graph0(*E));
        CHECK(cert.set_size == 4);
        CHECK(cert.verified());
    }
    SECTION("eccentricity is the same from every vertex of a Cayley graph") {
        auto E = make_extension(make_galois_ring(3, 2, 1), 2);
        const auto s = graph_stats(build_trace_graph(*E));
        for (int e : s.eccentricities) REQUIRE(e == s.eccentricities[0]);
    }
}

TEST_CASE("stats on a disconnected graph", "[graph]") {
    Graph g;
    g.name = "two-edges";
    g.labels = {0, 1, 2, 3};
    g.adj = BitMatrix(4, 4);
    g.adj.set(0, 1);
    g.adj.set(1, 0);
    g.adj.set(2, 3);
    g.adj.set(3, 2);
    g.degree = 1;
    const auto s = graph_stats(g);
    CHECK_FALSE(s.connected);
    CHECK(s.diameter == -1);
    CHECK(s.girth == -1);   // acyclic
}

TEST_CASE("edge-list export", "[graph]") {
    auto k4 = build_platonic(make_galois_ring(3, 1, 1));
    const std::string text = export_graph(k4, "edges");
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);   // header + 6 edges

    auto um = build_um(make_galois_ring(3, 1, 1), 2);
    const std::string um_text = export_graph(um, "edges");
    CHECK(std::count(um_text.begin(), um_text.end(), '\n') == 25);   // header + 8*3 edges

    // import/export round trip is byte-identical
    CHECK(export_edges(import_edges(um_text)) == um_text);
    CHECK(export_edges(import_edges(text)) == text);

    REQUIRE_THROWS_AS(export_graph(k4, "dot"), parameter_error);
    REQUIRE_THROWS_AS(import_edges("vertices 4 degree 3\n1 2\n"), parameter_error);
}
