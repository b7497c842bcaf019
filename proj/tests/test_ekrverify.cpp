#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ekr/ekrverify.hpp"

using namespace ekr;

TEST_CASE("pair graph structure") {
    const PairGraph x(5);
    CHECK(x.vertex_count() == 12);
    CHECK(x.adjacency().is_symmetric());
    for (int v = 0; v < x.vertex_count(); ++v) {
        int deg = 0;
        for (int u = 0; u < x.vertex_count(); ++u) deg += x.adjacency()(v, u) == 1 ? 1 : 0;
        CHECK(deg == (5 - 2) * (5 - 3));
    }
    // chain and non-chain cases
    CHECK(PairGraph::adjacent_rule({1, 2}, {2, 3}));   // i->j->l
    CHECK(PairGraph::adjacent_rule({1, 2}, {3, 1}));   // k->i->j
    CHECK(PairGraph::adjacent_rule({1, 2}, {3, 4}));   // disjoint
    CHECK_FALSE(PairGraph::adjacent_rule({1, 2}, {2, 1}));  // swap
    CHECK_FALSE(PairGraph::adjacent_rule({1, 2}, {1, 3}));  // same source
    CHECK_FALSE(PairGraph::adjacent_rule({1, 2}, {3, 2}));  // same target
    CHECK(x.cyclic_clique_cover().size() == 6);  // (n-2)!
}

TEST_CASE("X bound for n = 5 and 6") {
    const CheckReport r5 = verify_X_bound(5);
    CHECK(r5.pass);
    CHECK(r5.witnesses["certified_bound"] == json("-2"));
    CHECK(r5.witnesses["edge_multiplicity"] == json("1"));
    const CheckReport r6 = verify_X_bound(6);
    CHECK(r6.pass);
    CHECK(r6.witnesses["certified_bound"] == json("-3"));
    CHECK(r6.witnesses["edge_multiplicity"] == json("2"));
    CHECK_THROWS_AS(verify_X_bound(12), std::invalid_argument);
}

TEST_CASE("standard basis identities") {
    const CheckReport r5 = verify_standard_basis(5);
    CHECK(r5.pass);
    CHECK(r5.witnesses["least_eigenvalue"] == json("3"));
    CHECK(r5.witnesses["rank_H"] == json(16));
    const CheckReport r6 = verify_standard_basis(6);
    CHECK(r6.pass);
    CHECK(r6.witnesses["least_eigenvalue"] == json("12"));
}

TEST_CASE("column space reduction") {
    const CheckReport r5 = verify_abar_reduction(5);
    CHECK(r5.pass);
    CHECK(r5.witnesses["rank_A"] == json(17));
    CHECK(r5.witnesses["rank_Abar"] == json(17));
    const CheckReport r6 = verify_abar_reduction(6);
    CHECK(r6.pass);
    CHECK(r6.witnesses["rank_A"] == json(26));
    // spot values from the displayed case table at n = 5
    const auto g = make_group(5, GroupKind::Alt);
    for (int e = 0; e < g->order(); ++e) {
        const Permutation& pi = g->element(e);
        int v_entry = 0;
        for (int i = 2; i <= 4; ++i)
            if (pi(i - 1) != 4) ++v_entry;
        const int w_entry = (pi(0) != 4 ? 2 : 0) + (pi(4) == 4 ? 1 : 0);
        if (pi(0) == 4) { CHECK(v_entry == 3); CHECK(w_entry == 0); }
        else if (pi(4) == 4) { CHECK(v_entry == 3); CHECK(w_entry == 3); }
        else { CHECK(v_entry == 2); CHECK(w_entry == 2); }
    }
}

TEST_CASE("block system shape") {
    const auto g = make_group(5, GroupKind::Alt);
    const BlockSystem bs = build_block_system(g);
    CHECK(bs.abar.rows() == 60);
    CHECK(bs.abar.cols() == 17);
    CHECK(bs.derangement_count == 24);
    CHECK(bs.m_block.rows() == 24);
    CHECK(bs.m_block.cols() == 12);
    // first row is the identity row: ones on the diagonal block, zeros after
    for (int c = 0; c < 5; ++c) CHECK(bs.abar(0, c) == 1);
    for (int c = 5; c < 17; ++c) CHECK(bs.abar(0, c) == 0);
    // derangement rows vanish on the diagonal block
    for (int r = 1; r <= bs.derangement_count; ++r)
        for (int c = 0; c < 5; ++c) CHECK(bs.abar(r, c) == 0);
}

TEST_CASE("rank of M with the Gram identities") {
    const CheckReport r5 = verify_M_fullrank(5);
    CHECK(r5.pass);
    CHECK(r5.witnesses["rank_M"] == json(12));
    CHECK(r5.witnesses["gram_diag"] == json("6"));     // (n-2)!
    CHECK(r5.witnesses["gram_offdiag"] == json("2"));  // (n-3)!
    const CheckReport r6 = verify_M_fullrank(6);
    CHECK(r6.pass);
    CHECK(r6.witnesses["rank_M"] == json(20));
    CHECK(r6.witnesses["gram_diag"] == json("8"));     // 2(n-2)!/n
    CHECK(r6.witnesses["gram_offdiag"] == json("2"));  // 2(n-3)!/n
}

TEST_CASE("reconstruction names the coset") {
    const auto g = make_group(5, GroupKind::Alt);
    SECTION("stabilizers reconstruct to themselves") {
        const auto r11 = reconstruct_from_blocks(g, g->coset_indices(1, 1));
        CHECK(r11.report.pass);
        CHECK(r11.coset_i == 1);
        CHECK(r11.coset_j == 1);
        const auto r33 = reconstruct_from_blocks(g, g->coset_indices(3, 3));
        CHECK(r33.report.pass);
        CHECK(r33.coset_i == 3);
        CHECK(r33.coset_j == 3);
    }
    SECTION("translated cosets reconstruct through the translation") {
        const auto r25 = reconstruct_any(g, g->coset_indices(2, 5));
        CHECK(r25.report.pass);
        CHECK(r25.coset_i == 2);
        CHECK(r25.coset_j == 5);
    }
    SECTION("non-independent sets are rejected with a witness pair") {
        // the lexicographically first 12 elements are exactly S_{1,1}, so
        // swap one for a derangement to break independence
        std::vector<int> junk;
        for (int e = 0; e < 11; ++e) junk.push_back(e);
        junk.push_back(g->index_of(parse_cycles("(1 2 3 4 5)", 5)));
        const auto r = reconstruct_from_blocks(g, junk);
        CHECK_FALSE(r.report.pass);
        CHECK(r.report.witnesses.contains("not_independent"));
    }
    SECTION("wrong size is rejected") {
        const auto r = reconstruct_from_blocks(g, {g->identity_index()});
        CHECK_FALSE(r.report.pass);
    }
}

TEST_CASE("enumeration at n = 5") {
    const auto g = make_group(5, GroupKind::Alt);
    const EnumerationResult res = enumerate_max_independent_sets(g);
    CHECK(res.report.pass);
    CHECK(res.maximum == 12);
    CHECK(res.sets.size() == 25);
    SECTION("closed under left and right translation") {
        std::set<std::vector<int>> canon;
        for (auto s : res.sets) {
            std::sort(s.begin(), s.end());
            canon.insert(s);
        }
        const Permutation t = parse_cycles("(1 2 3)", 5);
        for (const auto& s : res.sets) {
            std::vector<int> left, right;
            for (int e : s) {
                left.push_back(g->index_of(t * g->element(e)));
                right.push_back(g->index_of(g->element(e) * t));
            }
            std::sort(left.begin(), left.end());
            std::sort(right.begin(), right.end());
            CHECK(canon.count(left) == 1);
            CHECK(canon.count(right) == 1);
        }
    }
    SECTION("reconstruction agrees on every enumerated set") {
        for (const auto& s : res.sets) {
            const auto rec = reconstruct_any(g, s);
            REQUIRE(rec.report.pass);
            const auto expect = g->coset_indices(rec.coset_i, rec.coset_j);
            auto sorted = s;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == expect);
        }
    }
}

TEST_CASE("standard module membership") {
    const auto g = make_group(5, GroupKind::Alt);
    CHECK(verify_standard_module_membership(g, g->coset_indices(1, 1)).pass);
    CHECK(verify_standard_module_membership(g, g->coset_indices(2, 3)).pass);
    SECTION("rejects non-independent sets") {
        std::vector<int> junk;
        for (int e = 0; e < 11; ++e) junk.push_back(e);
        junk.push_back(g->index_of(parse_cycles("(1 2 3 4 5)", 5)));
        const CheckReport rep = verify_standard_module_membership(g, junk);
        CHECK_FALSE(rep.pass);
        CHECK(rep.witnesses.contains("not_independent"));
    }
}

TEST_CASE("transfer checks at n = 5") {
    const CheckReport rep = transfer_strict_ekr_check(5);
    CHECK(rep.pass);
    CHECK(rep.witnesses["expected_intersection"] == json("3"));
    CHECK(rep.witnesses["union_bound"] == json("9"));
    CHECK(rep.witnesses["stabilizer_size"] == json("12"));
    CHECK(rep.witnesses["sym5_families"] == json(25));
}
