#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ekr/permgroup.hpp"

using namespace ekr;

TEST_CASE("permutation basics") {
    const Permutation p = parse_cycles("(1 2 3)(4 5)", 5);
    CHECK(p(0) == 1);
    CHECK(p(3) == 4);
    CHECK(p.cycle_type() == Partition{3, 2});
    CHECK(p.sign() == -1);
    CHECK(p.cycle_string() == "(1 2 3)(4 5)");
    CHECK(p.inverse() * p == Permutation::identity(5));
    CHECK(parse_cycles(p.cycle_string(), 5) == p);
    CHECK(parse_cycles("()", 4) == Permutation::identity(4));
    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1 9)", 5), std::invalid_argument);
}

TEST_CASE("sign convention") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        int evens = 0, total = 0;
        do {
            const Permutation p = Permutation::from_images(img);
            ++total;
            if (p.is_even()) ++evens;
        } while (std::next_permutation(img.begin(), img.end()));
        CHECK(evens * 2 == total);
    }
}

TEST_CASE("is_intersecting") {
    const Permutation id = Permutation::identity(5);
    CHECK(is_intersecting(id, id));
    CHECK_FALSE(is_intersecting(parse_cycles("(1 2 3 4 5)", 5), id));
    CHECK(is_intersecting(parse_cycles("(1 2)(3 4)", 5), parse_cycles("(1 3)(2 4)", 5)));
    CHECK_THROWS_AS(is_intersecting(id, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("split criterion") {
    CHECK(is_split(CycleType{Partition{5}}));
    CHECK_FALSE(is_split(CycleType{Partition{3, 1, 1}}));
    CHECK_FALSE(is_split(CycleType{Partition{3, 3}}));
    CHECK_FALSE(is_split(CycleType{Partition{4, 2}}));
    CHECK(is_split(CycleType{Partition{5, 3, 1}}));
    CHECK_THROWS_AS(is_split(CycleType{Partition{2, 1}}), std::domain_error);
}

TEST_CASE("split class to symmetric partition") {
    CHECK(split_class_partition(CycleType{Partition{11, 9, 3}}) == Partition{6, 6, 4, 3, 2, 2});
    CHECK(split_class_partition(CycleType{Partition{5}}) == Partition{3, 1, 1});
    CHECK(split_class_partition(CycleType{Partition{9}}) == Partition{5, 1, 1, 1, 1});
    SECTION("round trip over all symmetric partitions up to weight 14") {
        for (int n = 1; n <= 14; ++n)
            for (const auto& p : partitions_of(n))
                if (is_symmetric(p)) {
                    const CycleType t = symmetric_partition_class(p);
                    CHECK(is_split(t));
                    CHECK(split_class_partition(t) == p);
                }
    }
    SECTION("round trip over all split types up to n = 14") {
        for (int n = 1; n <= 14; ++n)
            for (const auto& p : partitions_of(n)) {
                const CycleType t{p};
                if (t.sign() != 1 || !is_split(t)) continue;
                const Partition lam = split_class_partition(t);
                CHECK(symmetric_partition_class(lam).lengths == p);
            }
    }
}

TEST_CASE("conjugacy classes of Alt(5)") {
    const auto cls = conjugacy_classes(5, GroupKind::Alt);
    REQUIRE(cls.size() == 5);
    CHECK(cls[0].is_identity());
    CHECK(cls[0].size == 1);
    std::map<std::string, std::string> sizes;
    for (const auto& c : cls) {
        std::string key = c.cycle_type.lengths.str();
        if (c.split_tag == SplitTag::Prime) key += "'";
        if (c.split_tag == SplitTag::DoublePrime) key += "\"";
        sizes[key] = c.size.str();
    }
    CHECK(sizes.at("1,1,1,1,1") == "1");
    CHECK(sizes.at("2,2,1") == "15");
    CHECK(sizes.at("3,1,1") == "20");
    CHECK(sizes.at("5'") == "12");
    CHECK(sizes.at("5\"") == "12");
}

TEST_CASE("Alt(3) splits its 3-cycles") {
    const auto cls = conjugacy_classes(3, GroupKind::Alt);
    REQUIRE(cls.size() == 3);
    for (const auto& c : cls) CHECK(c.size == 1);
}

TEST_CASE("Sym class count equals partition count") {
    for (int n = 2; n <= 9; ++n)
        CHECK(conjugacy_classes(n, GroupKind::Sym).size() == partitions_of(n).size());
}

TEST_CASE("class sizes sum to the group order") {
    for (int n = 3; n <= 8; ++n) {
        Int sum = 0;
        for (const auto& c : conjugacy_classes(n, GroupKind::Alt)) sum += c.size;
        CHECK(sum == factorial(n) / 2);
    }
    for (int n = 2; n <= 8; ++n) {
        Int sum = 0;
        for (const auto& c : conjugacy_classes(n, GroupKind::Sym)) sum += c.size;
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("split detection agrees with the orbit oracle") {
    // A class splits iff its Alt(n)-conjugation orbit is half the Sym class.
    for (int n = 4; n <= 7; ++n) {
        const auto g = make_group(n, GroupKind::Alt);
        for (const auto& c : conjugacy_classes(n, GroupKind::Alt)) {
            std::set<std::uint64_t> orbit;
            for (int e = 0; e < g->order(); ++e) {
                const Permutation& h = g->element(e);
                orbit.insert((h * c.representative * h.inverse()).pack());
            }
            const Int sym_size = sym_class_size(c.cycle_type);
            if (c.split_tag == SplitTag::NonSplit) CHECK(Int(orbit.size()) == sym_size);
            else CHECK(Int(orbit.size()) * 2 == sym_size);
            CHECK(Int(orbit.size()) == c.size);
        }
    }
}

TEST_CASE("group table enumeration and class index") {
    const auto g = make_group(5, GroupKind::Alt);
    CHECK(g->order() == 60);
    CHECK(g->element(0) == Permutation::identity(5));
    for (int e = 1; e < g->order(); ++e) CHECK(g->element(e - 1) < g->element(e));
    CHECK(g->derangement_indices().size() == 24);
    for (int idx : g->derangement_indices()) CHECK(g->element(idx).cycle_type() == Partition{5});
    const auto g6 = make_group(6, GroupKind::Alt);
    CHECK(g6->derangement_indices().size() == 130);
    const auto g3 = make_group(3, GroupKind::Alt);
    CHECK(g3->derangement_indices().size() == 2);
}

TEST_CASE("canonical split representatives") {
    const auto cls = conjugacy_classes(5, GroupKind::Alt);
    const Permutation five = parse_cycles("(1 2 3 4 5)", 5);
    CHECK(split_half_of(five) == SplitTag::Prime);
    const Permutation swapped = parse_cycles("(1 2 3 5 4)", 5);  // conjugate by (4 5)
    CHECK(split_half_of(swapped) == SplitTag::DoublePrime);
    CHECK(split_half_of(parse_cycles("(1 2 3 4 5 6 7)", 7)) == SplitTag::Prime);
    for (const auto& c : cls) {
        if (c.split_tag == SplitTag::NonSplit) {
            CHECK_THROWS_AS(canonical_split_representative(c), std::domain_error);
        } else {
            CHECK(split_half_of(canonical_split_representative(c)) == c.split_tag);
        }
    }
}

TEST_CASE("odd conjugation swaps the split halves") {
    for (int n = 5; n <= 8; ++n) {
        for (const auto& c : conjugacy_classes(n, GroupKind::Alt)) {
            if (c.split_tag == SplitTag::NonSplit) continue;
            std::vector<int> timg(static_cast<std::size_t>(n));
            std::iota(timg.begin(), timg.end(), 0);
            std::swap(timg[0], timg[1]);
            const Permutation t = Permutation::from_images(timg);  // transposition (1 2)
            const Permutation tw = t * c.representative * t.inverse();
            const SplitTag flipped =
                c.split_tag == SplitTag::Prime ? SplitTag::DoublePrime : SplitTag::Prime;
            CHECK(split_half_of(tw) == flipped);
        }
    }
}

TEST_CASE("coset families") {
    for (int n = 4; n <= 6; ++n) {
        const auto g = make_group(n, GroupKind::Alt);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto s = g->coset_indices(i, j);
                CHECK(Int(s.size()) * 2 == factorial(n - 1) * 1);
                for (std::size_t a = 0; a < s.size(); ++a)
                    for (std::size_t b = a + 1; b < s.size(); ++b)
                        REQUIRE(is_intersecting(g->element(s[a]), g->element(s[b])));
            }
    }
    // n = 7, 8: size plus the defining property (every member maps i to j,
    // which forces pairwise intersection at i), for every coset.
    for (int n = 7; n <= 8; ++n) {
        const auto g = make_group(n, GroupKind::Alt);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto s = g->coset_indices(i, j);
                REQUIRE(Int(s.size()) == factorial(n - 1) / 2);
                for (int e : s) REQUIRE(g->element(e)(i - 1) == j - 1);
            }
    }
}
