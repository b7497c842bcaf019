#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ekr/partition.hpp"
#include "syt_oracle.hpp"

using namespace ekr;

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{5, 3, 3, 2, 1, 1}) == Partition{6, 4, 3, 1, 1});
    CHECK(conjugate(Partition{7}) == Partition{1, 1, 1, 1, 1, 1, 1});
    CHECK(conjugate(Partition{4, 2, 1, 1}) == Partition{4, 2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("conjugate is an involution") {
    std::mt19937 rng(20240811);
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
    (void)rng;
}

TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(Partition{4, 2, 1, 1}));
    CHECK(is_symmetric(Partition{2, 1}));
    CHECK_FALSE(is_symmetric(Partition{6, 1}));
    CHECK_FALSE(is_symmetric(Partition{4, 1}));
}

TEST_CASE("shape classification") {
    CHECK(classify_shape(Partition{4, 3, 1}) == ShapeClass::TwoLayerHook);
    CHECK(classify_shape(Partition{4, 2, 2, 1, 1}) == ShapeClass::TwoLayerHook);
    CHECK(classify_shape(Partition{5, 4, 2, 2, 1}) == ShapeClass::TwoLayerHook);
    CHECK(classify_shape(Partition{6, 4, 2, 1, 1}) == ShapeClass::TwoLayerHook);
    CHECK(classify_shape(Partition{6, 1, 1}) == ShapeClass::Hook);
    CHECK(classify_shape(Partition{8}) == ShapeClass::Hook);
    CHECK(classify_shape(Partition{1, 1, 1}) == ShapeClass::Hook);
    // the symmetric near hook of even weight
    CHECK(classify_shape(Partition{4, 2, 1, 1}) == ShapeClass::NearHook);
    CHECK(classify_shape(Partition{5, 2, 1, 1, 1}) == ShapeClass::NearHook);
    CHECK(classify_shape(Partition{2, 2}) == ShapeClass::NearHook);
    CHECK(classify_shape(Partition{3, 3, 2}) == ShapeClass::Other);
    // a near hook is never a two-layer hook
    for (int n = 4; n <= 14; ++n)
        for (const auto& p : partitions_of(n))
            if (classify_shape(p) == ShapeClass::NearHook)
                CHECK(classify_shape(p) != ShapeClass::TwoLayerHook);
}

TEST_CASE("two-layer hooks need weight at least 8, and conjugates stay two-layer") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : partitions_of(n))
            if (classify_shape(p) == ShapeClass::TwoLayerHook) {
                CHECK(n >= 8);
                CHECK(classify_shape(conjugate(p)) == ShapeClass::TwoLayerHook);
            }
}

TEST_CASE("hook lengths") {
    auto h = hook_lengths(Partition{3, 1, 1});
    std::sort(h.begin(), h.end());
    CHECK(h == std::vector<int>{1, 1, 2, 2, 5});
    CHECK(hook_length_product(Partition{3, 1, 1}) == 20);
    CHECK(hook_length_product(Partition{4, 2, 1, 1}) == 448);  // (n-1)(n/2)^2 ((n/2-2)!)^2 at n=8
    CHECK(hook_length_product(Partition{5}) == 120);
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            CHECK(hook_length_product(p) == hook_length_product(conjugate(p)));
            auto a = hook_lengths(p), b = hook_lengths(conjugate(p));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);  // the whole multiset is transpose-invariant
        }
}

TEST_CASE("specht dimensions") {
    CHECK(specht_dimension(Partition{4, 1}) == 4);
    CHECK(specht_dimension(Partition{9}) == 1);
    CHECK(specht_dimension(Partition{3, 1, 1}) == 6);
    CHECK(specht_dimension(Partition{4, 2, 1, 1}) == 90);
}

TEST_CASE("specht dimension equals standard tableau count") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) CHECK(specht_dimension(p) == ekr_test::count_syt(p));
}

TEST_CASE("dimension squares sum to n!") {
    for (int n = 1; n <= 10; ++n) {
        Int sum = 0;
        for (const auto& p : partitions_of(n)) {
            const Int d = specht_dimension(p);
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("skew hooks") {
    SECTION("[3,2] has exactly one 2-hook") {
        const auto hooks = skew_hooks(Partition{3, 2}, 2);
        REQUIRE(hooks.size() == 1);
        CHECK(hooks[0].remainder == Partition{3});
        CHECK(hooks[0].cells == std::vector<std::pair<int, int>>{{1, 1}, {1, 0}});
        CHECK(hooks[0].r() == 0);
    }
    SECTION("single row: the whole row is the only n-hook") {
        const auto hooks = skew_hooks(Partition{6}, 6);
        REQUIRE(hooks.size() == 1);
        CHECK(hooks[0].remainder == Partition{});
        CHECK(hooks[0].r() == 0);
    }
    SECTION("two unequal rows never carry two half-weight hooks") {
        for (int n = 6; n <= 12; n += 2)
            for (int l2 = 1; 2 * l2 < n; ++l2) {
                const Partition p{n - l2, l2};
                CHECK(skew_hooks(p, n / 2).size() < 2);
            }
    }
    SECTION("removal always leaves a valid partition of the right weight") {
        for (int n = 1; n <= 9; ++n)
            for (const auto& p : partitions_of(n))
                for (int m = 1; m <= n; ++m)
                    for (const auto& h : skew_hooks(p, m)) {
                        CHECK(h.length() == m);
                        CHECK(h.remainder.weight() == n - m);
                        CHECK(h.rows_spanned >= 1);
                    }
    }
}

TEST_CASE("dimension bound check") {
    CHECK(dimension_bound_check(Partition{4, 2, 1, 1}));
    CHECK(dimension_bound_check(Partition{4, 3, 1}));
    CHECK(dimension_bound_check(Partition{4, 2, 2, 1, 1}));
    CHECK_THROWS_AS(dimension_bound_check(Partition{5, 1}), std::domain_error);
    CHECK_THROWS_AS(dimension_bound_check(Partition{3, 2, 1}), std::domain_error);
    // exhaustively on the stated domain for even n up to 12
    for (int n = 8; n <= 12; n += 2)
        for (const auto& p : partitions_of(n)) {
            const auto c = classify_shape(p);
            if (c == ShapeClass::TwoLayerHook || (c == ShapeClass::NearHook && is_symmetric(p)))
                CHECK(dimension_bound_check(p));
        }
}

TEST_CASE("partition text forms") {
    CHECK(parse_partition("5,3,3,2,1,1") == Partition{5, 3, 3, 2, 1, 1});
    CHECK(parse_partition("4,2^2,1^2") == Partition{4, 2, 2, 1, 1});
    CHECK(parse_partition("3^1,1^0") == Partition{3});
    CHECK(Partition{4, 2, 2, 1, 1}.str() == "4,2,2,1,1");
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    for (const auto& p : partitions_of(9)) CHECK(parse_partition(p.str()) == p);
}

TEST_CASE("partition generation") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(12).size() == 77);
    CHECK(partitions_of(6).front() == Partition{6});
    CHECK(partitions_of(6).back() == Partition{1, 1, 1, 1, 1, 1});
}
