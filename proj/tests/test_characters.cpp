#include <catch2/catch_amalgamated.hpp>

#include "ekr/characters.hpp"

using namespace ekr;

TEST_CASE("quadratic number arithmetic") {
    const QuadraticNumber a = QuadraticNumber::with_radicand(Rat(1, 2), Rat(1, 2), 5);
    const QuadraticNumber b = QuadraticNumber::with_radicand(Rat(1, 2), Rat(-1, 2), 5);
    CHECK((a + b) == QuadraticNumber(Rat(1)));
    CHECK((a * b) == QuadraticNumber(Rat(-1)));  // (1/4) - (5/4)
    CHECK(a.galois_conjugate() == b);
    CHECK((a - a).is_zero());
    // square radicands collapse to rationals
    CHECK(QuadraticNumber::with_radicand(Rat(0), Rat(1), 9) == QuadraticNumber(Rat(3)));
    CHECK(QuadraticNumber::with_radicand(Rat(1), Rat(2), 12) ==
          QuadraticNumber::with_radicand(Rat(1), Rat(4), 3));
    // imaginary radicand: complex conjugation flips, Galois always flips
    const QuadraticNumber c = QuadraticNumber::with_radicand(Rat(-1, 2), Rat(1, 2), -7);
    CHECK(c.complex_conjugate() != c);
    CHECK(c.complex_conjugate() == c.galois_conjugate());
    CHECK(a.complex_conjugate() == a);
    // (a + b sqrt(d))(a - b sqrt(d)) rational also for d < 0
    CHECK((c * c.complex_conjugate()) == QuadraticNumber(Rat(2)));  // 1/4 + 7/4
    CHECK_THROWS_AS(a + c, radical_mismatch);
    CHECK_THROWS_AS(a * c, radical_mismatch);
    CHECK((a * a.inverse()) == QuadraticNumber(Rat(1)));
}

TEST_CASE("radical sums separate independent radicals") {
    RadicalSum s;
    s.add(QuadraticNumber::with_radicand(Rat(1), Rat(2), 5));
    s.add(QuadraticNumber::with_radicand(Rat(1), Rat(3), -7));
    s.add(QuadraticNumber::with_radicand(Rat(0), Rat(-2), 5));
    CHECK_FALSE(s.is_rational());
    s.add(QuadraticNumber::with_radicand(Rat(0), Rat(-3), -7));
    CHECK(s.is_rational());
    CHECK(s.equals_rational(Rat(2)));
}

TEST_CASE("Murnaghan-Nakayama basics") {
    CHECK(mn_character(Partition{3, 2}, Partition{2, 2, 1}) == 1);
    CHECK(mn_character(Partition{3, 3}, Partition{3, 3}) == 2);
    CHECK(mn_character(Partition{4, 4, 2, 2}, Partition{6, 6}) == 2);
    CHECK(mn_character(Partition{3, 3, 2, 2}, Partition{5, 5}) == 2);
    CHECK(mn_character(Partition{}, Partition{}) == 1);
    CHECK_THROWS_AS(mn_character(Partition{3, 1}, Partition{5}), std::invalid_argument);
}

TEST_CASE("n-cycle corollary: hooks give signs, everything else vanishes") {
    for (int n = 2; n <= 9; ++n) {
        const Partition ncycle{n};
        for (const auto& lam : partitions_of(n)) {
            const Int v = mn_character(lam, ncycle);
            if (classify_shape(lam) == ShapeClass::Hook) {
                const int exp = (n - lam[0]) % 2 == 0 ? 1 : -1;
                CHECK(v == exp);
            } else {
                CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("character degree equals Specht dimension") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const Partition idtype{ones};
        for (const auto& lam : partitions_of(n)) CHECK(mn_character(lam, idtype) == specht_dimension(lam));
    }
}

TEST_CASE("conjugate twist: value flips by the class sign") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& type : partitions_of(n)) {
                const CycleType t{type};
                const Int lhs = mn_character(conjugate(lam), type);
                const Int rhs = mn_character(lam, type);
                CHECK(lhs == (t.sign() == 1 ? rhs : -rhs));
            }
}

TEST_CASE("two disjoint half-cycles stay within {0,+-1,+-2}") {
    for (int n = 6; n <= 12; n += 2)
        for (const auto& lam : partitions_of(n)) {
            const Int v = mn_character(lam, Partition{n / 2, n / 2});
            CHECK(v >= -2);
            CHECK(v <= 2);
        }
}

TEST_CASE("Alt(5) character table") {
    const CharacterTable t = alt_character_table(5);
    REQUIRE(t.rows.size() == 5);
    std::multiset<std::string> dims;
    for (const auto& r : t.rows) dims.insert(alt_character_dimension(r).str());
    CHECK(dims == std::multiset<std::string>{"1", "3", "3", "4", "5"});
    CHECK(check_row_orthogonality(t));
    CHECK(check_column_orthogonality(t));

    // split values on the pair of 5-cycle classes: (1 +- sqrt(5))/2
    const AltCharLabel plus = AltCharLabel::split_plus(Partition{3, 1, 1});
    std::size_t prime_col = 0, dbl_col = 0;
    for (std::size_t c = 0; c < t.cols.size(); ++c) {
        if (t.cols[c].split_tag == SplitTag::Prime) prime_col = c;
        if (t.cols[c].split_tag == SplitTag::DoublePrime) dbl_col = c;
    }
    std::size_t plus_row = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (t.rows[r] == plus) plus_row = r;
    CHECK(t.at(plus_row, prime_col) == QuadraticNumber::with_radicand(Rat(1, 2), Rat(1, 2), 5));
    CHECK(t.at(plus_row, dbl_col) == QuadraticNumber::with_radicand(Rat(1, 2), Rat(-1, 2), 5));
}

TEST_CASE("table shapes and orthogonality for n up to 8") {
    for (int n = 3; n <= 8; ++n) {
        const CharacterTable t = alt_character_table(n);
        CHECK(t.rows.size() == t.cols.size());
        Int dimsq = 0;
        for (const auto& r : t.rows) {
            const Int d = alt_character_dimension(r);
            dimsq += d * d;
        }
        CHECK(dimsq == factorial(n) / 2);
        CHECK(check_row_orthogonality(t));
        CHECK(check_column_orthogonality(t));
        // regular character: sum over rows of dim * chi vanishes off identity
        for (std::size_t c = 0; c < t.cols.size(); ++c) {
            RadicalSum acc;
            for (std::size_t r = 0; r < t.rows.size(); ++r)
                acc.add(t.at(r, c) * QuadraticNumber(Rat(alt_character_dimension(t.rows[r]))));
            if (t.cols[c].is_identity()) CHECK(acc.equals_rational(Rat(factorial(n) / 2)));
            else CHECK(acc.equals_rational(Rat(0)));
        }
        // one split pair of rows per symmetric partition
        int split_rows = 0, sym_parts = 0;
        for (const auto& r : t.rows)
            if (r.kind != AltCharKind::Restricted) ++split_rows;
        for (const auto& p : partitions_of(n))
            if (is_symmetric(p)) ++sym_parts;
        CHECK(split_rows == 2 * sym_parts);
    }
}

TEST_CASE("restricted values copy the Sym character on split pairs") {
    const CharacterTable t = alt_character_table(5);
    const AltCharLabel std_char = AltCharLabel::restricted(Partition{4, 1});
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (!(t.rows[r] == std_char)) continue;
        for (std::size_t c = 0; c < t.cols.size(); ++c)
            if (t.cols[c].split_tag != SplitTag::NonSplit)
                CHECK(t.at(r, c) == QuadraticNumber(Rat(-1)));
    }
}

TEST_CASE("Galois conjugation permutes the split rows") {
    for (int n = 5; n <= 8; ++n) {
        const CharacterTable t = alt_character_table(n);
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            if (t.rows[r].kind == AltCharKind::Restricted) continue;
            const AltCharLabel twin{t.rows[r].kind == AltCharKind::SplitPlus ? AltCharKind::SplitMinus
                                                                             : AltCharKind::SplitPlus,
                                    t.rows[r].lambda};
            std::size_t tr = 0;
            for (std::size_t q = 0; q < t.rows.size(); ++q)
                if (t.rows[q] == twin) tr = q;
            for (std::size_t c = 0; c < t.cols.size(); ++c)
                CHECK(t.at(r, c).galois_conjugate() == t.at(tr, c));
        }
    }
}

TEST_CASE("split values are conjugate roots of a rational quadratic") {
    for (int n = 3; n <= 12; ++n) {
        for (const auto& cls : conjugacy_classes(n, GroupKind::Alt)) {
            if (cls.split_tag != SplitTag::Prime) continue;
            const Partition lam = split_class_partition(cls.cycle_type);
            const AltCharLabel plus = AltCharLabel::split_plus(lam);
            const QuadraticNumber x = alt_character_value(plus, cls);
            // y is the value of the same character on the twin class
            ConjugacyClass twin = cls;
            twin.split_tag = SplitTag::DoublePrime;
            const QuadraticNumber y = alt_character_value(plus, twin);
            const QuadraticNumber sum = x + y, prod = x * y;
            CHECK(sum.is_rational());
            CHECK(prod.is_rational());
            const int m = cls.cycle_type.m();
            CHECK(sum == QuadraticNumber(Rat(m % 2 == 0 ? 1 : -1)));
            // x y = (1 - (-1)^m q_1...q_r)/4
            Int qprod = 1;
            for (int q : cls.cycle_type.lengths.parts()) qprod *= q;
            const Rat discr = Rat(m % 2 == 0 ? qprod : -qprod);
            CHECK(prod == QuadraticNumber((Rat(1) - discr) / 4));
        }
    }
}

TEST_CASE("character sums over sets") {
    const auto classes = conjugacy_classes(5, GroupKind::Alt);
    std::vector<Permutation> set = {Permutation::identity(5), parse_cycles("(1 2 3 4 5)", 5),
                                    parse_cycles("(1 2)(3 4)", 5)};
    CHECK(character_sum_over_set(AltCharLabel::restricted(Partition{5}), set, classes) ==
          QuadraticNumber(Rat(3)));
    std::vector<Permutation> just_id = {Permutation::identity(5)};
    CHECK(character_sum_over_set(AltCharLabel::split_plus(Partition{3, 1, 1}), just_id, classes) ==
          QuadraticNumber(Rat(3)));
}

TEST_CASE("two-layer scan finds no violations") {
    for (int n : {8, 10}) {
        const auto rep = two_layer_minus_two_classification(n);
        CHECK(rep.pass());
        CHECK(rep.rows.size() == partitions_of(n).size());
        for (const auto& row : rep.rows)
            if (row.lambda == Partition{n / 2, n / 2}) CHECK(row.value == 2);
    }
    CHECK_THROWS_AS(two_layer_minus_two_classification(7), std::invalid_argument);
}
