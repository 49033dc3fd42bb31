#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sympspec/errors.hpp"
#include "sympspec/operator_models.hpp"
#include "test_support.hpp"

using namespace sympspec;

TEST_CASE("diagonal truncation evaluates the formula at k = 1..n") {
    const auto spec = make_diagonal("1/n");
    const DenseMatrix t = truncate_h(spec, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(t(i, i) == doctest::Approx(1.0 / double(i + 1)));
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(t(i, j) == 0.0);
    }
    CHECK(is_diagonal(*spec));
    CHECK(diagonal_entry(*spec, 10) == doctest::Approx(0.1));
}

TEST_CASE("diagonal rejects formulas that blow up on some index") {
    CHECK_THROWS_AS(truncate_h(make_diagonal("1/(n-2)"), 4), SpecError);
}

TEST_CASE("toeplitz truncation is banded and symmetric") {
    const auto spec = make_toeplitz({2.0, 0.5});
    const DenseMatrix t = truncate_h(spec, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const std::size_t d = i > j ? i - j : j - i;
            const double expected = d == 0 ? 2.0 : (d == 1 ? 0.5 : 0.0);
            CHECK(t(i, j) == expected);
        }
    CHECK_THROWS_AS(make_toeplitz({}), SpecError);
}

TEST_CASE("block2x2 direct sum truncation") {
    // a_k = 1/2 for all k, b_k = sqrt(3)/2
    const auto spec = make_block2x2("1/2");
    const DenseMatrix t = truncate_h(spec, 4);
    const double b = std::sqrt(3.0) / 2.0;
    CHECK(t(0, 0) == doctest::Approx(0.5));
    CHECK(t(0, 1) == doctest::Approx(b));
    CHECK(t(1, 0) == doctest::Approx(b));
    CHECK(t(1, 1) == doctest::Approx(-0.5));
    CHECK(t(2, 2) == doctest::Approx(0.5));
    CHECK(t(0, 2) == 0.0);
    // odd n cuts the final block in half
    const DenseMatrix odd = truncate_h(spec, 3);
    CHECK(odd(2, 2) == doctest::Approx(0.5));
    CHECK(asymmetry(odd) == 0.0);
}

TEST_CASE("block2x2 requires a_k in (0,1)") {
    CHECK_THROWS_AS(truncate_h(make_block2x2("1"), 2), SpecError);
    CHECK_THROWS_AS(truncate_h(make_block2x2("n"), 4), SpecError);
    CHECK_THROWS_AS(truncate_h(make_block2x2("-1/2"), 2), SpecError);
}

TEST_CASE("matrix direct sum tiles the block") {
    const auto spec = make_matrix_direct_sum(DenseMatrix(2, 2, {1, 2, 2, 1}));
    const DenseMatrix t = truncate_h(spec, 5);
    CHECK(t(0, 1) == 2.0);
    CHECK(t(2, 3) == 2.0);
    CHECK(t(3, 2) == 2.0);
    CHECK(t(1, 2) == 0.0);
    CHECK(t(4, 4) == 1.0); // truncated mid-block
    CHECK_THROWS_AS(make_matrix_direct_sum(DenseMatrix(2, 3)), SpecError);
}

TEST_CASE("scaled, sum, product composites") {
    const auto a = make_toeplitz({2.0, 0.5});
    const auto b = make_diagonal("n");
    CHECK(truncate_h(make_scaled(3.0, a), 3)(0, 0) == 6.0);
    const DenseMatrix s = truncate_h(make_sum(a, b), 3);
    CHECK(s(1, 1) == 4.0);
    CHECK(s(0, 1) == 0.5);
    // product of commuting diagonals is the entrywise product
    const DenseMatrix p = truncate_h(make_product(b, b), 3);
    CHECK(p(2, 2) == 9.0);
    CHECK(asymmetry(truncate_h(make_product(a, b), 4)) == 0.0);
}

TEST_CASE("truncation schedule validation") {
    CHECK_THROWS_AS(TruncationSchedule::make({}), SpecError);
    CHECK_THROWS_AS(TruncationSchedule::make({5, 5}), SpecError);
    CHECK_THROWS_AS(TruncationSchedule::make({10, 5}), SpecError);
    CHECK_THROWS_AS(TruncationSchedule::make({0, 5}), SpecError);
    CHECK_THROWS_AS(TruncationSchedule::make({5, 5000}), SpecError);
    CHECK(TruncationSchedule::make({5, 10}).ns.size() == 2);
    CHECK_THROWS_AS(truncate_h(make_diagonal("n"), 0), SpecError);
}

TEST_CASE("class A truncation layout") {
    const auto hh = make_class_a(make_toeplitz({2.0, 0.5}), make_toeplitz({2.0, -0.5}));
    const DenseMatrix t = truncate_hh(hh, 3);
    REQUIRE(t.rows() == 6);
    CHECK(t(0, 1) == 0.5);
    CHECK(t(3, 4) == -0.5);
    CHECK(t(0, 3) == 0.0);
    CHECK(asymmetry(t) == 0.0);
}

TEST_CASE("class B truncation layout") {
    const auto hh = make_class_b(make_diagonal("n"), make_diagonal("1/2"));
    const DenseMatrix t = truncate_hh(hh, 2);
    REQUIRE(t.rows() == 4);
    CHECK(t(0, 0) == 1.0);
    CHECK(t(1, 1) == 2.0);
    CHECK(t(0, 2) == 0.5);
    CHECK(t(2, 0) == 0.5);
    CHECK(t(2, 2) == 1.0);
}

TEST_CASE("doubled and explicit kinds") {
    const DenseMatrix t = truncate_hh(make_doubled(make_diagonal("n")), 2);
    CHECK(t(0, 0) == 1.0);
    CHECK(t(2, 2) == 1.0);
    CHECK(t(3, 3) == 2.0);

    const DenseMatrix stored(2, 2, {3, 1, 1, 3});
    CHECK(truncate_hh(make_explicit(stored), 1) == stored);
    CHECK_THROWS_AS(truncate_hh(make_explicit(stored), 2), SpecError);
    CHECK_THROWS_AS(make_explicit(DenseMatrix(3, 3)), SpecError);
}

TEST_CASE("class A rejects non-commuting or non-SPD blocks") {
    // blocks with non-commuting truncations
    const auto bad = make_class_a(make_toeplitz({2.0, 0.5}), make_diagonal("n"));
    CHECK_THROWS_AS(truncate_hh(bad, 4), SpecError);
    // same spec with the override only warns
    const auto eased = make_class_a(make_toeplitz({2.0, 0.5}), make_diagonal("n"), true);
    CHECK_NOTHROW(truncate_hh(eased, 4));
    // non-SPD block
    const auto indef = make_class_a(make_diagonal("n-2"), make_diagonal("n"));
    CHECK_THROWS_AS(truncate_hh(indef, 3), SpecError);
}

TEST_CASE("class B requires A+B and A-B to be SPD") {
    // A = diag(n), B = diag(n): A-B = 0 is not positive definite
    const auto bad = make_class_b(make_diagonal("n"), make_diagonal("n"));
    CHECK_THROWS_AS(truncate_hh(bad, 2), SpecError);
}

TEST_CASE("toeplitz symbol range") {
    const auto [lo1, hi1] = symbol_range(ToeplitzSpec{{2.0, 0.5}}, 4096);
    CHECK(lo1 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(hi1 == doctest::Approx(3.0).epsilon(1e-6));
    // symbol 11 + 12 cos t + 2 cos 2t has range [1, 25]
    const auto [lo2, hi2] = symbol_range(ToeplitzSpec{{11.0, 6.0, 1.0}}, 4096);
    CHECK(lo2 == doctest::Approx(1.0).epsilon(1e-5));
    // the grid does not hit t = 0 exactly, so the max is a hair below 25
    CHECK(hi2 == doctest::Approx(25.0).epsilon(1e-6));
    CHECK_THROWS_AS(symbol_range(ToeplitzSpec{{1.0}}, 10), SpecError);
}

TEST_CASE("json spec loading round trips the models") {
    const auto hh = load_hh_spec_json(R"json({
        "space": "HH", "kind": "class_b",
        "a": {"kind": "diagonal", "entry_formula": "1 + 1/(2*(n+1)^2) + 1/(2*(n+1)^3)"},
        "b": {"kind": "diagonal", "entry_formula": "1/(2*(n+1)^2) - 1/(2*(n+1)^3)"}
    })json");
    CHECK(hh.kind == HHOperatorSpec::Kind::ClassB);
    CHECK(is_diagonal(*hh.a));
    CHECK(diagonal_entry(*hh.a, 1) == doctest::Approx(1.1875));

    const auto h = load_h_spec_json(R"({"space": "H", "kind": "toeplitz", "coeffs": [2.0, 0.5]})");
    CHECK(truncate_h(h, 2)(0, 1) == 0.5);

    const auto stored = load_hh_spec_json(R"({"kind": "explicit", "block": [[2, 0], [0, 2]]})");
    CHECK(truncate_hh(stored, 1)(0, 0) == 2.0);
}

TEST_CASE("json spec validation errors") {
    CHECK_THROWS_AS(load_hh_spec_json("{not json"), SpecError);
    CHECK_THROWS_AS(load_hh_spec_json(R"({"kind": "mystery"})"), SpecError);
    CHECK_THROWS_AS(load_hh_spec_json(R"({"kind": "class_a", "a": {"kind": "diagonal",
        "entry_formula": "1"}})"),
                    SpecError); // missing b
    CHECK_THROWS_AS(load_hh_spec_json(R"({"kind": "doubled", "a": {"kind": "diagonal",
        "entry_formula": "1"}, "extra": 1})"),
                    SpecError); // unknown key
    CHECK_THROWS_AS(load_hh_spec_json(R"({"space": "H", "kind": "doubled",
        "a": {"kind": "diagonal", "entry_formula": "1"}})"),
                    SpecError); // wrong space
    CHECK_THROWS_AS(load_h_spec_json(R"({"kind": "explicit", "block": [[1]]})"), SpecError);
    CHECK_THROWS_AS(load_hh_spec_json(R"({"kind": "explicit", "block": [[1, 2], [3]]})"),
                    SpecError); // ragged
}
