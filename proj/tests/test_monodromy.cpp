#include <doctest.h>

#include <l2hodge/error.hpp>
#include <l2hodge/monodromy.hpp>

#include "test_support.hpp"

using namespace l2hodge;
using namespace l2hodge::testing;

namespace {

const MonodromyClass& expect_class(const ClassifyResult& r) {
    REQUIRE(std::holds_alternative<MonodromyClass>(r));
    return std::get<MonodromyClass>(r);
}

const ClassificationError& expect_error(const ClassifyResult& r) {
    REQUIRE(std::holds_alternative<ClassificationError>(r));
    return std::get<ClassificationError>(r);
}

} // namespace

TEST_CASE("classify: weight-3 normal forms") {
    const auto mum = expect_class(classify(unipotent_block(4), 3));
    CHECK(mum.kind == MonodromyKind::type_iii);
    CHECK(mum.semisimple_order == 1);
    CHECK(mum.unipotent_blocks == std::vector<int>{4});

    const auto quintic_inf = expect_class(classify(companion_of_cyclotomic(5), 3));
    CHECK(quintic_inf.kind == MonodromyKind::type_iv);
    CHECK(quintic_inf.semisimple_order == 5);

    const Matrix mixed(4, {Rational(1), Rational(0), Rational(0), Rational(0),  //
                           Rational(0), Rational(1), Rational(0), Rational(0),  //
                           Rational(0), Rational(0), Rational(-1), Rational(0), //
                           Rational(0), Rational(0), Rational(0), Rational(-1)});
    CHECK(expect_error(classify(mixed, 3)).reason == ClassificationError::Reason::mixed_case);

    CHECK(expect_error(classify(excluded_form(3), 3)).reason ==
          ClassificationError::Reason::excluded_by_polarization);
}

TEST_CASE("classify: weight-2 exclusion") {
    CHECK(expect_class(classify(unipotent_block(3), 2)).kind == MonodromyKind::type_i);
    CHECK(expect_error(classify(excluded_form(2), 2)).reason ==
          ClassificationError::Reason::excluded_by_polarization);
}

TEST_CASE("classify: trivial and malformed inputs") {
    CHECK(expect_class(classify(Matrix::identity(4), 3)).kind == MonodromyKind::trivial);
    CHECK(expect_error(classify(Matrix(2, {Rational(2), Rational(0), Rational(0), Rational(1)}), 1))
              .reason == ClassificationError::Reason::not_quasi_unipotent);
    CHECK_THROWS_AS(classify(Matrix::identity(3), 3), Error);  // size != weight+1
    CHECK_THROWS_AS(classify(Matrix(4), 3), Error);            // singular
    CHECK_THROWS_AS(classify(Matrix::identity(4), 4), Error);  // weight out of range
}

TEST_CASE("power_and_classify") {
    const Matrix phi5 = companion_of_cyclotomic(5);
    CHECK(expect_class(power_and_classify(phi5, 5, 3)).kind == MonodromyKind::trivial);

    const Matrix minus_j = neg_unipotent_block(4);
    CHECK(expect_class(power_and_classify(minus_j, 2, 3)).kind == MonodromyKind::type_iii);
    CHECK(expect_class(classify(minus_j, 3)).kind == MonodromyKind::type_iv);

    const Matrix pair = Matrix::companion(cyclotomic(3) * cyclotomic(3));
    const auto cubed = expect_class(power_and_classify(pair, 3, 3));
    CHECK(cubed.kind == MonodromyKind::type_ii);
    CHECK(cubed.unipotent_blocks == std::vector<int>{2, 2});
    CHECK(expect_class(power_and_classify(pair, 2, 3)).kind == MonodromyKind::type_iv);
}

TEST_CASE("classification is conjugation invariant") {
    Rng rng(20240813);
    for (int weight = 1; weight <= 3; ++weight) {
        for (const auto& form : normal_forms(weight)) {
            const auto reference = expect_class(classify(form.matrix, weight));
            CHECK(reference.kind == form.kind);
            for (int trial = 0; trial < 5; ++trial) {
                const auto conjugated =
                    expect_class(classify(rand_conjugate(rng, form.matrix), weight));
                CHECK(conjugated.kind == reference.kind);
                CHECK(conjugated.semisimple_order == reference.semisimple_order);
                CHECK(conjugated.unipotent_blocks == reference.unipotent_blocks);
            }
        }
    }
}

TEST_CASE("unipotent powers never change the type") {
    Rng rng(5);
    for (int weight = 1; weight <= 3; ++weight) {
        for (const auto& form : normal_forms(weight)) {
            const auto base = expect_class(classify(form.matrix, weight));
            if (base.semisimple_order != 1) continue;  // unipotent forms only
            for (long e = 1; e <= 4; ++e) {
                const auto powered = expect_class(power_and_classify(form.matrix, e, weight));
                CHECK(powered.kind == base.kind);
            }
        }
    }
}

TEST_CASE("classify never returns type III or IV outside weight 3") {
    Rng rng(11);
    for (int weight = 1; weight <= 2; ++weight) {
        for (const auto& form : normal_forms(weight)) {
            for (int trial = 0; trial < 3; ++trial) {
                const auto verdict = classify(rand_conjugate(rng, form.matrix), weight);
                if (const auto* cls = std::get_if<MonodromyClass>(&verdict)) {
                    CHECK(cls->kind != MonodromyKind::type_iii);
                    CHECK(cls->kind != MonodromyKind::type_iv);
                }
            }
        }
    }
}

TEST_CASE("random invertible integer matrices always classify to one verdict") {
    Rng rng(20240814);
    for (int weight = 1; weight <= 3; ++weight) {
        for (int trial = 0; trial < 30; ++trial) {
            const Matrix m = rand_invertible(rng, weight + 1);
            CHECK_NOTHROW((void)classify(m, weight));
        }
    }
}
