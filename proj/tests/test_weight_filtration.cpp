#include <doctest.h>

#include <l2hodge/error.hpp>
#include <l2hodge/spectral.hpp>
#include <l2hodge/weight_filtration.hpp>

#include "test_support.hpp"

#include <algorithm>
#include <map>

using namespace l2hodge;
using namespace l2hodge::testing;

namespace {

// graded dimensions predicted from the Jordan shape: a size-s block carries
// weights s-1, s-3, ..., 1-s
std::vector<long> oracle_graded_dims(const std::vector<int>& sizes) {
    const int m = *std::max_element(sizes.begin(), sizes.end()) - 1;
    std::vector<long> dims(static_cast<std::size_t>(2 * m + 1), 0);
    for (int s : sizes)
        for (int w = s - 1; w >= 1 - s; w -= 2) ++dims[static_cast<std::size_t>(w + m)];
    return dims;
}

void check_filtration_invariants(const Matrix& n, const WeightFiltration& w) {
    // chain of containments, exercised via ranks of stacked bases
    for (int k = -w.m; k <= w.m; ++k) {
        CHECK(rank_of_rows(span_union(w.level(k - 1), w.level(k))) == w.level_dim(k));
        for (const auto& v : w.level(k - 1)) CHECK(in_span(w.level(k), v));
    }
    CHECK(w.level_dim(w.m) == w.dim);

    // N(W_k) <= W_{k-2}
    for (int k = -w.m; k <= w.m; ++k) {
        for (const auto& v : w.level(k)) {
            const Vec image = n.apply(v);
            if (k - 2 >= -w.m) {
                CHECK(in_span(w.level(k - 2), image));
            } else {
                bool zero = true;
                for (const auto& x : image) zero = zero && x == 0;
                CHECK(zero);
            }
        }
    }

    // N^k : Gr_k -> Gr_{-k} is an isomorphism
    const auto gr = w.graded_dims();
    for (int k = 1; k <= w.m; ++k) {
        CHECK(gr[static_cast<std::size_t>(k + w.m)] == gr[static_cast<std::size_t>(-k + w.m)]);
        const Matrix nk = n.pow(k);
        std::vector<Vec> image_rows = w.level(-k - 1);
        for (const auto& v : w.level(k)) image_rows.push_back(nk.apply(v));
        CHECK(rank_of_rows(image_rows) == w.level_dim(-k));
    }
}

} // namespace

TEST_CASE("nilpotent_log") {
    CHECK(nilpotent_log(Matrix::identity(3)).is_zero());
    CHECK(nilpotent_log(unipotent_block(2)) == nilpotent_block(2));

    const Matrix t = unipotent_block(3);
    const Matrix nmat = t - Matrix::identity(3);
    CHECK(nilpotent_log(t) == nmat - (nmat * nmat) * Rational(1, 2));
    CHECK(nilpotent_exp(nilpotent_log(t)) == t);

    CHECK_THROWS_AS(nilpotent_log(companion_of_cyclotomic(5)), Error);
}

TEST_CASE("log and exp invert each other on random unipotent conjugates") {
    Rng rng(20240815);
    for (int trial = 0; trial < 30; ++trial) {
        const std::vector<std::vector<int>> shapes = {{2}, {3}, {4}, {2, 2}, {3, 2}, {2, 1, 1}};
        const auto& shape = shapes[static_cast<std::size_t>(rand_int(rng, 0, 5))];
        Matrix n = nilpotent_from_shape(shape);
        const Matrix t =
            rand_conjugate(rng, n + Matrix::identity(n.n()));
        CHECK(nilpotent_exp(nilpotent_log(t)) == t);
    }
}

TEST_CASE("weight_filtration on basic shapes") {
    SUBCASE("zero operator") {
        const auto w = weight_filtration(Matrix(4));
        CHECK(w.m == 0);
        CHECK(w.level_dim(0) == 4);
        CHECK(w.graded_dims() == std::vector<long>{4});
    }
    SUBCASE("single 2-block") {
        const Matrix n = nilpotent_block(2);
        const auto w = weight_filtration(n);
        CHECK(w.m == 1);
        CHECK(w.level_dim(1) == 2);
        CHECK(w.level_dim(0) == 1);
        CHECK(w.level_dim(-1) == 1);
        CHECK(w.level(0) == w.level(-1));
        CHECK(w.level(0) == kernel_basis(n));
        CHECK(w.level(0) == image_basis(n));
    }
    SUBCASE("single 4-block") {
        const auto w = weight_filtration(nilpotent_block(4));
        CHECK(w.m == 3);
        CHECK(w.graded_dims() == std::vector<long>{1, 0, 1, 0, 1, 0, 1});
    }
    CHECK_THROWS_AS(weight_filtration(Matrix::identity(2)), Error);
}

TEST_CASE("weight_filtration satisfies its invariants on random conjugates") {
    Rng rng(20240816);
    const std::vector<std::vector<int>> shapes = {
        {1}, {2}, {3}, {4}, {5}, {6}, {2, 1}, {2, 2}, {3, 1}, {3, 2},
        {3, 3}, {4, 2}, {4, 1, 1}, {2, 2, 2}, {3, 2, 1}, {2, 2, 1, 1}};
    for (int trial = 0; trial < 40; ++trial) {
        const auto& shape = shapes[static_cast<std::size_t>(rand_int(rng, 0, 15))];
        const Matrix n = rand_conjugate(rng, nilpotent_from_shape(shape));
        const auto w = weight_filtration(n);
        CHECK(w.m == *std::max_element(shape.begin(), shape.end()) - 1);
        check_filtration_invariants(n, w);
        CHECK(w.graded_dims() == oracle_graded_dims(shape));
    }
}

TEST_CASE("twist_ledger per-type examples") {
    SUBCASE("weight 3, type III") {
        const auto t = twist_ledger_for(3, MonodromyKind::type_iii);
        CHECK(t.twist0 == std::vector<int>{0, 0, -1, -1});
        CHECK(t.twist1 == std::vector<int>{1, 0, 0, 0});
    }
    SUBCASE("weight 3, type IV") {
        const auto t = twist_ledger_for(3, MonodromyKind::type_iv);
        CHECK(t.twist0 == std::vector<int>{0, 0, 0, 0});
        CHECK(t.twist1 == std::vector<int>{1, 1, 1, 1});
    }
    SUBCASE("weight 2, type I") {
        const auto t = twist_ledger_for(2, MonodromyKind::type_i);
        CHECK(t.twist0 == std::vector<int>{0, 0, -1});
        CHECK(t.twist1 == std::vector<int>{1, 0, 0});
    }
    SUBCASE("weight 1, type II") {
        const auto t = twist_ledger_for(1, MonodromyKind::type_ii);
        CHECK(t.twist0 == std::vector<int>{0, 0});
        CHECK(t.twist1 == std::vector<int>{1, 1});
    }
    SUBCASE("trivial points carry no twists") {
        const auto t = twist_ledger_for(3, MonodromyKind::trivial);
        CHECK(t.twist0 == std::vector<int>{0, 0, 0, 0});
        CHECK(t.twist1 == std::vector<int>{0, 0, 0, 0});
    }
}

TEST_CASE("twist_ledger rejects types that do not exist for the weight") {
    CHECK_THROWS_AS(twist_ledger_for(1, MonodromyKind::type_iii), Error);
    CHECK_THROWS_AS(twist_ledger_for(2, MonodromyKind::type_iv), Error);
    CHECK_THROWS_AS(twist_ledger_for(2, MonodromyKind::type_iii), Error);
}

TEST_CASE("twist_ledger accepts a classified monodromy") {
    const auto cls = std::get<MonodromyClass>(classify(unipotent_block(4), 3));
    const auto t = twist_ledger(cls);
    CHECK(t.weight == 3);
    CHECK(t.twist0 == std::vector<int>{0, 0, -1, -1});
}
