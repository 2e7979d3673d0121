#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "rslocal/errors.hpp"
#include "rslocal/partition.hpp"
#include "rslocal/schur.hpp"
#include "test_support.hpp"

using namespace rslocal;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

// Exhaustive enumeration oracle: every weakly decreasing tuple as a sorted
// set, independent of the production order.
std::set<std::vector<unsigned>> brute_partitions(unsigned max_weight, unsigned max_length) {
    std::set<std::vector<unsigned>> out;
    std::vector<unsigned> acc;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
        if (acc.size() <= max_length) out.insert(acc);
        if (acc.size() == max_length) return;
        for (unsigned next = std::min(remaining, cap); next >= 1; --next) {
            acc.push_back(next);
            rec(remaining - next, next);
            acc.pop_back();
        }
    };
    for (unsigned w = 0; w <= max_weight; ++w) rec(w, w);
    return out;
}

// Monomial-enumeration oracle for h_k with small non-negative exponents.
CycScalar brute_h(unsigned k, std::span<const CycScalar> params) {
    CycScalar total;
    std::function<void(std::size_t, unsigned, CycScalar)> rec =
        [&](std::size_t i, unsigned left, CycScalar prod) {
            if (i == params.size()) {
                if (left == 0) total += prod;
                return;
            }
            CycScalar p = prod;
            for (unsigned e = 0; e <= left; ++e) {
                rec(i + 1, left - e, p);
                p *= params[i];
            }
        };
    rec(0, k, CycScalar(1L));
    return total;
}

}  // namespace

TEST_CASE("partition canonical form") {
    CHECK(P({3, 1, 0, 0}) == P({3, 1}));
    CHECK(P({}).weight() == 0);
    CHECK(P({2, 2, 1}).weight() == 5);
    CHECK(P({2, 2, 1}).length() == 3);
    CHECK(P({4, 2}).part(1) == 4);
    CHECK(P({4, 2}).part(5) == 0);
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK(P({2, 1}).to_string() == "(2,1)");
}

TEST_CASE("partitions_upto: documented order and exact membership") {
    CHECK(partitions_upto(0, 5) == std::vector<Partition>{P({})});
    CHECK(partitions_upto(2, 1) == std::vector<Partition>{P({}), P({1}), P({2})});
    CHECK(partitions_upto(3, 2) ==
          std::vector<Partition>{P({}), P({1}), P({2}), P({1, 1}), P({3}), P({2, 1})});

    const auto produced = partitions_upto(6, 3);
    const auto expected = brute_partitions(6, 3);
    CHECK(produced.size() == expected.size());
    std::set<std::vector<unsigned>> seen;
    for (const Partition& lam : produced) CHECK(seen.insert(lam.parts()).second);
    CHECK(seen == expected);
}

TEST_CASE("complete_homogeneous") {
    const std::vector<CycScalar> empty;
    CHECK(complete_homogeneous(0, empty).is_one());
    const std::vector<CycScalar> one_two{CycScalar(1L), CycScalar(2L)};
    CHECK(complete_homogeneous(0, one_two).is_one());
    CHECK(complete_homogeneous(2, one_two) == CycScalar(7L));  // 1 + 2 + 4
    const std::vector<CycScalar> five{CycScalar(5L)};
    CHECK(complete_homogeneous(3, five) == CycScalar(125L));

    testsupport::Values vals(41);
    for (int i = 0; i < 10; ++i) {
        const auto params = vals.tuple(1 + vals.below(3));
        const unsigned k = static_cast<unsigned>(vals.below(5));
        CHECK(complete_homogeneous(k, params) == brute_h(k, params));
    }
}

TEST_CASE("schur_eval basics") {
    const std::vector<CycScalar> params{CycScalar(1L), CycScalar(2L)};
    CHECK(schur_eval(P({}), params).is_one());
    CHECK(schur_eval(P({1}), params) == CycScalar(3L));
    CHECK(schur_eval(P({2, 1}), params) == CycScalar(6L));  // a^2 b + a b^2 at (1,2)
    CHECK(schur_eval(P({1, 1, 1}), params).is_zero());      // length > #params
}

TEST_CASE("schur_eval_tableaux examples and refusal") {
    const std::vector<CycScalar> p123{CycScalar(1L), CycScalar(2L), CycScalar(3L)};
    CHECK(schur_eval_tableaux(P({1, 1}), p123) == CycScalar(11L));  // e_2 = 2+3+6
    const std::vector<CycScalar> p11{CycScalar(1L), CycScalar(1L)};
    CHECK(schur_eval_tableaux(P({2}), p11) == CycScalar(3L));  // tableaux 11, 12, 22
    const std::vector<CycScalar> p12{CycScalar(1L), CycScalar(2L)};
    CHECK(schur_eval_tableaux(P({1, 1, 1}), p12).is_zero());

    CHECK_THROWS_WITH_AS(schur_eval_tableaux(P({13}), p123, 12),
                         doctest::Contains("bound 12"), UnsupportedDomainError);
}

TEST_CASE("oracle equivalence: Jacobi-Trudi vs tableaux") {
    testsupport::Values vals(43);
    const auto lambdas = partitions_upto(8, 8);
    for (int t = 0; t < 6; ++t) {
        const auto params = vals.tuple(1 + vals.below(4));
        for (const Partition& lam : lambdas)
            CHECK(schur_eval(lam, params) == schur_eval_tableaux(lam, params));
    }
}

TEST_CASE("schur vanishing exactly when length exceeds parameter count") {
    testsupport::Values vals(47);
    for (const Partition& lam : partitions_upto(8, 8)) {
        const auto params = vals.tuple(1 + vals.below(4), false);  // non-zero entries
        const bool vanish = schur_eval(lam, params).is_zero();
        CHECK(vanish == (lam.length() > params.size()));
    }
}

TEST_CASE("schur stability and homogeneity") {
    testsupport::Values vals(53);
    for (int t = 0; t < 12; ++t) {
        auto params = vals.tuple(1 + vals.below(4));
        const Partition lam = partitions_upto(6, 4)[vals.below(20)];
        const CycScalar base = schur_eval(lam, params);

        auto padded = params;
        padded.push_back(CycScalar());
        CHECK(schur_eval(lam, padded) == base);

        const CycScalar scale = vals.scalar(false);
        auto scaled = params;
        for (CycScalar& x : scaled) x *= scale;
        CHECK(schur_eval(lam, scaled) == scale.pow(lam.weight()) * base);
    }
}

TEST_CASE("SchurEvaluator caches h and matches the direct path") {
    testsupport::Values vals(59);
    const auto params = vals.tuple(3);
    const SchurEvaluator eval(params, 12);
    for (unsigned k = 0; k <= 12; ++k) CHECK(eval.h(k) == complete_homogeneous(k, params));
    for (const Partition& lam : partitions_upto(8, 3))
        CHECK(eval.schur(lam) == schur_eval(lam, params));
    CHECK_THROWS_AS(eval.h(13), std::out_of_range);
}
