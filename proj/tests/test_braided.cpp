#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidsym/braided.hpp"
#include "oracles.hpp"

using namespace braidsym;

namespace {
const Scalars<RatFunc> QQ{};
const Scalars<Rational> SP{Rational(7, 5)};

Decomposition decomp_of(std::vector<std::pair<long, long>> comps) {
    Decomposition d;
    d.components = std::move(comps);
    return d;
}
} // namespace

TEST_CASE("braiding operator") {
    SUBCASE("l = 0: identity on a line") {
        auto s = build_sigma<RatFunc>(0, QQ);
        CHECK(s.matrix() == Matrix<RatFunc>::identity(1));
        CHECK(s.plus_subspace().dim() == 1);
        CHECK(s.minus_subspace().dim() == 0);
    }

    SUBCASE("l = 1: V2 plus V0") {
        auto s = build_sigma<RatFunc>(1, QQ);
        CHECK(s.plus_decomposition() == decomp_of({{2, 1}}));
        CHECK(s.minus_decomposition() == decomp_of({{0, 1}}));
        CHECK(s.plus_subspace().dim() == 3);
        CHECK(s.minus_subspace().dim() == 1);
    }

    SUBCASE("l = 3: plus V6+V2 (dim 10), minus V4+V0 (dim 6)") {
        auto s = build_sigma<RatFunc>(3, QQ);
        CHECK(s.plus_decomposition() == decomp_of({{6, 1}, {2, 1}}));
        CHECK(s.minus_decomposition() == decomp_of({{4, 1}, {0, 1}}));
        CHECK(s.plus_subspace().dim() == 10);
        CHECK(s.minus_subspace().dim() == 6);
    }

    SUBCASE("involution and equivariance, exact, l <= 6") {
        for (long l = 0; l <= 6; ++l) {
            auto s = build_sigma<RatFunc>(l, QQ);
            auto id = Matrix<RatFunc>::identity(s.dim());
            CHECK(s.matrix() * s.matrix() == id);
            CHECK(s.matrix() * s.tensor_square().e_mat() == s.tensor_square().e_mat() * s.matrix());
            CHECK(s.matrix() * s.tensor_square().f_mat() == s.tensor_square().f_mat() * s.matrix());
        }
    }

    SUBCASE("eigenspace pattern for all l <= 6") {
        for (long l = 0; l <= 6; ++l) {
            auto s = build_sigma<RatFunc>(l, QQ);
            Decomposition plus, minus;
            for (long i = 0; 2 * l - 4 * i >= 0; ++i) plus.components.emplace_back(2 * l - 4 * i, 1);
            for (long i = 0; 2 * l - 2 - 4 * i >= 0; ++i) minus.components.emplace_back(2 * l - 2 - 4 * i, 1);
            CHECK(s.plus_decomposition() == plus);
            CHECK(s.minus_decomposition() == minus);
        }
    }
}

TEST_CASE("braided powers: pinned decompositions") {
    // degree 1 is V_l itself
    auto r = braided_power<RatFunc>(4, 1, PowerKind::Symmetric, QQ);
    CHECK(r.decomposition == decomp_of({{4, 1}}));

    r = braided_power<RatFunc>(3, 3, PowerKind::Symmetric, QQ);
    CHECK(r.decomposition == decomp_of({{9, 1}, {5, 1}}));
    CHECK(r.dim == 16);

    r = braided_power<RatFunc>(3, 3, PowerKind::Exterior, QQ);
    CHECK(r.dim == 0);
    CHECK(r.decomposition.empty());

    r = braided_power<RatFunc>(2, 4, PowerKind::Symmetric, QQ);
    CHECK(r.decomposition == decomp_of({{8, 1}, {4, 1}, {0, 1}}));
    CHECK(r.dim == 15);

    r = braided_power<RatFunc>(4, 3, PowerKind::Exterior, QQ);
    CHECK(r.decomposition == decomp_of({{2, 1}}));
    CHECK(r.dim == 3);

    SUBCASE("degree 2 agrees with the braiding eigenspaces") {
        for (long l = 0; l <= 4; ++l) {
            auto s = build_sigma<RatFunc>(l, QQ);
            auto sym2 = braided_power<RatFunc>(l, 2, PowerKind::Symmetric, QQ);
            auto ext2 = braided_power<RatFunc>(l, 2, PowerKind::Exterior, QQ);
            CHECK(sym2.decomposition == s.plus_decomposition());
            CHECK(ext2.decomposition == s.minus_decomposition());
        }
    }

    SUBCASE("tower level 2 spans the same space as the eigenspace") {
        PowerTower<RatFunc> t(3, PowerKind::Exterior, QQ);
        auto full = Subspace<RatFunc>::span(t.materialize(2));
        CHECK(full == build_sigma<RatFunc>(3, QQ).minus_subspace());
    }

    SUBCASE("top component V_{nl} has multiplicity exactly 1") {
        for (long l = 1; l <= 4; ++l) {
            PowerTower<RatFunc> t(l, PowerKind::Symmetric, QQ);
            for (long n = 2; n <= 4; ++n) CHECK(t.decomposition(n).multiplicity(n * l) == 1);
        }
    }
}

TEST_CASE("ideal components") {
    auto s2 = build_sigma<RatFunc>(2, QQ);
    SUBCASE("(l, 2, ext-square) is the exterior square itself") {
        auto i2 = ideal_component<RatFunc>(2, 2, s2.minus_subspace(), QQ);
        CHECK(i2.to_subspace() == s2.minus_subspace());
    }

    SUBCASE("(1, 3): complement of the 4-dimensional symmetric cube in 8") {
        auto s1 = build_sigma<RatFunc>(1, QQ);
        auto i3 = ideal_component<RatFunc>(1, 3, s1.minus_subspace(), QQ);
        CHECK(i3.dim() == 8 - 4);
    }

    SUBCASE("(3, 3): codimension 16 in the 64-dimensional cube") {
        auto s3 = build_sigma<RatFunc>(3, QQ);
        auto i3 = ideal_component<RatFunc>(3, 3, s3.minus_subspace(), QQ);
        CHECK(i3.dim() == 64 - 16);
    }

    SUBCASE("complement identity, both kinds, small range") {
        for (long l = 1; l <= 3; ++l) {
            auto s = build_sigma<RatFunc>(l, QQ);
            PowerTower<RatFunc> sym(l, PowerKind::Symmetric, QQ);
            PowerTower<RatFunc> ext(l, PowerKind::Exterior, QQ);
            long ambient = 1;
            for (long n = 2; n <= 4; ++n) {
                ambient = 1;
                for (long k = 0; k < n; ++k) ambient *= l + 1;
                auto isym = ideal_component<RatFunc>(l, n, s.minus_subspace(), QQ);
                CHECK(sym.dim(n) + isym.dim() == ambient);
                auto iext = ideal_component<RatFunc>(l, n, s.plus_subspace(), QQ);
                CHECK(ext.dim(n) + iext.dim() == ambient);
            }
        }
    }

    SUBCASE("transposed tower computes the quotient dimensions blockwise") {
        // dim of the ideal block + dim of the transposed-kernel block must
        // equal the ambient block: the transposed tower is the annihilator.
        for (long l = 1; l <= 3; ++l) {
            auto s = build_sigma<RatFunc>(l, QQ);
            PowerTower<RatFunc> dual(l, PowerKind::Symmetric, QQ, true);
            for (long n = 2; n <= 4; ++n) {
                auto ideal = ideal_component<RatFunc>(l, n, s.minus_subspace(), QQ);
                auto dual_dims = dual.weight_dims(n);
                for (const auto& [w, idx] : ideal.block_index) {
                    long quotient = static_cast<long>(idx.size()) -
                                    static_cast<long>(ideal.blocks.at(w).dim());
                    long dd = dual_dims.count(w) ? dual_dims[w] : 0;
                    CHECK(quotient == dd);
                }
            }
        }
    }
}

TEST_CASE("graded algebra reports") {
    SUBCASE("l = 3 symmetric, degree 4 row") {
        auto rep = graded_algebra_report<RatFunc>(3, PowerKind::Symmetric, 4, QQ);
        CHECK(rep.all_agree());
        const auto& row = rep.rows.back();
        CHECK(row.n == 4);
        CHECK(row.dim == 22);
        CHECK(row.components == decomp_of({{12, 1}, {8, 1}}));
    }

    SUBCASE("l = 2 symmetric is flat: binom(n+2, 2)") {
        auto rep = graded_algebra_report<RatFunc>(2, PowerKind::Symmetric, 5, QQ);
        CHECK(rep.all_agree());
        std::vector<long> dims;
        for (const auto& r : rep.rows) dims.push_back(r.dim);
        CHECK(dims == std::vector<long>{6, 10, 15, 21});
    }

    SUBCASE("l = 5 symmetric, degree 3 row") {
        auto rep = graded_algebra_report<RatFunc>(5, PowerKind::Symmetric, 3, QQ);
        CHECK(rep.all_agree());
        const auto& row = rep.rows.back();
        CHECK(row.dim == 36);
        CHECK(row.components == decomp_of({{15, 1}, {11, 1}, {7, 1}}));
    }

    SUBCASE("json rendering is stable") {
        auto rep = graded_algebra_report<RatFunc>(1, PowerKind::Symmetric, 2, QQ);
        CHECK(rep.json() ==
              "{\"l\":1,\"kind\":\"sym\",\"backend\":\"exact\",\"rows\":[{\"n\":2,\"dim\":3,"
              "\"components\":[{\"hw\":2,\"mult\":1}],\"agree\":true}]}");
    }
}

TEST_CASE("decomposition formulas verified") {
    SUBCASE("l = 1, n <= 5: S^n V_1 = V_n") {
        auto rep = verify_main_theorem<RatFunc>(1, 5, QQ);
        CHECK(rep.all_pass());
        for (const auto& c : rep.checks)
            if (c.kind == "sym") CHECK(c.computed == decomp_of({{c.n, 1}}));
    }

    SUBCASE("l = 3, n <= 5") {
        auto rep = verify_main_theorem<RatFunc>(3, 5, QQ);
        CHECK(rep.all_pass());
    }

    SUBCASE("l = 4, n <= 4; cube dimension 28") {
        auto rep = verify_main_theorem<RatFunc>(4, 4, QQ);
        CHECK(rep.all_pass());
        PowerTower<RatFunc> t(4, PowerKind::Symmetric, QQ);
        CHECK(t.dim(3) == 28);
    }
}

TEST_CASE("highest weight embeddings avoid the ideal") {
    auto r33 = hw_embedding_check<RatFunc>(3, 3, QQ);
    CHECK(r33.checks.size() == 2);
    CHECK(r33.all_pass());

    auto r14 = hw_embedding_check<RatFunc>(1, 4, QQ);
    CHECK(r14.checks.size() == 1);
    CHECK(r14.all_pass());

    auto r53 = hw_embedding_check<RatFunc>(5, 3, QQ);
    CHECK(r53.checks.size() == 3);
    CHECK(r53.all_pass());
}

TEST_CASE("backend agreement on dimensions") {
    for (long l = 1; l <= 4; ++l) {
        PowerTower<RatFunc> exact(l, PowerKind::Symmetric, QQ);
        PowerTower<Rational> spec(l, PowerKind::Symmetric, SP);
        for (long n = 2; n <= 4; ++n) {
            CHECK(exact.dim(n) == spec.dim(n));
            CHECK(exact.weight_dims(n) == spec.weight_dims(n));
            CHECK(exact.decomposition(n) == spec.decomposition(n));
        }
    }
}

TEST_CASE("resource limits") {
    Limits tiny;
    tiny.max_block = 2;
    CHECK_THROWS_AS(braided_power<RatFunc>(3, 4, PowerKind::Symmetric, QQ, tiny), ResourceLimit);
    Limits shallow;
    shallow.max_degree = 3;
    PowerTower<RatFunc> t(2, PowerKind::Symmetric, QQ, false, shallow);
    CHECK_THROWS_AS(t.level(4), ResourceLimit);
}
