#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidsym/module_rep.hpp"
#include "oracles.hpp"

using namespace braidsym;

namespace {
const Scalars<RatFunc> QQ{};
const Scalars<Rational> CL{Rational(1)};   // classical limit
const Scalars<Rational> SP{Rational(7, 5)}; // specialized backend

Decomposition decomp_of(std::vector<std::pair<long, long>> comps) {
    Decomposition d;
    d.components = std::move(comps);
    return d;
}
} // namespace

TEST_CASE("simple modules") {
    auto v0 = simple_module<RatFunc>(0, QQ);
    CHECK(v0.dim() == 1);
    CHECK(v0.e_mat().is_zero());
    CHECK(v0.f_mat().is_zero());

    auto v1 = simple_module<RatFunc>(1, QQ);
    CHECK(v1.e_mat()(0, 1) == RatFunc(1));     // E v_1 = v_0
    CHECK(v1.f_mat()(1, 0) == RatFunc(1));     // F v_0 = v_1
    CHECK(v1.weights() == std::vector<long>{1, -1});

    auto v2 = simple_module<RatFunc>(2, QQ);
    CHECK(v2.e_mat()(1, 2) == RatFunc(q_int(2))); // E v_2 = [2] v_1

    // construction itself verifies the defining relations; a corrupted E
    // must be rejected
    Matrix<RatFunc> bad_e = v1.e_mat();
    bad_e(0, 1) = RatFunc(LaurentPoly::q_power(3));
    CHECK_THROWS_AS(ModuleRep<RatFunc>(QQ, v1.weights(), bad_e, v1.f_mat(), v1.labels()),
                    InconsistentModule);
}

TEST_CASE("classical simple modules specialize the quantum ones") {
    for (long l = 0; l <= 5; ++l) {
        auto q = simple_module<RatFunc>(l, QQ);
        auto c = simple_module<Rational>(l, CL);
        CHECK(c.is_classical());
        for (std::size_t i = 0; i < q.dim(); ++i)
            for (std::size_t j = 0; j < q.dim(); ++j) {
                CHECK(q.e_mat()(i, j).specialize(Rational(1)) == c.e_mat()(i, j));
                CHECK(q.f_mat()(i, j).specialize(Rational(1)) == c.f_mat()(i, j));
            }
        CHECK(decompose(q) == decompose(c));
    }
}

TEST_CASE("tensor products and Clebsch-Gordan") {
    auto v0 = simple_module<RatFunc>(0, QQ);
    auto v3 = simple_module<RatFunc>(3, QQ);
    auto t = tensor(v0, v3);
    CHECK(decompose(t) == decomp_of({{3, 1}}));

    auto v1 = simple_module<RatFunc>(1, QQ);
    CHECK(decompose(tensor(v1, v1)) == decomp_of({{2, 1}, {0, 1}}));
    CHECK(decompose(tensor(v3, v3)) == decomp_of({{6, 1}, {4, 1}, {2, 1}, {0, 1}}));
    CHECK(decompose(tensor(tensor(v1, v1), v1)) == decomp_of({{3, 1}, {1, 2}}));

    SUBCASE("against the character oracle, all a, b <= 6") {
        for (long a = 0; a <= 6; ++a)
            for (long b = 0; b <= 6; ++b) {
                auto got = decompose(tensor(simple_module<Rational>(a, SP), simple_module<Rational>(b, SP)));
                CHECK(got.components == oracles::clebsch_gordan(a, b));
                CHECK(got.components ==
                      oracles::char_decompose(oracles::char_mul(oracles::simple_character(a),
                                                                oracles::simple_character(b))));
            }
    }

    SUBCASE("flavor mismatch") {
        auto a = simple_module<Rational>(1, CL);
        auto b = simple_module<Rational>(1, SP);
        CHECK_THROWS_AS(tensor(a, b), FlavorMismatch);
    }
}

TEST_CASE("weight spaces and highest weight vectors") {
    auto v2 = simple_module<RatFunc>(2, QQ);
    CHECK(weight_space(v2, 0).dim() == 1);
    CHECK(weight_space(v2, 5).dim() == 0);

    auto v1 = simple_module<RatFunc>(1, QQ);
    auto sq = tensor(v1, v1);
    CHECK(weight_space(sq, 0).dim() == 2);

    // partition of the basis
    long total = 0;
    for (auto [w, d] : sq.weight_dims()) total += d;
    CHECK(total == static_cast<long>(sq.dim()));

    SUBCASE("the quantum singlet in V1 (x) V1, by explicit kernel solve") {
        // E on the weight-0 block: E(v0 x v1) = q v0 x v0, E(v1 x v0) = v0 x v0;
        // kernel is spanned by v0 x v1 - q v1 x v0.
        auto hw = highest_weight_vectors(sq, 0);
        REQUIRE(hw.dim() == 1);
        auto row = hw.basis().row(0);
        CHECK(row[1] == RatFunc(1));
        CHECK(row[2] == -RatFunc::q());
        CHECK(row[0].is_zero());
        CHECK(row[3].is_zero());
    }

    SUBCASE("V3 (x) V3 at weight 2 has a single highest weight vector") {
        auto v3 = simple_module<RatFunc>(3, QQ);
        CHECK(highest_weight_vectors(tensor(v3, v3), 2).dim() == 1);
    }

    CHECK(highest_weight_vectors(v2, 2).dim() == 1);
}

TEST_CASE("decompose rejects corrupted weight data") {
    auto v1 = simple_module<RatFunc>(1, QQ);
    // A lone weight without its mirror cannot be a semisimple character.
    std::map<long, long> bad{{3, 1}, {1, 1}};
    CHECK_THROWS_AS(decomposition_from_weight_dims(bad), InconsistentModule);
    CHECK(decompose(v1) == decomp_of({{1, 1}}));
}

TEST_CASE("submodule generation") {
    auto v3 = simple_module<RatFunc>(3, QQ);
    Matrix<RatFunc> seed(1, 4);
    seed(0, 0) = RatFunc(1); // v_0
    CHECK(submodule_generated(v3, seed).dim() == 4);

    auto v1 = simple_module<RatFunc>(1, QQ);
    auto sq = tensor(v1, v1);
    auto singlet = highest_weight_vectors(sq, 0);
    CHECK(submodule_generated(sq, singlet.basis()).dim() == 1);

    // highest weight vector of weight 2l-2 generates the (2l-1)-dimensional
    // component
    for (long l = 1; l <= 3; ++l) {
        auto v = simple_module<RatFunc>(l, QQ);
        auto t = tensor(v, v);
        auto hw = highest_weight_vectors(t, 2 * l - 2);
        CHECK(submodule_generated(t, hw.basis()).dim() == static_cast<std::size_t>(2 * l - 1));
    }
}

TEST_CASE("decomposition serialization") {
    auto d = decomp_of({{6, 1}, {2, 2}});
    CHECK(d.json() == "[{\"hw\":6,\"mult\":1},{\"hw\":2,\"mult\":2}]");
    CHECK(d.str() == "V6 + 2*V2");
    CHECK(d.total_dim() == 13);
    CHECK(Decomposition{}.json() == "[]");
    CHECK(Decomposition{}.str() == "0");
}
