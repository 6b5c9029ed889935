#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppv/ff.hpp"

using namespace ppv;

namespace {

std::vector<char> mu_membership(const FieldCtx& ctx) {
    std::vector<char> in_mu(ctx.size(), 0);
    for (const auto& a : ctx.unit_circle()) in_mu[a.index()] = 1;
    return in_mu;
}

} // namespace

TEST_CASE("context construction basics") {
    auto f4 = FieldCtx::make(2);
    CHECK(f4->p() == 2);
    CHECK(f4->m() == 1);
    CHECK(f4->Q() == 2);
    CHECK(f4->q() == 4);
    CHECK(f4->unit_circle().size() == 3);

    CHECK_THROWS_WITH_AS(FieldCtx::make(6), doctest::Contains("NotAPrimePower"), Error);
    CHECK_THROWS_AS(FieldCtx::make(1), Error);
    CHECK_THROWS_WITH_AS(FieldCtx::make(2048), doctest::Contains("TooLarge"), Error);

    auto f81 = FieldCtx::make(9);
    CHECK(f81->p() == 3);
    CHECK(f81->m() == 2);
    CHECK(f81->q() == 81);
    // oracle: count solutions of x^10 = 1 by enumeration
    size_t solutions = 0;
    for (uint32_t i = 0; i < f81->q(); ++i)
        if (f81->element(i).pow(10) == f81->one()) ++solutions;
    CHECK(solutions == 10);
    CHECK(f81->unit_circle().size() == 10);
}

TEST_CASE("deterministic moduli selection") {
    // F_4 = F_2[u]/(u^2+u+1)
    auto f4 = FieldCtx::make(2);
    CHECK(f4->modulus_mid() == std::vector<uint32_t>{0, 1}); // degenerate degree-1 stage
    CHECK(f4->modulus_top() == std::vector<uint32_t>{1, 1, 1});

    // F_9 = F_3[u]/(u^2+1)
    auto f9 = FieldCtx::make(3);
    CHECK(f9->modulus_top() == std::vector<uint32_t>{1, 0, 1});

    // F_16 = F_4[u]/(u^2 + t*u + 1) over F_4 = F_2[t]/(t^2+t+1)
    auto f16 = FieldCtx::make(4);
    CHECK(f16->modulus_mid() == std::vector<uint32_t>{1, 1, 1});
    CHECK(f16->modulus_top() == std::vector<uint32_t>{1, 2, 1});
}

TEST_CASE("arithmetic in F_4 matches hand reduction") {
    auto ctx = FieldCtx::make(2);
    auto t = ctx->from_coords({0, 1});
    auto t1 = ctx->from_coords({1, 1});

    CHECK(t * t == t1);             // t^2 = t+1
    CHECK(t.inv() == t1);           // t*(t+1) = 1
    CHECK(t * t1 == ctx->one());
    CHECK(t + t == ctx->zero());
    CHECK(t.pow(0) == ctx->one());
    CHECK(ctx->zero().pow(0) == ctx->one());
    CHECK(ctx->zero().pow(5) == ctx->zero());

    CHECK_THROWS_WITH_AS(ctx->zero().inv(), doctest::Contains("DivisionByZero"), Error);

    auto other = FieldCtx::make(2);
    CHECK_THROWS_WITH_AS((void)(t + other->one()), doctest::Contains("ContextMismatch"), Error);
}

TEST_CASE("from_int is the canonical ring homomorphism") {
    auto f4 = FieldCtx::make(2);
    CHECK(f4->from_int(3) == f4->one());
    auto f81 = FieldCtx::make(9);
    CHECK(f81->from_int(3) == f81->zero());
    auto f25 = FieldCtx::make(5);
    CHECK(f25->from_int(-1) == f25->from_coords({4, 0}));
    for (int64_t n : {-7, -1, 0, 1, 2, 12}) {
        CHECK((f25->from_int(n) == f25->zero()) == (((n % 5) + 5) % 5 == 0));
    }
}

TEST_CASE("frobenius basics") {
    auto ctx = FieldCtx::make(2);
    auto t = ctx->from_coords({0, 1});
    CHECK(t.frobenius() == ctx->from_coords({1, 1}));
    for (uint32_t i = 0; i < ctx->q(); ++i) {
        auto a = ctx->element(i);
        CHECK(a.frobenius().frobenius() == a);
        CHECK(a.frobenius() == a.pow(ctx->Q()));
    }
}

TEST_CASE("field axioms exhaustively for q <= 64") {
    for (uint64_t Q : {2, 3, 4, 5, 7, 8}) {
        auto ctx = FieldCtx::make(Q);
        const uint32_t q = ctx->q();
        auto one = ctx->one();
        for (uint32_t i = 0; i < q; ++i) {
            auto a = ctx->element(i);
            CHECK(a + ctx->zero() == a);
            CHECK(a * one == a);
            CHECK(a + (-a) == ctx->zero());
            if (!a.is_zero()) {
                CHECK(a * a.inv() == one);
                CHECK(a.pow(q - 1) == one);
            }
            for (uint32_t j = 0; j < q; ++j) {
                auto b = ctx->element(j);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK(a.frobenius() + b.frobenius() == (a + b).frobenius());
                CHECK(a.frobenius() * b.frobenius() == (a * b).frobenius());
                for (uint32_t k = 0; k < q; ++k) {
                    auto c = ctx->element(k);
                    REQUIRE((a + b) + c == a + (b + c));
                    REQUIRE((a * b) * c == a * (b * c));
                    REQUIRE(a * (b + c) == a * b + a * c);
                }
            }
        }
    }
}

TEST_CASE("field axioms on random triples for larger q") {
    std::mt19937_64 rng(20240811);
    for (uint64_t Q : {16, 27, 32}) {
        auto ctx = FieldCtx::make(Q);
        const uint32_t q = ctx->q();
        for (int iter = 0; iter < 10000; ++iter) {
            auto a = ctx->element((uint32_t)(rng() % q));
            auto b = ctx->element((uint32_t)(rng() % q));
            auto c = ctx->element((uint32_t)(rng() % q));
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a * b).frobenius() == a.frobenius() * b.frobenius());
            if (!a.is_zero()) REQUIRE(a * a.inv() == ctx->one());
        }
    }
}

TEST_CASE("unit circle: size, membership, frobenius-inverse characterization") {
    for (uint64_t Q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17}) {
        auto ctx = FieldCtx::make(Q);
        const auto& mu = ctx->unit_circle();
        REQUIRE(mu.size() == Q + 1);
        auto in_mu = mu_membership(*ctx);

        size_t distinct = 0;
        for (char c : in_mu) distinct += c;
        REQUIRE(distinct == Q + 1); // all distinct

        for (uint32_t i = 0; i < ctx->q(); ++i) {
            auto x = ctx->element(i);
            const bool member = in_mu[i] != 0;
            REQUIRE(member == (x.pow(Q + 1) == ctx->one()));
            if (x.is_zero())
                REQUIRE(!member);
            else
                REQUIRE(member == (x.frobenius() == x.inv()));
            REQUIRE(member == ctx->on_unit_circle(x));
        }
    }
}

TEST_CASE("unit circle examples") {
    auto f4 = FieldCtx::make(2);
    auto in_mu = mu_membership(*f4);
    // mu_3 = F_4^* = {1, t, t+1}
    CHECK(in_mu == std::vector<char>{0, 1, 1, 1});

    auto f9 = FieldCtx::make(3);
    auto t = f9->from_coords({0, 1});
    CHECK(t * t == -f9->one()); // t^2 = -1, so t^4 = 1
    CHECK(f9->on_unit_circle(t));
}

TEST_CASE("subfield membership") {
    auto f4 = FieldCtx::make(2);
    CHECK(f4->zero().is_in_subfield());
    CHECK(!f4->from_coords({0, 1}).is_in_subfield());

    for (uint64_t Q : {2, 3, 4, 5, 9}) {
        auto ctx = FieldCtx::make(Q);
        size_t fixed = 0;
        for (uint32_t i = 0; i < ctx->q(); ++i)
            if (ctx->element(i).is_in_subfield()) ++fixed;
        CHECK(fixed == Q);
    }
}

TEST_CASE("generator order is q-1 (oracle recheck)") {
    for (uint64_t Q : {2, 3, 4, 5, 8}) {
        auto ctx = FieldCtx::make(Q);
        auto g = ctx->generator();
        // walk the full cycle
        auto acc = ctx->one();
        uint32_t order = 0;
        do {
            acc = acc * g;
            ++order;
        } while (acc != ctx->one());
        CHECK(order == ctx->q() - 1);
    }
}

TEST_CASE("roots_of_unity") {
    auto ctx = FieldCtx::make(3); // q = 9
    auto mu8 = ctx->roots_of_unity(8);
    CHECK(mu8.size() == 8);
    for (const auto& x : mu8) CHECK(x.pow(8) == ctx->one());
    auto mu2 = ctx->roots_of_unity(2);
    CHECK(mu2.size() == 2);
    CHECK_THROWS_WITH_AS(ctx->roots_of_unity(3), doctest::Contains("InvalidDivisor"), Error);
}

TEST_CASE("element text round-trip and parsing") {
    auto ctx = FieldCtx::make(4);
    for (uint32_t i = 0; i < ctx->q(); ++i) {
        auto a = ctx->element(i);
        CHECK(parse_element(*ctx, to_text(a)) == a);
    }
    CHECK(parse_element(*ctx, "0") == ctx->zero());
    CHECK(parse_element(*ctx, "g^0") == ctx->one());
    CHECK(parse_element(*ctx, "g^3") == ctx->generator().pow(3));
    CHECK(parse_element(*ctx, "-1,0,0,0") == -ctx->one()); // lenient residues
    CHECK_THROWS_WITH_AS(parse_element(*ctx, "1,2"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_element(*ctx, "g^x"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_element(*ctx, "a,b,c,d"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("alternate top modulus yields a valid, different model") {
    auto a = FieldCtx::make(3, 0);
    auto b = FieldCtx::make(3, 1);
    CHECK(a->modulus_top() != b->modulus_top());
    CHECK(b->unit_circle().size() == 4);
    for (const auto& x : b->unit_circle()) CHECK(x.pow(4) == b->one());
    // axioms spot check in the alternate model
    for (uint32_t i = 1; i < b->q(); ++i) {
        auto x = b->element(i);
        CHECK(x * x.inv() == b->one());
    }
}
