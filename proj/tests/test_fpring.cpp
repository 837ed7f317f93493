#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "regcensus/fpring.hpp"

using namespace regcensus;

namespace {

// Independent multiplication oracle: expand the product over the integers on
// a (2p-1) x (2p-1) grid, then fold exponents and reduce coefficients.
RingElem naive_mul(const RingElem& u, const RingElem& v) {
    const int p = u.p();
    const Context ctx(p);
    std::vector<std::vector<long long>> big(2 * p - 1, std::vector<long long>(2 * p - 1, 0));
    for (int k = 0; k < p; ++k)
        for (int l = 0; l < p; ++l)
            for (int m = 0; m < p; ++m)
                for (int n = 0; n < p; ++n)
                    big[k + m][l + n] += static_cast<long long>(u.at(k, l)) * v.at(m, n);
    RingElem out(ctx);
    for (int s = 0; s < 2 * p - 1; ++s)
        for (int t = 0; t < 2 * p - 1; ++t)
            out.set(s % p, t % p, fp_norm(out.at(s % p, t % p) + big[s][t], p));
    return out;
}

// Independent rank oracle: plain Gaussian elimination over F_p.
int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (int col = 0; col < cols; ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const int inv = fp_inv(rows[rank][col], p);
        for (auto& x : rows[rank]) x = x * inv % p;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] % p == 0) continue;
            const int c = rows[r][col] % p;
            for (int j = 0; j < cols; ++j) rows[r][j] = fp_norm(rows[r][j] - c * rows[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

std::vector<int> flat_ints(const RingElem& v) {
    const auto f = v.flat();
    return {f.begin(), f.end()};
}

RingElem random_elem(const Context& ctx, std::mt19937_64& rng) {
    RingElem f(ctx);
    for (int i = 0; i < ctx.p(); ++i)
        for (int j = 0; j < ctx.p(); ++j)
            f.set(i, j, static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.p())));
    return f;
}

int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("context validates p") {
    CHECK_THROWS_AS(Context(4), std::invalid_argument);
    CHECK_THROWS_AS(Context(1), std::invalid_argument);
    CHECK_THROWS_AS(Context(17), std::invalid_argument);  // over the size cap
    CHECK(Context(13).p() == 13);
    CHECK(Context(3).degree() == 27);
}

TEST_CASE("addition basics") {
    const Context ctx(3);
    const RingElem zero(ctx);
    const RingElem ones = RingElem::all_ones(ctx);
    CHECK(zero + ones == ones);

    const Context ctx2(2);
    const RingElem x2 = RingElem::monomial(ctx2, 1, 0);
    CHECK((x2 + x2).is_zero());

    const RingElem a = RingElem::x_minus_one(ctx);
    CHECK(a.at(0, 0) == 2);
    CHECK(a.at(1, 0) == 1);
    CHECK(a + RingElem::one(ctx) == RingElem::monomial(ctx, 1, 0));

    const Context other(5);
    CHECK_THROWS_AS(RingElem(ctx) + RingElem(other), std::invalid_argument);
}

TEST_CASE("multiplication basics") {
    for (int p : {2, 3, 5, 7}) {
        const Context ctx(p);
        const RingElem x = RingElem::monomial(ctx, 1, 0);
        const RingElem x_top = RingElem::monomial(ctx, p - 1, 0);
        CHECK(x * x_top == RingElem::one(ctx));
        const RingElem ones = RingElem::all_ones(ctx);
        CHECK((RingElem::x_minus_one(ctx) * ones).is_zero());
        CHECK((RingElem::y_minus_one(ctx) * ones).is_zero());
        CHECK(ones.shifted(1, 0) == ones);
        CHECK(ones.shifted(0, 1) == ones);
    }
}

TEST_CASE("corner product equals the all-ones element") {
    for (int p : {2, 3, 5, 7}) {
        const Context ctx(p);
        RingElem prod = RingElem::one(ctx);
        for (int e = 0; e < p - 1; ++e) prod = prod * RingElem::x_minus_one(ctx);
        for (int e = 0; e < p - 1; ++e) prod = prod * RingElem::y_minus_one(ctx);
        CHECK(prod == RingElem::all_ones(ctx));
    }
}

TEST_CASE("multiplication matches the naive convolution oracle") {
    const Context ctx3(3);
    const RingElem a = RingElem::x_minus_one(ctx3);
    const RingElem b = RingElem::y_minus_one(ctx3);
    CHECK(a * a * (b * b) == RingElem::all_ones(ctx3));
    CHECK(naive_mul(a * a, b * b) == RingElem::all_ones(ctx3));

    std::mt19937_64 rng(7);
    for (int p : {2, 3, 5}) {
        const Context ctx(p);
        for (int trial = 0; trial < 50; ++trial) {
            const RingElem u = random_elem(ctx, rng);
            const RingElem v = random_elem(ctx, rng);
            CHECK(u * v == naive_mul(u, v));
            CHECK(u * v == v * u);
        }
    }
}

TEST_CASE("shifted is monomial multiplication") {
    std::mt19937_64 rng(11);
    const Context ctx(5);
    for (int trial = 0; trial < 20; ++trial) {
        const RingElem u = random_elem(ctx, rng);
        const int di = static_cast<int>(rng() % 5), dj = static_cast<int>(rng() % 5);
        CHECK(u.shifted(di, dj) == u * RingElem::monomial(ctx, di, dj));
    }
    const RingElem u = random_elem(ctx, rng);
    CHECK(u.times_x_minus_one() == u * RingElem::x_minus_one(ctx));
    CHECK(u.times_y_minus_one() == u * RingElem::y_minus_one(ctx));
}

TEST_CASE("span_of and closure") {
    const Context ctx(3);
    const RingElem ones = RingElem::all_ones(ctx);
    const RingElem a = RingElem::x_minus_one(ctx);
    const RingElem b = RingElem::y_minus_one(ctx);

    const std::vector<RingElem> just_ones{ones};
    const IdealBasis span_ones = IdealBasis::span_of(ctx, just_ones, true);
    CHECK(span_ones.dim() == 1);
    CHECK(span_ones.verify_xy_closed());

    const std::vector<RingElem> corner{a * a * (b * b)};
    CHECK(IdealBasis::span_of(ctx, corner, true) == span_ones);

    // Smallest ideal containing a*b: its dimension must match the rank of the
    // multiplication-orbit matrix {a*b*x^i*y^j}.
    const RingElem ab = a * b;
    std::vector<std::vector<int>> orbit_rows;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) orbit_rows.push_back(flat_ints(ab.shifted(i, j)));
    const int oracle_rank = rank_mod_p(orbit_rows, 3);
    const std::vector<RingElem> ab_gen{ab};
    const IdealBasis ab_ideal = IdealBasis::span_of(ctx, ab_gen, true);
    CHECK(ab_ideal.dim() == oracle_rank);
    CHECK(ab_ideal.dim() == 4);
    CHECK(ab_ideal.verify_xy_closed());

    // The full degree-two power needs all three generators.
    const std::vector<RingElem> degree_two{a * a, ab, b * b};
    const IdealBasis power_two = IdealBasis::span_of(ctx, degree_two, true);
    CHECK(power_two.dim() == 6);
    CHECK(power_two == augmentation_power(ctx, 2));

    const std::vector<RingElem> empty;
    CHECK(IdealBasis::span_of(ctx, empty, true).dim() == 0);
}

TEST_CASE("span_of closure is idempotent and monotone") {
    std::mt19937_64 rng(23);
    const Context ctx(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RingElem> gens;
        for (int g = 0; g < 2; ++g) gens.push_back(random_elem(ctx, rng));
        const IdealBasis once = IdealBasis::span_of(ctx, gens, true);
        CHECK(IdealBasis::span_of(ctx, once.rows(), true) == once);
        gens.push_back(random_elem(ctx, rng));
        const IdealBasis larger = IdealBasis::span_of(ctx, gens, true);
        for (const auto& row : once.rows()) CHECK(larger.contains(row));
    }
}

TEST_CASE("augmentation power dimensions") {
    const Context ctx3(3);
    CHECK(augmentation_power(ctx3, 3).dim() == 3);
    CHECK(augmentation_power(ctx3, 5).dim() == 0);
    const Context ctx5(5);
    CHECK(augmentation_power(ctx5, 7).dim() == 3);

    for (int p : {2, 3, 5, 7}) {
        const Context ctx(p);
        for (int k = p; k <= 2 * (p - 1); ++k)
            CHECK(augmentation_power(ctx, k).dim() == binom2(2 * p - k));
        // Below the formula range the dimension is the plain monomial count.
        for (int k = 0; k < p; ++k) {
            int monomials = 0;
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    if (i + j >= k) ++monomials;
            CHECK(augmentation_power(ctx, k).dim() == monomials);
        }
        CHECK(augmentation_power(ctx, 2 * p - 1).dim() == 0);
    }
}

TEST_CASE("membership") {
    const Context ctx(3);
    const IdealBasis i3 = augmentation_power(ctx, 3);
    const IdealBasis i4 = augmentation_power(ctx, 4);
    CHECK(i4.contains(RingElem(ctx)));
    CHECK(i4.contains(RingElem::all_ones(ctx)));
    CHECK_FALSE(i3.contains(RingElem::x_minus_one(ctx)));
}

TEST_CASE("kernels and images of multiplication") {
    const Context ctx3(3);
    const RingElem a3 = RingElem::x_minus_one(ctx3);
    CHECK(mult_kernel(augmentation_power(ctx3, 3), a3).dim() == 2);
    CHECK(mult_image(augmentation_power(ctx3, 3), a3) == augmentation_power(ctx3, 4));

    const Context ctx5(5);
    const RingElem b5 = RingElem::y_minus_one(ctx5);
    CHECK(mult_kernel(augmentation_power(ctx5, 7), b5).dim() == 2);
    CHECK(mult_image(augmentation_power(ctx5, 6), b5) == augmentation_power(ctx5, 7));
    CHECK(mult_image(augmentation_power(ctx5, 6), b5).dim() == 3);

    const std::vector<RingElem> just_ones{RingElem::all_ones(ctx3)};
    const IdealBasis span_ones = IdealBasis::span_of(ctx3, just_ones, false);
    CHECK(mult_kernel(span_ones, a3).dim() == 1);
    CHECK(mult_image(IdealBasis::zero(ctx3), a3).dim() == 0);

    for (int p : {2, 3, 5, 7}) {
        const Context ctx(p);
        const RingElem a = RingElem::x_minus_one(ctx);
        const RingElem b = RingElem::y_minus_one(ctx);
        for (int k = p; k <= 2 * (p - 1); ++k) {
            const IdealBasis ik = augmentation_power(ctx, k);
            const IdealBasis ik1 = augmentation_power(ctx, k + 1);
            CHECK(mult_image(ik, a) == ik1);
            CHECK(mult_image(ik, b) == ik1);
            CHECK(mult_kernel(ik, a).dim() == 2 * p - k - 1);
            CHECK(mult_kernel(ik, b).dim() == 2 * p - k - 1);
            CHECK(ik.dim() == mult_kernel(ik, a).dim() + ik1.dim());  // rank-nullity
        }
    }
}

TEST_CASE("solve_mult") {
    const Context ctx(3);
    const RingElem a = RingElem::x_minus_one(ctx);
    const IdealBasis i3 = augmentation_power(ctx, 3);

    const auto zero_sol = solve_mult(i3, a, RingElem(ctx));
    REQUIRE(zero_sol.has_value());
    CHECK(zero_sol->is_zero());

    const RingElem ones = RingElem::all_ones(ctx);
    const auto sol = solve_mult(i3, a, ones);
    REQUIRE(sol.has_value());
    CHECK(*sol * a == ones);
    CHECK(i3.contains(*sol));

    CHECK_FALSE(solve_mult(i3, a, a).has_value());

    // Deterministic: the same target always yields the same element.
    const auto again = solve_mult(i3, a, ones);
    REQUIRE(again.has_value());
    CHECK(*again == *sol);

    std::mt19937_64 rng(37);
    for (int p : {3, 5}) {
        const Context ctxp(p);
        const RingElem ap = RingElem::x_minus_one(ctxp);
        const int k = p;
        const IdealBasis ik = augmentation_power(ctxp, k);
        const IdealBasis ik1 = augmentation_power(ctxp, k + 1);
        for (int trial = 0; trial < 20; ++trial) {
            RingElem c(ctxp);
            for (const auto& row : ik1.rows())
                c += row.scaled(static_cast<int>(rng() % static_cast<std::uint64_t>(p)));
            const auto v = solve_mult(ik, ap, c);
            REQUIRE(v.has_value());
            CHECK(*v * ap == c);
            CHECK(ik.contains(*v));
        }
    }
}

TEST_CASE("span_elements order and size") {
    const Context ctx(3);
    const IdealBasis i4 = augmentation_power(ctx, 4);
    const auto elems = span_elements(i4);
    REQUIRE(elems.size() == 3);
    CHECK(elems[0].is_zero());
    CHECK(elems[1] == i4.rows()[0]);
    CHECK(elems[2] == i4.rows()[0].scaled(2));
}

TEST_CASE("digit serialization") {
    const Context ctx(3);
    const RingElem a = RingElem::x_minus_one(ctx);
    CHECK(a.to_digits() == "200100000");
    CHECK(RingElem::from_digits(ctx, "200100000") == a);

    std::mt19937_64 rng(41);
    for (int p : {2, 5, 7}) {
        const Context ctxp(p);
        for (int trial = 0; trial < 10; ++trial) {
            const RingElem u = random_elem(ctxp, rng);
            CHECK(RingElem::from_digits(ctxp, u.to_digits()) == u);
        }
    }
    CHECK_THROWS_AS(RingElem::from_digits(ctx, "12"), std::invalid_argument);
    CHECK_THROWS_AS(RingElem::from_digits(ctx, "400000000"), std::invalid_argument);
}
