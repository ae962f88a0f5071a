#include <catch2/catch_amalgamated.hpp>

#include "fano/form.hpp"
#include "fano/linear_system.hpp"
#include "fano/matrix.hpp"
#include "fano/monomial.hpp"
#include "fano/prime_field.hpp"
#include "fano/rng.hpp"

using namespace fano;

namespace {

// Independent rank oracle: fraction-free elimination on int64, written against
// nothing in the library.  Keep inputs small so minors stay within 64 bits.
int oracle_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    long long prev = 1;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int i = rk; i < rows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rk], m[pivot]);
        for (int i = rk + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[rk][col] * m[i][j] - m[i][col] * m[rk][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rk][col];
        ++rk;
    }
    return rk;
}

GradedForm<Rational> parse_t(const std::string& text, int nvars, int degree = -1) {
    return parse_form(text, VarScheme::plain(nvars), degree);
}

LinearSystem<Rational> system_of(int nvars, int degree, const std::vector<std::string>& texts) {
    LinearSystem<Rational> sys(nvars, degree);
    for (const auto& t : texts) sys.add(parse_t(t, nvars, degree));
    return sys;
}

}  // namespace

TEST_CASE("graded dimension of S_d in r+1 variables", "[polyring]") {
    CHECK(graded_dim(1, 0) == 1);
    CHECK(graded_dim(1, 6) == 7);
    CHECK(graded_dim(2, 2) == 6);
    CHECK(graded_dim(2, 4) == 15);
    CHECK(graded_dim(3, 6) == 84);
    CHECK(graded_dim(1, -1) == 0);   // empty graded piece, not an error
    CHECK(graded_dim(3, -2) == 0);
    CHECK_THROWS_AS(graded_dim(1, -2), std::domain_error);
    CHECK_THROWS_AS(graded_dim(0, -1), std::domain_error);
    CHECK(graded_dim(0, 5) == 1);
}

TEST_CASE("monomial basis order and ranking", "[polyring]") {
    auto b22 = monomial_basis(2, 2);
    REQUIRE(b22.size() == 3);
    CHECK(b22[0].exponents() == std::vector<int>{2, 0});
    CHECK(b22[1].exponents() == std::vector<int>{1, 1});
    CHECK(b22[2].exponents() == std::vector<int>{0, 2});

    CHECK(monomial_basis(2, 6).size() == 7);

    for (int nvars : {1, 2, 3, 4}) {
        for (int d : {0, 1, 2, 3, 5}) {
            auto basis = monomial_basis(nvars, d);
            REQUIRE(static_cast<long long>(basis.size()) == graded_dim(nvars - 1, d));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                CHECK(monomial_index(basis[k]) == static_cast<long long>(k));
                if (k > 0) CHECK(basis[k - 1] < basis[k]);
            }
        }
    }
}

TEST_CASE("multiplication map ranks match the hand-built oracle", "[polyring]") {
    // W = {t0^2, t1^2} in two variables: products against S_1 are
    // t0^3, t0^2 t1, t0 t1^2, t1^3 -- the full basis of S_3.
    std::vector<std::vector<long long>> oracle = {
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, 1, 0},
        {0, 0, 0, 1},
    };
    REQUIRE(oracle_rank(oracle) == 4);

    auto sys = system_of(2, 2, {"t0^2", "t1^2"});
    Matrix<Rational> M = multiplication_map(sys, 1);
    REQUIRE(M.rows() == 4);
    REQUIRE(M.cols() == 4);
    CHECK(rank(M) == 4);
    CHECK(is_c_generating(sys, 1));

    auto single = system_of(2, 2, {"t0^2"});
    Matrix<Rational> S = multiplication_map(single, 1);
    REQUIRE(S.rows() == 4);
    REQUIRE(S.cols() == 2);
    CHECK(rank(S) == 2);
    CHECK_FALSE(is_c_generating(single, 1));
}

TEST_CASE("multiplication by S_0 reproduces the coefficient matrix", "[polyring]") {
    SeededRng rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
        int nvars = 2 + static_cast<int>(rng.below(2));
        int degree = 1 + static_cast<int>(rng.below(3));
        int m = 1 + static_cast<int>(rng.below(4));
        auto basis = monomial_basis(nvars, degree);
        LinearSystem<Rational> sys(nvars, degree);
        Matrix<Rational> coeffs(static_cast<int>(basis.size()), m);
        for (int i = 0; i < m; ++i) {
            GradedForm<Rational> f(nvars, degree);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                long long c = rng.in_box(-3, 3);
                f.add_term(basis[k], Rational(c));
                coeffs.at(static_cast<int>(k), i) = Rational(c);
            }
            sys.add(f);
        }
        CHECK(rank(multiplication_map(sys, 0)) == rank(coeffs));
    }
}

TEST_CASE("c-generating is monotone in c", "[polyring][property]") {
    FpCtx F(10007);
    SeededRng rng(9157);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int nvars = 2 + static_cast<int>(rng.below(2));
        int degree = 1 + static_cast<int>(rng.below(3));
        int m = 1 + static_cast<int>(rng.below(5));
        auto basis = monomial_basis(nvars, degree);
        LinearSystem<Fp> sys(nvars, degree);
        for (int i = 0; i < m; ++i) {
            GradedForm<Fp> f(nvars, degree);
            for (const auto& mono : basis) f.add_term(mono, F(rng.in_box(-4, 4)));
            sys.add(f);
        }
        for (int c = 1; c <= 2; ++c) {
            if (is_c_generating(sys, c)) {
                CHECK(is_c_generating(sys, c + 1));
                ++checked;
            }
        }
    }
    // make sure the property was exercised, not vacuously true
    CHECK(checked >= 20);
}

TEST_CASE("rank over Q agrees with rank over random large primes", "[polyring][property]") {
    SeededRng rng(777001);
    std::vector<std::uint64_t> primes;
    while (primes.size() < 3) {
        std::uint64_t candidate = 1000000 + rng.below(1u << 24);
        while (!is_prime_u64(candidate)) ++candidate;
        primes.push_back(candidate);
    }

    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + static_cast<int>(rng.below(6));
        int cols = 2 + static_cast<int>(rng.below(6));
        Matrix<Rational> A(rows, cols);
        if (trial % 2 == 0) {
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) A.at(i, j) = Rational(rng.in_box(-20, 20));
        } else {
            // engineered rank deficiency: A = B * C with small inner dimension
            int inner = 1 + static_cast<int>(rng.below(2));
            std::vector<std::vector<long long>> B(rows, std::vector<long long>(inner));
            std::vector<std::vector<long long>> C(inner, std::vector<long long>(cols));
            for (auto& row : B)
                for (auto& x : row) x = rng.in_box(-5, 5);
            for (auto& row : C)
                for (auto& x : row) x = rng.in_box(-5, 5);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    long long s = 0;
                    for (int k = 0; k < inner; ++k) s += B[i][k] * C[k][j];
                    A.at(i, j) = Rational(s);
                }
        }
        int rq = rank(A);
        for (std::uint64_t p : primes) {
            Matrix<Fp> Ap(rows, cols);
            FpCtx F(p);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    Ap.at(i, j) = F(static_cast<long long>(numerator(A.at(i, j))));
            CHECK(rank(Ap) == rq);
        }
    }
}

TEST_CASE("fraction-free elimination handles genuine rationals", "[polyring]") {
    Matrix<Rational> M(3, 3);
    M.at(0, 0) = make_rational(1, 2);
    M.at(0, 1) = make_rational(1, 3);
    M.at(0, 2) = make_rational(1, 6);
    M.at(1, 0) = Rational(3);
    M.at(1, 1) = Rational(2);
    M.at(1, 2) = Rational(1);   // 6 * row 0
    M.at(2, 0) = make_rational(1, 5);
    M.at(2, 1) = Rational(0);
    M.at(2, 2) = Rational(1);
    CHECK(rank(M) == 2);

    Matrix<Rational> D(2, 2);
    D.at(0, 0) = make_rational(1, 2);
    D.at(0, 1) = make_rational(-1, 3);
    D.at(1, 0) = Rational(6);
    D.at(1, 1) = Rational(2);
    CHECK(det(D) == Rational(3));  // 1/2*2 - (-1/3)*6 = 1 + 2
}

TEST_CASE("prime field arithmetic", "[polyring]") {
    FpCtx F(101);
    CHECK((F(45) + F(60)).value() == 4);
    CHECK((F(-1)).value() == 100);
    CHECK((F(7) * F(29)).value() == 7 * 29 % 101);
    CHECK((F(1) / F(3) * F(3)).value() == 1);
    CHECK(F(17).inverse() * F(17) == F(1));

    Fp detached;  // no modulus; behaves as the zero of whatever field it meets
    CHECK((detached + F(8)) == F(8));
    CHECK((detached * F(8)).is_zero());
    CHECK(detached == F(0));

    FpCtx G(10007);
    CHECK_THROWS_AS(F(1) + G(1), std::invalid_argument);
    CHECK_THROWS_AS(FpCtx(91), std::domain_error);   // 7 * 13
    CHECK_THROWS_AS(F(5) / F(0), std::domain_error);

    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(2147483647ull));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
    CHECK(FieldSpec::parse("Q").rational);
    CHECK(FieldSpec::parse("101").p == 101);
    CHECK_THROWS_AS(FieldSpec::parse("100"), std::domain_error);
}

TEST_CASE("polynomial text grammar round trip", "[polyring]") {
    const std::string text = "3*t0^2*t1 - 1/2*t2^3";
    auto f = parse_t(text, 3);
    REQUIRE(f.degree() == 3);
    REQUIRE(f.terms().size() == 2);
    CHECK(f.coeff(Monomial({2, 1, 0})) == Rational(3));
    CHECK(f.coeff(Monomial({0, 0, 3})) == make_rational(-1, 2));
    CHECK(to_text(f, VarScheme::plain(3)) == text);

    // whitespace is insignificant; '*' between coefficient and factor may be elided
    CHECK(parse_t(" 3 * t0^2*t1-1/2*t2 ^ 3", 3) == f);
    CHECK(parse_t("3t0^2t1 - 1/2t2^3", 3) == f);

    auto zero = parse_t("0", 3, 4);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 4);
    CHECK(to_text(zero, VarScheme::plain(3)) == "0");

    auto g = parse_t("t0^2 + 2*t0*t1 + t1^2", 2);
    CHECK(g == parse_t("t1^2 + t0^2 + 2*t1*t0", 2));

    // terms collapse and may cancel entirely
    CHECK(parse_t("t0*t1 - t0*t1", 2).is_zero());

    CHECK_THROWS_AS(parse_t("t0 + t1^2", 2), std::invalid_argument);     // inhomogeneous
    CHECK_THROWS_AS(parse_t("t5", 2), std::invalid_argument);            // out of range
    CHECK_THROWS_AS(parse_t("z0", 2), std::invalid_argument);            // unknown letter
    CHECK_THROWS_AS(parse_t("t0 t1 +", 2), std::invalid_argument);       // dangling operator
    CHECK_THROWS_AS(parse_t("y0*t0", 2), std::invalid_argument);         // y needs an ambient scheme
}

TEST_CASE("ambient variable scheme splits x and y blocks", "[polyring]") {
    auto scheme = VarScheme::ambient(3, 2);
    auto f = parse_form("x0*x2 - x1^2 + y0*y1", scheme);
    REQUIRE(f.nvars() == 5);
    CHECK(f.coeff(Monomial({1, 0, 1, 0, 0})) == Rational(1));
    CHECK(f.coeff(Monomial({0, 2, 0, 0, 0})) == Rational(-1));
    CHECK(f.coeff(Monomial({0, 0, 0, 1, 1})) == Rational(1));
    CHECK(to_text(f, scheme) == "x0*x2 - x1^2 + y0*y1");
    CHECK_THROWS_AS(parse_form("y2*x0", scheme), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("t0^2", scheme), std::invalid_argument);
}

TEST_CASE("reduction to a prime field", "[polyring]") {
    FpCtx F(7);
    auto f = parse_t("3*t0^2 - 1/2*t0*t1", 2);
    auto fp = to_prime_field(f, F);
    CHECK(fp.coeff(Monomial({2, 0})).value() == 3);
    // -1/2 = -1 * inverse(2) = 6 * 4 = 24 = 3 (mod 7)
    CHECK(fp.coeff(Monomial({1, 1})).value() == 3);

    FpCtx G(2);
    CHECK_THROWS_AS(to_prime_field(f, G), std::domain_error);  // denominator 2 vanishes
}

TEST_CASE("graded form arithmetic", "[polyring]") {
    auto f = parse_t("t0^2 - t1^2", 2);
    auto g = parse_t("t0^2 + t1^2", 2);
    CHECK(f + g == parse_t("2*t0^2", 2));
    CHECK(f * g == parse_t("t0^4 - t1^4", 2));
    CHECK(Rational(3) * f == parse_t("3*t0^2 - 3*t1^2", 2));
    CHECK(derivative(f, 1) == parse_t("-2*t1", 2));
    CHECK_THROWS_AS(f + parse_t("t0", 2), std::invalid_argument);

    // substitution by linear forms: f(t0+t1, t0-t1) = 4*t0*t1
    std::vector<GradedForm<Rational>> images = {parse_t("t0 + t1", 2), parse_t("t0 - t1", 2)};
    CHECK(substitute_linear(f, images) == parse_t("4*t0*t1", 2));
}
