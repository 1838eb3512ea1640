#include "soliton/errors.hpp"
#include "soliton/exactnum/matrix.hpp"
#include "soliton/exactnum/parse.hpp"
#include "soliton/exactnum/roots.hpp"
#include "soliton/varengine/ansatz.hpp"

#include <doctest.h>

#include <random>

using namespace soliton;
using namespace soliton::exactnum;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_deg = 3, long bound = 6) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<Rat> coeffs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) coeffs.emplace_back(c(rng));
    return Poly(coeffs);
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
    Poly den;
    do den = random_poly(rng, 2); while (den.is_zero());
    return RatFunc(random_poly(rng), den);
}

// Laplace expansion along the first row; exponential but fine for 6x6.
Rat cofactor_det(const Matrix<Rat>& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    Rat total;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        Matrix<Rat> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, k = 0; c < n; ++c)
                if (c != j) minor(r - 1, k++) = a(r, c);
        const Rat term = a(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace

TEST_SUITE("rat") {
    TEST_CASE("parse and print") {
        CHECK(Rat::parse("6/4") == Rat(3, 2));
        CHECK(Rat::parse(" -7 ").str() == "-7");
        CHECK(Rat::parse("+2/6").str() == "1/3");
        CHECK_THROWS_AS(Rat::parse("1/0"), DivisionByZero);
        CHECK_THROWS_AS(Rat::parse("abc"), ParseError);
    }

    TEST_CASE("division by zero") { CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero); }
}

TEST_SUITE("ratfunc") {
    TEST_CASE("telescoping sum collapses to one") {
        CHECK(RatFunc(Poly{1}, Poly{-1, 1}) + RatFunc(Poly{-2, 1}, Poly{-1, 1}) == RatFunc(1));
    }

    TEST_CASE("tau product") {
        CHECK("(n-2)/(2n)"_qn * RatFunc(Rat(1, 3)) == RatFunc(Poly{-2, 1}, Poly{0, 6}));
    }

    TEST_CASE("common factor cancels") {
        const RatFunc r = "(3n-4)(5n-6)"_qn / "5n-6"_qn;
        CHECK(r == RatFunc(Poly{-4, 3}));
        CHECK(r.den() == Poly{1});
    }

    TEST_CASE("canonical denominator has positive lead and coprime integer form") {
        const RatFunc r(Poly{Rat(1, 2)}, Poly{Rat(4), Rat(-2)});
        CHECK(r.den().leading().sign() > 0);
        CHECK(r == RatFunc(Poly{-1}, Poly{-8, 4}));
        CHECK(r.str() == "-1/(4n - 8)");
    }

    TEST_CASE("evaluation") {
        CHECK("-(13n-38)/60"_qn.eval(Rat(4)) == Rat(-7, 30));
        CHECK("(n-2)/(6n)"_qn.eval(Rat(4)) == Rat(1, 12));
        CHECK_THROWS_AS("1/(3n-4)"_qn.eval(Rat(4, 3)), PoleAtPoint);
        CHECK_THROWS_AS("1/(5n-6)"_qn.eval(Rat(6, 5)), PoleAtPoint);
        CHECK_THROWS_AS("1/n"_qn.eval(Rat(0)), PoleAtPoint);
    }

    TEST_CASE("division by the zero element") { CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), DivisionByZero); }

    TEST_CASE("parser juxtaposition") {
        CHECK("675(3n-4)(5n-6)"_qn == RatFunc(Poly{16200, -25650, 10125}));
        CHECK("1/2n"_qn == RatFunc(Poly{0, Rat(1, 2)}));
        CHECK("n^3 - n"_qn == RatFunc(Poly{0, -1, 0, 1}));
        CHECK_THROWS_AS(parse_ratfunc("n^-1"), ParseError);
        CHECK_THROWS_AS(parse_ratfunc("(n+1"), ParseError);
    }

    TEST_CASE("field properties on random inputs") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            const RatFunc a = random_ratfunc(rng);
            RatFunc b;
            do b = random_ratfunc(rng); while (b.is_zero());
            const RatFunc c = random_ratfunc(rng);
            CHECK((a + b) - b == a);
            CHECK((a * b) / b == a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            for (long x = -3; x <= 3; ++x) {
                Rat ea, eb;
                try {
                    ea = a.eval(Rat(x));
                    eb = b.eval(Rat(x));
                } catch (const PoleAtPoint&) {
                    continue;
                }
                CHECK((a * b).eval(Rat(x)) == ea * eb);
            }
        }
    }
}

TEST_SUITE("matrix") {
    TEST_CASE("identity solve") {
        const auto id = Matrix<RatFunc>::identity(6);
        std::vector<RatFunc> e1(6);
        e1[0] = RatFunc(1);
        CHECK(solve(id, e1) == e1);
    }

    TEST_CASE("second-order correction system") {
        const auto& lm = varengine::laplacian_matrices();
        const auto op = varengine::shifted(lm.M, RatFunc(1), RatFunc(1));
        const std::vector<RatFunc> rhs{"n"_qn, "(3n-2)/4"_qn, "-(11n-10)/12"_qn, 0, 0, 0};
        const std::vector<RatFunc> want{"-n/3"_qn, "-(n-6)/60"_qn, "-(13n-38)/60"_qn, 0, 0, 0};
        CHECK(solve(op, rhs) == want);
    }

    TEST_CASE("cofactor determinants of the shifted Laplacians") {
        const auto& M = varengine::laplacian_matrices().M;
        const Matrix<Rat> two_plus = Rat(2) * Matrix<Rat>::identity(6) + M;
        CHECK(cofactor_det(two_plus) == Rat(256));
        CHECK(determinant(two_plus) == Rat(256));
        CHECK(cofactor_det(M) == Rat(0));
        CHECK(determinant(M) == Rat(0));
    }

    TEST_CASE("singular systems are reported") {
        const auto& M = varengine::laplacian_matrices().M;
        CHECK_THROWS_AS(solve(M.cast<RatFunc>(), std::vector<RatFunc>(6, RatFunc(1))), SingularMatrix);
        const Matrix<RatFunc> sym{{"n"_qn, "2n"_qn}, {"1"_qn, "2"_qn}};
        CHECK(determinant(sym).is_zero());
        CHECK_THROWS_AS(solve(sym, {RatFunc(1), RatFunc(0)}), SingularMatrix);
    }

    TEST_CASE("masked solve fixes the unmasked coordinates to zero") {
        const Matrix<Rat> a{{2, 0, 0}, {1, 3, 0}, {0, 0, 0}};
        const auto x = solve_masked(a, {4, 5, 0}, {true, true, false});
        CHECK(x == std::vector<Rat>{2, 1, 0});
    }

    TEST_CASE("solve then multiply reproduces rhs on random systems") {
        std::mt19937_64 rng(11);
        int solved = 0;
        for (int trial = 0; trial < 40; ++trial) {
            Matrix<RatFunc> a(3, 3);
            std::vector<RatFunc> b(3);
            for (std::size_t i = 0; i < 3; ++i) {
                b[i] = random_ratfunc(rng);
                for (std::size_t j = 0; j < 3; ++j) a(i, j) = RatFunc(random_poly(rng, 1, 4));
            }
            try {
                const auto x = solve(a, b);
                CHECK(a * x == b);
                ++solved;
            } catch (const SingularMatrix&) {
                CHECK(determinant(a).is_zero());
            }
        }
        CHECK(solved > 20);
    }
}

TEST_SUITE("roots") {
    TEST_CASE("examples") {
        CHECK(integer_roots(Poly{-2400, 2612, 3272, -4149, 840}).empty());
        CHECK(integer_roots(Poly{6, -5, 1}) == std::vector<Integer>{2, 3});
        CHECK(integer_roots(Poly{0, 0, 0, 1}) == std::vector<Integer>{0});
        CHECK_THROWS_AS(integer_roots(Poly{}), ZeroPolynomial);
    }

    TEST_CASE("rational coefficients and repeated roots") {
        CHECK(integer_roots(Poly{Rat(-1, 2), Rat(0), Rat(1, 2)}) == std::vector<Integer>{-1, 1});
        CHECK(integer_roots(Poly{4, -4, 1}) == std::vector<Integer>{2});
        CHECK(integer_roots(Poly{0, -6, 1}) == std::vector<Integer>{0, 6});
    }

    TEST_CASE("exhaustive sweep agrees with divisor candidates") {
        const std::vector<Poly> polys{Poly{-2400, 2612, 3272, -4149, 840}, Poly{6, -5, 1},
                                      Poly{0, 0, 0, 1}, Poly{-60, 47, -12, 1}, Poly{10000, 0, -1}};
        for (const auto& p : polys) {
            const auto roots = integer_roots(p);
            for (const auto& r : roots) CHECK(p.eval(Rat(r)).is_zero());
            std::vector<Integer> swept;
            for (long x = -10000; x <= 10000; ++x)
                if (p.eval(Rat(x)).is_zero()) swept.emplace_back(x);
            CHECK(swept == roots);
        }
    }
}
