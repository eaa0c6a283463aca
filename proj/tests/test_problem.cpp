#include "sppde/errors.hpp"
#include "sppde/problem.hpp"

#include <doctest.h>

#include <cmath>

using namespace sppde;

namespace {

// deterministic point generator for property checks
struct Lcg {
    unsigned long long s = 0x9e3779b97f4a7c15ull;
    double next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(s >> 11) / 9007199254740992.0; // in [0,1)
    }
};

} // namespace

TEST_SUITE("problem") {

TEST_CASE("one-sided evaluation of the benchmark coefficients") {
    const Problem ex1 = builtin_example(1);
    CHECK(eval_field(ex1.a, 0.25, 0.37) == doctest::Approx(-1.1875).epsilon(1e-15));
    CHECK(eval_field(ex1.a, 0.25, 0.0) == doctest::Approx(-1.1875).epsilon(1e-15));

    const Problem ex2 = builtin_example(2);
    CHECK(eval_field(ex2.a, 0.5, 0.5, Side::RightLimit) == 1.0);
    CHECK(eval_field(ex2.a, 0.5, 0.5, Side::LeftLimit) == -1.0);
}

TEST_CASE("evaluation at the jump point requires a side") {
    const Problem ex1 = builtin_example(1);
    CHECK_THROWS_AS((void)eval_field(ex1.a, 0.5, 0.2), MissingSideError);
    CHECK_THROWS_AS((void)eval_field(ex1.f, 0.5, 0.2), MissingSideError);
}

TEST_CASE("evaluation outside the domain") {
    const Problem ex1 = builtin_example(1);
    CHECK_THROWS_AS((void)eval_field(ex1.a, -0.1, 0.2), OutOfDomainError);
    CHECK_THROWS_AS((void)eval_field(ex1.a, 1.1, 0.2), OutOfDomainError);
    CHECK_THROWS_AS((void)eval_field(ex1.a, 0.5, -0.2, Side::LeftLimit), OutOfDomainError);
    CHECK_THROWS_AS((void)eval_field(ex1.a, 0.5, 1.5, Side::LeftLimit), OutOfDomainError);
}

TEST_CASE("away from d the side argument is irrelevant") {
    const Problem ex1 = builtin_example(1);
    Lcg rng;
    for (int k = 0; k < 200; ++k) {
        double x = rng.next();
        if (x == 0.5) continue;
        const double t = rng.next();
        const double plain = eval_field(ex1.f, x, t);
        CHECK(eval_field(ex1.f, x, t, Side::LeftLimit) == plain);
        CHECK(eval_field(ex1.f, x, t, Side::RightLimit) == plain);
    }
}

TEST_CASE("builtin example data matches the closed forms") {
    const Problem ex1 = builtin_example(1);
    CHECK(ex1.d == 0.5);
    CHECK(ex1.T == 1.0);
    CHECK(ex1.alpha1 == 1.0);
    CHECK(ex1.alpha2 == 1.0);
    CHECK(ex1.b(0.3, 0.7) == doctest::Approx(1.0 + std::exp(0.3)).epsilon(1e-15));
    CHECK(ex1.f.left(0.3, 0.5) == doctest::Approx(-2.0 * 1.09 * 0.5).epsilon(1e-15));
    CHECK(ex1.f.right(0.8, 0.25) == doctest::Approx(2.0 * 1.64 * 0.25).epsilon(1e-15));
    CHECK(ex1.p(0.4) == 0.0);
    CHECK(ex1.r(0.4) == 0.0);
    CHECK(ex1.q(0.4) == 0.0);

    const Problem ex2 = builtin_example(2);
    CHECK(ex2.b(0.9, 0.1) == 0.0);
    CHECK(ex2.f.left(0.25, 0.5) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(ex2.f.right(0.75, 0.5) == doctest::Approx(0.25).epsilon(1e-15));

    CHECK_THROWS_AS((void)builtin_example(3), UnknownExampleError);
    CHECK_THROWS_AS((void)builtin_example(0), UnknownExampleError);
}

TEST_CASE("builtin_example is pure") {
    const Problem a = builtin_example(1);
    const Problem b = builtin_example(1);
    Lcg rng;
    for (int k = 0; k < 50; ++k) {
        const double x = rng.next(), t = rng.next();
        CHECK(eval_field(a.a, x, t, Side::LeftLimit) == eval_field(b.a, x, t, Side::LeftLimit));
        CHECK(eval_field(a.f, x, t, Side::RightLimit) == eval_field(b.f, x, t, Side::RightLimit));
        CHECK(a.b(x, t) == b.b(x, t));
    }
}

TEST_CASE("signed magnitude of a is at least 1 on both sides") {
    for (int id : {1, 2}) {
        const Problem prob = builtin_example(id);
        for (int i = 0; i <= 16; ++i) {
            for (int j = 0; j <= 16; ++j) {
                const double t = prob.T * j / 16.0;
                const double xl = prob.d * i / 16.0;
                const double xr = prob.d + (1.0 - prob.d) * i / 16.0;
                CHECK(prob.a.left(xl, t) <= -1.0);
                CHECK(prob.a.right(xr, t) >= 1.0);
            }
        }
    }
}

TEST_CASE("validate_problem accepts the benchmarks") {
    for (int id : {1, 2}) {
        const auto diags = validate_problem(builtin_example(id), 16);
        CHECK(diags.empty());
    }
}

TEST_CASE("validate_problem flags a sign-bound violation") {
    Problem prob = builtin_example(2);
    prob.alpha1 = 2.0; // a == -1 cannot satisfy a <= -2
    const auto diags = validate_problem(prob, 8);
    REQUIRE(!diags.empty());
    bool found = false;
    for (const auto& d : diags) {
        if (d.kind == DiagnosticKind::Violation && d.message.find("alpha1") != std::string::npos) {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("validate_problem flags b below beta") {
    Problem prob = builtin_example(2);
    prob.beta = 0.5; // b == 0
    const auto diags = validate_problem(prob, 4);
    REQUIRE(!diags.empty());
    CHECK(diags.front().kind == DiagnosticKind::Violation);
    CHECK(diags.front().message.find("b < beta") != std::string::npos);
}

TEST_CASE("corner incompatibility is a warning, not a violation") {
    Problem prob = builtin_example(1);
    prob.q = [](double) { return 1.0; }; // q(0) = 1 vs p(0) = 0
    const auto diags = validate_problem(prob, 8);
    REQUIRE(!diags.empty());
    for (const auto& d : diags) CHECK(d.kind == DiagnosticKind::Warning);
    CHECK(diags.front().message.find("q(0) != p(0)") != std::string::npos);
}

} // TEST_SUITE
