#include "doctest.h"
#include "specnet/curve.hpp"

#include <algorithm>
#include <numbers>

using namespace specnet;

namespace {

cplx at(const RationalPoly& p, cplx z) {
    cplx v = 0;
    for (auto k = p.size(); k-- > 0;) v = v * z + p[k].convert_to<double>();
    return v;
}

RationalPoly poly(std::initializer_list<long> c) {
    RationalPoly p;
    for (long x : c) p.emplace_back(x);
    return p;
}

// Res_w(P, P_w) through the roots of the fiber: prod P_w(w_i).
cplx resultant_oracle(const SpectralCurve& c, cplx z) {
    cplx r = 1;
    for (cplx w : sheets_at(c, z)) r *= c.dw(z, w);
    return r;
}

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("discriminants") {
    auto airy = parse_curve("w^2 - z");
    auto bnr = parse_curve("w^3 - 3*w + x");
    auto d1 = discriminant(airy), d3 = discriminant(bnr);
    // w^2 - z: -4z;  w^3 - 3w + x: -(108 - 27 x^2)
    CHECK(d1 == poly({0, -4}));
    CHECK(d3 == poly({-108, 0, 27}));
    for (auto& c : {airy, bnr, parse_curve("w^3 + z^2*w - 1"), parse_curve("w^4 - z")}) {
        auto d = discriminant(c);
        for (cplx z : {cplx(0.3, 0.1), cplx(-1.2, 0.7), cplx(2.5, -1)}) CHECK(close(at(d, z), resultant_oracle(c, z), 1e-9));
    }
}

TEST_CASE("branch points") {
    auto b = branch_points(parse_curve("w^2 - z"));
    REQUIRE(b.size() == 1);
    CHECK(std::abs(b[0].z) < 1e-9);

    auto bnr = branch_points(parse_curve("w^3 - 3*w + x"));
    REQUIRE(bnr.size() == 2);
    std::vector<double> re{bnr[0].z.real(), bnr[1].z.real()};
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-2).epsilon(1e-9));
    CHECK(re[1] == doctest::Approx(2).epsilon(1e-9));
    for (const auto& p : bnr) CHECK(std::abs(p.z.imag()) < 1e-9);

    CHECK(branch_points(parse_curve("w^2 - 1")).empty());
    // the two sheets of w^2 = z^2 meet to second order at 0
    CHECK_THROWS_AS(branch_points(parse_curve("w^2 - z^2")), CurveError);
}

TEST_CASE("sheets") {
    auto airy = parse_curve("w^2 - z");
    auto s = sheets_at(airy, 1);
    REQUIRE(s.size() == 2);
    std::sort(s.begin(), s.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    CHECK(close(s[0], -1, 1e-12));
    CHECK(close(s[1], 1, 1e-12));

    auto bnr = parse_curve("w^3 - 3*w + x");
    auto r = sheets_at(bnr, 0);
    std::vector<double> re;
    for (cplx w : r) {
        re.push_back(w.real());
        CHECK(std::abs(w.imag()) < 1e-12);
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-std::sqrt(3.0)));
    CHECK(re[1] == doctest::Approx(0).epsilon(1e-12));
    CHECK(re[2] == doctest::Approx(std::sqrt(3.0)));
    for (cplx w : r) CHECK(std::abs(bnr.eval(0, w)) < 1e-12);
}

TEST_CASE("continuing sheets around a branch point swaps two of them") {
    auto bnr = parse_curve("w^3 - 3*w + x");
    const double pi = std::numbers::pi;
    auto start = sheets_at(bnr, cplx(2.5, 0));
    auto cur = start;
    for (int k = 1; k <= 400; ++k) cur = sheets_at(bnr, cplx(2, 0) + 0.5 * std::polar(1.0, 2 * pi * k / 400), cur);
    int fixed = 0;
    for (std::size_t i = 0; i < 3; ++i) fixed += std::abs(cur[i] - start[i]) < 1e-9;
    CHECK(fixed == 1);
    auto a = start, b = cur;
    auto by_re = [](cplx x, cplx y) { return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag()); };
    std::sort(a.begin(), a.end(), by_re), std::sort(b.begin(), b.end(), by_re);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);

    // a loop enclosing no branch point returns every sheet to itself
    auto here = sheets_at(bnr, cplx(0.5, 0));
    auto back = here;
    for (int k = 1; k <= 400; ++k) back = sheets_at(bnr, 0.5 * std::polar(1.0, 2 * pi * k / 400), back);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(back[i] - here[i]) < 1e-9);
}

TEST_CASE("growth at infinity") {
    CHECK(parse_curve("w^2 - z").growth() == doctest::Approx(0.5));
    CHECK(parse_curve("w^3 - 3*w + x").growth() == doctest::Approx(1.0 / 3));
    CHECK(parse_curve("w^2 - z^3 + 1").growth() == doctest::Approx(1.5));
}

TEST_CASE("parsing curves") {
    auto c = parse_curve("w^3 - 3*w + x");
    CHECK(c.degree() == 3);
    CHECK(c.base_variable() == "x");
    CHECK(parse_curve(c.to_string()).coefficients() == c.coefficients());
    CHECK(parse_curve("(w - 1)*(w + 1) - z/2").coefficients() == parse_curve("w^2 - 1 - 1/2*z").coefficients());
    CHECK(parse_curve("w^2 - 1").base_variable() == "z");

    CHECK_THROWS_AS(parse_curve("2*w^2 - z"), CurveError);     // not monic
    CHECK_THROWS_AS(parse_curve("w - z"), CurveError);         // one sheet
    CHECK_THROWS_AS(parse_curve("w^2 - x*y"), CurveError);     // two base variables
    CHECK_THROWS_AS(parse_curve("w^2 - 1/z"), CurveError);     // not polynomial
    CHECK_THROWS_AS(parse_curve("(w - z)^2"), CurveError);     // repeated sheet
    CHECK_THROWS_AS(parse_curve("w^2 - z +"), CurveError);
}

TEST_CASE("polynomial helpers") {
    auto p = poly({-1, 0, 1}); // z^2 - 1
    CHECK(poly_derivative(p) == poly({0, 2}));
    auto g = poly_gcd(poly({-1, 0, 1}), poly({1, 1}));
    REQUIRE(g.size() == 2);
    CHECK(g[0] == g[1]);
    auto roots = poly_roots(poly({6, -5, 1}));
    std::vector<double> re;
    for (cplx r : roots) re.push_back(r.real());
    std::sort(re.begin(), re.end());
    REQUIRE(re.size() == 2);
    CHECK(re[0] == doctest::Approx(2));
    CHECK(re[1] == doctest::Approx(3));
}
