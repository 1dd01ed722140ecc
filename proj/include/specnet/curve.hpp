#pragma once

#include "specnet/laurent.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace specnet {

struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using cplx = std::complex<double>;

// Univariate polynomial, coefficients in increasing degree.
using RationalPoly = std::vector<Rational>;

// P(z, w) = w^n + sum_{k<n} a_k(z) w^k with rational coefficients.
class SpectralCurve {
public:
    SpectralCurve() = default;
    // coeffs[k] = a_k(z); the leading coefficient a_n = 1 is implied
    SpectralCurve(std::vector<RationalPoly> coeffs, std::string base = "z");

    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<RationalPoly>& coefficients() const { return coeffs_; }
    const std::string& base_variable() const { return base_; }

    // P(z, .) as a monic polynomial in w (increasing degree, length n + 1).
    std::vector<cplx> fiber(cplx z) const;
    cplx eval(cplx z, cplx w) const;
    cplx dz(cplx z, cplx w) const;  // dP/dz
    cplx dw(cplx z, cplx w) const;  // dP/dw
    cplx dww(cplx z, cplx w) const; // d^2P/dw^2
    // Leading growth of the sheets at infinity: lambda ~ z^p.
    double growth() const;
    std::string to_string() const;

private:
    std::vector<RationalPoly> coeffs_;
    std::string base_ = "z";
};

// "w^3 - 3*w + x": w is the fiber variable, the other name is the base.
SpectralCurve parse_curve(const std::string& text);

// Resultant of P and dP/dw in w, exact.
RationalPoly discriminant(const SpectralCurve& c);

struct BranchPoint {
    cplx z;
    bool simple = true;
};

// Roots of the discriminant, Newton-polished; throws on non-simple ones.
std::vector<BranchPoint> branch_points(const SpectralCurve& c);

// Roots of P(z, .), refined from `seed` when given and matched to it in order.
std::vector<cplx> sheets_at(const SpectralCurve& c, cplx z, const std::vector<cplx>& seed = {});

// Polynomial helpers exposed for tests.
RationalPoly poly_derivative(const RationalPoly& p);
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);
std::vector<cplx> poly_roots(const RationalPoly& p);

}  // namespace specnet
