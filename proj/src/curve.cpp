#include "specnet/curve.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace specnet {

namespace {

Rational rat(long long v) { return Rational(v); }

void trim(RationalPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

cplx eval_poly(const RationalPoly& p, cplx z) {
    cplx r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + static_cast<double>(*it);
    return r;
}

Rational eval_poly(const RationalPoly& p, const Rational& z) {
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + *it;
    return r;
}

// Bivariate polynomial keyed by (z power, w power).
using Poly2 = std::map<std::pair<int, int>, Rational>;

Poly2 add(Poly2 a, const Poly2& b, int sign = 1) {
    for (const auto& [k, v] : b) {
        a[k] += sign > 0 ? v : Rational(-v);
        if (a[k] == 0) a.erase(k);
    }
    return a;
}

Poly2 mul(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            auto k = std::pair{ka.first + kb.first, ka.second + kb.second};
            r[k] += va * vb;
            if (r[k] == 0) r.erase(k);
        }
    return r;
}

class CurveParser {
public:
    explicit CurveParser(const std::string& s) : s_(s) {}

    Poly2 parse() {
        Poly2 p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }
    std::string base() const { return base_.empty() ? "z" : base_; }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw CurveError("curve parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly2 expr() {
        Poly2 r = term();
        for (;;) {
            if (eat('+')) r = add(r, term());
            else if (eat('-')) r = add(r, term(), -1);
            else return r;
        }
    }

    Poly2 term() {
        Poly2 r = factor();
        for (;;) {
            if (eat('*')) {
                r = mul(r, factor());
            } else if (eat('/')) {
                Poly2 d = factor();
                if (d.size() != 1 || d.begin()->first != std::pair{0, 0}) fail("division by a non-constant");
                Rational inv = Rational(1) / d.begin()->second;
                for (auto& [k, v] : r) v *= inv;
            } else {
                return r;
            }
        }
    }

    Poly2 factor() {
        if (eat('-')) return mul({{{0, 0}, rat(-1)}}, factor());
        if (eat('+')) return factor();
        Poly2 base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            Poly2 r{{{0, 0}, rat(1)}};
            for (int i = 0; i < e; ++i) r = mul(r, base);
            return r;
        }
        return base;
    }

    Poly2 primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly2 r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Rational v(boost::multiprecision::cpp_int(s_.substr(start, pos_ - start)));
            if (v == 0) return {};
            return {{{0, 0}, v}};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "w") return {{{0, 1}, rat(1)}};
            if (base_.empty()) base_ = name;
            else if (base_ != name) fail("second base variable '" + name + "' (already using '" + base_ + "')");
            return {{{1, 0}, rat(1)}};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::string base_;
};

// Determinant by fraction-based elimination.
Rational determinant(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// Sylvester resultant of two polynomials in w (increasing degree).
Rational resultant(const RationalPoly& f, const RationalPoly& g) {
    int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    int N = m + n;
    std::vector<std::vector<Rational>> S(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) S[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g[static_cast<std::size_t>(n - k)];
    return determinant(std::move(S));
}

RationalPoly poly_rem(RationalPoly a, const RationalPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

cplx newton_root(const RationalPoly& p, cplx x) {
    RationalPoly d = poly_derivative(p);
    for (int it = 0; it < 50; ++it) {
        cplx fd = eval_poly(d, x);
        if (std::abs(fd) == 0) break;
        cplx step = eval_poly(p, x) / fd;
        x -= step;
        if (std::abs(step) <= 1e-16 * (1 + std::abs(x))) break;
    }
    return x;
}

std::vector<cplx> monic_roots(const std::vector<cplx>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    if (n == 1) return {-coeffs[0] / coeffs[1]};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs[static_cast<std::size_t>(n)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> r;
    for (int i = 0; i < n; ++i) r.push_back(es.eigenvalues()(i));
    return r;
}

}  // namespace

SpectralCurve::SpectralCurve(std::vector<RationalPoly> coeffs, std::string base)
    : coeffs_(std::move(coeffs)), base_(std::move(base)) {
    for (auto& c : coeffs_) trim(c);
    if (degree() < 2) throw CurveError("spectral curve must have degree at least 2 in w");
}

std::vector<cplx> SpectralCurve::fiber(cplx z) const {
    std::vector<cplx> f;
    for (const auto& a : coeffs_) f.push_back(eval_poly(a, z));
    f.push_back(1.0);
    return f;
}

cplx SpectralCurve::eval(cplx z, cplx w) const {
    auto f = fiber(z);
    cplx r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * w + *it;
    return r;
}

cplx SpectralCurve::dz(cplx z, cplx w) const {
    cplx r = 0, wk = 1;
    for (const auto& a : coeffs_) {
        r += eval_poly(poly_derivative(a), z) * wk;
        wk *= w;
    }
    return r;
}

cplx SpectralCurve::dw(cplx z, cplx w) const {
    auto f = fiber(z);
    cplx r = 0;
    for (std::size_t k = f.size() - 1; k >= 1; --k) r = r * w + static_cast<double>(k) * f[k];
    return r;
}

cplx SpectralCurve::dww(cplx z, cplx w) const {
    auto f = fiber(z);
    cplx r = 0;
    for (std::size_t k = f.size() - 1; k >= 2; --k) r = r * w + static_cast<double>(k * (k - 1)) * f[k];
    return r;
}

double SpectralCurve::growth() const {
    double p = 0;
    int n = degree();
    for (int k = 0; k < n; ++k) {
        const auto& a = coeffs_[static_cast<std::size_t>(k)];
        if (a.empty()) continue;
        p = std::max(p, static_cast<double>(a.size() - 1) / (n - k));
    }
    return p;
}

std::string SpectralCurve::to_string() const {
    std::ostringstream os;
    os << "w^" << degree();
    for (int k = degree() - 1; k >= 0; --k) {
        const auto& a = coeffs_[static_cast<std::size_t>(k)];
        for (int e = static_cast<int>(a.size()) - 1; e >= 0; --e) {
            Rational c = a[static_cast<std::size_t>(e)];
            if (c == 0) continue;
            os << (c < 0 ? " - " : " + ");
            Rational m = c < 0 ? Rational(-c) : c;
            bool unit = m == 1 && (e > 0 || k > 0);
            if (!unit) os << m;
            std::string mono;
            if (e > 0) mono += base_ + (e > 1 ? "^" + std::to_string(e) : "");
            if (k > 0) mono += (mono.empty() ? "" : "*") + std::string("w") + (k > 1 ? "^" + std::to_string(k) : "");
            if (!mono.empty()) os << (unit ? "" : "*") << mono;
        }
    }
    return os.str();
}

SpectralCurve parse_curve(const std::string& text) {
    CurveParser p(text);
    Poly2 P = p.parse();
    int n = 0;
    for (const auto& [k, v] : P) n = std::max(n, k.second);
    if (n < 2) throw CurveError("spectral curve must have degree at least 2 in w");
    for (const auto& [k, v] : P)
        if (k.second == n && (k.first != 0 || v != 1))
            throw CurveError("spectral curve must be monic in w (leading coefficient 1)");
    std::vector<RationalPoly> coeffs(static_cast<std::size_t>(n));
    for (const auto& [k, v] : P) {
        if (k.second == n) continue;
        auto& a = coeffs[static_cast<std::size_t>(k.second)];
        if (a.size() <= static_cast<std::size_t>(k.first)) a.resize(static_cast<std::size_t>(k.first) + 1);
        a[static_cast<std::size_t>(k.first)] = v;
    }
    SpectralCurve c(std::move(coeffs), p.base());
    auto d = discriminant(c);
    if (d.empty()) throw CurveError("discriminant vanishes identically (repeated sheets)");
    return c;
}

RationalPoly poly_derivative(const RationalPoly& p) {
    RationalPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
    trim(d);
    return d;
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RationalPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

std::vector<cplx> poly_roots(const RationalPoly& p0) {
    RationalPoly p = p0;
    trim(p);
    std::vector<cplx> c;
    for (const auto& x : p) c.push_back(static_cast<double>(x));
    auto r = monic_roots(c);
    for (auto& x : r) x = newton_root(p, x);
    std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
    return r;
}

RationalPoly discriminant(const SpectralCurve& c) {
    int n = c.degree();
    std::size_t maxdeg = 0;
    for (const auto& a : c.coefficients()) maxdeg = std::max(maxdeg, a.size());
    int bound = (2 * n - 1) * static_cast<int>(maxdeg > 0 ? maxdeg - 1 : 0);
    // resultant at integer sample points, then Newton interpolation
    std::vector<Rational> xs, ys;
    for (int s = 0; s <= bound; ++s) {
        Rational z(s);
        RationalPoly f;
        for (const auto& a : c.coefficients()) f.push_back(eval_poly(a, z));
        f.push_back(1);
        RationalPoly g;
        for (std::size_t k = 1; k < f.size(); ++k) g.push_back(f[k] * static_cast<long long>(k));
        xs.push_back(z);
        ys.push_back(resultant(f, g));
    }
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < xs.size(); ++level)
        for (std::size_t i = xs.size() - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    RationalPoly result{dd.back()};
    for (std::size_t i = xs.size() - 1; i-- > 0;) {
        // result = result * (z - xs[i]) + dd[i]
        RationalPoly next(result.size() + 1);
        for (std::size_t k = 0; k < result.size(); ++k) {
            next[k + 1] += result[k];
            next[k] -= result[k] * xs[i];
        }
        next[0] += dd[i];
        result = std::move(next);
    }
    trim(result);
    return result;
}

std::vector<BranchPoint> branch_points(const SpectralCurve& c) {
    RationalPoly d = discriminant(c);
    if (d.size() <= 1) return {};
    RationalPoly g = poly_gcd(d, poly_derivative(d));
    std::vector<BranchPoint> out;
    for (cplx z : poly_roots(d)) {
        BranchPoint b{z, true};
        if (g.size() > 1 && std::abs(eval_poly(g, z)) < 1e-8 * (1 + std::abs(eval_poly(poly_derivative(g), z))))
            b.simple = false;
        out.push_back(b);
    }
    for (const auto& b : out)
        if (!b.simple) {
            std::ostringstream os;
            os << "non-simple branch point at z = " << b.z.real() << (b.z.imag() < 0 ? "" : "+") << b.z.imag() << "i";
            throw CurveError(os.str());
        }
    // repeated roots of d are reported once
    return out;
}

std::vector<cplx> sheets_at(const SpectralCurve& c, cplx z, const std::vector<cplx>& seed) {
    auto f = c.fiber(z);
    auto polish = [&](cplx w) {
        for (int it = 0; it < 60; ++it) {
            cplx p = 0, dp = 0;
            for (auto k = f.size(); k-- > 0;) {
                dp = dp * w + p;
                p = p * w + f[k];
            }
            if (std::abs(dp) == 0) break;
            cplx step = p / dp;
            w -= step;
            if (std::abs(step) <= 1e-15 * (1 + std::abs(w))) break;
        }
        return w;
    };
    auto roots = monic_roots(f);
    for (auto& r : roots) r = polish(r);
    if (seed.empty()) return roots;
    if (seed.size() != roots.size()) throw CurveError("sheet seed has the wrong number of roots");
    std::vector<cplx> out;
    std::vector<bool> used(roots.size(), false);
    double scale = 1;
    for (auto r : roots) scale = std::max(scale, std::abs(r));
    for (cplx s : seed) {
        std::size_t best = roots.size();
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (best == roots.size() || std::abs(roots[k] - s) < std::abs(roots[best] - s)) best = k;
        // the nearest root must be unambiguous
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (k != best && std::abs(roots[k] - roots[best]) < 1e-9 * scale)
                throw CurveError("root collision while continuing sheets");
        if (used[best]) throw CurveError("root collision while continuing sheets");
        used[best] = true;
        out.push_back(roots[best]);
    }
    return out;
}

}  // namespace specnet
