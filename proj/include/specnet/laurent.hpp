#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specnet {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exponent vector over the generators; trailing zeros are trimmed so equal
// monomials compare equal regardless of how many variables were touched.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    static Monomial variable(int index, int power = 1);

    int operator[](std::size_t i) const { return i < e_.size() ? e_[i] : 0; }
    std::size_t size() const { return e_.size(); }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const;
    bool is_one() const { return e_.empty(); }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    void trim();
    std::vector<int> e_;
};

// Graded reverse lexicographic order, largest first.
bool degrevlex_less(const Monomial& a, const Monomial& b);
struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

using VariableNames = std::vector<std::string>;
std::string variable_name(const VariableNames& names, std::size_t i);

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Integer, DegRevLexGreater>;

    LaurentPoly() = default;
    LaurentPoly(int c);
    LaurentPoly(const Integer& c);

    static LaurentPoly term(const Monomial& m, const Integer& c = 1);
    static LaurentPoly variable(int index, int power = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // A unit of Z[s^{+-1}] is +-(monomial).
    bool is_unit() const;
    std::size_t nvars() const;

    LaurentPoly inverse() const;
    LaurentPoly pow(int k) const;
    // Ring map s_i -> images[i]. Negative powers need unit images.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string to_string(const VariableNames& names = {}) const;

private:
    void add_term(const Monomial& m, const Integer& c);
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Accepts the canonical printed form plus parentheses, '/' by units and '^'.
LaurentPoly parse_laurent(std::string_view text, const VariableNames& names = {});

}  // namespace specnet

namespace Eigen {
template <>
struct NumTraits<specnet::LaurentPoly> : GenericNumTraits<specnet::LaurentPoly> {
    using Real = specnet::LaurentPoly;
    using NonInteger = specnet::LaurentPoly;
    using Nested = specnet::LaurentPoly;
    using Literal = specnet::LaurentPoly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
