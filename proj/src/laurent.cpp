#include "specnet/laurent.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace specnet {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) { trim(); }

Monomial Monomial::variable(int index, int power) {
    if (index < 0) throw std::invalid_argument("negative variable index");
    std::vector<int> e(static_cast<std::size_t>(index) + 1, 0);
    e[static_cast<std::size_t>(index)] = power;
    return Monomial(std::move(e));
}

void Monomial::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> r(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
    return Monomial(std::move(r));
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
    std::vector<int> r(e_);
    for (int& x : r) x *= k;
    return Monomial(std::move(r));
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

std::string variable_name(const VariableNames& names, std::size_t i) {
    if (i < names.size()) return names[i];
    return "s" + std::to_string(i + 1);
}

LaurentPoly::LaurentPoly(int c) {
    if (c != 0) terms_.emplace(Monomial{}, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::term(const Monomial& m, const Integer& c) {
    LaurentPoly p;
    p.add_term(m, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int index, int power) {
    return term(Monomial::variable(index, power));
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

std::size_t LaurentPoly::nvars() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return n;
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_unit()) throw NonUnitError("inverse of a non-unit Laurent polynomial: " + to_string());
    const auto& [m, c] = *terms_.begin();
    return term(m.inverse(), c);
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    LaurentPoly r(1), b(*this);
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        LaurentPoly t(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            LaurentPoly base = i < images.size() ? images[i] : LaurentPoly::variable(static_cast<int>(i));
            t *= base.pow(m[i]);
        }
        out += t;
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

std::string LaurentPoly::to_string(const VariableNames& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || m.is_one()) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << '*';
            os << variable_name(names, i);
            if (m[i] != 1) os << '^' << m[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace {

class Parser {
public:
    Parser(std::string_view s, const VariableNames& names) : s_(s), names_(names) {}

    LaurentPoly parse() {
        LaurentPoly p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("Laurent polynomial parse error at offset " + std::to_string(i_) + ": " + what +
                         " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    LaurentPoly expr() {
        LaurentPoly acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        LaurentPoly t = product();
        acc += neg ? -t : t;
        for (;;) {
            if (eat('+')) acc += product();
            else if (eat('-')) acc -= product();
            else break;
        }
        return acc;
    }

    LaurentPoly product() {
        LaurentPoly acc = power();
        for (;;) {
            if (eat('*')) acc *= power();
            else if (eat('/')) {
                LaurentPoly d = power();
                if (!d.is_unit()) fail("division by a non-unit");
                acc *= d.inverse();
            } else break;
        }
        return acc;
    }

    int signed_int() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else if (eat('(')) {
            int v = signed_int();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected integer exponent");
        int v = std::stoi(std::string(s_.substr(b, i_ - b)));
        return neg ? -v : v;
    }

    LaurentPoly power() {
        LaurentPoly base = atom();
        if (eat('^')) base = base.pow(signed_int());
        return base;
    }

    LaurentPoly atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            LaurentPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++i_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t b = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return LaurentPoly(Integer(std::string(s_.substr(b, i_ - b))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t b = i_;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\''))
                ++i_;
            std::string name(s_.substr(b, i_ - b));
            for (std::size_t k = 0; k < names_.size(); ++k)
                if (names_[k] == name) return LaurentPoly::variable(static_cast<int>(k));
            if (name.size() > 1 && name[0] == 's' &&
                name.find_first_not_of("0123456789", 1) == std::string::npos) {
                int idx = std::stoi(name.substr(1));
                if (idx >= 1) return LaurentPoly::variable(idx - 1);
            }
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    const VariableNames& names_;
    std::size_t i_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const VariableNames& names) {
    return Parser(text, names).parse();
}

}  // namespace specnet
