#include "specnet/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace specnet {

BraidWord make_braid(int strands, std::vector<int> letters) {
    if (strands < 2) throw BraidError("braid needs at least two strands");
    for (int g : letters)
        if (g < 1 || g >= strands)
            throw BraidError("letter " + std::to_string(g) + " outside 1.." + std::to_string(strands - 1));
    return BraidWord{strands, std::move(letters)};
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    os << strands << ':';
    for (int g : letters) os << ' ' << g;
    return os.str();
}

BraidWord parse_braid(std::string_view text) {
    std::string s(text);
    auto colon = s.find_first_of(":;");
    if (colon == std::string::npos) throw BraidError("braid text needs '<strands>: letters'");
    std::string head = s.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }),
               head.end());
    if (head.rfind("n=", 0) == 0) head = head.substr(2);
    int n = 0;
    try {
        n = std::stoi(head);
    } catch (const std::exception&) {
        throw BraidError("bad strand count '" + head + "'");
    }
    std::string body = s.substr(colon + 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream is(body);
    std::vector<int> letters;
    std::string tok;
    while (is >> tok) {
        if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) tok = tok.substr(1);
        int power = 1;
        auto caret = tok.find('^');
        try {
            if (caret != std::string::npos) {
                power = std::stoi(tok.substr(caret + 1));
                tok = tok.substr(0, caret);
            }
            int g = std::stoi(tok);
            if (power < 0) throw BraidError("negative powers are not positive braids");
            for (int k = 0; k < power; ++k) letters.push_back(g);
        } catch (const BraidError&) {
            throw;
        } catch (const std::exception&) {
            throw BraidError("bad braid letter '" + tok + "'");
        }
    }
    return make_braid(n, std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw BraidError("concatenating braids on different strand counts");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Permutation::Permutation(std::vector<int> images) : p_(std::move(images)) {
    std::vector<int> seen(p_.size(), 0);
    for (int x : p_) {
        if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]++)
            throw std::invalid_argument("not a permutation");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int g) {
    if (g < 1 || g >= n) throw BraidError("transposition index out of range");
    auto p = identity(n).p_;
    std::swap(p[static_cast<std::size_t>(g - 1)], p[static_cast<std::size_t>(g)]);
    return Permutation(std::move(p));
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - i;
    return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (o.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> r(p_.size());
    for (int i = 0; i < size(); ++i) r[static_cast<std::size_t>(i)] = (*this)(o(i));
    return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
    std::vector<int> r(p_.size());
    for (int i = 0; i < size(); ++i) r[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(r));
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

Permutation permutation_of(const BraidWord& w) {
    Permutation p = Permutation::identity(w.strands);
    for (int g : w.letters) p = p * Permutation::transposition(w.strands, g);
    return p;
}

Permutation demazure_product(const BraidWord& w) {
    Permutation p = Permutation::identity(w.strands);
    for (int g : w.letters) {
        Permutation q = p * Permutation::transposition(w.strands, g);
        if (q.length() > p.length()) p = q;
    }
    return p;
}

bool is_reduced(const BraidWord& w) {
    return permutation_of(w).length() == static_cast<int>(w.size());
}

int ChordLabeling::beta_number(int position) const {
    int n = static_cast<int>(beta_chords.size());
    if (position < 0 || position >= n) throw std::out_of_range("beta chord position");
    return reading == ChordReading::right_to_left ? n - position : position + 1;
}

int ChordLabeling::delta_number(int position) const {
    int n = static_cast<int>(delta_chords.size());
    if (position < 0 || position >= n) throw std::out_of_range("delta chord position");
    return reading == ChordReading::right_to_left ? n - position : position + 1;
}

std::vector<std::string> ChordLabeling::all() const {
    std::vector<std::string> r;
    auto by_number = [&](const std::vector<std::string>& v, char c) {
        for (std::size_t k = 1; k <= v.size(); ++k) r.push_back(std::string(1, c) + std::to_string(k));
    };
    by_number(beta_chords, 'z');
    by_number(delta_chords, 'w');
    r.insert(r.end(), marked_points.begin(), marked_points.end());
    return r;
}

ChordLabeling label_chords(const BraidWord& beta, const BraidWord& delta, ChordReading reading) {
    if (!delta.empty() && delta.strands != beta.strands)
        throw BraidError("beta and delta have different strand counts");
    ChordLabeling l;
    l.reading = reading;
    l.beta_chords.resize(beta.size());
    l.delta_chords.resize(delta.size());
    for (std::size_t p = 0; p < beta.size(); ++p)
        l.beta_chords[p] = "z" + std::to_string(l.beta_number(static_cast<int>(p)));
    for (std::size_t p = 0; p < delta.size(); ++p)
        l.delta_chords[p] = "w" + std::to_string(l.delta_number(static_cast<int>(p)));
    for (int i = 1; i <= beta.strands; ++i) l.marked_points.push_back("t" + std::to_string(i));
    return l;
}

}  // namespace specnet
