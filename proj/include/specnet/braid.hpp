#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specnet {

struct BraidError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Positive braid word; letters are 1-based generators sigma_1..sigma_{n-1}.
// sigma_1 crosses the two bottom strands.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord make_braid(int strands, std::vector<int> letters);
// "3: 2 1 2", "n=2; 1^6", "2: s1 s1 s1"
BraidWord parse_braid(std::string_view text);
BraidWord concat(const BraidWord& a, const BraidWord& b);

// 0-based images; transposition(g) swaps strands g and g+1 (1-based).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int g);
    static Permutation longest(int n);

    int size() const { return static_cast<int>(p_.size()); }
    int operator()(int i) const { return p_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& images() const { return p_; }

    // (a * b)(i) = a(b(i))
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    int length() const;
    bool is_involution() const { return (*this * *this) == identity(size()); }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> p_;
};

Permutation permutation_of(const BraidWord& w);
// 0-Hecke product: w * s = ws if that is longer, w otherwise.
Permutation demazure_product(const BraidWord& w);
bool is_reduced(const BraidWord& w);

enum class ChordReading { right_to_left, left_to_right };

struct ChordLabeling {
    std::vector<std::string> beta_chords;   // by position in beta, left to right
    std::vector<std::string> delta_chords;  // by position in delta, left to right
    std::vector<std::string> marked_points; // t1..tn, t1 on the bottom strand
    ChordReading reading = ChordReading::right_to_left;

    // 1-based chord number of a beta position under the reading direction.
    int beta_number(int position) const;
    int delta_number(int position) const;
    // Chords in canonical order: z1.., w1.., t1..
    std::vector<std::string> all() const;
};

ChordLabeling label_chords(const BraidWord& beta, const BraidWord& delta,
                           ChordReading reading = ChordReading::right_to_left);

}  // namespace specnet
