#include "doctest.h"
#include "specnet/braid.hpp"

#include <random>

using namespace specnet;

namespace {

// Brute-force 0-Hecke product on image vectors: w <- w s_g when that is longer.
std::vector<int> hecke_oracle(int n, const std::vector<int>& letters) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i;
    auto inversions = [](const std::vector<int>& p) {
        int c = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
        return c;
    };
    for (int g : letters) {
        auto ws = w;
        std::swap(ws[static_cast<std::size_t>(g - 1)], ws[static_cast<std::size_t>(g)]);
        if (inversions(ws) > inversions(w)) w = ws;
    }
    return w;
}

// A reduced word for a permutation, by bubble sort of its images.
std::vector<int> reduced_word(Permutation p) {
    std::vector<int> img = p.images(), word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < img.size(); ++i)
            if (img[i] > img[i + 1]) {
                std::swap(img[i], img[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> random_letters(std::mt19937_64& rng, int n, int len) {
    std::uniform_int_distribution<int> g(1, n - 1);
    std::vector<int> w(static_cast<std::size_t>(len));
    for (auto& x : w) x = g(rng);
    return w;
}

// One random legal braid rewrite, if any applies.
bool rewrite(std::vector<int>& w, std::mt19937_64& rng) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (std::abs(w[i] - w[i + 1]) > 1) spots.push_back(i);
        if (i + 2 < w.size() && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) spots.push_back(i);
    }
    if (spots.empty()) return false;
    std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    if (std::abs(w[i] - w[i + 1]) > 1) {
        std::swap(w[i], w[i + 1]);
    } else {
        int a = w[i], b = w[i + 1];
        w[i] = b, w[i + 1] = a, w[i + 2] = b;
    }
    return true;
}

}  // namespace

TEST_CASE("parsing braid words") {
    CHECK(parse_braid("n=2; 1 1 1 1 1 1") == make_braid(2, {1, 1, 1, 1, 1, 1}));
    CHECK(parse_braid("n=3;") == make_braid(3, {}));
    CHECK(parse_braid("n=3; 2 1 2 1 2") == make_braid(3, {2, 1, 2, 1, 2}));
    CHECK(parse_braid("2: 1^6") == make_braid(2, {1, 1, 1, 1, 1, 1}));
    CHECK(parse_braid("3: s2, s1") == make_braid(3, {2, 1}));
    CHECK_THROWS_AS(parse_braid("n=2; 2"), BraidError);
    CHECK_THROWS_AS(parse_braid("n=3; 0"), BraidError);
    CHECK_THROWS_AS(parse_braid("n=3; 1 x"), BraidError);
    CHECK_THROWS_AS(parse_braid("1 2"), BraidError);
    CHECK_THROWS_AS(make_braid(1, {}), BraidError);
}

TEST_CASE("demazure product examples") {
    CHECK(demazure_product(make_braid(2, {1, 1})) == Permutation::transposition(2, 1));
    CHECK(demazure_product(make_braid(3, {})) == Permutation::identity(3));
    CHECK(demazure_product(make_braid(3, {2, 1, 2, 1, 2, 1, 2})) == Permutation::longest(3));
    CHECK(demazure_product(make_braid(3, {2, 1, 2, 1, 2})) == Permutation::longest(3));
    CHECK(Permutation::longest(4).length() == 6);
    CHECK(Permutation::longest(4).is_involution());
}

TEST_CASE("demazure product matches the brute-force 0-Hecke product") {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 60; ++trial) {
            auto w = random_letters(rng, n, trial % 12);
            CHECK(demazure_product(make_braid(n, w)).images() == hecke_oracle(n, w));
        }
}

TEST_CASE("demazure product is invariant under braid moves") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + trial % 3;
        auto w = random_letters(rng, n, 10);
        auto d = demazure_product(make_braid(n, w));
        auto p = permutation_of(make_braid(n, w));
        for (int k = 0; k < 8; ++k) rewrite(w, rng);
        CHECK(demazure_product(make_braid(n, w)) == d);
        CHECK(permutation_of(make_braid(n, w)) == p);
    }
}

TEST_CASE("0-Hecke idempotence") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 4;
        auto w = random_letters(rng, n, 8);
        auto d = demazure_product(make_braid(n, w));
        auto ww = w;
        ww.insert(ww.end(), w.begin(), w.end());
        auto wr = w;
        auto red = reduced_word(d);
        wr.insert(wr.end(), red.begin(), red.end());
        CHECK(demazure_product(make_braid(n, ww)) == demazure_product(make_braid(n, wr)));
        CHECK(is_reduced(make_braid(n, red)));
        CHECK(permutation_of(make_braid(n, red)) == d);
    }
}

TEST_CASE("permutation group laws") {
    auto a = Permutation({2, 0, 1, 3}), b = Permutation({1, 0, 3, 2});
    CHECK((a * b)(0) == a(b(0)));
    CHECK(a * a.inverse() == Permutation::identity(4));
    CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("chord labeling") {
    auto l = label_chords(make_braid(2, {1, 1, 1, 1, 1, 1}), make_braid(2, {1}));
    CHECK(l.beta_chords.size() == 6);
    CHECK(l.delta_chords == std::vector<std::string>{"w1"});
    CHECK(l.marked_points == std::vector<std::string>{"t1", "t2"});
    CHECK(l.all() == std::vector<std::string>{"z1", "z2", "z3", "z4", "z5", "z6", "w1", "t1", "t2"});

    auto l3 = label_chords(make_braid(3, {2, 1, 2, 1, 2, 1, 2}), make_braid(3, {1, 2, 1}));
    CHECK(l3.beta_chords.size() == 7);
    CHECK(l3.delta_chords.size() == 3);
    CHECK(l3.marked_points.size() == 3);

    auto empty = label_chords(make_braid(2, {}), make_braid(2, {}));
    CHECK(empty.beta_chords.empty());
    CHECK(empty.delta_chords.empty());
    CHECK(empty.marked_points.size() == 2);

    // the two reading directions number the same chords in opposite orders
    auto rl = label_chords(make_braid(2, {1, 1, 1}), make_braid(2, {1}), ChordReading::right_to_left);
    auto lr = label_chords(make_braid(2, {1, 1, 1}), make_braid(2, {1}), ChordReading::left_to_right);
    CHECK(rl.beta_chords.front() == lr.beta_chords.back());
}
