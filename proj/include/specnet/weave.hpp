#pragma once

#include "specnet/braid.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace specnet {

struct WeaveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class MoveKind { trivalent, hexavalent, tetravalent };
const char* to_string(MoveKind k);

// position: 0-based index of the first involved letter in the upper slice
struct WeaveMove {
    MoveKind kind = MoveKind::trivalent;
    int position = 0;
    friend bool operator==(const WeaveMove&, const WeaveMove&) = default;
};

// A filling weave is bent into a disk bounded by top * bottom; a cobordism
// weave keeps its bottom as negative boundary chords.
enum class WeaveMode { filling, cobordism };

// Where a letter of the upper slice goes through a move.
struct Passage {
    enum Kind { straight, merge_left, merge_right } kind = straight;
    int lower = 0;
};

class Weave {
public:
    Weave() = default;
    Weave(BraidWord top, std::vector<WeaveMove> moves);

    int strands() const { return top().strands; }
    const BraidWord& top() const { return slices_.front(); }
    const BraidWord& bottom() const { return slices_.back(); }
    const std::vector<BraidWord>& slices() const { return slices_; }
    const BraidWord& slice(int k) const { return slices_.at(static_cast<std::size_t>(k)); }
    const std::vector<WeaveMove>& moves() const { return moves_; }
    int move_count() const { return static_cast<int>(moves_.size()); }
    std::vector<int> trivalent_moves() const;

    // Upper letter q of move k -> lower slice.
    Passage down(int k, int q) const;
    // Lower letter q of move k -> upper slice; a letter born at a trivalent
    // vertex continues up its upper-left edge.
    int up(int k, int q) const;
    // Lower letter q of move k -> upper slice, taking the upper-right edge at
    // a trivalent vertex instead.
    int up_right(int k, int q) const;

    std::string name;
    WeaveMode mode = WeaveMode::filling;
    ChordReading reading = ChordReading::right_to_left;

private:
    std::vector<BraidWord> slices_;
    std::vector<WeaveMove> moves_;
};

std::vector<std::string> validate_weave(const Weave& w);
Weave parse_weave(std::string_view text);
Weave load_weave(const std::string& path);
std::string format_weave(const Weave& w);

// The bottom slice is moved to the right of the top: the boundary word becomes
// top * bottom and each horizontal strip carries the bottom letters as extra
// vertical strands on its right.
struct BentWeave {
    Weave weave;
    BraidWord delta;
    ChordLabeling chords;

    bool bent() const { return weave.mode == WeaveMode::filling; }
    BraidWord boundary() const;
    // Letters of strip k: slice k followed by the delta strands.
    BraidWord strip(int k) const;
    int strip_size(int k) const { return static_cast<int>(weave.slice(k).size() + delta.size()); }
};

BentWeave bend_weave(const Weave& w);
// Only validates; keeps the bottom slice as concave boundary.
BentWeave cobordism_weave(const Weave& w);

struct CycleGenerator {
    int index = 0;      // s_index; equals the number of the chord reached
    int move = 0;       // move index of the trivalent vertex
    int scan_index = 0; // 0 = lowest trivalent vertex
    int chord_position = 0;
    std::string symbol() const { return "s" + std::to_string(index); }
};

std::vector<CycleGenerator> cycle_generators(const BentWeave& w);

// Planar coordinates used only for drawing.
struct WeaveLayout {
    static double move_y(int k) { return -(k + 1.0); }
    static double strip_top(int k) { return k == 0 ? 0.0 : move_y(k - 1) - 0.2; }
    static double strip_bottom(const Weave& w, int k) {
        return k == w.move_count() ? -(w.move_count() + 1.0) : move_y(k) + 0.2;
    }
    static double letter_x(const BentWeave& w, int k, int q);
    static Eigen::Vector2d vertex(const BentWeave& w, int k);
    static double right_edge(const BentWeave& w);
};

}  // namespace specnet
