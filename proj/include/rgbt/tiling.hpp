#pragma once

#include "rgbt/embedding.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rgbt {

enum class Color : std::uint8_t { red = 0, green = 1, blue = 2, black = 3, abandoned = 4 };

inline constexpr std::array<Color, 3> kRgb{Color::red, Color::green, Color::blue};

char color_letter(Color c);                 // r g b k y
std::string color_name(Color c);            // red green ...
Color parse_color_name(const std::string& s); // accepts names or letters; throws InputError
bool is_rgb(Color c);
/// The two rgb colors other than `c`, in r<g<b order.
std::array<Color, 2> other_colors(Color c);
Color third_color(Color a, Color b);

enum class Mode : std::uint8_t { rgb, single, partial };

struct TilingMode {
    Mode kind = Mode::rgb;
    Color color = Color::red;  // only meaningful for single

    static TilingMode rgb() { return {Mode::rgb, Color::red}; }
    static TilingMode single(Color c) { return {Mode::single, c}; }
    static TilingMode partial() { return {Mode::partial, Color::red}; }
    std::string name() const;  // rgb | single:red | partial
    friend bool operator==(const TilingMode&, const TilingMode&) = default;
};

TilingMode parse_mode(const std::string& s);

/// Edge coloring over an embedding. Holds a non-owning reference to the
/// embedding, which must outlive it.
class Tiling {
public:
    Tiling(const Embedding& base, TilingMode mode, std::vector<Color> colors);
    Tiling(const Embedding& base, TilingMode mode, Color fill);

    const Embedding& embedding() const { return *base_; }
    TilingMode mode() const { return mode_; }
    Color color(EdgeId e) const { return colors_.at(e); }
    Color color(Vertex a, Vertex b) const { return colors_.at(base_->edge(a, b)); }
    const std::vector<Color>& colors() const { return colors_; }
    void set(EdgeId e, Color c) { colors_.at(e) = c; }
    void set_mode(TilingMode m) { mode_ = m; }

    std::vector<EdgeId> edges_of(Color c) const;
    int count(Color c) const;
    /// One letter per edge in edge-id order.
    std::string key() const;

    friend bool operator==(const Tiling& a, const Tiling& b) {
        return a.base_ == b.base_ && a.mode_ == b.mode_ && a.colors_ == b.colors_;
    }

private:
    const Embedding* base_;
    TilingMode mode_;
    std::vector<Color> colors_;
};

struct TilingCheck {
    bool ok = true;
    int facet = -1;         // first violating triangle facet
    std::string message;
};

TilingCheck validate_tiling(const Tiling& t);
bool is_valid(const Tiling& t);

/// Enumeration in canonical edge order, colors tried r<g<b<k. `fixed` (when
/// non-empty) pins edges to a color; pinned abandoned edges switch the
/// constraint off for their triangles. The callback returns false to stop.
/// Returns the number of tilings visited.
std::size_t for_each_tiling(const Embedding& e, TilingMode mode,
                            const std::function<bool(const Tiling&)>& visit,
                            const std::vector<std::optional<Color>>& fixed = {});
std::vector<Tiling> enumerate_tilings(const Embedding& e, TilingMode mode, std::size_t limit);
std::size_t count_tilings(const Embedding& e, TilingMode mode);

/// A simple odd cycle of `c`-colored edges, as a vertex cycle.
std::optional<std::vector<Vertex>> find_mono_odd_cycle(const Tiling& t, Color c);
bool has_mono_odd_cycle(const Tiling& t);  // any rgb color present in t

/// Restriction of an rgb tiling to a single(c) view.
Tiling single_view(const Tiling& t, Color c);

/// side[v] in {0,1}: black edges cross the parts, c edges stay inside.
using Bipartition = std::vector<int>;
std::optional<Bipartition> check_grand(const Tiling& t);

class CompletionError : public OperationError {
public:
    CompletionError(const std::string& what, std::vector<EdgeId> cycle)
        : OperationError(what), cycle_(std::move(cycle)) {}
    /// Black edges forming an odd cycle of the conflict graph.
    const std::vector<EdgeId>& cycle() const { return cycle_; }

private:
    std::vector<EdgeId> cycle_;
};

/// 2-colors the non-c edges so every triangle is rainbow. Edges already
/// colored with a non-c rgb color are kept. Throws CompletionError.
Tiling complete_to_rgb(const Tiling& t);

using FourColoring = std::vector<int>;  // colors 1..4

bool is_proper(const Embedding& e, const FourColoring& f);
FourColoring extract_four_coloring(const Tiling& t, const Bipartition& grand);
Tiling induce_tiling(const Embedding& e, const FourColoring& f);
/// Pair class of two distinct colors 1..4.
Color pair_class(int a, int b);

Tiling permute_colors(const Tiling& t, const std::array<Color, 3>& image);
Tiling synonym_canonical(const Tiling& t);

struct BoundaryWord {
    std::vector<Vertex> cycle;
    std::vector<Color> word;
    std::array<int, 3> counts{};  // r, g, b

    bool equal_parity() const;
    std::array<int, 3> sorted_counts() const;
    std::string text() const;
};

/// Throws OperationError when a cycle edge is abandoned or uncolored.
BoundaryWord boundary_word(const Tiling& t, const std::vector<Vertex>& cycle);

/// Brute-force oracle, vertices in BFS order, colors 1..4 ascending.
std::size_t for_each_four_coloring(const Embedding& e, const std::function<bool(const FourColoring&)>& visit);
std::size_t count_four_colorings(const Embedding& e);
std::optional<FourColoring> find_four_coloring(const Embedding& e);

Tiling parse_tiling(std::string_view text, const Embedding& e);
Tiling load_tiling(const std::string& path, const Embedding& e);
std::string format_tiling(const Tiling& t);

} // namespace rgbt
