#pragma once

#include "sec/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sec {

using Color = std::uint32_t;

/// Per-edge sets of admissible colors. Each list is kept sorted and unique.
class ColorLists {
public:
    ColorLists() = default;
    explicit ColorLists(std::vector<std::vector<Color>> lists);

    /// Every one of `edge_count` edges gets {0, ..., size-1}.
    static ColorLists uniform(std::size_t edge_count, std::size_t size);

    std::size_t edge_count() const noexcept { return lists_.size(); }
    std::span<const Color> of(EdgeId e) const { return lists_.at(e); }
    bool contains(EdgeId e, Color c) const;
    std::size_t min_size() const noexcept;

    void set(EdgeId e, std::vector<Color> list);
    /// Lists re-indexed by a map from new edge ids to ids of this object.
    ColorLists project(std::span<const EdgeId> edge_origin) const;

    friend bool operator==(const ColorLists&, const ColorLists&) = default;

private:
    std::vector<std::vector<Color>> lists_;
};

/// Edge -> color map that may leave edges uncolored. Ids past the current
/// size are allowed and simply grow the map.
class PartialColoring {
public:
    PartialColoring() = default;
    explicit PartialColoring(std::size_t edge_count) : colors_(edge_count) {}

    std::optional<Color> get(EdgeId e) const {
        return e < colors_.size() ? colors_[e] : std::nullopt;
    }
    bool colored(EdgeId e) const { return get(e).has_value(); }
    void assign(EdgeId e, Color c);
    void erase(EdgeId e);

    /// Number of slots (one past the largest id ever assigned or reserved).
    std::size_t slots() const noexcept { return colors_.size(); }
    std::size_t colored_count() const noexcept;
    std::size_t distinct_colors() const;

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    std::vector<std::optional<Color>> colors_;
};

} // namespace sec
