#include "sec/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sec {

namespace {

void normalize(std::vector<Color>& list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

} // namespace

ColorLists::ColorLists(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        normalize(l);
    }
}

ColorLists ColorLists::uniform(std::size_t edge_count, std::size_t size) {
    std::vector<Color> base(size);
    std::iota(base.begin(), base.end(), Color{0});
    return ColorLists(std::vector<std::vector<Color>>(edge_count, base));
}

bool ColorLists::contains(EdgeId e, Color c) const {
    if (e >= lists_.size()) {
        return false;
    }
    return std::binary_search(lists_[e].begin(), lists_[e].end(), c);
}

std::size_t ColorLists::min_size() const noexcept {
    std::size_t best = lists_.empty() ? 0 : lists_.front().size();
    for (const auto& l : lists_) {
        best = std::min(best, l.size());
    }
    return best;
}

void ColorLists::set(EdgeId e, std::vector<Color> list) {
    if (e >= lists_.size()) {
        lists_.resize(e + 1);
    }
    normalize(list);
    lists_[e] = std::move(list);
}

ColorLists ColorLists::project(std::span<const EdgeId> edge_origin) const {
    std::vector<std::vector<Color>> out;
    out.reserve(edge_origin.size());
    for (EdgeId e : edge_origin) {
        out.push_back(lists_.at(e));
    }
    ColorLists result;
    result.lists_ = std::move(out);
    return result;
}

void PartialColoring::assign(EdgeId e, Color c) {
    if (e >= colors_.size()) {
        colors_.resize(e + 1);
    }
    colors_[e] = c;
}

void PartialColoring::erase(EdgeId e) {
    if (e < colors_.size()) {
        colors_[e].reset();
    }
}

std::size_t PartialColoring::colored_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

std::size_t PartialColoring::distinct_colors() const {
    std::set<Color> seen;
    for (const auto& c : colors_) {
        if (c) {
            seen.insert(*c);
        }
    }
    return seen.size();
}

} // namespace sec
