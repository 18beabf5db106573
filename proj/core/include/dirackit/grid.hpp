#pragma once

#include "dirackit/diracfield.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace dirackit {

/// Tensor grid of rational nodes on a box: node i on an axis is min + i (max - min) / (res - 1).
///
/// refine() maps res to 2 (res - 1) + 1, so every node of a grid is a node of its refinement.
class SampleGrid {
public:
    SampleGrid() = default;
    SampleGrid(Box domain, std::vector<std::size_t> resolution, unsigned level = 0);
    static SampleGrid uniform(const Box& domain, std::size_t resolution);

    [[nodiscard]] const Box& domain() const { return domain_; }
    [[nodiscard]] std::size_t dim() const { return domain_.dim(); }
    [[nodiscard]] const std::vector<std::size_t>& resolution() const { return resolution_; }
    [[nodiscard]] unsigned level() const { return level_; }
    [[nodiscard]] std::size_t node_count() const;

    [[nodiscard]] Rational coordinate(std::size_t axis, std::size_t i) const;
    [[nodiscard]] RationalPoint node(std::size_t flat) const;
    [[nodiscard]] std::vector<std::size_t> multi_index(std::size_t flat) const;
    [[nodiscard]] std::size_t flat_index(const std::vector<std::size_t>& multi) const;
    [[nodiscard]] std::vector<RationalPoint> nodes() const;

    /// Pairs of flat indices differing by one step along one axis.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    [[nodiscard]] SampleGrid refine() const;

private:
    Box domain_;
    std::vector<std::size_t> resolution_;
    unsigned level_ = 0;
};

} // namespace dirackit
