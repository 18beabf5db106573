#include "dirackit/grid.hpp"

#include "dirackit/errors.hpp"

namespace dirackit {

SampleGrid::SampleGrid(Box domain, std::vector<std::size_t> resolution, unsigned level)
  : domain_(std::move(domain))
  , resolution_(std::move(resolution))
  , level_(level) {
    if (resolution_.size() != domain_.dim()) throw DimensionMismatch("grid resolution needs one entry per axis");
    for (std::size_t a = 0; a < resolution_.size(); ++a) {
        if (resolution_[a] == 0) throw DimensionMismatch("grid resolution must be positive");
        if (resolution_[a] > 1 && domain_.min[a] == domain_.max[a]) resolution_[a] = 1;
    }
}

SampleGrid SampleGrid::uniform(const Box& domain, std::size_t resolution) {
    return SampleGrid(domain, std::vector<std::size_t>(domain.dim(), resolution));
}

std::size_t SampleGrid::node_count() const {
    std::size_t count = 1;
    for (auto r : resolution_) count *= r;
    return count;
}

Rational SampleGrid::coordinate(std::size_t axis, std::size_t i) const {
    const std::size_t res = resolution_.at(axis);
    if (res == 1) return domain_.min[axis];
    Rational step = (domain_.max[axis] - domain_.min[axis]) / Rational(static_cast<long>(res - 1));
    Rational v = domain_.min[axis] + step * Rational(static_cast<long>(i));
    v.canonicalize();
    return v;
}

std::vector<std::size_t> SampleGrid::multi_index(std::size_t flat) const {
    // axis 0 varies slowest
    std::vector<std::size_t> idx(dim());
    for (std::size_t a = dim(); a-- > 0;) {
        idx[a] = flat % resolution_[a];
        flat /= resolution_[a];
    }
    return idx;
}

std::size_t SampleGrid::flat_index(const std::vector<std::size_t>& multi) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < dim(); ++a) flat = flat * resolution_[a] + multi[a];
    return flat;
}

RationalPoint SampleGrid::node(std::size_t flat) const {
    auto idx = multi_index(flat);
    RationalPoint p(dim());
    for (std::size_t a = 0; a < dim(); ++a) p[a] = coordinate(a, idx[a]);
    return p;
}

std::vector<RationalPoint> SampleGrid::nodes() const {
    std::vector<RationalPoint> out;
    out.reserve(node_count());
    for (std::size_t i = 0; i < node_count(); ++i) out.push_back(node(i));
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SampleGrid::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t flat = 0; flat < node_count(); ++flat) {
        auto idx = multi_index(flat);
        for (std::size_t a = 0; a < dim(); ++a) {
            if (idx[a] + 1 >= resolution_[a]) continue;
            ++idx[a];
            out.emplace_back(flat, flat_index(idx));
            --idx[a];
        }
    }
    return out;
}

SampleGrid SampleGrid::refine() const {
    std::vector<std::size_t> res(resolution_);
    for (auto& r : res) {
        if (r > 1) r = 2 * (r - 1) + 1;
    }
    return SampleGrid(domain_, std::move(res), level_ + 1);
}

} // namespace dirackit
