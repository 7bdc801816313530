#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebt/tolerances.hpp"

namespace ebt {

/// Ordered list of labeled tensor factors. The matrix index convention is
/// row-major over the factor list: the first label varies slowest.
class FactorSpace {
public:
    FactorSpace() = default;
    FactorSpace(std::vector<std::string> labels, std::vector<std::size_t> dims,
                std::size_t cap = default_tolerances().dense_dim_cap)
        : labels_(std::move(labels)), dims_(std::move(dims)) {
        if (labels_.size() != dims_.size())
            throw std::invalid_argument("FactorSpace: labels/dims size mismatch");
        std::set<std::string> seen;
        std::size_t d = 1;
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!seen.insert(labels_[i]).second)
                throw std::invalid_argument("FactorSpace: duplicate label " + labels_[i]);
            if (dims_[i] < 1) throw std::invalid_argument("FactorSpace: dim < 1");
            if (d > cap / dims_[i])
                throw std::invalid_argument("FactorSpace: dimension cap exceeded");
            d *= dims_[i];
        }
        dim_ = d;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return dim_; }
    std::size_t num_factors() const { return labels_.size(); }

    bool has_label(const std::string& l) const {
        return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
    }
    std::size_t index_of(const std::string& l) const {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end()) throw std::invalid_argument("FactorSpace: no label " + l);
        return static_cast<std::size_t>(it - labels_.begin());
    }
    std::size_t dim_of(const std::string& l) const { return dims_[index_of(l)]; }

    std::size_t dim_of(const std::vector<std::string>& ls) const {
        std::size_t d = 1;
        for (auto& l : ls) d *= dim_of(l);
        return d;
    }

    /// Strides for row-major indexing (first factor slowest).
    std::vector<std::size_t> strides() const {
        std::vector<std::size_t> s(dims_.size(), 1);
        for (std::size_t i = dims_.size(); i-- > 1;) s[i - 1] = s[i] * dims_[i];
        return s;
    }

    FactorSpace subspace(const std::vector<std::string>& keep) const {
        std::vector<std::string> ls;
        std::vector<std::size_t> ds;
        for (auto& l : labels_) {
            if (std::find(keep.begin(), keep.end(), l) != keep.end()) {
                ls.push_back(l);
                ds.push_back(dims_[index_of(l)]);
            }
        }
        if (ls.size() != keep.size())
            throw std::invalid_argument("FactorSpace::subspace: unknown label requested");
        return FactorSpace(std::move(ls), std::move(ds));
    }

    bool operator==(const FactorSpace& o) const {
        return labels_ == o.labels_ && dims_ == o.dims_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> dims_;
    std::size_t dim_ = 1;
};

}  // namespace ebt
