#include "lindley/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lindley {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::domain_error("Sample: needs at least one observation");
    }
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::domain_error("Sample: observations must be positive and finite");
        }
    }
    sorted_ = values_;
    std::stable_sort(sorted_.begin(), sorted_.end());
    sum_ = 0.0;
    for (double v : sorted_) sum_ += v;
}

}  // namespace lindley
