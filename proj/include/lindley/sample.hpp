#pragma once

#include <vector>

namespace lindley {

/// A finite collection of positive observations, with the sum T = sum(x_i)
/// and the ascending order statistics cached. The sum is accumulated in
/// sorted order, so every permutation of the same values produces bitwise
/// identical estimates downstream.
class Sample {
  public:
    explicit Sample(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& sorted() const { return sorted_; }
    unsigned size() const { return static_cast<unsigned>(values_.size()); }
    double sum() const { return sum_; }
    double mean() const { return sum_ / static_cast<double>(values_.size()); }

  private:
    std::vector<double> values_;
    std::vector<double> sorted_;
    double sum_;
};

}  // namespace lindley
