#pragma once
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace klift {

enum class Variance : std::uint8_t { Upper, Lower };

/// Small dense multi-index array at a point, with declared index variances.
/// Rank up to 4, all indices range over the same dimension. Row-major storage.
class MTensor {
public:
    MTensor() = default;

    MTensor(std::initializer_list<Variance> variances, int dim)
        : dim_(dim), rank_(static_cast<int>(variances.size())) {
        assert(rank_ <= 4 && dim_ >= 1);
        int s = 0;
        for (Variance v : variances) variances_[s++] = v;
        std::size_t size = 1;
        for (int r = 0; r < rank_; ++r) size *= static_cast<std::size_t>(dim_);
        data_.assign(size, 0.0);
    }

    int dim() const { return dim_; }
    int rank() const { return rank_; }
    Variance variance(int slot) const { assert(slot < rank_); return variances_[slot]; }

    double& operator()(int i) { assert(rank_ == 1); return data_[idx1(i)]; }
    double operator()(int i) const { assert(rank_ == 1); return data_[idx1(i)]; }
    double& operator()(int i, int j) { assert(rank_ == 2); return data_[idx2(i, j)]; }
    double operator()(int i, int j) const { assert(rank_ == 2); return data_[idx2(i, j)]; }
    double& operator()(int i, int j, int k) { assert(rank_ == 3); return data_[idx3(i, j, k)]; }
    double operator()(int i, int j, int k) const { assert(rank_ == 3); return data_[idx3(i, j, k)]; }
    double& operator()(int i, int j, int k, int l) { assert(rank_ == 4); return data_[idx4(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { assert(rank_ == 4); return data_[idx4(i, j, k, l)]; }

    std::span<double> flat() { return data_; }
    std::span<const double> flat() const { return data_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : data_) m = std::max(m, std::abs(x));
        return m;
    }

    static double max_abs_diff(const MTensor& a, const MTensor& b) {
        assert(a.data_.size() == b.data_.size());
        double m = 0.0;
        for (std::size_t i = 0; i < a.data_.size(); ++i) m = std::max(m, std::abs(a.data_[i] - b.data_[i]));
        return m;
    }

private:
    std::size_t idx1(int i) const { assert(i >= 0 && i < dim_); return static_cast<std::size_t>(i); }
    std::size_t idx2(int i, int j) const {
        assert(i >= 0 && i < dim_ && j >= 0 && j < dim_);
        return static_cast<std::size_t>(i) * dim_ + j;
    }
    std::size_t idx3(int i, int j, int k) const {
        assert(k >= 0 && k < dim_);
        return idx2(i, j) * dim_ + k;
    }
    std::size_t idx4(int i, int j, int k, int l) const {
        assert(l >= 0 && l < dim_);
        return idx3(i, j, k) * dim_ + l;
    }

    int dim_ = 0;
    int rank_ = 0;
    std::array<Variance, 4> variances_{};
    std::vector<double> data_;
};

}  // namespace klift
