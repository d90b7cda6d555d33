// Copyright 2026-present the gazekit project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "gazekit/common.hpp"

namespace gazekit {

/// Dense row-major tensor of doubles. Deliberately minimal: contiguous
/// storage, explicit shape, no views or broadcasting.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<int64_t> shape) { resize(std::move(shape)); }

    Tensor(std::initializer_list<int64_t> shape)
        : Tensor(std::vector<int64_t>(shape)) {}

    void resize(std::vector<int64_t> shape) {
        shape_ = std::move(shape);
        int64_t n = 1;
        for (int64_t d : shape_) {
            GZK_CHECK(d >= 0, ErrorCode::ShapeMismatch, "negative dimension");
            n *= d;
        }
        data_.assign(static_cast<size_t>(n), 0.0);
    }

    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t dim(size_t i) const { return shape_.at(i); }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    double& at2(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * shape_[1] + j)]; }
    double at2(int64_t i, int64_t j) const { return data_[static_cast<size_t>(i * shape_[1] + j)]; }

    double& at3(int64_t i, int64_t j, int64_t k) {
        return data_[static_cast<size_t>((i * shape_[1] + j) * shape_[2] + k)];
    }
    double at3(int64_t i, int64_t j, int64_t k) const {
        return data_[static_cast<size_t>((i * shape_[1] + j) * shape_[2] + k)];
    }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
    void zero() { fill(0.0); }

    bool all_finite() const {
        return std::all_of(data_.begin(), data_.end(),
                           [](double v) { return std::isfinite(v); });
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

private:
    std::vector<int64_t> shape_;
    std::vector<double> data_;
};

}  // namespace gazekit
