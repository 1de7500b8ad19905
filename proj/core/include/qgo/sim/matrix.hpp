// Copyright 2026 The qgo Authors
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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qgo::sim {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sizes here never exceed a few
/// thousand rows, so no blocking or expression templates.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(std::size_t dim, std::vector<Complex> row_major);

    [[nodiscard]] static Matrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Complex &operator()(std::size_t r, std::size_t c) noexcept {
        return data_[r * dim_ + c];
    }
    [[nodiscard]] const Complex &operator()(std::size_t r,
                                            std::size_t c) const noexcept {
        return data_[r * dim_ + c];
    }
    [[nodiscard]] std::span<Complex> data() noexcept { return data_; }
    [[nodiscard]] std::span<const Complex> data() const noexcept {
        return data_;
    }

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] Complex trace() const noexcept;
    /// max |U^dagger U - I| entry.
    [[nodiscard]] double unitarity_error() const;

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    bool operator==(const Matrix &) const = default;

  private:
    std::size_t dim_{0};
    std::vector<Complex> data_;
};

using UnitaryMatrix = Matrix;

/// Kronecker product a ⊗ b (a acts on the more significant index bits).
[[nodiscard]] Matrix kron(const Matrix &a, const Matrix &b);

/// Tr(a^dagger b).
[[nodiscard]] Complex trace_inner(const Matrix &a, const Matrix &b);

/// Haar-distributed unitary: Gram-Schmidt on a complex Gaussian matrix.
[[nodiscard]] Matrix random_unitary(std::size_t dim, std::uint64_t seed);

} // namespace qgo::sim
