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

#include "qgo/sim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgo/error.hpp"
#include "qgo/rng.hpp"

namespace qgo {

double normal(Rng &rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) {
        u1 = uniform01(rng);
    }
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace qgo

namespace qgo::sim {

Matrix::Matrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) {
        throw InvariantError("matrix data size does not match dimension");
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex Matrix::trace() const noexcept {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double Matrix::unitarity_error() const {
    const Matrix p = adjoint() * (*this);
    double err = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const Complex expect = r == c ? 1.0 : 0.0;
            err = std::max(err, std::abs(p(r, c) - expect));
        }
    }
    return err;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.dim_ != b.dim_) {
        throw InvariantError("matrix dimension mismatch in product");
    }
    const std::size_t d = a.dim_;
    Matrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex av = a(r, k);
            if (av == Complex{}) {
                continue;
            }
            const Complex *brow = &b.data_[k * d];
            Complex *orow = &out.data_[r * d];
            for (std::size_t c = 0; c < d; ++c) {
                orow[c] += av * brow[c];
            }
        }
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    Matrix out(da * db);
    for (std::size_t ar = 0; ar < da; ++ar) {
        for (std::size_t ac = 0; ac < da; ++ac) {
            for (std::size_t br = 0; br < db; ++br) {
                for (std::size_t bc = 0; bc < db; ++bc) {
                    out(ar * db + br, ac * db + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

Complex trace_inner(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw InputError("matrix dimension mismatch");
    }
    Complex t{};
    const auto ad = a.data();
    const auto bd = b.data();
    for (std::size_t i = 0; i < ad.size(); ++i) {
        t += std::conj(ad[i]) * bd[i];
    }
    return t;
}

Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(dim);
    for (Complex &z : m.data()) {
        z = Complex(normal(rng), normal(rng));
    }
    // Orthonormalize columns in place.
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Complex proj{};
            for (std::size_t r = 0; r < dim; ++r) {
                proj += std::conj(m(r, i)) * m(r, j);
            }
            for (std::size_t r = 0; r < dim; ++r) {
                m(r, j) -= proj * m(r, i);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            norm += std::norm(m(r, j));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < dim; ++r) {
            m(r, j) /= norm;
        }
    }
    return m;
}

} // namespace qgo::sim
