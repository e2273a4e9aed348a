// SPDX-License-Identifier: Apache-2.0
//
// irs-opt: IRS-assisted link power modelling and placement optimization
// Copyright (C) 2026 The irs-opt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace irs {

/// Dense real polynomial, coefficients stored lowest power first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> ascending);
    Polynomial(std::initializer_list<double> ascending);

    /// c0 + c1*x, the usual building block for expansions.
    static Polynomial linear(double slope, double intercept);
    static Polynomial monomial(std::size_t power, double coeff = 1.0);

    /// Degree after trimming trailing zeros; the zero polynomial has degree 0.
    std::size_t degree() const noexcept;
    std::span<const double> coefficients() const noexcept { return coeffs_; }
    double coefficient(std::size_t power) const noexcept;

    double operator()(double x) const noexcept;
    /// sum |c_i| |x|^i, the rounding scale of a Horner evaluation at x.
    double magnitude(double x) const noexcept;

    Polynomial derivative() const;
    Polynomial pow(unsigned exponent) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(double s);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, double s) { return lhs *= s; }
    friend Polynomial operator*(double s, Polynomial rhs) { return rhs *= s; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    /// Real roots in [lo, hi], ascending, each with |p(r)| <= 1e-9 * magnitude(r).
    ///
    /// Roots are isolated recursively: the real roots of p' split [lo, hi] into
    /// monotone pieces, each holding at most one root, which is bracketed and
    /// bisected to full precision. Even-multiplicity roots are caught where a
    /// critical point evaluates to zero within rounding.
    std::vector<double> real_roots_in(double lo, double hi) const;

    /// All real roots, searched inside the Cauchy bound.
    std::vector<double> real_roots() const;

private:
    void trim();

    std::vector<double> coeffs_{0.0};
};

} // namespace irs
