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

#include "irs/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "irs/error.hpp"

namespace irs {

namespace {

constexpr double kRootResidual = 1e-9;
constexpr double kFlatResidual = 1e-12;

int sign(double v) { return (v > 0.0) - (v < 0.0); }

} // namespace

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim();
}

Polynomial::Polynomial(std::initializer_list<double> ascending)
    : Polynomial(std::vector<double>(ascending)) {}

Polynomial Polynomial::linear(double slope, double intercept) { return Polynomial{intercept, slope}; }

Polynomial Polynomial::monomial(std::size_t power, double coeff) {
    std::vector<double> c(power + 1, 0.0);
    c[power] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const noexcept { return coeffs_.size() - 1; }

double Polynomial::coefficient(std::size_t power) const noexcept {
    return power < coeffs_.size() ? coeffs_[power] : 0.0;
}

double Polynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::magnitude(double x) const noexcept {
    const double ax = std::abs(x);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial{0.0};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result{1.0};
    for (unsigned e = 0; e < exponent; ++e) result = result * *this;
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
    }
    return Polynomial(std::move(out));
}

namespace {

// p has opposite (non-zero) signs at lo and hi.
double bisect(const Polynomial& p, double lo, double hi) {
    int s_lo = sign(p(lo));
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double v = p(mid);
        if (v == 0.0) return mid;
        if (sign(v) == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// One Newton step, kept only if it stays in the bracket and lowers |p|.
double polish(const Polynomial& p, const Polynomial& dp, double r, double lo, double hi) {
    const double slope = dp(r);
    if (slope == 0.0) return r;
    const double next = r - p(r) / slope;
    if (next < lo || next > hi) return r;
    return std::abs(p(next)) < std::abs(p(r)) ? next : r;
}

} // namespace

std::vector<double> Polynomial::real_roots_in(double lo, double hi) const {
    if (!(lo <= hi)) throw Error(ErrorCode::InvalidArgument, "real_roots_in: lo > hi");

    std::vector<double> roots;
    const std::size_t deg = degree();
    if (deg == 0) return roots; // constant: either no roots or everywhere; report none
    if (deg == 1) {
        const double r = -coeffs_[0] / coeffs_[1];
        if (r >= lo && r <= hi) roots.push_back(r);
        return roots;
    }

    const Polynomial dp = derivative();
    std::vector<double> breaks{lo};
    for (double c : dp.real_roots_in(lo, hi)) {
        if (c > breaks.back()) breaks.push_back(c);
    }
    if (hi > breaks.back()) breaks.push_back(hi);

    const auto near_zero = [&](double x, double tol) { return std::abs((*this)(x)) <= tol * magnitude(x); };
    const auto add = [&](double r) {
        if (roots.empty() || std::abs(r - roots.back()) > 1e-12 * std::max(1.0, std::abs(r))) {
            roots.push_back(r);
        }
    };

    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double a = breaks[k];
        const double b = breaks[k + 1];
        const double fa = (*this)(a);
        const double fb = (*this)(b);
        // Interior break points are critical points: a zero there is a
        // touching (even multiplicity) root.
        if (fa == 0.0 || (k > 0 && near_zero(a, kFlatResidual))) add(a);
        if (sign(fa) * sign(fb) < 0) add(polish(*this, dp, bisect(*this, a, b), a, b));
    }
    const double last = breaks.back();
    if ((*this)(last) == 0.0) add(last);

    std::erase_if(roots, [&](double r) { return !near_zero(r, kRootResidual); });
    return roots;
}

std::vector<double> Polynomial::real_roots() const {
    if (degree() == 0) return {};
    const double lead = std::abs(coeffs_.back());
    double bound = 0.0;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) bound = std::max(bound, std::abs(coeffs_[k]) / lead);
    bound += 1.0;
    return real_roots_in(-bound, bound);
}

} // namespace irs
