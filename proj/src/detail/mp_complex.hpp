// Copyright 2026-present the opuc project
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

// Minimal complex arithmetic over an MPFR-backed real type. Only what the
// recursions in continuation.hpp and asym.cpp need.

#include <complex>

#include <boost/multiprecision/mpfr.hpp>

namespace opuc::detail {

// 480 decimal digits: the asymptotics checks compare quantities of size
// b^n near 1e-120 against reference values that carry growth up to 1e150.
using mpreal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<480>,
                                             boost::multiprecision::et_off>;

struct mpcx {
    mpreal re;
    mpreal im;

    mpcx() : re(0), im(0) {}
    mpcx(int v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    mpcx(mpreal r, mpreal i = mpreal(0)) : re(std::move(r)), im(std::move(i)) {}
    explicit mpcx(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_double() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

inline mpcx operator+(const mpcx& a, const mpcx& b) { return {a.re + b.re, a.im + b.im}; }
inline mpcx operator-(const mpcx& a, const mpcx& b) { return {a.re - b.re, a.im - b.im}; }
inline mpcx operator-(const mpcx& a) { return {-a.re, -a.im}; }
inline mpcx operator*(const mpcx& a, const mpcx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline mpcx operator*(const mpcx& a, const mpreal& s) { return {a.re * s, a.im * s}; }
inline mpcx operator*(const mpreal& s, const mpcx& a) { return {a.re * s, a.im * s}; }
inline mpcx operator/(const mpcx& a, const mpreal& s) { return {a.re / s, a.im / s}; }
inline mpcx operator/(const mpcx& a, const mpcx& b) {
    const mpreal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline mpcx conj(const mpcx& a) { return {a.re, -a.im}; }
inline mpreal norm(const mpcx& a) { return a.re * a.re + a.im * a.im; }
inline mpreal abs(const mpcx& a) { return sqrt(norm(a)); }

inline mpcx mp_pow(mpcx base, std::size_t e) {
    mpcx r(1);
    while (e > 0) {
        if (e & 1U) {
            r = r * base;
        }
        base = base * base;
        e >>= 1U;
    }
    return r;
}

}  // namespace opuc::detail
