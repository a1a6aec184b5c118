#pragma once

#include <ostream>
#include <string>

#include "paley/residue.hpp"

namespace paley {

/// Exact Gaussian integer a + bi.
struct GaussianInt {
    int64 re = 0;
    int64 im = 0;

    friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianInt operator*(int64 c, GaussianInt a) { return {c * a.re, c * a.im}; }
    friend bool operator==(GaussianInt a, GaussianInt b) { return a.re == b.re && a.im == b.im; }

    GaussianInt conj() const { return {re, -im}; }
    int64 norm() const { return re * re + im * im; }

    /// "a+bi" / "a-bi", no spaces.
    std::string str() const {
        return std::to_string(re) + (im < 0 ? "-" : "+") + std::to_string(im < 0 ? -im : im) + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, GaussianInt z) { return os << z.str(); }
};

}  // namespace paley
