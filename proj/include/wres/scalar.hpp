#pragma once

#include <gmpxx.h>
#include <complex>
#include <cstdint>
#include <string>

namespace wres {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/**
 * Gaussian rational re + im*i with arbitrary-precision components.
 * All arithmetic is exact; values are always in canonical (gcd-reduced) form.
 */
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(Rat re) : re_(std::move(re)), im_(0) {}
    Scalar(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rat(0), Rat(1)); }
    static Scalar of(long num, long den) { return Scalar(rat(num, den)); }
    static Scalar imag(long num, long den = 1) { return Scalar(Rat(0), rat(num, den)); }
    // (-i)^m, used by the boundary-case coefficients
    static Scalar minus_i_pow(int m) {
        switch (((m % 4) + 4) % 4) {
            case 0: return Scalar(1);
            case 1: return Scalar(Rat(0), Rat(-1));
            case 2: return Scalar(-1);
            default: return Scalar::i();
        }
    }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar inverse() const {
        Rat d = re_ * re_ + im_ * im_;
        return Scalar(re_ / d, -im_ / d);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    std::string str() const;

private:
    Rat re_, im_;
};

std::string rat_str(const Rat& r);

} // namespace wres
