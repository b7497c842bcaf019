#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ekr/numeric.hpp"

namespace ekr {

/// Two operands carry incompatible radicals. Character arithmetic never
/// needs more than one radical per conjugacy class, so this is a bug trap,
/// not an expected runtime condition.
class radical_mismatch : public std::domain_error {
  public:
    radical_mismatch() : std::domain_error("mixed radicals in quadratic arithmetic") {}
};

/// a + b*sqrt(d) with rational a, b and squarefree integer d (d may be
/// negative; d = 1 encodes plain rationals and forces b = 0).
class QuadraticNumber {
  public:
    QuadraticNumber() : a_(0), b_(0), d_(1) {}
    QuadraticNumber(const Rat& a) : a_(a), b_(0), d_(1) {}
    QuadraticNumber(const Int& a) : a_(Rat(a)), b_(0), d_(1) {}
    QuadraticNumber(long a) : a_(a), b_(0), d_(1) {}

    /// Builds a + b*sqrt(D) for arbitrary integer D, extracting the square
    /// part of D into b.
    static QuadraticNumber with_radicand(const Rat& a, const Rat& b, std::int64_t D) {
        std::int64_t s = 0, d = 1;
        squarefree_decompose(D, s, d);
        QuadraticNumber q;
        q.a_ = a;
        q.b_ = b * s;
        q.d_ = d;
        q.normalize();
        return q;
    }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coeff() const { return b_; }
    std::int64_t radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Galois conjugate sqrt(d) -> -sqrt(d).
    QuadraticNumber galois_conjugate() const {
        QuadraticNumber q = *this;
        q.b_ = -q.b_;
        return q;
    }

    /// Complex conjugate: flips the radical only when it is imaginary.
    QuadraticNumber complex_conjugate() const { return d_ < 0 ? galois_conjugate() : *this; }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
        const std::int64_t d = merge_radicand(x, y);
        QuadraticNumber q;
        q.a_ = x.a_ + y.a_;
        q.b_ = x.b_ + y.b_;
        q.d_ = d;
        q.normalize();
        return q;
    }

    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x + (-y);
    }

    QuadraticNumber operator-() const {
        QuadraticNumber q = *this;
        q.a_ = -q.a_;
        q.b_ = -q.b_;
        return q;
    }

    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
        const std::int64_t d = merge_radicand(x, y);
        QuadraticNumber q;
        q.a_ = x.a_ * y.a_ + x.b_ * y.b_ * d;
        q.b_ = x.a_ * y.b_ + x.b_ * y.a_;
        q.d_ = d;
        q.normalize();
        return q;
    }

    QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
    QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
    QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }

    /// (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - b^2 d).
    QuadraticNumber inverse() const {
        const Rat norm = a_ * a_ - b_ * b_ * d_;
        if (norm == 0) throw std::domain_error("division by zero quadratic number");
        QuadraticNumber q;
        q.a_ = a_ / norm;
        q.b_ = -b_ / norm;
        q.d_ = d_;
        q.normalize();
        return q;
    }

    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x * y.inverse();
    }

    bool operator==(const QuadraticNumber& o) const {
        return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || d_ == o.d_);
    }
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }

    std::string str() const {
        if (b_ == 0) return rat_string(a_);
        std::ostringstream os;
        if (a_ != 0) os << rat_string(a_) << (b_ > 0 ? " + " : " - ");
        else if (b_ < 0) os << "-";
        const Rat ab = b_ < 0 ? Rat(-b_) : b_;
        if (ab != 1) os << rat_string(ab) << "*";
        os << "sqrt(" << d_ << ")";
        return os.str();
    }

  private:
    void normalize() {
        if (d_ == 1) { a_ += b_; b_ = 0; }
        if (b_ == 0) d_ = 1;
    }

    static std::int64_t merge_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw radical_mismatch();
        return x.d_;
    }

    Rat a_, b_;
    std::int64_t d_;
};

/// Accumulator for sums whose terms live in different quadratic extensions
/// (e.g. orthogonality sums across several split classes). Distinct
/// squarefree radicals are linearly independent over Q, so the sum is a
/// rational r exactly when every radical component vanishes.
class RadicalSum {
  public:
    RadicalSum() = default;

    void add(const QuadraticNumber& q) {
        base_ += q.rational_part();
        if (!q.is_rational()) {
            Rat& c = comps_[q.radicand()];
            c += q.radical_coeff();
            if (c == 0) comps_.erase(q.radicand());
        }
    }

    const Rat& rational_part() const { return base_; }
    bool is_rational() const { return comps_.empty(); }
    bool equals_rational(const Rat& r) const { return comps_.empty() && base_ == r; }
    const std::map<std::int64_t, Rat>& radical_components() const { return comps_; }

  private:
    Rat base_ = 0;
    std::map<std::int64_t, Rat> comps_;
};

}  // namespace ekr
