#pragma once

#include "sparsecuts/rational.hpp"

#include <cmath>
#include <string>

namespace sparsecuts {

// Number of the form p + q*sqrt(rho) with p, q rational and rho a fixed
// nonnegative rational radicand. Closed under +, -, * and exact sign tests,
// which is all the sparsifier and the toughness/anticoncentration thresholds
// need. Mixing two different radicands is a programming error and throws.
class QuadRat {
  public:
    QuadRat() : p_(0), q_(0), rho_(0) {}
    QuadRat(Rat p, Rat q, Rat rho) : p_(std::move(p)), q_(std::move(q)), rho_(std::move(rho)) {
        if (rho_ < 0) throw std::invalid_argument("QuadRat: negative radicand");
        if (rho_ == 0) {
            q_ = 0;
        }
    }
    /// Purely rational value (radicand-agnostic).
    static QuadRat rational(Rat p) { return QuadRat(std::move(p), Rat(0), Rat(0)); }

    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }
    const Rat& rho() const { return rho_; }

    bool is_rational() const { return q_ == 0; }

    QuadRat operator+(const QuadRat& o) const {
        Rat r = joint_rho(o);
        return QuadRat(p_ + o.p_, q_ + o.q_, r);
    }
    QuadRat operator-(const QuadRat& o) const {
        Rat r = joint_rho(o);
        return QuadRat(p_ - o.p_, q_ - o.q_, r);
    }
    QuadRat operator-() const { return QuadRat(-p_, -q_, rho_); }
    QuadRat operator*(const QuadRat& o) const {
        Rat r = joint_rho(o);
        return QuadRat(p_ * o.p_ + q_ * o.q_ * r, p_ * o.q_ + q_ * o.p_, r);
    }
    QuadRat operator*(const Rat& s) const { return QuadRat(p_ * s, q_ * s, rho_); }
    QuadRat operator+(const Rat& s) const { return QuadRat(p_ + s, q_, rho_); }
    QuadRat operator-(const Rat& s) const { return QuadRat(p_ - s, q_, rho_); }

    /// Exact sign: -1, 0, +1. Decided by comparing p^2 against q^2 * rho.
    int sign() const {
        if (q_ == 0) return sgn(p_);
        if (p_ == 0) return sgn(q_);
        if (sgn(p_) == sgn(q_)) return sgn(p_);
        Rat lhs = p_ * p_, rhs = q_ * q_ * rho_;
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? sgn(p_) : sgn(q_);
    }

    QuadRat abs() const { return sign() < 0 ? -*this : *this; }

    bool operator<(const QuadRat& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadRat& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadRat& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadRat& o) const { return (*this - o).sign() >= 0; }
    bool operator==(const QuadRat& o) const { return (*this - o).sign() == 0; }
    bool operator!=(const QuadRat& o) const { return (*this - o).sign() != 0; }

    double to_double() const { return rat_double(p_) + rat_double(q_) * std::sqrt(rat_double(rho_)); }

    std::string str() const {
        if (q_ == 0) return rat_str(p_);
        return rat_str(p_) + " + (" + rat_str(q_) + ")*sqrt(" + rat_str(rho_) + ")";
    }

  private:
    Rat joint_rho(const QuadRat& o) const {
        if (q_ == 0 || rho_ == 0) return o.rho_;
        if (o.q_ == 0 || o.rho_ == 0) return rho_;
        if (rho_ != o.rho_) throw std::invalid_argument("QuadRat: mixed radicands");
        return rho_;
    }

    Rat p_, q_, rho_;
};

/// Largest integer <= p + q*sqrt(rho), via exact integer square roots.
Int quad_floor(const QuadRat& x);

}  // namespace sparsecuts
