#pragma once

#include "hmfcert/arith.hpp"

#include <iosfwd>

namespace hmfcert {

/* Closed interval [center - radius, center + radius] with dyadic endpoints.
 * Every operation below is outward rounded: the result contains the exact
 * image of every point of the operands. */
class DyadicInterval {
  public:
    DyadicInterval() = default;
    explicit DyadicInterval(Rat const& point);
    static DyadicInterval from_bounds(Rat const& lo, Rat const& hi);

    Rat const& center() const { return center_; }
    Rat const& radius() const { return radius_; }
    Rat lo() const { return center_ - radius_; }
    Rat hi() const { return center_ + radius_; }
    Rat width() const { return 2 * radius_; }

    bool contains(Rat const& x) const;
    bool contains(DyadicInterval const& other) const;
    bool contains_zero() const { return contains(Rat(0)); }
    /* sign of every point, or 0 when the interval meets zero */
    int sign() const;
    double to_double() const { return center_.get_d(); }

    /* Round endpoints outward to the grid 2^-bits. */
    DyadicInterval rounded(long bits) const;

    friend DyadicInterval operator+(DyadicInterval const& a, DyadicInterval const& b);
    friend DyadicInterval operator-(DyadicInterval const& a, DyadicInterval const& b);
    friend DyadicInterval operator-(DyadicInterval const& a);
    friend DyadicInterval operator*(DyadicInterval const& a, DyadicInterval const& b);

  private:
    Rat center_ = 0;
    Rat radius_ = 0;
};

DyadicInterval mul_rounded(DyadicInterval const& a, DyadicInterval const& b, long bits);
DyadicInterval pow_rounded(DyadicInterval const& a, unsigned long e, long bits);
/* Square root of an interval contained in [0, inf), rounded to 2^-bits. */
DyadicInterval sqrt_rounded(DyadicInterval const& a, long bits);

std::ostream& operator<<(std::ostream& os, DyadicInterval const& x);

} // namespace hmfcert
