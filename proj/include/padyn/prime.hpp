#pragma once

#include "padyn/rational.hpp"

namespace padyn {

// A validated prime. Primality is checked once, at construction.
class Prime {
  public:
    explicit Prime(unsigned long p);

    unsigned long value() const { return p_; }
    const Int& as_int() const { return z_; }
    bool odd() const { return p_ != 2; }

    bool operator==(const Prime& o) const { return p_ == o.p_; }
    bool operator!=(const Prime& o) const { return p_ != o.p_; }

  private:
    unsigned long p_;
    Int z_;
};

}  // namespace padyn
