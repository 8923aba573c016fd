#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace gentle {

// Exact scalars for all homological rank computations. The default field is
// the rationals (mpq_class); a prime field is kept alongside so dimension
// counts can be re-checked in positive characteristic.

using Rat = mpq_class;

inline Rat rat_zero() { return Rat(0); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

template <std::uint64_t P>
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(std::int64_t x) {
    std::int64_t r = x % static_cast<std::int64_t>(P);
    if (r < 0) r += P;
    v_ = static_cast<std::uint64_t>(r);
  }
  static Fp raw(std::uint64_t v) { Fp r; r.v_ = v % P; return r; }

  friend Fp operator+(Fp a, Fp b) { return raw(a.v_ + b.v_); }
  friend Fp operator-(Fp a, Fp b) { return raw(a.v_ + P - b.v_); }
  friend Fp operator*(Fp a, Fp b) { return raw((static_cast<unsigned __int128>(a.v_) * b.v_) % P); }
  Fp& operator+=(Fp o) { *this = *this + o; return *this; }
  Fp& operator-=(Fp o) { *this = *this - o; return *this; }
  Fp& operator*=(Fp o) { *this = *this * o; return *this; }
  Fp operator-() const { return raw(P - v_); }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inv() const {
    // Fermat: P is prime.
    Fp r(1), b = *this;
    std::uint64_t e = P - 2;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  std::uint64_t value() const { return v_; }

 private:
  std::uint64_t v_;
};

template <std::uint64_t P>
inline bool is_zero(const Fp<P>& x) { return x.value() == 0; }

using F5 = Fp<5>;  // small prime used for the characteristic cross-check

}  // namespace gentle
