#ifndef SYMLAP_RATIONAL_HPP
#define SYMLAP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symlap {

/// Exact rational scalar, the only numeric type of the math core.
/// Always kept in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
  static Rat parse(const std::string& s);

  Rat operator-() const { return Rat(mpq_class(-v_), NoCanon{}); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Value as int64; throws if not an integer or out of range.
  std::int64_t to_int64() const;

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    return is_integer() ? v_.get_num().get_str() : v_.get_str();
  }

  /// Stable hash for unordered containers.
  std::size_t hash() const {
    constexpr unsigned long kMod = 2305843009213693951UL;  // 2^61 - 1
    unsigned long hn = mpz_fdiv_ui(v_.get_num().get_mpz_t(), kMod);
    unsigned long hd = mpz_fdiv_ui(v_.get_den().get_mpz_t(), kMod);
    return hn * 1000003UL + hd;
  }

  const mpq_class& raw() const { return v_; }

 private:
  struct NoCanon {};
  Rat(mpq_class q, NoCanon) : v_(std::move(q)) {}
  mpq_class v_;
};

inline std::int64_t Rat::to_int64() const {
  if (!is_integer()) throw std::invalid_argument("Rat: not an integer: " + str());
  if (!v_.get_num().fits_slong_p())
    throw std::overflow_error("Rat: integer out of int64 range: " + str());
  return static_cast<std::int64_t>(v_.get_num().get_si());
}

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("Rat: malformed rational: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator: " + s);
  q.canonicalize();
  return Rat(q);
}

}  // namespace symlap

#endif
