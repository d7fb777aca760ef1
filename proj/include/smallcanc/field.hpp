#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "smallcanc/words.hpp"

namespace smallcanc {

struct FieldMismatchError : Error {
  using Error::Error;
};

// Residue for GF(p), exact rational for Q.  A Scalar only makes sense
// relative to the Field that produced it.
class Scalar {
 public:
  Scalar() : rep_(std::uint64_t{0}) {}
  explicit Scalar(std::uint64_t residue) : rep_(residue) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  bool is_residue() const { return rep_.index() == 0; }
  std::uint64_t residue() const { return std::get<0>(rep_); }
  const mpq_class& rational() const { return std::get<1>(rep_); }

  bool operator==(const Scalar& o) const { return rep_ == o.rep_; }
  bool operator<(const Scalar& o) const {
    if (rep_.index() != o.rep_.index()) return rep_.index() < o.rep_.index();
    if (is_residue()) return residue() < o.residue();
    return rational() < o.rational();
  }

 private:
  std::variant<std::uint64_t, mpq_class> rep_;
};

// p == 0 means the rationals.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  static Field parse(const std::string& text);  // "Q" or "GF(p)"

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  bool operator==(const Field& o) const { return p_ == o.p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_long(long v) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  Scalar parse_scalar(const std::string& text) const;
  std::string format_scalar(const Scalar& a) const;
  std::string to_string() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  void check(const Scalar& a) const;
  std::uint64_t p_ = 0;
};

}  // namespace smallcanc
