#include "smallcanc/field.hpp"

namespace smallcanc {

namespace {

bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; p prime, a != 0 mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error("division by zero in GF(p)");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_small_prime(p) || p > (1ull << 31))
    throw ParseError("field characteristic must be a small prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string num = text.substr(3, text.size() - 4);
    try {
      return prime(std::stoull(num));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw ParseError("unrecognized field: '" + text + "' (expected Q or GF(p))");
}

void Field::check(const Scalar& a) const {
  if (a.is_residue() != (p_ != 0)) throw FieldMismatchError("scalar from a different field");
}

Scalar Field::zero() const { return p_ ? Scalar(std::uint64_t{0}) : Scalar(mpq_class(0)); }
Scalar Field::one() const { return p_ ? Scalar(std::uint64_t{1 % p_}) : Scalar(mpq_class(1)); }

Scalar Field::from_long(long v) const {
  if (!p_) return Scalar(mpq_class(v));
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return Scalar(static_cast<std::uint64_t>(r));
}

bool Field::is_zero(const Scalar& a) const {
  check(a);
  return p_ ? a.residue() == 0 : a.rational() == 0;
}

bool Field::is_one(const Scalar& a) const {
  check(a);
  return p_ ? a.residue() == 1 % p_ : a.rational() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (p_) return Scalar((a.residue() + b.residue()) % p_);
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (p_) return Scalar((a.residue() * b.residue()) % p_);
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar& a) const {
  check(a);
  if (p_) return Scalar(a.residue() ? p_ - a.residue() : 0);
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  check(a);
  if (p_) return Scalar(mod_inverse(a.residue(), p_));
  if (a.rational() == 0) throw Error("division by zero");
  return Scalar(mpq_class(1 / a.rational()));
}

Scalar Field::parse_scalar(const std::string& text) const {
  if (text.empty()) throw ParseError("empty coefficient");
  if (!p_) {
    try {
      mpq_class q(text);
      q.canonicalize();
      return Scalar(q);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational coefficient: '" + text + "'");
    }
  }
  std::size_t pos = 0;
  bool negate = false;
  if (text[0] == '-') {
    negate = true;
    pos = 1;
  }
  if (pos >= text.size()) throw ParseError("bad coefficient: '" + text + "'");
  std::uint64_t v = 0;
  for (; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9')
      throw ParseError("bad GF(p) coefficient: '" + text + "'");
    v = (v * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % p_;
  }
  Scalar s(v);
  return negate ? neg(s) : s;
}

std::string Field::format_scalar(const Scalar& a) const {
  check(a);
  if (p_) return std::to_string(a.residue());
  return a.rational().get_str();
}

std::string Field::to_string() const { return p_ ? "GF(" + std::to_string(p_) + ")" : "Q"; }

}  // namespace smallcanc
