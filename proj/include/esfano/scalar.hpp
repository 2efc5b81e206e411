// Copyright 2026 The esfano Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact scalars. Two fields are supported: the rationals (arbitrary
// precision, always in lowest terms) and prime fields F_p with p < 2^31.
// Elements of F_p carry their modulus so generic code can use ordinary
// operators; combining elements of different prime fields throws.

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "esfano/errors.hpp"

namespace esfano {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Rational inverse(const Rational& x) {
  if (x.is_zero()) throw DomainError("division by zero");
  return Rational(1) / x;
}

inline std::string to_string(const Rational& x) {
  const Integer& den = boost::multiprecision::denominator(x);
  std::string s = boost::multiprecision::numerator(x).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

class Fp {
 public:
  Fp(std::uint64_t value, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(value % modulus)), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    return Fp(s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_);
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    return Fp(std::uint64_t{a.value_} + a.modulus_ - b.value_, a.modulus_);
  }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return Fp(std::uint64_t{a.value_} * b.value_, a.modulus_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * inverse(b); }
  Fp operator-() const { return Fp(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }

  friend bool operator==(Fp, Fp) = default;
  friend auto operator<=>(Fp a, Fp b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

  // Fermat: a^(p-2).
  friend Fp inverse(Fp a) {
    if (a.value_ == 0) throw DomainError("division by zero");
    std::uint64_t result = 1, base = a.value_, e = a.modulus_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % a.modulus_;
      base = base * base % a.modulus_;
      e >>= 1;
    }
    return Fp(result, a.modulus_);
  }

 private:
  static void check(Fp a, Fp b) {
    if (a.modulus_ != b.modulus_)
      throw FieldMismatch("operands from F_" + std::to_string(a.modulus_) + " and F_" +
                          std::to_string(b.modulus_));
  }

  std::uint32_t value_;
  std::uint32_t modulus_;
};

inline bool is_zero(Fp x) { return x.value() == 0; }
inline std::string to_string(Fp x) { return std::to_string(x.value()); }

namespace detail {

// Accepts [+-]digits with an optional /digits denominator.
inline bool split_ratio(std::string_view text, std::string& num, std::string& den) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(n, true) || !digits(d, false)) return false;
  num.assign(n.front() == '+' ? n.substr(1) : n);
  den.assign(d);
  return true;
}

}  // namespace detail

struct Rationals {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const { return n; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  value_type parse(std::string_view text) const {
    std::string num, den;
    if (!detail::split_ratio(text, num, den))
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    Integer d(den);
    if (d.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(Integer(num), d);
  }

  friend bool operator==(Rationals, Rationals) = default;
};

class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw DomainError("modulus must be a prime below 2^31, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return Fp(0, p_); }
  value_type one() const { return Fp(1, p_); }
  value_type from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(r < 0 ? r + p_ : r), p_);
  }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  value_type parse(std::string_view text) const {
    std::string num, den;
    if (!detail::split_ratio(text, num, den))
      throw ParseError("not an integer: '" + std::string(text) + "'");
    auto reduce = [this](const std::string& s) {
      Integer r = Integer(s) % p_;
      if (r < 0) r += p_;
      return Fp(static_cast<std::uint64_t>(r), p_);
    };
    Fp d = reduce(den);
    if (is_zero(d)) throw ParseError("denominator vanishes mod " + std::to_string(p_));
    return reduce(num) / d;
  }

  friend bool operator==(PrimeField, PrimeField) = default;

 private:
  std::uint32_t p_;
};

template <class F>
concept ExactField = std::equality_comparable<F> &&
    requires(const F& f, const typename F::value_type& a, std::int64_t n, std::string_view s) {
      { f.zero() } -> std::same_as<typename F::value_type>;
      { f.one() } -> std::same_as<typename F::value_type>;
      { f.from_int(n) } -> std::same_as<typename F::value_type>;
      { f.parse(s) } -> std::same_as<typename F::value_type>;
      { f.characteristic() } -> std::convertible_to<std::uint64_t>;
      { f.name() } -> std::convertible_to<std::string>;
      { a + a } -> std::convertible_to<typename F::value_type>;
      { a - a } -> std::convertible_to<typename F::value_type>;
      { a * a } -> std::convertible_to<typename F::value_type>;
      { a / a } -> std::convertible_to<typename F::value_type>;
      { -a } -> std::convertible_to<typename F::value_type>;
      { is_zero(a) } -> std::same_as<bool>;
      { inverse(a) } -> std::convertible_to<typename F::value_type>;
      { to_string(a) } -> std::same_as<std::string>;
      { a < a } -> std::convertible_to<bool>;
    };

}  // namespace esfano
