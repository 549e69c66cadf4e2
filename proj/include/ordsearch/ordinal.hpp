#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An ordinal is a finite sum  w^e1*c1 + w^e2*c2 + ... + w^ek*ck  with
// e1 > e2 > ... > ek (themselves ordinals in the same form) and every
// coefficient ci >= 1. The empty sum is 0. The representation is unique, so
// structural equality coincides with ordinal equality.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <ostream>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordsearch {

using Natural = boost::multiprecision::cpp_int;

struct OrdinalTerm;

class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT: finite ordinals convert implicitly
  explicit Ordinal(const Natural& n);

  static Ordinal omega();

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  // The finite part (coefficient of w^0), zero if none.
  Natural finite_part() const;

  // Only valid when is_finite().
  Natural to_natural() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

  // Builds from already-canonical terms; throws if the invariants fail.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

 private:
  std::vector<OrdinalTerm> terms_;
  friend Ordinal add(const Ordinal&, const Ordinal&);
  friend Ordinal mul(const Ordinal&, const Ordinal&);
};

struct OrdinalTerm {
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

class OrdinalParseError : public std::runtime_error {
 public:
  OrdinalParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class Cofinality { zero, one, omega };

// ---------------------------------------------------------------------------

inline Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back(OrdinalTerm{Ordinal{}, Natural{n}});
}

inline Ordinal::Ordinal(const Natural& n) {
  if (n < 0) throw std::invalid_argument("negative ordinal");
  if (n != 0) terms_.push_back(OrdinalTerm{Ordinal{}, n});
}

inline Ordinal Ordinal::omega() {
  Ordinal w;
  w.terms_.push_back(OrdinalTerm{Ordinal{1}, Natural{1}});
  return w;
}

inline bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

inline Natural Ordinal::finite_part() const {
  return is_successor() ? terms_.back().coefficient : Natural{0};
}

inline Natural Ordinal::to_natural() const {
  if (!is_finite()) throw std::domain_error("ordinal is not finite");
  return finite_part();
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (x.coefficient != y.coefficient)
      return x.coefficient < y.coefficient ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return a.terms_ == b.terms_;
}

inline Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1)
      throw std::invalid_argument("ordinal coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("ordinal exponents must strictly decrease");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

inline std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  return a <=> b;
}

inline Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms_.front().exponent;
  Ordinal out;
  for (const auto& t : a.terms_) {
    auto c = t.exponent <=> lead;
    if (c > 0) {
      out.terms_.push_back(t);
    } else {
      if (c == 0) {
        // Same exponent: coefficients merge; every lower term is absorbed.
        out.terms_.push_back(
            OrdinalTerm{t.exponent, t.coefficient + b.terms_.front().coefficient});
        out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
        return out;
      }
      break;
    }
  }
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

// a * b = sum over the terms w^f*c of b of a * (w^f*c), which is
//   w^(lead(a)+f) * c                     when f > 0
//   w^lead(a) * (coef(a)*c) + rest(a)      when f = 0.
inline Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  const auto& lead = a.terms_.front();
  Ordinal out;
  for (const auto& t : b.terms_) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      piece.terms_.push_back(OrdinalTerm{lead.exponent, lead.coefficient * t.coefficient});
      piece.terms_.insert(piece.terms_.end(), a.terms_.begin() + 1, a.terms_.end());
    } else {
      piece.terms_.push_back(OrdinalTerm{add(lead.exponent, t.exponent), t.coefficient});
    }
    out = add(out, piece);
  }
  return out;
}

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

inline Ordinal omega_power(const Ordinal& e) {
  return Ordinal::from_terms({OrdinalTerm{e, Natural{1}}});
}

// The unique x with 1 + x = e, for e >= 1.
inline Ordinal left_subtract_one(const Ordinal& e) {
  if (e.is_zero()) throw std::domain_error("0 has no left predecessor");
  if (e.is_finite()) return Ordinal{Natural{e.to_natural() - 1}};
  return e;
}

struct OmegaDivision {
  Ordinal quotient;  // beta
  Natural remainder;  // n
};

// a = w*beta + n with n finite.
inline OmegaDivision omega_quot_rem(const Ordinal& a) {
  std::vector<OrdinalTerm> q;
  for (const auto& t : a.terms()) {
    if (t.exponent.is_zero()) break;
    q.push_back(OrdinalTerm{left_subtract_one(t.exponent), t.coefficient});
  }
  return OmegaDivision{Ordinal::from_terms(std::move(q)), a.finite_part()};
}

// Supremum of algorithmic-traversal order types over connected graphs on a:
// a itself when finite, otherwise w^beta * (n+1) where a = w*beta + n.
inline Ordinal zeta(const Ordinal& a) {
  if (a.is_finite()) return a;
  auto [beta, n] = omega_quot_rem(a);
  return mul(omega_power(beta), Ordinal{Natural{n + 1}});
}

inline Cofinality cofinality(const Ordinal& a) {
  if (a.is_zero()) return Cofinality::zero;
  if (a.is_successor()) return Cofinality::one;
  return Cofinality::omega;
}

// Standard assignment: unwind the last CNF term.
//   (... + w^(e+1)*c)[i] = ... + w^(e+1)*(c-1) + w^e*i
//   (... + w^e*c)[i]     = ... + w^e*(c-1) + w^(e[i])     for limit e
inline Ordinal fundamental_sequence(const Ordinal& a, std::uint64_t i) {
  if (!a.is_limit()) throw std::invalid_argument("fundamental sequence needs a limit ordinal");
  std::vector<OrdinalTerm> prefix(a.terms().begin(), a.terms().end() - 1);
  const OrdinalTerm& last = a.terms().back();
  if (last.coefficient > 1) prefix.push_back(OrdinalTerm{last.exponent, last.coefficient - 1});
  Ordinal head = Ordinal::from_terms(std::move(prefix));
  if (last.exponent.is_successor()) {
    Ordinal e = last.exponent;
    // e - 1: drop one from the finite part.
    std::vector<OrdinalTerm> et(e.terms().begin(), e.terms().end());
    if (et.back().coefficient == 1) et.pop_back();
    else et.back().coefficient -= 1;
    Ordinal pred = Ordinal::from_terms(std::move(et));
    return add(head, mul(omega_power(pred), Ordinal{i}));
  }
  return add(head, omega_power(fundamental_sequence(last.exponent, i)));
}

// ---------------------------------------------------------------------------
// Text form:
//   ord      := "0" | term ("+" term)*
//   term     := "w" ["^" ord-atom] ["*" nat] | nat
//   ord-atom := nat | "w" | "(" ord ")"

namespace detail {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  Ordinal parse_all() {
    Ordinal o = parse_ord();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return o;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw OrdinalParseError(msg, pos_); }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  Natural parse_nat() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected a number");
    Natural n{std::string(s_.substr(start, pos_ - start))};
    if (n == 0) {
      pos_ = start;
      fail("zero is not allowed inside a term");
    }
    return n;
  }

  Ordinal parse_ord() {
    if (peek('0')) {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
        pos_ = start;
        fail("leading zero");
      }
      return Ordinal{};
    }
    std::vector<OrdinalTerm> terms;
    for (;;) {
      const std::size_t term_start = pos_;
      OrdinalTerm t = parse_term();
      if (!terms.empty() && !(t.exponent < terms.back().exponent)) {
        pos_ = term_start;
        fail("terms must appear in strictly decreasing exponent order");
      }
      terms.push_back(std::move(t));
      if (!peek('+')) break;
      ++pos_;
    }
    return Ordinal::from_terms(std::move(terms));
  }

  OrdinalTerm parse_term() {
    if (peek('w')) {
      ++pos_;
      Ordinal e{1};
      if (peek('^')) {
        ++pos_;
        e = parse_atom();
      }
      Natural c{1};
      if (peek('*')) {
        ++pos_;
        c = parse_nat();
      }
      return OrdinalTerm{std::move(e), std::move(c)};
    }
    if (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9')
      return OrdinalTerm{Ordinal{}, parse_nat()};
    fail("expected a term");
  }

  Ordinal parse_atom() {
    if (peek('w')) {
      ++pos_;
      return Ordinal::omega();
    }
    if (peek('(')) {
      ++pos_;
      const std::size_t inner = pos_;
      Ordinal e = parse_ord();
      if (e.is_zero()) {
        pos_ = inner;
        fail("exponent 0 is not canonical");
      }
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    return Ordinal{parse_nat()};
  }
};

}  // namespace detail

inline Ordinal parse_ordinal(std::string_view text) {
  return detail::OrdinalParser(text).parse_all();
}

inline std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal{1}) {
      out += '^';
      if (t.exponent.is_finite()) out += t.exponent.to_natural().str();
      else if (t.exponent == Ordinal::omega()) out += 'w';
      else out += '(' + to_string(t.exponent) + ')';
    }
    if (t.coefficient != 1) out += '*' + t.coefficient.str();
  }
  return out;
}

inline std::string to_string(Cofinality c) {
  switch (c) {
    case Cofinality::zero: return "0";
    case Cofinality::one: return "1";
    case Cofinality::omega: return "w";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

}  // namespace ordsearch
