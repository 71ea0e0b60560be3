#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kacfold/error.hpp"

namespace kacfold {

/// Field element, encoded as sum c_i p^i over the coefficients of its
/// polynomial representative. Prime-field elements are 0..p-1.
using Elem = std::uint32_t;

inline constexpr int kMaxFieldDegree = 12;
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

namespace detail {

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, constant term first

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t qq = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
  }
  return static_cast<std::uint32_t>((t % p + p) % p);
}

/// Remainder of f modulo g (g nonzero), over F_p.
inline Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inverse_mod(g.back(), p);
  while (f.size() > dg && !f.empty()) {
    const std::uint64_t c = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - c) * g[i]) % p);
    trim(f);
  }
  return f;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    // every monic polynomial of degree d
    Poly g(d + 1, 0);
    g[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t x = k;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// F_{p^m} with the lexicographically least monic irreducible modulus
/// (coefficients compared from the constant term). Copies share tables.
class FiniteField {
 public:
  FiniteField() = default;

  std::uint32_t characteristic() const { return t_->p; }
  int degree() const { return t_->m; }
  std::uint32_t size() const { return t_->q; }
  /// Coefficients c_0..c_{m-1} of the monic modulus x^m + ...
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  Elem primitive_element() const { return t_->exp[1]; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t k) const {
    const std::int64_t p = t_->p;
    return static_cast<Elem>(((k % p) + p) % p);
  }

  Elem add(Elem a, Elem b) const {
    if (!t_->add_table.empty()) return t_->add_table[a * t_->q + b];
    if (t_->m == 1) return (a + b) % t_->p;
    if (t_->p == 2) return a ^ b;
    Elem out = 0, place = 1;
    for (int i = 0; i < t_->m; ++i) {
      out += ((a % t_->p + b % t_->p) % t_->p) * place;
      a /= t_->p;
      b /= t_->p;
      place *= t_->p;
    }
    return out;
  }

  Elem neg(Elem a) const {
    if (t_->m == 1) return a == 0 ? 0 : t_->p - a;
    Elem out = 0, place = 1;
    for (int i = 0; i < t_->m; ++i) {
      const Elem c = a % t_->p;
      out += (c == 0 ? 0 : t_->p - c) * place;
      a /= t_->p;
      place *= t_->p;
    }
    return out;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (!t_->mul_table.empty()) return t_->mul_table[a * t_->q + b];
    if (a == 0 || b == 0) return 0;
    return t_->exp[(t_->log[a] + t_->log[b]) % (t_->q - 1)];
  }

  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::BadParameter, "zero has no inverse");
    return t_->exp[(t_->q - 1 - t_->log[a]) % (t_->q - 1)];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return t_->exp[static_cast<std::uint64_t>(t_->log[a]) * (e % (t_->q - 1)) % (t_->q - 1)];
  }

  /// x^{p^s}
  Elem frobenius(Elem x, int s) const {
    std::uint64_t e = 1;
    for (int i = 0; i < s % t_->m; ++i) e *= t_->p;
    return pow(x, e);
  }

  /// Discrete logarithm to the base of primitive_element(); x must be nonzero.
  std::uint32_t log(Elem x) const { return t_->log[x]; }
  Elem exp(std::uint64_t k) const { return t_->exp[k % (t_->q - 1)]; }

  std::vector<std::uint32_t> digits(Elem x) const {
    std::vector<std::uint32_t> c(t_->m);
    for (int i = 0; i < t_->m; ++i) {
      c[i] = x % t_->p;
      x /= t_->p;
    }
    return c;
  }

  bool operator==(const FiniteField& o) const {
    return t_ == o.t_ || (t_ && o.t_ && t_->p == o.t_->p && t_->m == o.t_->m);
  }

  /// "p" or "p^m"
  std::string name() const {
    return t_->m == 1 ? std::to_string(t_->p) : std::to_string(t_->p) + "^" + std::to_string(t_->m);
  }

  friend FiniteField make_field(std::uint32_t p, int m);

 private:
  struct Tables {
    std::uint32_t p = 2;
    int m = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> exp;
    std::vector<std::uint32_t> log;
    std::vector<Elem> add_table;
    std::vector<Elem> mul_table;
  };
  std::shared_ptr<const Tables> t_;
};

inline FiniteField make_field(std::uint32_t p, int m = 1) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1 || m > kMaxFieldDegree) throw Error(ErrorKind::DegreeTooLarge, "degree " + std::to_string(m) + " is outside 1.." + std::to_string(kMaxFieldDegree));
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw Error(ErrorKind::DegreeTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds the field size cap");
  }

  auto t = std::make_shared<FiniteField::Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);

  // lexicographically least monic irreducible: c_0 is the most significant digit
  detail::Poly f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t k = 0; k < q; ++k) {
    std::uint64_t x = k;
    for (int i = m - 1; i >= 0; --i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    if (detail::is_irreducible(f, p)) break;
  }
  t->modulus.assign(f.begin(), f.end() - 1);

  // polynomial product of codes, reduced by the modulus
  auto poly_mul = [&](Elem a, Elem b) -> Elem {
    std::vector<std::uint64_t> prod(2 * m, 0);
    std::vector<std::uint32_t> da(m), db(m);
    for (int i = 0; i < m; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p;
    for (int k = 2 * m - 1; k >= m; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * t->modulus[i]) % p;
    }
    Elem out = 0, place = 1;
    for (int i = 0; i < m; ++i) {
      out += static_cast<Elem>(prod[i]) * place;
      place *= p;
    }
    return out;
  };

  // least primitive element
  t->exp.assign(q - 1, 0);
  t->log.assign(q, 0);
  for (Elem g = 1; g < q; ++g) {
    Elem x = 1;
    std::uint64_t order = 0;
    do {
      x = poly_mul(x, g);
      ++order;
    } while (x != 1);
    if (order != q - 1) continue;
    x = 1;
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      t->exp[k] = x;
      t->log[x] = static_cast<std::uint32_t>(k);
      x = poly_mul(x, g);
    }
    break;
  }

  if (q <= 256) {
    FiniteField tmp;
    tmp.t_ = t;
    std::vector<Elem> add(q * q), mul(q * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        add[a * q + b] = tmp.add(a, b);
        mul[a * q + b] = tmp.mul(a, b);
      }
    t->add_table = std::move(add);
    t->mul_table = std::move(mul);
  }

  FiniteField field;
  field.t_ = std::move(t);
  return field;
}

/// Parses "p", "p^m", or a prime power written as an integer.
inline FiniteField parse_field(const std::string& text) {
  try {
    const auto caret = text.find('^');
    if (caret != std::string::npos) {
      return make_field(static_cast<std::uint32_t>(std::stoul(text.substr(0, caret))), std::stoi(text.substr(caret + 1)));
    }
    const std::uint64_t n = std::stoull(text);
    if (n < 2) throw Error(ErrorKind::NotPrime, text + " is not a prime power");
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    int m = 0;
    std::uint64_t r = n;
    while (r % p == 0) {
      r /= p;
      ++m;
    }
    if (r != 1) throw Error(ErrorKind::NotPrime, text + " is not a prime power");
    return make_field(static_cast<std::uint32_t>(p), m);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "cannot parse field '" + text + "'");
  }
}

/// Ring embedding of a subfield into a larger field of the same characteristic.
struct SubfieldEmbedding {
  FiniteField sub;
  FiniteField big;
  std::vector<Elem> image;  // image[x] for every x in sub

  Elem operator()(Elem x) const { return image.at(x); }
};

/// The generator x of the subfield goes to the least root of its modulus.
inline SubfieldEmbedding subfield_embedding(const FiniteField& sub, const FiniteField& big) {
  if (sub.characteristic() != big.characteristic())
    throw Error(ErrorKind::NotSubfield, "F_" + sub.name() + " and F_" + big.name() + " have different characteristic");
  if (big.degree() % sub.degree() != 0)
    throw Error(ErrorKind::NotSubfield, "F_" + sub.name() + " is not a subfield of F_" + big.name());
  const int a = sub.degree();
  auto eval_modulus = [&](Elem x) {
    Elem acc = 1;  // monic leading term
    for (int i = a - 1; i >= 0; --i) acc = big.add(big.mul(acc, x), sub.modulus()[i]);
    return acc;
  };
  Elem theta = 0;
  while (eval_modulus(theta) != 0) ++theta;

  SubfieldEmbedding e{sub, big, std::vector<Elem>(sub.size())};
  for (Elem x = 0; x < sub.size(); ++x) {
    const auto c = sub.digits(x);
    Elem acc = 0;
    for (int i = a - 1; i >= 0; --i) acc = big.add(big.mul(acc, theta), c[i]);
    e.image[x] = acc;
  }
  return e;
}

/// All roots in F of sum coeffs[i] x^i, ascending by code.
inline std::vector<Elem> solve_univariate(const FiniteField& f, const std::vector<Elem>& coeffs) {
  std::vector<Elem> roots;
  for (Elem x = 0; x < f.size(); ++x) {
    Elem acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace kacfold
