#include "cca/field.hpp"

#include <string>

#include "json.hpp"

#include "cca/embedded_data.hpp"
#include "cca/error.hpp"

namespace cca
{

std::pair<unsigned, unsigned> prime_power(unsigned q)
{
  if (q < 2)
    return {0, 0};
  unsigned p = 2;
  while (q % p)
    ++p;
  unsigned f = 0;
  for (unsigned rest = q; rest > 1; rest /= p) {
    if (rest % p)
      return {0, 0};
    ++f;
  }
  return {p, f};
}

namespace
{

std::vector<unsigned> stored_polynomial(unsigned q)
{
  static nlohmann::json const table = nlohmann::json::parse(embedded::field_polynomials_json);
  for (auto const &entry : table.at("fields")) {
    if (entry.at("q").get<unsigned>() == q)
      return entry.at("coefficients").get<std::vector<unsigned>>();
  }
  throw InvalidArgument("no stored irreducible polynomial for GF(" + std::to_string(q) + ")");
}

std::vector<unsigned> digits(unsigned x, unsigned p, unsigned f)
{
  std::vector<unsigned> d(f);
  for (unsigned i = 0; i < f; ++i, x /= p)
    d[i] = x % p;
  return d;
}

unsigned from_digits(std::vector<unsigned> const &d, unsigned p)
{
  unsigned x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it)
    x = x * p + *it;
  return x;
}

} // namespace

FieldTable FieldTable::make(unsigned q, unsigned max_q)
{
  auto [p, f] = prime_power(q);
  if (p == 0)
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (q > max_q)
    throw InvalidArgument("field order " + std::to_string(q) + " exceeds the supported maximum " +
                          std::to_string(max_q));

  FieldTable t;
  t._q = q;
  t._p = p;
  t._degree = f;
  t._poly = f == 1 ? std::vector<unsigned>{0, 1} : stored_polynomial(q);
  if (t._poly.size() != f + 1 || t._poly.back() != 1)
    throw InvalidArgument("stored polynomial for GF(" + std::to_string(q) +
                          ") is not monic of degree " + std::to_string(f));

  t._add.resize(q * q);
  t._mul.resize(q * q);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a, p, f);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b, p, f);
      std::vector<unsigned> sum(f);
      for (unsigned i = 0; i < f; ++i)
        sum[i] = (da[i] + db[i]) % p;
      t._add[a * q + b] = from_digits(sum, p);

      // schoolbook product, then reduce modulo the monic polynomial
      std::vector<unsigned> prod(2 * f - 1, 0);
      for (unsigned i = 0; i < f; ++i)
        for (unsigned j = 0; j < f; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (unsigned deg = 2 * f - 2; deg >= f; --deg) {
        unsigned lead = prod[deg];
        if (lead == 0)
          continue;
        for (unsigned i = 0; i <= f; ++i)
          prod[deg - f + i] = (prod[deg - f + i] + (p - lead) * t._poly[i]) % p;
      }
      prod.resize(f);
      t._mul[a * q + b] = from_digits(prod, p);
    }
  }

  t._neg.resize(q);
  t._inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (t.add(a, b) == 0)
        t._neg[a] = b;
      if (t.mul(a, b) == 1)
        t._inv[a] = b;
    }
    if (a != 0 && t._inv[a] == 0)
      throw InvalidArgument("polynomial for GF(" + std::to_string(q) + ") is reducible");
  }

  for (unsigned g = 1; g < q; ++g) {
    unsigned x = g, k = 1;
    while (x != 1) {
      x = t.mul(x, g);
      ++k;
    }
    if (k == q - 1) {
      t._primitive = g;
      break;
    }
  }
  return t;
}

unsigned FieldTable::pow(unsigned a, unsigned k) const
{
  unsigned result = 1;
  for (unsigned i = 0; i < k; ++i)
    result = mul(result, a);
  return result;
}

} // namespace cca
