#ifndef CCA_FIELD_HPP
#define CCA_FIELD_HPP

#include <cstdint>
#include <vector>

namespace cca
{

/**
 * Finite field GF(q) as addition and multiplication tables. Elements are
 * 0..q-1; element x encodes the polynomial sum_i c_i x^i over GF(p) with
 * x = sum_i c_i p^i, so 0 and 1 are the field's zero and one.
 */
class FieldTable
{
public:
  /**
   * Prime fields are built directly; prime powers use the stored
   * irreducible polynomial. Throws InvalidArgument if q is not a prime
   * power, exceeds max_q, or has no stored polynomial.
   */
  static FieldTable make(unsigned q, unsigned max_q = 32);

  unsigned order() const { return _q; }
  unsigned characteristic() const { return _p; }
  unsigned degree() const { return _degree; }

  unsigned add(unsigned a, unsigned b) const { return _add[a * _q + b]; }
  unsigned mul(unsigned a, unsigned b) const { return _mul[a * _q + b]; }
  unsigned neg(unsigned a) const { return _neg[a]; }
  /// Multiplicative inverse; a must be nonzero.
  unsigned inv(unsigned a) const { return _inv[a]; }
  unsigned pow(unsigned a, unsigned k) const;

  /// Smallest generator of the multiplicative group.
  unsigned primitive() const { return _primitive; }

  /// Defining polynomial coefficients, constant term first.
  std::vector<unsigned> const &polynomial() const { return _poly; }

private:
  unsigned _q = 0, _p = 0, _degree = 0, _primitive = 0;
  std::vector<unsigned> _poly;
  std::vector<unsigned> _add, _mul, _neg, _inv;
};

/// (p, f) with q = p^f, or (0, 0) if q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q);

} // namespace cca

#endif // CCA_FIELD_HPP
