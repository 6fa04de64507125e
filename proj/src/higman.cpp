#include "cca/higman.hpp"

#include <bit>
#include <random>

#include "json.hpp"

namespace cca::higman
{

Params::Params(unsigned r, unsigned s) : _r(r), _s(s), _b(r, 0), _c(r, std::vector<std::uint64_t>(r, 0))
{
  if (r < 1 || s < 1)
    throw InvalidArgument("Higman parameters need r >= 1 and s >= 1");
  if (r > 32 || s > 32)
    throw InvalidArgument("Higman parameters limited to r, s <= 32");
}

void Params::check(unsigned i, unsigned j) const
{
  if (i < 1 || i > _r || j < 1 || j > _s)
    throw InvalidArgument("Higman index out of range");
}

bool Params::b(unsigned i, unsigned j) const
{
  check(i, j);
  return (_b[i - 1] >> (j - 1)) & 1u;
}

void Params::set_b(unsigned i, unsigned j, bool bit)
{
  check(i, j);
  std::uint64_t m = std::uint64_t{1} << (j - 1);
  _b[i - 1] = bit ? (_b[i - 1] | m) : (_b[i - 1] & ~m);
}

bool Params::c(unsigned i, unsigned j, unsigned k) const
{
  if (i >= j || j > _r)
    throw InvalidArgument("commutator parameters need 1 <= i < j <= r");
  check(i, k);
  return (_c[i - 1][j - 1] >> (k - 1)) & 1u;
}

void Params::set_c(unsigned i, unsigned j, unsigned k, bool bit)
{
  if (i >= j || j > _r)
    throw InvalidArgument("commutator parameters need 1 <= i < j <= r");
  check(i, k);
  std::uint64_t m = std::uint64_t{1} << (k - 1);
  auto &w = _c[i - 1][j - 1];
  w = bit ? (w | m) : (w & ~m);
}

std::uint64_t Params::square_word(unsigned i) const
{
  check(i, 1);
  return _b[i - 1];
}

std::uint64_t Params::commutator_word(unsigned i, unsigned j) const
{
  if (i >= j || j > _r || i < 1)
    throw InvalidArgument("commutator parameters need 1 <= i < j <= r");
  return _c[i - 1][j - 1];
}

bool Params::satisfies_constraint() const
{
  if (_r < 2)
    return false;
  return _b[_r - 1] == 1u && _b[_r - 2] == 1u;
}

Group::Group(Params params)
: _params(std::move(params)),
  _mask_r((std::uint64_t{1} << _params.r()) - 1),
  _mask_s((std::uint64_t{1} << _params.s()) - 1)
{
  if (_params.r() == 0)
    throw InvalidArgument("Higman group needs initialized parameters");
  if (_params.n() > 40)
    throw LimitExceeded("Higman group order 2^" + std::to_string(_params.n()) + " too large");
}

std::uint64_t Group::collection_cocycle(std::uint64_t x, std::uint64_t y) const
{
  std::uint64_t result = 0;
  for (std::uint64_t rest = y; rest; rest &= rest - 1) {
    auto i = static_cast<unsigned>(std::countr_zero(rest));
    // g_i from the right factor passes every later g_j of the left factor
    std::uint64_t later = x & ~((std::uint64_t{2} << i) - 1);
    for (; later; later &= later - 1) {
      auto j = static_cast<unsigned>(std::countr_zero(later));
      result ^= _params.commutator_word(i + 1, j + 1);
    }
    if ((x >> i) & 1u)
      result ^= _params.square_word(i + 1);
  }
  return result;
}

Element Group::multiply(Element const &a, Element const &b) const
{
  if ((a.e | b.e) & ~_mask_r || (a.f | b.f) & ~_mask_s)
    throw InvalidArgument("Higman element does not match the parameter dimensions");
  return {a.e ^ b.e, a.f ^ b.f ^ collection_cocycle(a.e, b.e)};
}

Element Group::invert(Element const &a) const
{
  // a * a^-1 = 1 forces the same g-part and f' = f + B(e, e)
  return {a.e, a.f ^ collection_cocycle(a.e, a.e)};
}

Element Group::power(Element const &a, unsigned k) const
{
  Element result;
  for (unsigned i = 0; i < k; ++i)
    result = multiply(result, a);
  return result;
}

Element Group::g(unsigned i) const
{
  if (i < 1 || i > _params.r())
    throw InvalidArgument("no generator g" + std::to_string(i));
  return {std::uint64_t{1} << (i - 1), 0};
}

Element Group::h(unsigned j) const
{
  if (j < 1 || j > _params.s())
    throw InvalidArgument("no generator h" + std::to_string(j));
  return {0, std::uint64_t{1} << (j - 1)};
}

Element Group::element_at(std::uint64_t index) const
{
  return {index & _mask_r, (index >> _params.r()) & _mask_s};
}

std::vector<Element> Group::elements() const
{
  std::vector<Element> result;
  result.reserve(static_cast<std::size_t>(order()));
  for (std::uint64_t i = 0; i < order(); ++i)
    result.push_back(element_at(i));
  return result;
}

std::string Group::label(Element const &a) const
{
  std::string out;
  auto append = [&](char sym, std::uint64_t bits) {
    for (; bits; bits &= bits - 1) {
      if (!out.empty())
        out += '*';
      out += sym;
      out += std::to_string(std::countr_zero(bits) + 1);
    }
  };
  append('g', a.e);
  append('h', a.f);
  return out.empty() ? "1" : out;
}

Permutation Group::right_action(Element const &a) const
{
  std::vector<Point> images(static_cast<std::size_t>(order()));
  for (std::uint64_t i = 0; i < order(); ++i)
    images[i] = static_cast<Point>(index(multiply(element_at(i), a)));
  return Permutation(std::move(images));
}

PermutationGroup Group::regular_representation(std::size_t max_degree) const
{
  if (order() > max_degree)
    throw LimitExceeded("regular representation of degree " + std::to_string(order()) +
                        " exceeds the limit " + std::to_string(max_degree));
  std::vector<Permutation> gens;
  for (unsigned i = 1; i <= _params.r(); ++i)
    gens.push_back(right_action(g(i)));
  for (unsigned j = 1; j <= _params.s(); ++j)
    gens.push_back(right_action(h(j)));
  PermutationGroup result(static_cast<std::size_t>(order()), std::move(gens));
  if (result.order() != order())
    throw Error("regular representation has order " + std::to_string(result.order()) +
                ", expected " + std::to_string(order()));
  return result;
}

unsigned free_bits(unsigned r, unsigned s)
{
  return r * (r - 1) / 2 * s + (r >= 2 ? (r - 2) * s : 0);
}

Params sample_params(unsigned n, std::uint64_t seed)
{
  if (n < 3)
    throw InvalidArgument("Higman sampling needs n >= 3");
  if (n > 20)
    throw InvalidArgument("Higman sampling limited to n <= 20");

  unsigned r = 2 * n / 3;
  unsigned s = n - r;
  Params p(r, s);
  std::mt19937_64 rng(seed);
  auto bit = [&rng] { return (rng() >> 63) != 0; };

  for (unsigned i = 1; i + 2 <= r; ++i)
    for (unsigned j = 1; j <= s; ++j)
      p.set_b(i, j, bit());
  for (unsigned i = r - 1; i <= r; ++i)
    p.set_b(i, 1, true);
  for (unsigned i = 1; i <= r; ++i)
    for (unsigned j = i + 1; j <= r; ++j)
      for (unsigned k = 1; k <= s; ++k)
        p.set_c(i, j, k, bit());

  p.constrained = true;
  p.seed = seed;
  return p;
}

std::string params_to_json(Params const &p)
{
  nlohmann::ordered_json j;
  j["n"] = p.n();
  j["r"] = p.r();
  j["s"] = p.s();
  auto b = nlohmann::ordered_json::array();
  for (unsigned i = 1; i <= p.r(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (unsigned k = 1; k <= p.s(); ++k)
      row.push_back(p.b(i, k) ? 1 : 0);
    b.push_back(row);
  }
  j["b"] = b;
  auto c = nlohmann::ordered_json::array();
  for (unsigned i = 1; i <= p.r(); ++i)
    for (unsigned jj = i + 1; jj <= p.r(); ++jj)
      for (unsigned k = 1; k <= p.s(); ++k)
        c.push_back({{"i", i}, {"j", jj}, {"k", k}, {"bit", p.c(i, jj, k) ? 1 : 0}});
  j["c"] = c;
  j["constrained"] = p.constrained;
  if (p.seed)
    j["seed"] = *p.seed;
  return j.dump();
}

Params params_from_json(std::string const &text)
{
  try {
    auto j = nlohmann::json::parse(text);
    auto r = j.at("r").get<unsigned>();
    auto s = j.at("s").get<unsigned>();
    if (j.contains("n") && j["n"].get<unsigned>() != r + s)
      throw ParseError("Higman params: n != r + s");
    Params p(r, s);

    auto const &b = j.at("b");
    if (b.size() != r)
      throw ParseError("Higman params: b needs r rows");
    for (unsigned i = 0; i < r; ++i) {
      if (b[i].size() != s)
        throw ParseError("Higman params: each b row needs s entries");
      for (unsigned k = 0; k < s; ++k) {
        auto bit = b[i][k].get<int>();
        if (bit != 0 && bit != 1)
          throw ParseError("Higman params: b entries must be 0 or 1");
        p.set_b(i + 1, k + 1, bit == 1);
      }
    }
    for (auto const &entry : j.value("c", nlohmann::json::array())) {
      auto i = entry.at("i").get<unsigned>();
      auto jj = entry.at("j").get<unsigned>();
      auto k = entry.at("k").get<unsigned>();
      auto bit = entry.at("bit").get<int>();
      if (bit != 0 && bit != 1)
        throw ParseError("Higman params: c bits must be 0 or 1");
      if (!(1 <= i && i < jj && jj <= r && 1 <= k && k <= s))
        throw ParseError("Higman params: c entry needs 1 <= i < j <= r, 1 <= k <= s");
      p.set_c(i, jj, k, bit == 1);
    }
    p.constrained = j.value("constrained", false);
    if (p.constrained && !p.satisfies_constraint())
      throw ParseError("Higman params: constrained set but g_r^2 = g_{r-1}^2 = h_1 fails");
    if (j.contains("seed"))
      p.seed = j["seed"].get<std::uint64_t>();
    return p;
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("Higman params: ") + e.what());
  } catch (InvalidArgument const &e) {
    throw ParseError(std::string("Higman params: ") + e.what());
  }
}

} // namespace cca::higman
