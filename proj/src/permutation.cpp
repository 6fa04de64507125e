#include "cca/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cca/error.hpp"

namespace cca
{

Permutation::Permutation(std::size_t degree) : _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw InvalidArgument("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InvalidArgument("cycle point " + std::to_string(x + 1) +
                              " exceeds degree " + std::to_string(degree));
      if (used[x])
        throw InvalidArgument("point " + std::to_string(x + 1) +
                              " appears twice in cycle list");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (Point i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation result;
  result._images.resize(_images.size());
  for (Point i = 0; i < _images.size(); ++i)
    result._images[_images[i]] = i;
  return result;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (auto const &cycle : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  return result;
}

Permutation Permutation::pow(std::int64_t k) const
{
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result(degree());
  while (e) {
    if (e & 1u)
      result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Point Permutation::first_moved() const
{
  for (Point i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return i;
  }
  return static_cast<Point>(_images.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(_images.size(), false);
  for (Point start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !done[x]; x = _images[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream out;
  for (auto const &cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << cycle[i] + 1;
    out << ')';
  }
  return out.str();
}

Permutation operator*(Permutation const &lhs, Permutation const &rhs)
{
  if (lhs.degree() != rhs.degree())
    throw InvalidArgument("degree mismatch in permutation product (" +
                          std::to_string(lhs.degree()) + " vs " +
                          std::to_string(rhs.degree()) + ")");
  Permutation result;
  result._images.resize(lhs.degree());
  for (Point i = 0; i < lhs._images.size(); ++i)
    result._images[i] = rhs._images[lhs._images[i]];
  return result;
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  *this = *this * rhs;
  return *this;
}

Permutation conjugate(Permutation const &x, Permutation const &g)
{
  return g.inverse() * x * g;
}

Permutation commutator(Permutation const &x, Permutation const &y)
{
  return x.inverse() * y.inverse() * x * y;
}

namespace
{

class CycleScanner
{
public:
  explicit CycleScanner(std::string_view text) : _text(text) {}

  void skip_space()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool done()
  {
    skip_space();
    return _pos == _text.size();
  }

  char peek()
  {
    skip_space();
    return _pos < _text.size() ? _text[_pos] : '\0';
  }

  void expect(char c)
  {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++_pos;
  }

  std::size_t number()
  {
    skip_space();
    std::size_t start = _pos;
    std::size_t value = 0;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      value = value * 10 + static_cast<std::size_t>(_text[_pos] - '0');
      if (value > 1'000'000'000)
        fail("point number too large");
      ++_pos;
    }
    if (start == _pos)
      fail("expected a point number");
    return value;
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError("cycle notation \"" + std::string(_text) + "\": " + what +
                     " at offset " + std::to_string(_pos));
  }

  std::size_t _pos = 0;

private:
  std::string_view _text;
};

std::vector<std::vector<std::size_t>> scan_cycles(std::string_view text)
{
  CycleScanner in(text);
  std::vector<std::vector<std::size_t>> cycles;
  while (!in.done()) {
    in.expect('(');
    std::vector<std::size_t> cycle;
    while (in.peek() != ')') {
      if (in.peek() == ',' && !cycle.empty()) {
        in.expect(',');
        continue;
      }
      if (in.peek() == '\0')
        in.fail("unterminated cycle");
      cycle.push_back(in.number());
    }
    in.expect(')');
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  for (auto const &raw : scan_cycles(text)) {
    std::vector<Point> cycle;
    for (std::size_t x : raw) {
      if (x < 1 || x > degree)
        throw ParseError("cycle notation \"" + std::string(text) + "\": point " +
                         std::to_string(x) + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<Point>(x - 1));
    }
    cycles.push_back(std::move(cycle));
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (InvalidArgument const &e) {
    throw ParseError("cycle notation \"" + std::string(text) + "\": " + e.what());
  }
}

std::size_t max_point_in_cycles(std::string_view text)
{
  std::size_t result = 0;
  for (auto const &cycle : scan_cycles(text)) {
    for (std::size_t x : cycle)
      result = std::max(result, x);
  }
  return result;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace cca
