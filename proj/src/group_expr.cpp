#include "cca/group_expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cca/zoo.hpp"

namespace cca
{

namespace
{

constexpr std::size_t max_atom_degree = 4096;

class ExprParser
{
public:
  explicit ExprParser(std::string_view text) : _text(text) {}

  GroupExpr parse()
  {
    GroupExpr first = atom();
    std::vector<GroupExpr> factors;
    skip_space();
    while (_pos < _text.size() && _text[_pos] == 'x') {
      ++_pos;
      if (factors.empty())
        factors.push_back(std::move(first));
      factors.push_back(atom());
      skip_space();
    }
    if (_pos != _text.size())
      fail("unexpected trailing input");
    if (factors.empty())
      return first;

    GroupExpr product;
    product.kind = GroupExpr::Kind::product;
    product.factors = std::move(factors);
    return product;
  }

private:
  std::string_view _text;
  std::size_t _pos = 0;

  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError("group expression \"" + std::string(_text) + "\": " + what + " at offset " +
                     std::to_string(_pos));
  }

  void skip_space()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool consume(std::string_view token)
  {
    if (_text.substr(_pos, token.size()) != token)
      return false;
    _pos += token.size();
    return true;
  }

  void expect(std::string_view token)
  {
    if (!consume(token))
      fail("expected \"" + std::string(token) + "\"");
  }

  std::uint64_t integer()
  {
    skip_space();
    std::size_t start = _pos;
    std::uint64_t value = 0;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(_text[_pos] - '0');
      if (value > (std::uint64_t{1} << 53))
        fail("integer too large");
      ++_pos;
    }
    if (start == _pos)
      fail("expected an integer");
    return value;
  }

  unsigned size_parameter()
  {
    auto v = integer();
    if (v < 1)
      fail("size parameter must be at least 1");
    if (v > max_atom_degree)
      fail("size parameter exceeds " + std::to_string(max_atom_degree));
    return static_cast<unsigned>(v);
  }

  GroupExpr atom()
  {
    skip_space();
    GroupExpr e;
    if (consume("PSL2(")) {
      e.kind = GroupExpr::Kind::psl2;
      e.n = size_parameter();
      skip_space();
      expect(")");
    } else if (consume("perm:")) {
      e.kind = GroupExpr::Kind::perm;
      e.degree = size_parameter();
      skip_space();
      expect(":");
      do {
        e.generators.push_back(cycles(e.degree));
        skip_space();
      } while (consume(","));
    } else if (consume("higman:")) {
      higman(e);
    } else if (_pos < _text.size() && std::string_view("SACD").find(_text[_pos]) != std::string_view::npos) {
      char c = _text[_pos++];
      e.kind = c == 'S'   ? GroupExpr::Kind::symmetric
               : c == 'A' ? GroupExpr::Kind::alternating
               : c == 'C' ? GroupExpr::Kind::cyclic
                          : GroupExpr::Kind::dihedral;
      e.n = size_parameter();
    } else {
      fail("expected a group atom (S n, A n, C n, D n, PSL2(q), perm:, higman:)");
    }
    return e;
  }

  Permutation cycles(std::size_t degree)
  {
    skip_space();
    std::size_t start = _pos;
    while (_pos < _text.size() && _text[_pos] == '(') {
      auto close = _text.find(')', _pos);
      if (close == std::string_view::npos)
        fail("unterminated cycle");
      _pos = close + 1;
      skip_space();
    }
    if (start == _pos)
      fail("expected a generator in cycle notation");
    try {
      return parse_cycles(_text.substr(start, _pos - start), degree);
    } catch (ParseError const &err) {
      fail(err.what());
    }
  }

  void higman(GroupExpr &e)
  {
    if (consume("n=")) {
      e.kind = GroupExpr::Kind::higman_inline;
      auto n = integer();
      if (n < 3 || n > 20)
        fail("Higman n must be in 3..20");
      e.n = static_cast<unsigned>(n);
      if (consume(",")) {
        expect("seed=");
        e.seed = integer();
      }
      return;
    }
    e.kind = GroupExpr::Kind::higman_file;
    std::size_t start = _pos;
    while (_pos < _text.size() && !std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    if (start == _pos)
      fail("expected Higman parameters (n=N,seed=S) or a params file");
    e.path = std::string(_text.substr(start, _pos - start));
  }
};

std::string atom_prefix(GroupExpr::Kind kind)
{
  switch (kind) {
  case GroupExpr::Kind::symmetric:
    return "S";
  case GroupExpr::Kind::alternating:
    return "A";
  case GroupExpr::Kind::cyclic:
    return "C";
  case GroupExpr::Kind::dihedral:
    return "D";
  default:
    return "";
  }
}

higman::Params load_params(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read Higman params file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return higman::params_from_json(buf.str());
}

} // namespace

GroupExpr parse_group_expr(std::string_view text)
{
  return ExprParser(text).parse();
}

std::string print(GroupExpr const &expr)
{
  using Kind = GroupExpr::Kind;
  switch (expr.kind) {
  case Kind::psl2:
    return "PSL2(" + std::to_string(expr.n) + ")";
  case Kind::perm: {
    std::string out = "perm:" + std::to_string(expr.degree) + ":";
    for (std::size_t i = 0; i < expr.generators.size(); ++i)
      out += (i ? "," : "") + expr.generators[i].str();
    return out;
  }
  case Kind::higman_inline:
    return "higman:n=" + std::to_string(expr.n) + ",seed=" + std::to_string(expr.seed);
  case Kind::higman_file:
    return "higman:" + expr.path;
  case Kind::product: {
    std::string out;
    for (std::size_t i = 0; i < expr.factors.size(); ++i)
      out += (i ? " x " : "") + print(expr.factors[i]);
    return out;
  }
  default:
    return atom_prefix(expr.kind) + std::to_string(expr.n);
  }
}

ConstructedGroup construct(GroupExpr const &expr, Limits const &limits)
{
  using Kind = GroupExpr::Kind;
  ConstructedGroup out;
  out.name = print(expr);
  switch (expr.kind) {
  case Kind::symmetric:
    out.group = zoo::symmetric(expr.n);
    break;
  case Kind::alternating:
    out.group = zoo::alternating(expr.n);
    break;
  case Kind::cyclic:
    out.group = zoo::cyclic(expr.n);
    break;
  case Kind::dihedral:
    out.group = zoo::dihedral(expr.n);
    break;
  case Kind::psl2:
    out.group = zoo::psl2(expr.n, limits.max_field);
    break;
  case Kind::perm:
    out.group = PermutationGroup(expr.degree, expr.generators);
    break;
  case Kind::higman_inline:
  case Kind::higman_file: {
    auto params = expr.kind == Kind::higman_inline ? higman::sample_params(expr.n, expr.seed)
                                                   : load_params(expr.path);
    out.higman.emplace(std::move(params));
    out.group = out.higman->regular_representation(limits.graph);
    break;
  }
  case Kind::product: {
    std::vector<PermutationGroup> factors;
    for (auto const &f : expr.factors)
      factors.push_back(construct(f, limits).group);
    out.group = zoo::direct_product(factors);
    break;
  }
  }
  return out;
}

ConstructedGroup construct(std::string_view text, Limits const &limits)
{
  return construct(parse_group_expr(text), limits);
}

} // namespace cca
