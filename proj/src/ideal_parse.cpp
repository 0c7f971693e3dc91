#include "lechlab/ideal_parse.hpp"

#include <json.hpp>

#include <cctype>
#include <cstring>

namespace lech {

namespace {

constexpr const char* kVarNames = "xyzwvu";

int varIndex(char c) {
  const char* p = std::strchr(kVarNames, c);
  return p && c ? static_cast<int>(p - kVarNames) : -1;
}

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skipSpace() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return i < s.size() ? s[i] : '\0'; }

  int parseInt() {
    skipSpace();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected an integer at position " + std::to_string(start));
    long v = std::stol(s.substr(start, i - start));
    if (v > 1'000'000) throw ParseError("exponent too large");
    return static_cast<int>(v);
  }
};

// factor := var ('^' int)?   term := factor ('*' factor)*
std::pair<std::vector<int>, int> parseTerm(Cursor& c, int minDim) {
  std::vector<int> exps(kMaxDim, 0);
  int maxVar = minDim;
  while (true) {
    c.skipSpace();
    int v = varIndex(c.peek());
    if (v < 0) throw ParseError("expected a variable (x,y,z,w,v,u) at position " +
                                std::to_string(c.i));
    ++c.i;
    int e = 1;
    c.skipSpace();
    if (c.peek() == '^') {
      ++c.i;
      e = c.parseInt();
    }
    exps[v] += e;
    maxVar = std::max(maxVar, v + 1);
    c.skipSpace();
    if (c.peek() == '*') {
      ++c.i;
      continue;
    }
    break;
  }
  return {exps, maxVar};
}

}  // namespace

MonomialIdeal parseIdealJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("gens"))
    throw ParseError("ideal JSON needs the fields \"dim\" and \"gens\"");
  if (!j["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  if (!j["gens"].is_array() || j["gens"].empty())
    throw ParseError("\"gens\" must be a nonempty array of exponent vectors");
  std::vector<ExponentVector> gens;
  for (const auto& row : j["gens"]) {
    if (!row.is_array()) throw ParseError("each generator must be an array of integers");
    std::vector<int> coords;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw ParseError("exponents must be integers");
      int v = e.get<int>();
      if (v < 0) throw ParseError("exponents must be nonnegative");
      coords.push_back(v);
    }
    if (static_cast<int>(coords.size()) != dim)
      throw ParseError("generator length does not match \"dim\"");
    gens.emplace_back(std::move(coords));
  }
  try {
    return MonomialIdeal::minimalize(std::move(gens), dim);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

MonomialIdeal parseIdealText(const std::string& text, std::optional<int> dimHint) {
  Cursor c{text};
  c.skipSpace();
  if (c.done()) throw ParseError("empty ideal expression");
  if (dimHint && (*dimHint < 1 || *dimHint > kMaxDim))
    throw ParseError("--dim must be between 1 and " + std::to_string(kMaxDim));

  // "m" or "m^n": the maximal ideal, dimension from the hint.
  if (c.peek() == 'm') {
    ++c.i;
    int n = 1;
    c.skipSpace();
    if (c.peek() == '^') {
      ++c.i;
      n = c.parseInt();
    }
    c.skipSpace();
    if (!c.done()) throw ParseError("unexpected trailing input after m^n");
    if (!dimHint) throw ParseError("the m^n form needs --dim");
    if (n < 1) throw ParseError("m^n needs n >= 1");
    return MonomialIdeal::maximalPower(*dimHint, n);
  }

  std::vector<std::vector<int>> rawGens;
  int dim = 0;
  while (true) {
    auto [exps, maxVar] = parseTerm(c, 1);
    rawGens.push_back(std::move(exps));
    dim = std::max(dim, maxVar);
    c.skipSpace();
    if (c.peek() == ',') {
      ++c.i;
      continue;
    }
    break;
  }
  c.skipSpace();
  if (!c.done()) throw ParseError("unexpected input at position " + std::to_string(c.i));
  if (dimHint) {
    if (*dimHint < dim)
      throw ParseError("--dim is smaller than the highest variable used");
    dim = *dimHint;
  }
  std::vector<ExponentVector> gens;
  for (auto& raw : rawGens)
    gens.emplace_back(std::vector<int>(raw.begin(), raw.begin() + dim));
  try {
    return MonomialIdeal::minimalize(std::move(gens), dim);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace lech
