#include "common.hpp"

#include "eigencone/errors.hpp"

#include <cctype>

namespace eigencone::cli {

namespace {
std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Rational parse_rational(const std::string& tok) {
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = tok.find('/');
  std::string num = tok.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("not a number: '" + tok + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  const Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + tok + "'");
  return Rational(Integer(num), d);
}
}  // namespace

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

RayTuple parse_tuple(std::string_view text, int rank) {
  std::vector<Weight> ws;
  for (const std::string& entry : split(text, ';')) {
    std::string e = entry;
    for (char& c : e)
      if (c == ',') c = ' ';
    QVector coords;
    std::size_t pos = 0;
    while (pos < e.size()) {
      while (pos < e.size() && std::isspace(static_cast<unsigned char>(e[pos]))) ++pos;
      if (pos >= e.size()) break;
      std::size_t end = pos;
      while (end < e.size() && !std::isspace(static_cast<unsigned char>(e[end]))) ++end;
      coords.push_back(parse_rational(e.substr(pos, end - pos)));
      pos = end;
    }
    if (static_cast<int>(coords.size()) != rank)
      throw ParseError("tuple entry '" + entry + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                       std::to_string(rank));
    ws.emplace_back(std::move(coords));
  }
  return RayTuple(std::move(ws));
}

std::vector<int> parse_nodes(std::string_view text) {
  std::vector<int> out;
  for (const std::string& tok : split(text, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      const int k = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("");
      out.push_back(k);
    } catch (const std::exception&) {
      throw ParseError("bad node index '" + tok + "'");
    }
  }
  if (out.empty()) throw ParseError("empty node list");
  return out;
}

std::pair<int, WeylId> parse_pair(const Context& ctx, const FaceSpec& face, std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("pair must look like j:word, got '" + std::string(text) + "'");
  int j = 0;
  try {
    j = std::stoi(std::string(text.substr(0, colon)));
  } catch (const std::exception&) {
    throw ParseError("bad pair index in '" + std::string(text) + "'");
  }
  if (j < 1 || j > face.s) throw PreconditionError("pair index " + std::to_string(j) + " out of range 1.." + std::to_string(face.s));
  std::string w = trim(text.substr(colon + 1));
  const WeylGroup& W = ctx.weyl();
  if (!w.empty() && (w.back() == 'u' || w.back() == 'v' || w.back() == 'w')) {
    w.pop_back();
    w = trim(w);
    const WeylId prefix = w.empty() ? W.identity() : W.parse(w);
    return {j - 1, W.multiply(prefix, face.words[j - 1])};
  }
  return {j - 1, W.parse(w)};
}

FaceSpec parse_face(const Context& ctx, std::string_view parabolic, std::string_view words, int s) {
  const std::vector<std::string> ws = split(words, ';');
  if (s > 0 && static_cast<int>(ws.size()) != s)
    throw PreconditionError("--s " + std::to_string(s) + " but " + std::to_string(ws.size()) + " words given");
  FaceSpec f{static_cast<int>(ws.size()), ctx.parabolic(parse_nodes(parabolic)), {}};
  for (const auto& w : ws) f.words.push_back(ctx.weyl().parse(w));
  validate_face(ctx, f);
  return f;
}

std::string word(const Context& ctx, WeylId w) { return ctx.weyl().word_string(w); }

}  // namespace eigencone::cli
