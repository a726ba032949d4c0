#include "idist/format.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace idist {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace((unsigned char)c)) out.push_back(c);
  return out;
}

[[noreturn]] void parse_fail(const std::string& what) {
  fail("ParseError", what);
}

long long parse_int(const std::string& s) {
  if (s.empty()) parse_fail("empty number");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    parse_fail("bad integer '" + s + "'");
  }
  if (pos != s.size()) parse_fail("bad integer '" + s + "'");
  return v;
}

}  // namespace

FieldElement parse_element(const FieldCtxPtr& ctx, const std::string& text) {
  auto s = strip(text);
  if (s.empty()) parse_fail("empty element");
  if (s[0] == 'a') {
    if (s.size() == 1) return ctx->alpha();
    if (s[1] != '^') parse_fail("bad element '" + s + "'");
    long long k = parse_int(s.substr(2));
    if (k < 0) parse_fail("negative exponent in '" + s + "'");
    return ctx->alpha_pow(k);
  }
  return ctx->from_prime(parse_int(s));
}

std::string element_string(FieldElement x) {
  if (x.ctx->s() == 1 || x.v <= 1) return std::to_string(x.v);
  return "a^" + std::to_string(x.ctx->dlog(x));
}

Polynomial parse_polynomial(const FieldCtxPtr& ctx, const std::string& text) {
  auto s = strip(text);
  if (s.empty()) parse_fail("empty polynomial");
  std::vector<FieldElement> coeffs;
  auto bump = [&](int d, FieldElement c) {
    if ((size_t)d >= coeffs.size()) coeffs.resize((size_t)d + 1, ctx->zero());
    coeffs[(size_t)d] = coeffs[(size_t)d] + c;
  };
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos + 1);  // a leading '-' stays in its term
    if (next == std::string::npos) next = s.size();
    auto term = s.substr(pos, next - pos);
    pos = next + 1;
    if (term.empty()) parse_fail("empty term in '" + text + "'");
    auto xp = term.find('x');
    if (xp == std::string::npos) {
      bump(0, parse_element(ctx, term));
      continue;
    }
    FieldElement c = ctx->one();
    if (xp > 0) {
      if (term[xp - 1] != '*') parse_fail("missing '*' in '" + term + "'");
      c = parse_element(ctx, term.substr(0, xp - 1));
    }
    int d = 1;
    if (xp + 1 < term.size()) {
      if (term[xp + 1] != '^') parse_fail("bad term '" + term + "'");
      long long e = parse_int(term.substr(xp + 2));
      if (e < 0) parse_fail("negative degree in '" + term + "'");
      d = (int)e;
    }
    bump(d, c);
  }
  return Polynomial(ctx, std::move(coeffs));
}

std::string polynomial_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    auto c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += element_string(c);
      continue;
    }
    if (!(c == f.ctx()->one())) out += element_string(c) + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

ProjPoint parse_point(const FieldCtxPtr& ctx, const std::string& text) {
  auto s = strip(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    parse_fail("point must look like (x:y:z)");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(':', pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() != 3) parse_fail("point needs three coordinates");
  return proj_point(parse_element(ctx, parts[0]), parse_element(ctx, parts[1]),
                    parse_element(ctx, parts[2]));
}

std::string point_string(const ProjPoint& P) {
  return "(" + element_string(P.x) + ":" + element_string(P.y) + ":" +
         element_string(P.z) + ")";
}

IntersectionDistribution parse_distribution(const std::string& json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const std::exception& e) {
    parse_fail(std::string("bad JSON: ") + e.what());
  }
  IntersectionDistribution dist;
  try {
    std::string kind = j.at("kind");
    if (kind == "v") dist.kind = DistKind::Poly;
    else if (kind == "u") dist.kind = DistKind::Set;
    else parse_fail("kind must be 'v' or 'u'");
    dist.q = j.at("q");
    dist.counts = j.at("counts").get<std::vector<long long>>();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("bad distribution document: ") + e.what());
  }
  dist.validate();
  return dist;
}

std::string distribution_csv(const IntersectionDistribution& dist) {
  std::ostringstream out;
  out << "i,count\n";
  for (size_t i = 0; i < dist.counts.size(); ++i)
    out << i << "," << dist.counts[i] << "\n";
  return out.str();
}

}  // namespace idist
