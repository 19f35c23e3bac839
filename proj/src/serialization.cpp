#include "psmono/serialization.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace psmono {

namespace {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string blade_key(Blade b, int n) {
  bool wide = false;
  for (int i = 10; i <= n; ++i)
    if (b & (Blade{1} << (i - 1))) wide = true;
  std::string key;
  for (int i = 1; i <= n; ++i) {
    if (!(b & (Blade{1} << (i - 1)))) continue;
    if (!key.empty() && wide) key += ',';
    key += std::to_string(i);
  }
  return key;
}

// Fold an index list into a canonical blade with sign, through the blade
// product; handles unordered and repeated indices.
std::pair<int, Blade> fold_indices(const std::vector<int>& indices, int n) {
  int sign = 1;
  Blade blade = 0;
  for (int idx : indices) {
    if (idx < 1 || idx > n) throw DomainError("blade index out of range");
    const auto pr = blade_product(blade, Blade{1} << (idx - 1));
    sign *= pr.sign;
    blade = pr.blade;
  }
  return {sign, blade};
}

std::vector<int> parse_indices(std::string_view s) {
  std::vector<int> out;
  if (s.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      const std::size_t comma = s.find(',', pos);
      const auto piece = s.substr(pos, comma == std::string_view::npos ? s.size() - pos
                                                                       : comma - pos);
      int value = 0;
      const auto res = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (res.ec != std::errc{} || res.ptr != piece.data() + piece.size())
        throw DomainError("bad blade index list");
      out.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }
  for (char c : s) {
    if (c < '1' || c > '9') throw DomainError("bad blade index character");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

std::string to_text(const Multivector& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double c = m[static_cast<Blade>(i)];
    if (c == 0.0) continue;
    const bool negative = std::signbit(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_double(std::abs(c));
    if (i != 0) {
      out += "*e";
      out += blade_key(static_cast<Blade>(i), m.generators());
    }
  }
  return out.empty() ? "0" : out;
}

Multivector multivector_from_text(const std::string& text, int n) {
  Multivector out(n);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("empty multivector text");

  // Split into signed terms; +/- after a scientific-notation 'e' preceded by
  // a digit or dot stays inside the number, and our blade marker 'e' never
  // follows a digit directly (it follows '*' or starts a term).
  std::vector<std::string> terms;
  std::string current;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if ((c == '+' || c == '-') && !current.empty()) {
      const char prev = current.back();
      const bool sci = (prev == 'e' || prev == 'E') && current.size() >= 2 &&
                       (std::isdigit(static_cast<unsigned char>(current[current.size() - 2])) ||
                        current[current.size() - 2] == '.');
      if (!sci) {
        terms.push_back(current);
        current.clear();
      }
    }
    current += c;
  }
  if (!current.empty()) terms.push_back(current);

  for (const auto& term : terms) {
    std::string_view tv(term);
    double sign = 1.0;
    while (!tv.empty() && (tv.front() == '+' || tv.front() == '-')) {
      if (tv.front() == '-') sign = -sign;
      tv.remove_prefix(1);
    }
    if (tv.empty()) throw DomainError("dangling sign in multivector text");

    double coeff = 1.0;
    std::vector<int> indices;
    // The blade marker is the 'e' opening the term or following '*'; a
    // scientific-notation 'e' inside the coefficient never matches.
    std::size_t epos = std::string_view::npos;
    if (tv.front() == 'e') {
      epos = 0;
    } else if (const auto star = tv.rfind("*e"); star != std::string_view::npos) {
      epos = star + 1;
    }
    const bool has_blade = epos != std::string_view::npos;
    if (has_blade) {
      const auto num = epos == 0 ? std::string_view{} : tv.substr(0, epos - 1);
      if (!num.empty()) {
        const auto res = std::from_chars(num.data(), num.data() + num.size(), coeff);
        if (res.ec != std::errc{} || res.ptr != num.data() + num.size())
          throw DomainError("bad coefficient in multivector text");
      }
      indices = parse_indices(tv.substr(epos + 1));
    } else {
      const auto res = std::from_chars(tv.data(), tv.data() + tv.size(), coeff);
      if (res.ec != std::errc{} || res.ptr != tv.data() + tv.size())
        throw DomainError("bad scalar term in multivector text");
    }
    const auto [bsign, blade] = fold_indices(indices, n);
    out.at(blade) += sign * bsign * coeff;
  }
  return out;
}

nlohmann::json to_json(const Multivector& m) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double c = m[static_cast<Blade>(i)];
    if (c != 0.0) j[blade_key(static_cast<Blade>(i), m.generators())] = c;
  }
  return j;
}

Multivector multivector_from_json(const nlohmann::json& j, int n) {
  if (!j.is_object()) throw DomainError("multivector JSON must be an object");
  Multivector out(n);
  for (const auto& [key, value] : j.items()) {
    std::vector<int> indices;
    if (!key.empty()) indices = parse_indices(key);
    const auto [bsign, blade] = fold_indices(indices, n);
    out.at(blade) += bsign * value.get<double>();
  }
  return out;
}

nlohmann::json to_json(const Point& p) { return nlohmann::json(p.x); }

Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("point JSON must be an array");
  return Point(j.get<std::vector<double>>());
}

nlohmann::json to_json(const CliffordPolynomial& p) {
  nlohmann::json j;
  j["kind"] = p.kind() == CliffordPolynomial::Kind::Slice ? "slice" : "full";
  j["p"] = p.context().p;
  j["q"] = p.context().q;
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["exps"] = e;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

CliffordPolynomial polynomial_from_json(const nlohmann::json& j) {
  const std::string kind_s = j.at("kind").get<std::string>();
  const auto kind = kind_s == "slice" ? CliffordPolynomial::Kind::Slice
                    : kind_s == "full"
                        ? CliffordPolynomial::Kind::Full
                        : throw DomainError("polynomial kind must be slice or full");
  const SliceContext ctx(j.at("p").get<int>(), j.at("q").get<int>());
  CliffordPolynomial out(kind, ctx);
  for (const auto& t : j.at("terms")) {
    out.add_term(t.at("exps").get<std::vector<int>>(),
                 multivector_from_json(t.at("coeff"), ctx.n()));
  }
  return out;
}

nlohmann::json to_json(const StemPolynomial& s) {
  nlohmann::json j;
  j["F1"] = to_json(s.even_part());
  j["F2"] = to_json(s.odd_part());
  return j;
}

StemPolynomial stem_from_json(const nlohmann::json& j) {
  return StemPolynomial(polynomial_from_json(j.at("F1")), polynomial_from_json(j.at("F2")));
}

DomainDescriptor domain_from_json(const SliceContext& ctx, const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "ball")
    return DomainDescriptor::ball(ctx, j.at("center").get<std::vector<double>>(),
                                  j.at("radius").get<double>());
  if (type == "annulus")
    return DomainDescriptor::annulus(ctx, j.at("rho1").get<double>(),
                                     j.at("rho2").get<double>());
  if (type == "complement") return DomainDescriptor::complement_of_axis(ctx);
  if (type == "half_space_union")
    return DomainDescriptor::half_space_union(
        ctx, Omega(ctx, j.at("omega").get<std::vector<double>>()));
  throw DomainError("unknown domain type: " + type);
}

namespace {

nlohmann::json generator_to_json(const GravGenerator& g) {
  nlohmann::json j;
  switch (g.kind) {
    case GravGenerator::Kind::Translation:
      j["kind"] = "translation";
      j["b"] = g.shift;
      break;
    case GravGenerator::Kind::Inversion: j["kind"] = "inversion"; break;
    case GravGenerator::Kind::ModifiedRotation:
      j["kind"] = "rotation";
      j["a"] = g.rotation->components();
      break;
    case GravGenerator::Kind::Dilation:
      j["kind"] = "dilation";
      j["lambda"] = g.lambda;
      break;
  }
  return j;
}

GravGenerator generator_from_json(const SliceContext& ctx, const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "translation")
    return GravGenerator::translation(j.at("b").get<std::vector<double>>());
  if (kind == "inversion") return GravGenerator::inversion();
  if (kind == "rotation")
    return GravGenerator::modified_rotation(
        Omega(ctx, j.at("a").get<std::vector<double>>()));
  if (kind == "dilation") return GravGenerator::dilation(j.at("lambda").get<double>());
  throw DomainError("unknown generator kind: " + kind);
}

}  // namespace

nlohmann::json to_json(const SliceContext& ctx, const VahlenMatrix& m) {
  (void)ctx;
  nlohmann::json j;
  j["a"] = to_json(m.a());
  j["b"] = to_json(m.b());
  j["c"] = to_json(m.c());
  j["d"] = to_json(m.d());
  if (m.has_grav_provenance()) {
    auto prov = nlohmann::json::array();
    for (const auto& g : m.provenance()) prov.push_back(generator_to_json(g));
    j["provenance"] = std::move(prov);
  }
  return j;
}

VahlenMatrix vahlen_from_json(const SliceContext& ctx, const nlohmann::json& j) {
  const int n = ctx.n();
  if (j.contains("provenance") && !j.at("provenance").empty()) {
    const auto& prov = j.at("provenance");
    VahlenMatrix m = VahlenMatrix::from_generator(ctx, generator_from_json(ctx, prov.at(0)));
    for (std::size_t i = 1; i < prov.size(); ++i)
      m = m * VahlenMatrix::from_generator(ctx, generator_from_json(ctx, prov.at(i)));
    return m;
  }
  return VahlenMatrix(multivector_from_json(j.at("a"), n), multivector_from_json(j.at("b"), n),
                      multivector_from_json(j.at("c"), n),
                      multivector_from_json(j.at("d"), n));
}

Omega omega_from_text(const SliceContext& ctx, const std::string& text) {
  const Multivector m = multivector_from_text(text, ctx.n());
  std::vector<double> comps(static_cast<std::size_t>(ctx.q), 0.0);
  Multivector rest = m;
  for (int i = 0; i < ctx.q; ++i) {
    const Blade b = Blade{1} << (ctx.p + i);
    comps[static_cast<std::size_t>(i)] = m[b];
    rest.at(b) = 0.0;
  }
  if (!rest.is_zero(1e-12))
    throw DomainError("omega must be supported on the trailing 1-vector axes");
  return Omega(ctx, std::move(comps), 1e-9);
}

}  // namespace psmono
