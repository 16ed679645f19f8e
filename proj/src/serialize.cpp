#include "eulerian/serialize.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace eulerian {
namespace {

std::string power(const std::string& base, int k, TextStyle style) {
  if (k == 0) return "";
  if (k == 1) return base;
  const std::string e = std::to_string(k);
  return base + "^" + (style == TextStyle::Latex ? "{" + e + "}" : e);
}

struct Term {
  Integer coeff;
  std::string monomial;  // empty for a constant
};

std::string join_terms(const std::vector<Term>& terms) {
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty() || mag != 1) out += mag.get_str();
    out += mono;
    first = false;
  }
  return first ? "0" : out;
}

std::string st_power(int k, TextStyle style) {
  if (k == 0) return "";
  if (k == 1) return "st";
  return power("(st)", k, style);
}

Json coeff_array(std::span<const Integer> cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(c.get_str());
  return arr;
}

std::vector<Integer> coeffs_from(const Json& arr) {
  std::vector<Integer> out;
  for (const auto& c : arr) out.emplace_back(c.get<std::string>());
  return out;
}

}  // namespace

std::string format_poly(const IntPoly1& p, TextStyle style) {
  std::vector<Term> terms;
  for (int i = 0; i <= p.degree(); ++i) terms.push_back({p.coeff(i), power("t", i, style)});
  return join_terms(terms);
}

std::string format_poly(const HomBivPoly& p, TextStyle style) {
  std::vector<Term> terms;
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) terms.push_back({p.coeff(i), power("s", d - i, style) + power("t", i, style)});
  return join_terms(terms);
}

std::string format_poly(const BivPoly& p, TextStyle style) {
  std::vector<std::tuple<int, int, Integer>> order;
  for (const auto& [key, c] : p.terms()) order.emplace_back(key.first + key.second, key.first, c);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) <
                                                      std::tie(std::get<0>(b), std::get<1>(b)); });
  std::vector<Term> terms;
  for (const auto& [total, i, c] : order) {
    terms.push_back({c, power("s", total - i, style) + power("t", i, style)});
  }
  return join_terms(terms);
}

std::string format_gamma(const GammaVec& g, TextStyle style) {
  std::vector<Term> terms;
  for (size_t i = 0; i < g.gammas.size(); ++i) {
    const int k = g.r + static_cast<int>(i);
    terms.push_back({g.gammas[i], power("t", k, style) + power("(1+t)", g.n - k - static_cast<int>(i), style)});
  }
  return join_terms(terms);
}

std::string format_gamma_biv(const GammaVec& g, TextStyle style) {
  std::vector<Term> terms;
  for (size_t i = 0; i < g.gammas.size(); ++i) {
    const int k = g.r + static_cast<int>(i);
    terms.push_back({g.gammas[i], st_power(k, style) + power("(s+t)", g.n - k - static_cast<int>(i), style)});
  }
  return join_terms(terms);
}

std::string format_ts_gamma(const TSGammaVec& g, TextStyle style) {
  std::vector<Term> terms;
  for (const auto& [key, c] : g.entries) {
    const auto [i, j] = key;
    terms.push_back({c, st_power(i, style) + power("(s+t)", j, style) + power("(1+st)", g.N - 2 * i - j, style)});
  }
  return join_terms(terms);
}

Json to_json(const IntPoly1& p) { return Json{{"coeffs", coeff_array(p.coeffs())}}; }

Json to_json(const HomBivPoly& p) {
  return Json{{"degree", p.degree()}, {"coeffs", coeff_array(p.coeffs())}};
}

Json to_json(const GammaVec& g) {
  return Json{{"r", g.r}, {"n", g.n}, {"gammas", coeff_array(g.gammas)}};
}

Json to_json(const BivPoly& p) {
  Json arr = Json::array();
  for (const auto& [key, c] : p.terms()) arr.push_back(Json::array({key.first, key.second, c.get_str()}));
  return arr;
}

Json to_json(const TSGammaVec& g) {
  Json entries = Json::array();
  for (const auto& [key, c] : g.entries) entries.push_back(Json::array({key.first, key.second, c.get_str()}));
  return Json{{"N", g.N}, {"entries", entries}};
}

Json to_json(const IdentityCheck& c) {
  return Json{{"identity", c.identity}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
}

IntPoly1 int_poly_from_json(const Json& j) { return IntPoly1(coeffs_from(j.at("coeffs"))); }

HomBivPoly hom_biv_from_json(const Json& j) {
  return HomBivPoly(j.at("degree").get<int>(), coeffs_from(j.at("coeffs")));
}

GammaVec gamma_from_json(const Json& j) {
  return GammaVec{j.at("r").get<int>(), j.at("n").get<int>(), coeffs_from(j.at("gammas"))};
}

BivPoly biv_from_json(const Json& j) {
  BivPoly out;
  for (const auto& t : j) out.add_term(t.at(0).get<int>(), t.at(1).get<int>(), Integer(t.at(2).get<std::string>()));
  return out;
}

std::string to_csv(const IntPoly1& p) {
  std::string out = "k,coeff\n";
  for (int i = 0; i <= p.degree(); ++i) out += std::to_string(i) + "," + p.coeff(i).get_str() + "\n";
  return out;
}

std::string to_csv(const HomBivPoly& p) {
  std::string out = "k,coeff\n";
  for (int i = 0; i <= p.degree(); ++i) out += std::to_string(i) + "," + p.coeff(i).get_str() + "\n";
  return out;
}

std::string to_csv(const GammaVec& g) {
  std::string out = "exponent,gamma\n";
  for (size_t i = 0; i < g.gammas.size(); ++i) {
    out += std::to_string(g.r + static_cast<int>(i)) + "," + g.gammas[i].get_str() + "\n";
  }
  return out;
}

}  // namespace eulerian
