#pragma once

// Text, LaTeX, CSV and JSON renderings. Coefficients go to JSON as decimal
// strings so big integers survive any reader.

#include <string>

#include <json.hpp>

#include "eulerian/decompose.hpp"
#include "eulerian/polynomial.hpp"

namespace eulerian {

using Json = nlohmann::ordered_json;

enum class TextStyle { Plain, Latex };

std::string format_poly(const IntPoly1& p, TextStyle style = TextStyle::Plain);
/// Terms ordered by increasing power of t.
std::string format_poly(const HomBivPoly& p, TextStyle style = TextStyle::Plain);
/// Terms ordered by total degree, then power of t.
std::string format_poly(const BivPoly& p, TextStyle style = TextStyle::Plain);
/// gamma_i t^{r+i}(1+t)^{n-r-2i}, skipping zero entries.
std::string format_gamma(const GammaVec& g, TextStyle style = TextStyle::Plain);
/// gamma_i (st)^{r+i}(s+t)^{n-r-2i}
std::string format_gamma_biv(const GammaVec& g, TextStyle style = TextStyle::Plain);
std::string format_ts_gamma(const TSGammaVec& g, TextStyle style = TextStyle::Plain);

Json to_json(const IntPoly1& p);
Json to_json(const HomBivPoly& p);
Json to_json(const GammaVec& g);
Json to_json(const BivPoly& p);
Json to_json(const TSGammaVec& g);
Json to_json(const IdentityCheck& c);

IntPoly1 int_poly_from_json(const Json& j);
HomBivPoly hom_biv_from_json(const Json& j);
GammaVec gamma_from_json(const Json& j);
BivPoly biv_from_json(const Json& j);

/// "k,coeff" rows after a header line.
std::string to_csv(const IntPoly1& p);
std::string to_csv(const HomBivPoly& p);
/// "exponent,gamma" rows.
std::string to_csv(const GammaVec& g);

}  // namespace eulerian
