#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "instanton/construct.hpp"
#include "instanton/membership.hpp"
#include "instanton/monad.hpp"
#include "instanton/tangent.hpp"

namespace instanton::cli {

inline constexpr const char* kFormatVersion = "1";

/// Malformed input. The message names the line/column (syntax) or the field path (schema).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// File prime differs from the one the session was asked to use.
class PrimeMismatch : public Error {
 public:
  using Error::Error;
};

struct HyperwebFile {
  std::uint32_t prime = 0;
  std::size_t ext_degree = 1;
  Hyperweb web;
};

/// Coefficients in canonical (i, j, a, b) order with zeros left out, so equal
/// hyperwebs serialize to identical bytes.
nlohmann::json hyperweb_to_json(const Hyperweb& web);
std::string dump_hyperweb(const Hyperweb& web);

/// Reads the header, switches the session modulus to the file prime, then
/// reads the coefficients. Throws ParseError, or PrimeMismatch when
/// `expected_prime` is given and differs from the file prime.
HyperwebFile parse_hyperweb(std::string_view text,
                            std::optional<std::uint32_t> expected_prime = std::nullopt);

nlohmann::json matrix_to_json(const Matrix<Fp>& m);
nlohmann::json to_json(const FiberCheckVerdict& v);
nlohmann::json to_json(const MembershipReport& r);
/// Table rows with the Euler characteristic of each twist next to the expected value.
nlohmann::json to_json(const CohomologyTable& t, const Monad& m);
nlohmann::json to_json(const DimensionReport& d);
nlohmann::json to_json(const StarCertificate& s);

struct Provenance {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
};

/// {"format_version", "provenance", "result"}.
nlohmann::json make_report(const Provenance& p, nlohmann::json result);
std::string dump(const nlohmann::json& j);

}  // namespace instanton::cli
