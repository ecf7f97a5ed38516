#include "serialize.hpp"

#include <charconv>

#include "instanton/version.hpp"

namespace instanton::cli {

using nlohmann::json;

namespace {

std::string residue(Fp x) { return std::to_string(x.value()); }

// 1-based line and column of a byte offset
std::string locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "." + key + ": missing");
  return *it;
}

std::uint64_t unsigned_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_unsigned()) throw ParseError(path + "." + key + ": expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::uint64_t decimal(const std::string& s, const std::string& where) {
  std::uint64_t out = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size())
    throw ParseError(where + ": expected a decimal string, got \"" + s + "\"");
  return out;
}

}  // namespace

json hyperweb_to_json(const Hyperweb& web) {
  const std::size_t n = web.charge();
  json coeffs = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t p = 0; p < kWedgeDim; ++p) {
        const Fp v = web.coeffs().at(i, j, p);
        if (v.is_zero()) continue;
        coeffs.push_back({{"i", i}, {"j", j}, {"a", kWedgePairs[p].first}, {"b", kWedgePairs[p].second},
                          {"value", residue(v)}});
      }
  return {{"format_version", kFormatVersion},
          {"prime", Fp::modulus()},
          {"ext_degree", 1},
          {"charge", n},
          {"coeffs", std::move(coeffs)}};
}

std::string dump_hyperweb(const Hyperweb& web) { return dump(hyperweb_to_json(web)); }

HyperwebFile parse_hyperweb(std::string_view text, std::optional<std::uint32_t> expected_prime) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + locate(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  const std::string root = "$";
  const json& version = field(doc, "format_version", root);
  if (!version.is_string() || version.get<std::string>() != kFormatVersion)
    throw ParseError("$.format_version: expected \"" + std::string(kFormatVersion) + "\"");
  HyperwebFile file;
  const std::uint64_t prime = unsigned_field(doc, "prime", root);
  if (prime > UINT32_MAX || !is_prime(prime) || prime == 2)
    throw ParseError("$.prime: " + std::to_string(prime) + " is not an odd prime below 2^32");
  file.prime = static_cast<std::uint32_t>(prime);
  if (expected_prime && *expected_prime != file.prime)
    throw PrimeMismatch("file prime " + std::to_string(file.prime) + " differs from session prime " +
                        std::to_string(*expected_prime));
  file.ext_degree = unsigned_field(doc, "ext_degree", root);
  if (file.ext_degree != 1)
    throw ParseError("$.ext_degree: coefficients are residues mod p, so only 1 is supported");
  const std::uint64_t charge = unsigned_field(doc, "charge", root);
  if (charge == 0 || charge > 64) throw ParseError("$.charge: expected 1..64");
  set_modulus(file.prime);

  const json& list = field(doc, "coeffs", root);
  if (!list.is_array()) throw ParseError("$.coeffs: expected an array");
  HyperwebCoeffs coeffs(charge);
  std::int64_t previous = -1;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string path = "$.coeffs[" + std::to_string(k) + "]";
    const json& entry = list[k];
    const std::uint64_t i = unsigned_field(entry, "i", path), j = unsigned_field(entry, "j", path);
    const std::uint64_t a = unsigned_field(entry, "a", path), b = unsigned_field(entry, "b", path);
    if (i > j || j >= charge) throw ParseError(path + ": need 0 <= i <= j < charge");
    const auto w = a < kVDim && b < kVDim ? wedge_index(a, b) : std::nullopt;
    if (!w || a >= b) throw ParseError(path + ": need 0 <= a < b < 4");
    const json& value = field(entry, "value", path);
    if (!value.is_string()) throw ParseError(path + ".value: expected a decimal string");
    const std::uint64_t v = decimal(value.get<std::string>(), path + ".value");
    if (v >= file.prime) throw ParseError(path + ".value: not a reduced residue");
    if (v == 0) throw ParseError(path + ".value: zero coefficients must be omitted");
    const auto pos = static_cast<std::int64_t>(coeffs.offset(i, j, w->index));
    if (pos <= previous) throw ParseError(path + ": entries out of canonical order or repeated");
    previous = pos;
    coeffs.at(i, j, w->index) = Fp::from_uint(v);
  }
  file.web = Hyperweb(std::move(coeffs));
  return file;
}

json matrix_to_json(const Matrix<Fp>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(residue(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const FiberCheckVerdict& v) {
  json out = {{"condition", v.condition},  {"pass", v.passed},           {"trials", v.trials},
              {"required_rank", v.required_rank}, {"prime", v.prime}, {"ext_degree", v.ext_degree},
              {"note", v.note},            {"witness", nullptr}};
  if (v.witness) {
    json coords = json::array();
    for (const auto& c : v.witness->coords) {
      json entry = json::array();
      for (auto x : c) entry.push_back(std::to_string(x));
      coords.push_back(std::move(entry));
    }
    out["witness"] = {{"coords", std::move(coords)}, {"rank", v.witness_rank}};
  }
  return out;
}

json to_json(const MembershipReport& r) {
  json out = {{"charge", r.charge},
              {"half_rank", r.half_rank},
              {"condition_i",
               {{"rank", r.condition_i.found}, {"required", r.condition_i.required}, {"pass", r.condition_i.passed}}},
              {"condition_ii", nullptr},
              {"condition_iii", {{"h0", nullptr}, {"pass", r.condition_iii.passed}}},
              {"overall", r.overall()}};
  if (r.condition_ii) out["condition_ii"] = to_json(*r.condition_ii);
  if (r.condition_iii.h0) out["condition_iii"]["h0"] = *r.condition_iii.h0;
  return out;
}

json to_json(const CohomologyTable& t, const Monad& m) {
  json rows = json::array();
  for (int s = t.tmin; s <= t.tmax; ++s) {
    std::int64_t alternating = 0;
    json h = json::array();
    for (int i = 0; i < 4; ++i) {
      h.push_back(t.at(i, s));
      alternating += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(t.at(i, s));
    }
    rows.push_back({{"t", s}, {"h", std::move(h)}, {"euler", alternating},
                    {"euler_expected", euler_characteristic(m, s)}});
  }
  return {{"charge", m.charge()}, {"half_rank", m.half_rank()}, {"w_dim", m.w_dim()},
          {"tmin", t.tmin},       {"tmax", t.tmax},             {"rows", std::move(rows)}};
}

json to_json(const DimensionReport& d) {
  json out = {{"charge", d.charge},         {"half_rank", d.half_rank},     {"dim_s", d.dim_s},
              {"eq_count", d.eq_count},     {"expected_mi", d.expected_mi}, {"expected_i", d.expected_i},
              {"measured_tangent", nullptr}};
  if (d.measured_tangent) out["measured_tangent"] = *d.measured_tangent;
  return out;
}

json to_json(const StarCertificate& s) {
  json out = {{"found", s.found}, {"trials_used", s.trials_used}, {"witness", nullptr}};
  if (s.witness) out["witness"] = matrix_to_json(*s.witness);
  return out;
}

json make_report(const Provenance& p, json result) {
  return {{"format_version", kFormatVersion},
          {"provenance",
           {{"command", p.command}, {"parameters", p.parameters}, {"seed", p.seed}, {"library_version", kLibraryVersion}}},
          {"result", std::move(result)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace instanton::cli
