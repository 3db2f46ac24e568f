#include "rayleigh/certificates.hpp"

#include <nlohmann/json.hpp>

#include "rayleigh/errors.hpp"

namespace rayleigh {

SquareCertificate SquareCertificate::parse_json(
    std::vector<std::string> labels, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValueParseError(std::string("bad certificate JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("squares") || !doc.contains("remainder"))
    throw ValueParseError("certificate JSON needs 'squares' and 'remainder'");
  SquareCertificate cert;
  for (const auto& sq : doc["squares"]) {
    SquareTerm term;
    term.coeff = parse_scalar(sq.at("coeff").get<std::string>());
    term.poly = SparsePoly::parse(labels, sq.at("poly").get<std::string>());
    cert.squares.push_back(std::move(term));
  }
  cert.remainder =
      SparsePoly::parse(std::move(labels), doc["remainder"].get<std::string>());
  return cert;
}

std::string SquareCertificate::json() const {
  nlohmann::ordered_json doc;
  doc["squares"] = nlohmann::ordered_json::array();
  for (const SquareTerm& t : squares) {
    doc["squares"].push_back(
        {{"coeff", to_string(t.coeff)}, {"poly", t.poly.to_string()}});
  }
  doc["remainder"] = remainder.to_string();
  return doc.dump(2);
}

bool verify_square_certificate(const SparsePoly& target,
                               const SquareCertificate& cert) {
  if (!cert.remainder.nonnegative_coefficients()) return false;
  if (cert.remainder.labels() != target.labels()) return false;
  SparsePoly sum = cert.remainder;
  for (const SquareTerm& t : cert.squares) {
    if (sign(t.coeff) <= 0) return false;
    if (t.poly.labels() != target.labels()) return false;
    sum += t.coeff * (t.poly * t.poly);
  }
  return sum == target;
}

}  // namespace rayleigh
