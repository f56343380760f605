#pragma once

// JSON renderings of series and root-system data. Keys and term order are fixed so that
// identical computations produce byte-identical reports.

#include <string>

#include <json.hpp>

#include "root_system.hpp"
#include "series.hpp"

namespace gksum {

inline nlohmann::ordered_json coefficient_json(const USeries& c) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : c.coeffs()) arr.push_back(to_string(x));
  return arr;
}
inline nlohmann::ordered_json coefficient_json(const Rational& c) { return to_string(c); }

template <CoefficientRing Ring>
nlohmann::ordered_json series_report(const RootSystem& rs, const FormalSeries<Ring>& s) {
  nlohmann::ordered_json j;
  j["root_system"] = rs.name();
  j["trunc_height"] = s.max_height();
  if constexpr (std::is_same_v<Ring, FormalRing>) {
    j["u_order"] = s.ring().order;
  } else {
    j["u_order"] = nullptr;
    j["u_value"] = to_string(s.ring().u_value);
  }
  j["mode"] = Ring::mode();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [g, c] : s.terms()) {
    nlohmann::ordered_json t;
    t["monomial"] = g.coeffs();
    t["height"] = g.height();
    t["depth"] = rs.is_affine() ? g.depth() : 0;
    t["coeff"] = coefficient_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline nlohmann::ordered_json root_system_report(const RootSystem& rs, int max_height) {
  nlohmann::ordered_json j;
  j["root_system"] = rs.name();
  auto cartan = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rs.dim; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < rs.dim; ++k) row.push_back(rs.cartan(i, k));
    cartan.push_back(std::move(row));
  }
  j["cartan"] = std::move(cartan);
  j["theta_coroot"] = rs.theta_coroot.coeffs();
  if (rs.null_coroot) j["null_coroot"] = rs.null_coroot->coeffs();
  j["exponents"] = rs.exponents;
  j["imaginary_multiplicity"] = rs.imaginary_multiplicity;
  j["trunc_height"] = max_height;
  auto real = nlohmann::ordered_json::array();
  for (const auto& b : positive_real_coroots_up_to_height(rs, max_height)) real.push_back(b.coeffs());
  j["real_coroots"] = std::move(real);
  if (rs.is_affine()) {
    auto im = nlohmann::ordered_json::array();
    for (const auto& b : positive_imaginary_coroots_up_to_height(rs, max_height))
      im.push_back({{"coroot", b.coroot.coeffs()}, {"multiplicity", b.multiplicity}});
    j["imaginary_coroots"] = std::move(im);
  }
  return j;
}

}  // namespace gksum
