#pragma once

#include <cmath>
#include <map>
#include <string>

namespace isogeo {

// Named identity check. pass <=> value < tol (and value finite).
struct Residual {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::map<std::string, std::string> context;
  std::string note;

  static Residual make(std::string name, double value, double tol,
                       std::map<std::string, std::string> context = {}, std::string note = {}) {
    Residual r{std::move(name), value, tol, false, std::move(context), std::move(note)};
    r.pass = std::isfinite(value) && value < tol;
    if (!std::isfinite(value) && r.note.empty()) r.note = "non-finite residual";
    return r;
  }
};

}  // namespace isogeo
