#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace eisenlab {

/// One named numerical check: two values, their distance, and the verdict.
struct MomentReport {
  std::string check;
  double left = 0.0;
  double right = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool relative = false;  // tolerance applies to rel_err
  bool pass = false;
  std::string note;
};

MomentReport make_report(std::string check, double left, double right, double tolerance, bool relative,
                         std::string note = {});
/// A report whose verdict was decided elsewhere (e.g. a monotonicity check).
MomentReport make_flag_report(std::string check, bool pass, std::string note = {});

nlohmann::json to_json(const MomentReport& r);
nlohmann::json to_json(const std::vector<MomentReport>& rs);
/// check,left,right,abs_err,rel_err,tolerance,pass
std::string to_csv(const std::vector<MomentReport>& rs);

}  // namespace eisenlab
