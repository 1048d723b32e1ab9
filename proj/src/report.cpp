#include "eisenlab/report.hpp"

#include <cmath>
#include <sstream>

namespace eisenlab {

MomentReport make_report(std::string check, double left, double right, double tolerance, bool relative,
                         std::string note) {
  MomentReport r;
  r.check = std::move(check);
  r.left = left;
  r.right = right;
  r.abs_err = std::abs(left - right);
  const double scale = std::max(std::abs(left), std::abs(right));
  r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
  r.tolerance = tolerance;
  r.relative = relative;
  r.pass = std::isfinite(r.abs_err) && (relative ? r.rel_err : r.abs_err) <= tolerance;
  r.note = std::move(note);
  return r;
}

MomentReport make_flag_report(std::string check, bool pass, std::string note) {
  MomentReport r;
  r.check = std::move(check);
  r.pass = pass;
  r.note = std::move(note);
  return r;
}

nlohmann::json to_json(const MomentReport& r) {
  auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  nlohmann::json j{{"check", r.check},         {"left", num(r.left)},          {"right", num(r.right)},
                   {"abs_err", num(r.abs_err)}, {"rel_err", num(r.rel_err)},    {"tolerance", num(r.tolerance)},
                   {"relative", r.relative},    {"pass", r.pass}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const std::vector<MomentReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr;
}

std::string to_csv(const std::vector<MomentReport>& rs) {
  std::ostringstream os;
  os.precision(17);
  os << "check,left,right,abs_err,rel_err,tolerance,pass\n";
  for (const auto& r : rs)
    os << '"' << r.check << '"' << ',' << r.left << ',' << r.right << ',' << r.abs_err << ',' << r.rel_err << ',' << r.tolerance
       << ',' << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace eisenlab
