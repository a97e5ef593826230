#include "hallcl/jsonio.hpp"

#include <json.hpp>

#include "hallcl/text.hpp"

namespace hallcl {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json parts_json(const Partition& p) { return ordered_json(p.parts()); }

ordered_json poly_json(const QPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, c.get_str()});
  return arr;
}

ordered_json coeff_json(const QRat& r, const JsonOptions& opt) {
  if (opt.eval_q) return ordered_json(r.eval(*opt.eval_q).get_str());
  ordered_json j;
  j["num"] = poly_json(r.num());
  j["den"] = poly_json(r.den());
  return j;
}

std::string dump(const ordered_json& j, const JsonOptions& opt) {
  return (opt.indent < 0 ? j.dump() : j.dump(opt.indent)) + "\n";
}

} // namespace

std::string json_of(const QPoly& p, const JsonOptions& opt) {
  if (opt.eval_q) return dump(ordered_json(p.eval(*opt.eval_q).get_str()), opt);
  return dump(poly_json(p), opt);
}

std::string json_of(const QRat& r, const JsonOptions& opt) {
  return dump(coeff_json(r, opt), opt);
}

std::string json_of(const HallElement& x, const JsonOptions& opt) {
  ordered_json j;
  j["basis"] = basis_name(x.basis());
  ordered_json terms = ordered_json::array();
  for (const auto& [lam, c] : x.terms()) {
    ordered_json t;
    t["partition"] = parts_json(lam);
    t["coeff"] = coeff_json(c, opt);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return dump(j, opt);
}

std::string json_of(const TensorElement& x, const JsonOptions& opt) {
  ordered_json j;
  j["left_basis"] = basis_name(x.left_basis());
  j["right_basis"] = basis_name(x.right_basis());
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : x.terms()) {
    ordered_json t;
    t["left"] = parts_json(k.first);
    t["right"] = parts_json(k.second);
    t["coeff"] = coeff_json(c, opt);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return dump(j, opt);
}

std::string json_of(const MultiPoly& x, const JsonOptions& opt) {
  ordered_json arr = ordered_json::array();
  for (const auto& [e, c] : x.terms()) {
    ordered_json t;
    t["exponents"] = ordered_json(e);
    t["coeff"] = coeff_json(c, opt);
    arr.push_back(std::move(t));
  }
  return dump(arr, opt);
}

std::string json_of(const RatMatrix& m, const JsonOptions& opt) {
  ordered_json j;
  ordered_json rows = ordered_json::array(), cols = ordered_json::array();
  for (const auto& p : m.rows) rows.push_back(parts_json(p));
  for (const auto& p : m.cols) cols.push_back(parts_json(p));
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  ordered_json entries = ordered_json::array();
  for (const auto& row : m.entries) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(coeff_json(v, opt));
    entries.push_back(std::move(r));
  }
  j["entries"] = std::move(entries);
  return dump(j, opt);
}

} // namespace hallcl
