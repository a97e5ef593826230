#pragma once

#include <optional>
#include <string>

#include "hallcl/element.hpp"
#include "hallcl/lambda.hpp"
#include "hallcl/operators.hpp"

namespace hallcl {

/// JSON emission. Every function returns a serialized document; passing a
/// rational evaluation point replaces each coefficient by its exact value
/// there. Output is deterministic (fixed key order, canonical coefficients).
struct JsonOptions {
  int indent = -1;                      // single-line; >= 0 pretty-prints
  std::optional<Rational> eval_q = {};  // evaluate coefficients at q = q0
};

std::string json_of(const QPoly& p, const JsonOptions& opt = {});
std::string json_of(const QRat& r, const JsonOptions& opt = {});
std::string json_of(const HallElement& x, const JsonOptions& opt = {});
std::string json_of(const TensorElement& x, const JsonOptions& opt = {});
std::string json_of(const MultiPoly& x, const JsonOptions& opt = {});
std::string json_of(const RatMatrix& m, const JsonOptions& opt = {});

} // namespace hallcl
