// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rfan/fan.hpp"
#include "rfan/groebner.hpp"
#include "rfan/regularity.hpp"
#include "rfan/term_order.hpp"

namespace rfan {

using Json = nlohmann::ordered_json;

enum class FanKind { Restricted, Extended };

/// A fan together with the ideal it came from. Cone ids in the serialized
/// form are 1-based; integers and rationals are written as decimal strings.
struct FanDocument {
  Ideal ideal;
  Tiebreak tiebreak = Tiebreak::Lex;
  FanKind kind = FanKind::Restricted;
  Ring basis_ring;  // ring of the stored bases (has the extra variable for extended fans)
  FanGraph fan;
  std::optional<double> seconds;  // written only when set
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const FanDocument& doc);
FanDocument fan_document_from_json(const Json& j);

/// Pretty-printed JSON with a trailing newline.
std::string serialize(const FanDocument& doc);
FanDocument parse_fan_document(std::string_view text);

Json to_json(const RegularityOutcome& outcome, const FanGraph& fan);

Json vector_json(std::span<const Integer> v);
Json vector_json(std::span<const Rational> v);
IntVector integer_vector_from_json(const Json& j);
RatVector rational_vector_from_json(const Json& j);

}  // namespace rfan
