#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkverma/closedform.hpp"

namespace gkverma {

enum class Source { algorithm, closed_form, both };

std::string_view source_name(Source source);
Source source_from_name(std::string_view name);
LatticeTag lattice_tag_from_name(std::string_view name);

// One result row.  Absent fields are omitted from JSON and left empty in
// CSV; records compare field-by-field, so a serialize/parse round trip must
// reproduce the record exactly.
struct OutputRecord {
  LieType type = LieType::A;
  int n = 0;
  std::optional<int> p;
  std::optional<Rational> z;
  std::optional<long> gkdim;
  std::optional<long> dim_u;
  std::optional<bool> reducible;
  std::optional<std::vector<FirstReduciblePoint>> first_points;
  std::optional<std::string> wallach;
  std::optional<std::vector<LatticeComponent>> set;
  Source source = Source::algorithm;

  bool operator==(const OutputRecord&) const = default;
};

std::string to_csv(const std::vector<OutputRecord>& records);
std::string to_json(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> from_csv(std::string_view text);
std::vector<OutputRecord> from_json(std::string_view text);

}  // namespace gkverma
