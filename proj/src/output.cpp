#include "gkverma/output.hpp"

#include <stdexcept>

#include <json.hpp>

namespace gkverma {

namespace {

constexpr std::string_view kHeader = "type,n,p,z,gkdim,dim_u,reducible,first_points,wallach,set,source";

}  // namespace

std::string_view source_name(Source source) {
  switch (source) {
    case Source::algorithm: return "algorithm";
    case Source::closed_form: return "closed_form";
    case Source::both: return "both";
  }
  throw std::logic_error("bad Source");
}

Source source_from_name(std::string_view name) {
  if (name == "algorithm") return Source::algorithm;
  if (name == "closed_form") return Source::closed_form;
  if (name == "both") return Source::both;
  throw std::invalid_argument("unknown source '" + std::string(name) + "'");
}

LatticeTag lattice_tag_from_name(std::string_view name) {
  if (name == "Z") return LatticeTag::integer;
  if (name == "1/2+Z") return LatticeTag::half_odd;
  if (name == "1/2Z") return LatticeTag::half_step;
  throw std::invalid_argument("unknown lattice tag '" + std::string(name) + "'");
}

namespace {

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_points(const std::vector<FirstReduciblePoint>& points) {
  std::string out;
  for (const FirstReduciblePoint& point : points) {
    if (!out.empty()) out += ';';
    out += std::string(lattice_tag_name(point.lattice)) + ":" + format_rational(point.z);
  }
  return out;
}

std::string join_set(const std::vector<LatticeComponent>& components) {
  std::string out;
  for (const LatticeComponent& c : components) {
    if (!out.empty()) out += ';';
    out += format_rational(c.base) + ":" + format_rational(c.step);
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<FirstReduciblePoint> parse_points(std::string_view text) {
  std::vector<FirstReduciblePoint> points;
  for (const std::string& item : split(text, ';')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad first-point '" + item + "'");
    points.push_back({lattice_tag_from_name(std::string_view(item).substr(0, colon)),
                      parse_rational(std::string_view(item).substr(colon + 1))});
  }
  return points;
}

std::vector<LatticeComponent> parse_set(std::string_view text) {
  std::vector<LatticeComponent> components;
  for (const std::string& item : split(text, ';')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad set component '" + item + "'");
    components.push_back({parse_rational(std::string_view(item).substr(0, colon)),
                          parse_rational(std::string_view(item).substr(colon + 1))});
  }
  return components;
}

// Minimal RFC 4180 reader: quoted fields may contain separators, quotes are
// doubled, rows end at a newline outside quotes.
std::vector<std::vector<std::string>> read_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  const auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && !field_started && field.empty()) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_row();
    } else if (c != '\r') {
      field += c;
      field_started = true;
    }
  }
  if (field_started || !field.empty() || !row.empty()) end_row();
  return rows;
}

OutputRecord record_from_fields(const std::vector<std::string>& fields) {
  if (fields.size() != 11) throw std::invalid_argument("csv row must have 11 fields");
  OutputRecord r;
  if (fields[0].size() != 1) throw std::invalid_argument("bad type field '" + fields[0] + "'");
  r.type = lie_type_from_letter(fields[0][0]);
  r.n = std::stoi(fields[1]);
  if (!fields[2].empty()) r.p = std::stoi(fields[2]);
  if (!fields[3].empty()) r.z = parse_rational(fields[3]);
  if (!fields[4].empty()) r.gkdim = std::stol(fields[4]);
  if (!fields[5].empty()) r.dim_u = std::stol(fields[5]);
  if (!fields[6].empty()) {
    if (fields[6] != "true" && fields[6] != "false")
      throw std::invalid_argument("bad boolean '" + fields[6] + "'");
    r.reducible = fields[6] == "true";
  }
  if (!fields[7].empty()) r.first_points = parse_points(fields[7]);
  if (!fields[8].empty()) r.wallach = fields[8];
  if (!fields[9].empty()) r.set = parse_set(fields[9]);
  r.source = source_from_name(fields[10]);
  return r;
}

}  // namespace

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::string out(kHeader);
  out += '\n';
  for (const OutputRecord& r : records) {
    std::string fields[11];
    fields[0] = lie_type_letter(r.type);
    fields[1] = std::to_string(r.n);
    if (r.p) fields[2] = std::to_string(*r.p);
    if (r.z) fields[3] = format_rational(*r.z);
    if (r.gkdim) fields[4] = std::to_string(*r.gkdim);
    if (r.dim_u) fields[5] = std::to_string(*r.dim_u);
    if (r.reducible) fields[6] = *r.reducible ? "true" : "false";
    if (r.first_points) fields[7] = join_points(*r.first_points);
    if (r.wallach) fields[8] = *r.wallach;
    if (r.set) fields[9] = join_set(*r.set);
    fields[10] = source_name(r.source);
    for (int i = 0; i < 11; ++i) {
      if (i > 0) out += ',';
      out += csv_escape(fields[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<OutputRecord> from_csv(std::string_view text) {
  const auto rows = read_csv(text);
  if (rows.empty()) throw std::invalid_argument("missing csv header");
  const auto header = split(kHeader, ',');
  if (rows.front() != header) throw std::invalid_argument("unexpected csv header");
  std::vector<OutputRecord> records;
  for (size_t i = 1; i < rows.size(); ++i) records.push_back(record_from_fields(rows[i]));
  return records;
}

namespace {

nlohmann::ordered_json record_to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["type"] = std::string(1, lie_type_letter(r.type));
  j["n"] = r.n;
  if (r.p) j["p"] = *r.p;
  if (r.z) j["z"] = format_rational(*r.z);
  if (r.gkdim) j["gkdim"] = *r.gkdim;
  if (r.dim_u) j["dim_u"] = *r.dim_u;
  if (r.reducible) j["reducible"] = *r.reducible;
  if (r.first_points) {
    auto list = nlohmann::ordered_json::array();
    for (const FirstReduciblePoint& point : *r.first_points)
      list.push_back({{"lattice", std::string(lattice_tag_name(point.lattice))},
                      {"z", format_rational(point.z)}});
    j["first_points"] = std::move(list);
  }
  if (r.wallach) j["wallach"] = *r.wallach;
  if (r.set) {
    auto list = nlohmann::ordered_json::array();
    for (const LatticeComponent& c : *r.set)
      list.push_back({{"base", format_rational(c.base)}, {"step", format_rational(c.step)}});
    j["set"] = std::move(list);
  }
  j["source"] = std::string(source_name(r.source));
  return j;
}

}  // namespace

std::string to_json(const std::vector<OutputRecord>& records) {
  auto list = nlohmann::ordered_json::array();
  for (const OutputRecord& r : records) list.push_back(record_to_json(r));
  return list.dump(2) + "\n";
}

std::vector<OutputRecord> from_json(std::string_view text) {
  const auto parsed = nlohmann::json::parse(text);
  if (!parsed.is_array()) throw std::invalid_argument("expected a json array of records");
  std::vector<OutputRecord> records;
  for (const auto& j : parsed) {
    OutputRecord r;
    const std::string type = j.at("type").get<std::string>();
    if (type.size() != 1) throw std::invalid_argument("bad type field '" + type + "'");
    r.type = lie_type_from_letter(type[0]);
    r.n = j.at("n").get<int>();
    if (j.contains("p")) r.p = j["p"].get<int>();
    if (j.contains("z")) r.z = parse_rational(j["z"].get<std::string>());
    if (j.contains("gkdim")) r.gkdim = j["gkdim"].get<long>();
    if (j.contains("dim_u")) r.dim_u = j["dim_u"].get<long>();
    if (j.contains("reducible")) r.reducible = j["reducible"].get<bool>();
    if (j.contains("first_points")) {
      std::vector<FirstReduciblePoint> points;
      for (const auto& item : j["first_points"])
        points.push_back({lattice_tag_from_name(item.at("lattice").get<std::string>()),
                          parse_rational(item.at("z").get<std::string>())});
      r.first_points = std::move(points);
    }
    if (j.contains("wallach")) r.wallach = j["wallach"].get<std::string>();
    if (j.contains("set")) {
      std::vector<LatticeComponent> components;
      for (const auto& item : j["set"])
        components.push_back({parse_rational(item.at("base").get<std::string>()),
                              parse_rational(item.at("step").get<std::string>())});
      r.set = std::move(components);
    }
    r.source = source_from_name(j.at("source").get<std::string>());
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace gkverma
