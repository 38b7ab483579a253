#include "hmv/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hmv {

Json json_of(const EmbSet& S) {
  Json out = Json::array();
  for (auto [i, j] : S.elements()) out.push_back(Json::array({i, j}));
  return out;
}

Json json_of(const Rat& r) { return format_rational(r); }

Json json_of(const ValuationVector& nu) {
  Json out = Json::array();
  for (const Rat& v : nu.values()) out.push_back(format_rational(v));
  return out;
}

Json json_of(const FaceCode& face) { return face.to_string(); }

Json json_of(const AdmissiblePair& pr) {
  auto window = type_window(pr);
  auto horizontal = is_horizontal(pr);
  Json row;
  row["phi"] = json_of(pr.phi);
  row["eta"] = json_of(pr.eta);
  row["critical"] = json_of(pr.I);
  row["dim"] = stratum_dim(pr);
  row["components"] = component_count_at(pr);
  row["pi_image"] = json_of(pi_stratum_image(pr));
  auto w = w_stratum_image(pr);
  row["w_image"] = Json{{"phi", json_of(w.phi)}, {"eta", json_of(w.eta)}};
  row["type_window"] =
      Json{{"min", json_of(window.first)}, {"max", json_of(window.second)}};
  row["horizontal"] = horizontal.has_value();
  return row;
}

Json json_of_census(
    const SplittingPtr& s,
    const std::map<std::pair<std::uint64_t, std::uint64_t>, long long>&
        census) {
  Json rows = Json::array();
  for (const auto& [key, count] : census) {
    Json row;
    row["phi"] = json_of(EmbSet(s, key.first));
    row["eta"] = json_of(EmbSet(s, key.second));
    row["count"] = count;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of_spaced(const SplittingPtr& s,
                    const std::map<std::uint64_t, long long>& census) {
  Json rows = Json::array();
  for (const auto& [bits, count] : census) {
    Json row;
    row["S"] = json_of(EmbSet(s, bits));
    row["count"] = count;
    rows.push_back(std::move(row));
  }
  return rows;
}

Rat rational_from_json(const Json& j) {
  if (!j.is_string())
    throw std::invalid_argument("expected a rational encoded as \"a/b\"");
  return parse_rational(j.get<std::string>());
}

EmbSet embset_from_json(const SplittingPtr& s, const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("expected an array of [prime, slot] pairs");
  std::vector<std::pair<int, int>> elems;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("expected [prime, slot] pairs");
    elems.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return EmbSet::of(s, elems);
}

EmbSet parse_embset(const SplittingPtr& s, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "full") return EmbSet::full(s);
  if (t == "empty" || t.empty()) return EmbSet::empty(s);
  std::vector<std::pair<int, int>> elems;
  size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] == ',') {
      ++pos;
      continue;
    }
    if (t[pos] != '(')
      throw std::invalid_argument("subset must look like \"(i,j),(i,j)\": " +
                                  text);
    size_t close = t.find(')', pos);
    auto comma = t.find(',', pos);
    if (close == std::string::npos || comma == std::string::npos ||
        comma > close)
      throw std::invalid_argument("unbalanced subset element in: " + text);
    try {
      int i = std::stoi(t.substr(pos + 1, comma - pos - 1));
      int j = std::stoi(t.substr(comma + 1, close - comma - 1));
      elems.emplace_back(i, j);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad subset element in: " + text);
    }
    pos = close + 1;
  }
  return EmbSet::of(s, elems);
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace {

std::string flat_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// columns in order of first appearance across the rows
std::vector<std::string> column_order(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
        cols.push_back(it.key());
  return cols;
}

Json as_rows(const Json& payload) {
  if (payload.is_array()) return payload;
  return Json::array({payload});
}

}  // namespace

std::string render_csv(const Json& payload) {
  Json rows = as_rows(payload);
  auto cols = column_order(rows);
  std::ostringstream out;
  for (size_t c = 0; c < cols.size(); ++c)
    out << (c ? "," : "") << csv_quote(cols[c]);
  out << '\n';
  for (const auto& row : rows) {
    for (size_t c = 0; c < cols.size(); ++c) {
      if (c) out << ',';
      if (row.contains(cols[c])) out << csv_quote(flat_cell(row[cols[c]]));
    }
    out << '\n';
  }
  return out.str();
}

std::string render_table(const Json& payload) {
  Json rows = as_rows(payload);
  auto cols = column_order(rows);
  std::vector<size_t> width;
  width.reserve(cols.size());
  for (const auto& c : cols) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? flat_cell(row[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (size_t c = 0; c < cols.size(); ++c) {
      if (c) out << "  ";
      out << line[c];
      if (c + 1 < cols.size())
        out << std::string(width[c] - line[c].size(), ' ');
    }
    out << '\n';
  };
  emit(cols);
  std::vector<std::string> rule;
  for (size_t c = 0; c < cols.size(); ++c)
    rule.push_back(std::string(width[c], '-'));
  emit(rule);
  for (const auto& line : cells) emit(line);
  return out.str();
}

std::string render(const Json& payload, const std::string& format) {
  if (format == "json") return payload.dump(2) + "\n";
  if (format == "csv") return render_csv(payload);
  if (format == "table") return render_table(payload);
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace hmv
