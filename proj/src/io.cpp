#include "fatpoints/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fatpoints {

using nlohmann::json;

namespace {

std::vector<ProjPoint> parse_coords(const json& arr, const char* key) {
  if (!arr.is_array())
    fail(Errc::ParseError, std::string(key) + " must be an array of pairs");
  std::vector<ProjPoint> pts;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail(Errc::ParseError,
           std::string(key) + " entries must be integer pairs [a0, a1]");
    pts.push_back({e[0].get<long long>(), e[1].get<long long>()});
  }
  return pts;
}

}  // namespace

GridScheme parse_scheme_json(const json& j) {
  if (!j.is_object() || !j.contains("mult"))
    fail(Errc::ParseError, "scheme file needs a \"mult\" matrix");
  const json& m = j["mult"];
  if (!m.is_array() || m.empty())
    fail(Errc::ParseError, "\"mult\" must be a non-empty array of rows");
  GridScheme s;
  std::size_t width = 0;
  for (const auto& row : m) {
    if (!row.is_array())
      fail(Errc::ParseError, "\"mult\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        fail(Errc::ParseError, "multiplicities must be integers");
      long long x = v.get<long long>();
      if (x < 0 || x > 1000000)
        fail(Errc::ParseError, "multiplicity out of range");
      r.push_back(static_cast<int>(x));
    }
    if (s.mult.empty())
      width = r.size();
    else if (r.size() != width)
      fail(Errc::ParseError, "\"mult\" is ragged");
    s.mult.push_back(std::move(r));
  }
  if (j.contains("row_coords") != j.contains("col_coords"))
    fail(Errc::ParseError, "row_coords and col_coords must come together");
  if (j.contains("row_coords")) {
    s.row_coords = parse_coords(j["row_coords"], "row_coords");
    s.col_coords = parse_coords(j["col_coords"], "col_coords");
  }
  return s;
}

GridScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
  GridScheme s = parse_scheme_json(j);
  validate(s);
  return s;
}

json scheme_to_json(const GridScheme& s) {
  json j;
  j["mult"] = s.mult;
  if (s.has_coords()) {
    json rc = json::array(), cc = json::array();
    for (const ProjPoint& p : *s.row_coords) rc.push_back({p.a0, p.a1});
    for (const ProjPoint& p : *s.col_coords) cc.push_back({p.a0, p.a1});
    j["row_coords"] = rc;
    j["col_coords"] = cc;
  }
  return j;
}

json table_to_json(const HilbertTable& t) {
  json values = json::array();
  for (const auto& row : t.window()) {
    json r = json::array();
    for (long long v : row)
      r.push_back(v == kUnknown ? json(nullptr) : json(v));
    values.push_back(std::move(r));
  }
  json j;
  j["values"] = values;
  j["bc"] = t.table_border().bc;
  j["br"] = t.table_border().br;
  j["eventual"] = t.eventual();
  return j;
}

HilbertTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j.contains("bc") ||
      !j.contains("br"))
    fail(Errc::ParseError, "not a serialized Hilbert table");
  std::vector<std::vector<long long>> w;
  for (const auto& row : j["values"]) {
    std::vector<long long> r;
    for (const auto& v : row)
      r.push_back(v.is_null() ? kUnknown : v.get<long long>());
    w.push_back(std::move(r));
  }
  Border b;
  b.bc = j["bc"].get<std::vector<long long>>();
  b.br = j["br"].get<std::vector<long long>>();
  return HilbertTable(std::move(w), std::move(b));
}

std::string render_table_pretty(const HilbertTable& t) {
  std::size_t width = 1;
  for (const auto& row : t.window())
    for (long long v : row)
      width = std::max(width, (v == kUnknown ? std::string("?")
                                             : std::to_string(v))
                                  .size());
  std::ostringstream os;
  for (const auto& row : t.window()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string cell =
          row[j] == kUnknown ? "?" : std::to_string(row[j]);
      os << (j ? " " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fatpoints
