#include "cracq/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cracq/errors.hpp"

namespace cracq {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;  // from_chars rejects a leading plus
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end)
    throw SchemaError("bad number '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

json parse_json(std::istream& in, const char* what) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

std::vector<std::string> read_names(const json& j, const char* what) {
  const json& names_json = field(j, "names", what);
  if (!names_json.is_array() || names_json.empty())
    throw SchemaError(std::string(what) + ": 'names' must be a nonempty array");
  std::vector<std::string> names;
  names.reserve(names_json.size());
  for (const auto& item : names_json) {
    if (!item.is_string())
      throw SchemaError(std::string(what) + ": 'names' entries must be strings");
    names.push_back(item.get<std::string>());
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j2 = i + 1; j2 < names.size(); ++j2)
      if (names[i] == names[j2])
        throw SchemaError(std::string(what) + ": duplicate element name '" + names[i] + "'");
  return names;
}

std::size_t name_index(const std::vector<std::string>& names, const std::string& name,
                       const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw SchemaError(std::string(what) + ": unknown element name '" + name + "'");
}

std::vector<std::size_t> read_cayley(const json& j, const std::vector<std::string>& names,
                                     const char* what) {
  const json& cayley = field(j, "cayley", what);
  const std::size_t n = names.size();
  if (!cayley.is_array() || cayley.size() != n)
    throw SchemaError(std::string(what) + ": 'cayley' must be an array of " +
                      std::to_string(n) + " rows");
  std::vector<std::size_t> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = cayley[r];
    if (!row.is_array() || row.size() != n)
      throw SchemaError(std::string(what) + ": 'cayley' row " + std::to_string(r + 1) +
                        " must have " + std::to_string(n) + " entries");
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw SchemaError(std::string(what) + ": 'cayley' entries must be element names");
      table.push_back(name_index(names, cell.get<std::string>(), what));
    }
  }
  return table;
}

json cayley_to_json(const std::vector<std::string>& names,
                    const std::vector<std::size_t>& table) {
  const std::size_t n = names.size();
  json rows = json::array();
  for (std::size_t r = 0; r < n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(names[table[r * n + c]]);
    rows.push_back(std::move(row));
  }
  return rows;
}

json cracovian_to_json(const Cracovian& table) {
  json entries = json::array();
  for (Scalar v : table.entries()) entries.push_back(json::array({v.real(), v.imag()}));
  return json{{"n_cols", table.n_cols()},
              {"n_rows", table.n_rows()},
              {"entries_column_major", std::move(entries)}};
}

Cracovian cracovian_from_json(const json& j, const char* what) {
  const json& cols = field(j, "n_cols", what);
  const json& rows = field(j, "n_rows", what);
  const json& entries = field(j, "entries_column_major", what);
  if (!cols.is_number_unsigned() || !rows.is_number_unsigned())
    throw SchemaError(std::string(what) + ": dimensions must be nonnegative integers");
  const std::size_t n_cols = cols.get<std::size_t>();
  const std::size_t n_rows = rows.get<std::size_t>();
  if (n_cols == 0 || n_rows == 0)
    throw SchemaError(std::string(what) + ": dimensions must be positive");
  if (!entries.is_array() || entries.size() != n_cols * n_rows)
    throw SchemaError(std::string(what) + ": 'entries_column_major' must hold " +
                      std::to_string(n_cols * n_rows) + " [re, im] pairs");
  std::vector<Scalar> data;
  data.reserve(entries.size());
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw SchemaError(std::string(what) + ": entries must be [re, im] pairs");
    data.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  try {
    return Cracovian::from_column_major(n_cols, n_rows, std::move(data));
  } catch (const ArgumentError& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  return in;
}

template <class WriteFn>
void write_file(const std::filesystem::path& path, WriteFn fn) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  fn(out);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

std::string format_scalar(Scalar value) {
  if (value.imag() == 0.0) return format_double(value.real());
  std::string out = format_double(value.real());
  if (value.imag() >= 0.0) out += "+";
  out += format_double(value.imag());
  out += "j";
  return out;
}

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw SchemaError("empty scalar");
  if (s.back() != 'j') return Scalar{parse_double(s), 0.0};

  s.remove_suffix(1);  // drop the j; what remains is [re +-] im
  if (s.empty()) return Scalar{0.0, 1.0};
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (s == "+" ) return Scalar{0.0, 1.0};
    if (s == "-") return Scalar{0.0, -1.0};
    return Scalar{0.0, parse_double(s)};
  }
  const std::string_view re = s.substr(0, split);
  std::string_view im = s.substr(split);
  if (im == "+") return Scalar{parse_double(re), 1.0};
  if (im == "-") return Scalar{parse_double(re), -1.0};
  return Scalar{parse_double(re), parse_double(im)};
}

Cracovian read_cracovian_csv(std::istream& in) {
  std::vector<std::vector<Scalar>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<Scalar> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view cell =
          std::string_view(line).substr(start, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - start);
      try {
        row.push_back(parse_scalar(cell));
      } catch (const SchemaError& e) {
        throw SchemaError("line " + std::to_string(line_no) + ": " + e.what());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw SchemaError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(rows.front().size()) + " entries, got " +
                        std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw SchemaError("empty table");
  return Cracovian::from_rows(rows);
}

void write_cracovian_csv(std::ostream& out, const Cracovian& table) {
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    for (std::size_t c = 0; c < table.n_cols(); ++c) {
      if (c) out << ",";
      out << format_scalar(table(c, r));
    }
    out << "\n";
  }
}

Cracovian read_cracovian_json(std::istream& in) {
  return cracovian_from_json(parse_json(in, "cracovian file"), "cracovian file");
}

void write_cracovian_json(std::ostream& out, const Cracovian& table) {
  out << cracovian_to_json(table).dump(2) << "\n";
}

Cracovian load_cracovian(const std::filesystem::path& path) {
  auto in = open_input(path);
  if (path.extension() == ".json") return read_cracovian_json(in);
  return read_cracovian_csv(in);
}

void save_cracovian(const std::filesystem::path& path, const Cracovian& table) {
  write_file(path, [&](std::ostream& out) {
    if (path.extension() == ".json")
      write_cracovian_json(out, table);
    else
      write_cracovian_csv(out, table);
  });
}

FiniteGroup read_group_json(std::istream& in) {
  const json j = parse_json(in, "group file");
  FiniteGroup g;
  g.names = read_names(j, "group file");
  const json& unit = field(j, "unit", "group file");
  if (!unit.is_string()) throw SchemaError("group file: 'unit' must be an element name");
  g.unit = name_index(g.names, unit.get<std::string>(), "group file");
  g.table = read_cayley(j, g.names, "group file");
  return g;
}

void write_group_json(std::ostream& out, const FiniteGroup& g) {
  const json j{{"names", g.names},
               {"unit", g.names[g.unit]},
               {"cayley", cayley_to_json(g.names, g.table)}};
  out << j.dump(2) << "\n";
}

FiniteGroup load_group(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_group_json(in);
}

void save_group(const std::filesystem::path& path, const FiniteGroup& g) {
  write_file(path, [&](std::ostream& out) { write_group_json(out, g); });
}

Involution read_involution_json(std::istream& in, const FiniteGroup& g) {
  const json j = parse_json(in, "involution file");
  const json& map = field(j, "map", "involution file");
  if (!map.is_object())
    throw SchemaError("involution file: 'map' must be an object of name pairs");
  const std::size_t n = g.order();
  Involution inv;
  inv.map.assign(n, n);
  std::size_t assigned = 0;
  for (const auto& [key, value] : map.items()) {
    if (!value.is_string())
      throw SchemaError("involution file: image of '" + key + "' must be a name");
    const std::size_t from = name_index(g.names, key, "involution file");
    if (inv.map[from] != n)
      throw SchemaError("involution file: duplicate entry for '" + key + "'");
    inv.map[from] = name_index(g.names, value.get<std::string>(), "involution file");
    ++assigned;
  }
  if (assigned != n)
    throw SchemaError("involution file: 'map' must cover all " + std::to_string(n) +
                      " elements, got " + std::to_string(assigned));
  return inv;
}

void write_involution_json(std::ostream& out, const FiniteGroup& g, const Involution& inv) {
  json map = json::object();
  for (std::size_t i = 0; i < g.order(); ++i) map[g.names[i]] = g.names[inv.map[i]];
  out << json{{"map", std::move(map)}}.dump(2) << "\n";
}

Involution load_involution(const std::filesystem::path& path, const FiniteGroup& g) {
  auto in = open_input(path);
  return read_involution_json(in, g);
}

void save_involution(const std::filesystem::path& path, const FiniteGroup& g,
                     const Involution& inv) {
  write_file(path, [&](std::ostream& out) { write_involution_json(out, g, inv); });
}

Quasigroup read_quasigroup_json(std::istream& in) {
  const json j = parse_json(in, "quasigroup file");
  Quasigroup q;
  q.names = read_names(j, "quasigroup file");
  const json& tau = field(j, "tau", "quasigroup file");
  if (!tau.is_string()) throw SchemaError("quasigroup file: 'tau' must be an element name");
  q.tau = name_index(q.names, tau.get<std::string>(), "quasigroup file");
  q.table = read_cayley(j, q.names, "quasigroup file");

  // Re-validate the structural invariants on load.
  const std::size_t n = q.order();
  std::vector<bool> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[q.table[r * n + c]])
        throw SchemaError("quasigroup file: row '" + q.names[r] +
                          "' is not a permutation (not a Latin square)");
      seen[q.table[r * n + c]] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[q.table[r * n + c]])
        throw SchemaError("quasigroup file: column '" + q.names[c] +
                          "' is not a permutation (not a Latin square)");
      seen[q.table[r * n + c]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (q.table[a * n + q.tau] != a)
      throw SchemaError("quasigroup file: '" + q.names[q.tau] + "' is not a right unit");
  return q;
}

void write_quasigroup_json(std::ostream& out, const Quasigroup& q) {
  const json j{{"names", q.names},
               {"tau", q.names[q.tau]},
               {"cayley", cayley_to_json(q.names, q.table)}};
  out << j.dump(2) << "\n";
}

Quasigroup load_quasigroup(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_quasigroup_json(in);
}

void save_quasigroup(const std::filesystem::path& path, const Quasigroup& q) {
  write_file(path, [&](std::ostream& out) { write_quasigroup_json(out, q); });
}

void write_cayley_csv(std::ostream& out, const std::vector<std::string>& names,
                      const std::vector<std::size_t>& table) {
  const std::size_t n = names.size();
  out << "*";
  for (const auto& name : names) out << "," << name;
  out << "\n";
  for (std::size_t r = 0; r < n; ++r) {
    out << names[r];
    for (std::size_t c = 0; c < n; ++c) out << "," << names[table[r * n + c]];
    out << "\n";
  }
}

Representation read_representation_json(std::istream& in) {
  const json j = parse_json(in, "representation file");
  const json& dim = field(j, "dimension", "representation file");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    throw SchemaError("representation file: 'dimension' must be a positive integer");
  const json& elements = field(j, "elements", "representation file");
  if (!elements.is_object() || elements.empty())
    throw SchemaError("representation file: 'elements' must be a nonempty object");

  Representation rep;
  rep.dimension = dim.get<std::size_t>();
  for (const auto& [name, value] : elements.items()) {
    Cracovian table = cracovian_from_json(value, "representation file");
    if (!table.square() || table.n_rows() != rep.dimension)
      throw SchemaError("representation file: table for '" + name + "' is " +
                        table.shape() + ", expected " + std::to_string(rep.dimension) +
                        "x" + std::to_string(rep.dimension));
    rep.names.push_back(name);
    rep.tables.push_back(std::move(table));
  }
  return rep;
}

void write_representation_json(std::ostream& out, const Representation& rep) {
  json elements = json::object();
  for (std::size_t i = 0; i < rep.names.size(); ++i)
    elements[rep.names[i]] = cracovian_to_json(rep.tables[i]);
  out << json{{"dimension", rep.dimension}, {"elements", std::move(elements)}}.dump(2)
      << "\n";
}

Representation load_representation(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_representation_json(in);
}

void save_representation(const std::filesystem::path& path, const Representation& rep) {
  write_file(path, [&](std::ostream& out) { write_representation_json(out, rep); });
}

}  // namespace cracq
