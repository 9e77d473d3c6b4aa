#include "centrekit/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace centrekit {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadFormat, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadFormat, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

FiniteGroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadFormat, "cannot open " + path);
  int n = 0;
  if (!(in >> n) || n <= 0) throw Error(ErrorCode::BadFormat, "bad order line in " + path);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> table[i][j])) throw Error(ErrorCode::BadFormat, "truncated table in " + path);
  return group_from_cayley(table);
}

std::string cayley_to_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
  return out.str();
}

FiniteGroup read_permutation_file(const std::string& path, int cap) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadFormat, std::string("bad permutation JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::BadFormat, "expected array of arrays");
  std::vector<std::vector<int>> gens;
  for (const auto& inner : j) {
    if (!inner.is_array()) throw Error(ErrorCode::BadFormat, "expected array of arrays");
    gens.push_back(inner.get<std::vector<int>>());
  }
  return group_from_permutations(gens, cap);
}

FiniteGroup resolve_group_source(const std::string& source, int cap) {
  std::string s = source;
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  auto cyclic = [&](int n) { return builtin_group(GroupFamily::Cyclic, {n}); };
  if (s == "quaternion" || s == "q8") return builtin_group(GroupFamily::Quaternion);
  const auto parts = split(s, ':');
  if (parts.size() == 2 && parts[0] == "cyclic") return cyclic(parse_int(parts[1]));
  if (parts.size() == 2 && parts[0] == "dihedral")
    return builtin_group(GroupFamily::Dihedral, {parse_int(parts[1])});
  if (parts.size() == 2 && parts[0] == "symmetric")
    return builtin_group(GroupFamily::Symmetric, {parse_int(parts[1])});
  if (parts.size() == 3 && parts[0] == "product" && parts[1] == "cyclic") {
    std::vector<int> factors;
    for (const auto& f : split(parts[2], ',')) factors.push_back(parse_int(f));
    return builtin_group(GroupFamily::ProductCyclic, factors);
  }
  // short aliases: c5, d4, s3
  if (s.size() >= 2 && (s[0] == 'c' || s[0] == 'd' || s[0] == 's') &&
      std::isdigit(static_cast<unsigned char>(s[1]))) {
    const int n = parse_int(s.substr(1));
    if (s[0] == 'c') return cyclic(n);
    if (s[0] == 'd') return builtin_group(GroupFamily::Dihedral, {n});
    return builtin_group(GroupFamily::Symmetric, {n});
  }
  // fall back to files
  std::ifstream probe(source);
  if (!probe) throw Error(ErrorCode::BadFormat, "unknown group source '" + source + "'");
  std::string head;
  probe >> head;
  probe.close();
  FiniteGroup g = head.size() && (head[0] == '[')
                      ? read_permutation_file(source, cap)
                      : read_cayley_file(source);
  if (g.order() > cap) throw Error(ErrorCode::TooLarge, "group order exceeds the cap");
  return g;
}

nlohmann::json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadFormat, "matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  CMatrix m = zero(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw Error(ErrorCode::BadFormat, "ragged matrix rows");
    for (int k = 0; k < cols; ++k) {
      const auto& entry = j[i][k];
      if (!entry.is_array() || entry.size() != 2)
        throw Error(ErrorCode::BadFormat, "entries must be [re, im]");
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

nlohmann::json bundle_to_json(const EquivariantBundle& v) {
  json j;
  json table = json::array();
  for (int i = 0; i < v.group->order(); ++i) {
    json row = json::array();
    for (int k = 0; k < v.group->order(); ++k) row.push_back(v.group->mul(i, k));
    table.push_back(std::move(row));
  }
  j["group"] = std::move(table);
  json fibres = json::object();
  for (const auto& [g, d] : v.fibres) fibres[std::to_string(g)] = d;
  j["fibres"] = std::move(fibres);
  json action = json::object();
  for (const auto& [h, per_g] : v.action) {
    json inner = json::object();
    for (const auto& [g, block] : per_g) inner[std::to_string(g)] = matrix_to_json(block);
    action[std::to_string(h)] = std::move(inner);
  }
  j["action"] = std::move(action);
  return j;
}

EquivariantBundle bundle_from_json(const nlohmann::json& j, GroupPtr fallback_group) {
  EquivariantBundle v;
  if (j.contains("group")) {
    const auto& src = j.at("group");
    if (src.is_string()) {
      v.group = std::make_shared<const FiniteGroup>(resolve_group_source(src.get<std::string>()));
    } else if (src.is_array()) {
      std::vector<std::vector<int>> table;
      for (const auto& row : src) table.push_back(row.get<std::vector<int>>());
      v.group = std::make_shared<const FiniteGroup>(group_from_cayley(table));
    } else {
      throw Error(ErrorCode::BadFormat, "group must be a path or an inline Cayley table");
    }
  } else if (fallback_group) {
    v.group = std::move(fallback_group);
  } else {
    throw Error(ErrorCode::BadFormat, "bundle JSON lacks a group");
  }
  if (!j.contains("fibres") || !j.at("fibres").is_object())
    throw Error(ErrorCode::BadFormat, "bundle JSON lacks fibres");
  for (const auto& [key, val] : j.at("fibres").items()) {
    const int g = parse_int(key);
    const int d = val.get<int>();
    if (g < 0 || g >= v.group->order() || d <= 0)
      throw Error(ErrorCode::BadFormat, "bad fibre entry");
    v.fibres[g] = d;
  }
  if (!j.contains("action")) throw Error(ErrorCode::BadFormat, "bundle JSON lacks action data");
  for (const auto& [hkey, per_g] : j.at("action").items()) {
    const int h = parse_int(hkey);
    for (const auto& [gkey, mat] : per_g.items()) {
      v.action[h][parse_int(gkey)] = matrix_from_json(mat);
    }
  }
  v.validate();
  return v;
}

EquivariantBundle read_bundle_file(const std::string& path, GroupPtr fallback_group) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadFormat, std::string("bad bundle JSON: ") + e.what());
  }
  return bundle_from_json(j, std::move(fallback_group));
}

void write_bundle_file(const std::string& path, const EquivariantBundle& v,
                       const std::vector<int>* grading) {
  json j = bundle_to_json(v);
  if (grading != nullptr) j["grading"] = *grading;
  write_text_file(path, j.dump(2) + "\n");
}

nlohmann::json morphism_to_json(const BundleMorphism& f) {
  json j;
  j["source"] = bundle_to_json(f.source);
  j["target"] = bundle_to_json(f.target);
  json blocks = json::object();
  for (const auto& [g, block] : f.blocks) blocks[std::to_string(g)] = matrix_to_json(block);
  j["blocks"] = std::move(blocks);
  return j;
}

BundleMorphism morphism_from_json(const nlohmann::json& j) {
  BundleMorphism f;
  f.source = bundle_from_json(j.at("source"));
  f.target = bundle_from_json(j.at("target"), f.source.group);
  if (!j.contains("blocks")) throw Error(ErrorCode::BadFormat, "morphism JSON lacks blocks");
  for (const auto& [gkey, mat] : j.at("blocks").items()) {
    f.blocks[parse_int(gkey)] = matrix_from_json(mat);
  }
  f.validate();
  return f;
}

nlohmann::json character_table_to_json(const CharacterTable& table) {
  json j;
  j["order"] = table.group_order;
  j["global_dimension"] = table.global_dimension;
  json classes = json::array();
  for (std::size_t c = 0; c < table.class_representatives.size(); ++c) {
    classes.push_back({{"representative", table.class_representatives[c]},
                       {"size", table.class_sizes[c]}});
  }
  j["classes"] = std::move(classes);
  json rows = json::array();
  for (const auto& row : table.rows) {
    json values = json::array();
    for (const auto& v : row.values) values.push_back({v.real(), v.imag()});
    rows.push_back({{"dim", row.dim},
                    {"parity", row.parity == 0 ? "even" : "odd"},
                    {"values", std::move(values)}});
  }
  j["rows"] = std::move(rows);
  return j;
}

namespace {

std::string pretty_complex(Complex v, double eps) {
  std::ostringstream out;
  auto fmt = [&](double x) {
    const double r = std::round(x);
    if (std::abs(x - r) < eps) {
      out << static_cast<long long>(r);
    } else {
      out << std::setprecision(4) << x;
    }
  };
  if (std::abs(v.imag()) < eps) {
    fmt(v.real());
  } else {
    out << '(';
    fmt(v.real());
    out << (v.imag() >= 0 ? "+" : "");
    fmt(v.imag());
    out << "i)";
  }
  return out.str();
}

}  // namespace

std::string character_table_to_text(const CharacterTable& table, double eps) {
  std::ostringstream out;
  out << "group order " << table.group_order << ", " << table.rows.size()
      << " irreducibles, global dimension " << table.global_dimension << "\n";
  out << std::setw(6) << "dim" << std::setw(8) << "parity";
  for (std::size_t c = 0; c < table.class_representatives.size(); ++c) {
    std::ostringstream head;
    head << "[" << table.class_representatives[c] << "]x" << table.class_sizes[c];
    out << std::setw(12) << head.str();
  }
  out << "\n";
  for (const auto& row : table.rows) {
    out << std::setw(6) << row.dim << std::setw(8) << (row.parity == 0 ? "even" : "odd");
    for (const auto& v : row.values) out << std::setw(12) << pretty_complex(v, eps);
    out << "\n";
  }
  return out.str();
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back({{"check", r.check_name},
                   {"group", r.group_name},
                   {"omega", r.omega},
                   {"seed", r.seed},
                   {"status", r.status},
                   {"max_error", std::isfinite(r.max_error) ? r.max_error : -1.0},
                   {"runtime_ms", r.runtime_ms},
                   {"details", r.details}});
  }
  return arr;
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << std::left << std::setw(22) << r.check_name << std::setw(16) << r.group_name;
    out << "omega=" << std::setw(4) << r.omega << std::setw(7) << r.status;
    out << " max_error=" << std::scientific << std::setprecision(3) << r.max_error;
    out << std::defaultfloat << "  (" << std::fixed << std::setprecision(1) << r.runtime_ms
        << " ms)" << std::defaultfloat;
    if (!r.details.empty()) out << "  " << r.details;
    out << "\n";
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadFormat, "cannot write " + path);
  out << content;
}

}  // namespace centrekit
