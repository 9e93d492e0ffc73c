#include "hemi/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hemi/finord.hpp"

namespace hemi {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

Elem index_at(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  auto v = j.get<std::uint64_t>();
  if (v >= n) fail(path, "index " + std::to_string(v) + " out of range for size " + std::to_string(n));
  return static_cast<Elem>(v);
}

OpTable read_table(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail(path, "expected " + std::to_string(n) + " rows");
  OpTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j[i];
    const std::string rp = path + "/" + std::to_string(i);
    if (!row.is_array() || row.size() != n) fail(rp, "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) t(i, k) = index_at(row[k], rp + "/" + std::to_string(k), n);
  }
  return t;
}

void check_keys(const json& obj, const std::string& path, std::set<std::string> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) fail(path, "unknown key \"" + key + "\"");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void write_matrix_rows(std::ostringstream& out, const std::string& indent, std::size_t n,
                       auto&& cell) {
  out << "[\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << indent << "  [";
    for (std::size_t j = 0; j < n; ++j) out << (j ? ", " : "") << cell(i, j);
    out << "]" << (i + 1 < n ? "," : "") << "\n";
  }
  out << indent << "]";
}

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text, bool validate) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    auto pos = what.find("syntax error");
    throw ParseError(pos == std::string::npos ? what : what.substr(pos), line, col);
  }
  check_keys(doc, "", {"size", "names", "leq", "ops", "consts"});
  if (!doc.contains("size")) fail("", "missing key \"size\"");
  if (!doc.contains("leq")) fail("", "missing key \"leq\"");
  if (!doc["size"].is_number_unsigned() || doc["size"].get<std::uint64_t>() == 0)
    fail("/size", "expected a positive integer");
  const std::size_t n = doc["size"].get<std::size_t>();

  const json& leq = doc["leq"];
  if (!leq.is_array() || leq.size() != n) fail("/leq", "expected " + std::to_string(n) + " rows");
  FiniteAlgebra a{Order(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rp = "/leq/" + std::to_string(i);
    if (!leq[i].is_array() || leq[i].size() != n)
      fail(rp, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = leq[i][j];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 1)
        fail(rp + "/" + std::to_string(j), "expected 0 or 1");
      a.leq(i, j) = static_cast<std::uint8_t>(v.get<unsigned>());
    }
  }

  if (doc.contains("names")) {
    const json& names = doc["names"];
    if (!names.is_array() || names.size() != n)
      fail("/names", "expected " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!names[i].is_string()) fail("/names/" + std::to_string(i), "expected a string");
      a.names.push_back(names[i].get<std::string>());
    }
  }

  if (doc.contains("ops")) {
    const json& ops = doc["ops"];
    check_keys(ops, "/ops", {"meet", "join", "arrow", "neg"});
    if (ops.contains("meet")) a.meet = read_table(ops["meet"], "/ops/meet", n);
    if (ops.contains("join")) a.join = read_table(ops["join"], "/ops/join", n);
    if (ops.contains("arrow")) a.arrow = read_table(ops["arrow"], "/ops/arrow", n);
    if (ops.contains("neg")) {
      const json& neg = ops["neg"];
      if (!neg.is_array() || neg.size() != n)
        fail("/ops/neg", "expected " + std::to_string(n) + " entries");
      std::vector<Elem> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = index_at(neg[i], "/ops/neg/" + std::to_string(i), n);
      a.involution = std::move(v);
    }
  }

  if (doc.contains("consts")) {
    const json& consts = doc["consts"];
    check_keys(consts, "/consts", {"bottom", "top", "center"});
    if (consts.contains("bottom")) a.bottom = index_at(consts["bottom"], "/consts/bottom", n);
    if (consts.contains("top")) a.top = index_at(consts["top"], "/consts/top", n);
    if (consts.contains("center")) a.center = index_at(consts["center"], "/consts/center", n);
  }

  if (validate) validate_algebra(a);
  return a;
}

std::string serialize_algebra(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::ostringstream out;
  out << "{\n";
  out << "  \"size\": " << n << ",\n";
  out << "  \"names\": [";
  for (Elem i = 0; i < n; ++i) out << (i ? ", " : "") << json(a.name(i)).dump();
  out << "],\n";
  out << "  \"leq\": ";
  write_matrix_rows(out, "  ", n, [&](std::size_t i, std::size_t j) { return int(a.leq(i, j)); });

  struct Named {
    const char* key;
    const std::optional<OpTable>* table;
  };
  const Named tables[] = {{"meet", &a.meet}, {"join", &a.join}, {"arrow", &a.arrow}};
  std::vector<std::string> ops;
  for (const auto& [key, table] : tables) {
    if (!*table) continue;
    std::ostringstream t;
    t << "    \"" << key << "\": ";
    write_matrix_rows(t, "    ", n, [&](std::size_t i, std::size_t j) { return (**table)(i, j); });
    ops.push_back(t.str());
  }
  if (a.involution) {
    std::ostringstream t;
    t << "    \"neg\": [";
    for (Elem i = 0; i < n; ++i) t << (i ? ", " : "") << (*a.involution)[i];
    t << "]";
    ops.push_back(t.str());
  }
  if (!ops.empty()) {
    out << ",\n  \"ops\": {\n";
    for (std::size_t i = 0; i < ops.size(); ++i) out << ops[i] << (i + 1 < ops.size() ? ",\n" : "\n");
    out << "  }";
  }

  std::vector<std::string> consts;
  if (a.bottom) consts.push_back("    \"bottom\": " + std::to_string(*a.bottom));
  if (a.top) consts.push_back("    \"top\": " + std::to_string(*a.top));
  if (a.center) consts.push_back("    \"center\": " + std::to_string(*a.center));
  if (!consts.empty()) {
    out << ",\n  \"consts\": {\n";
    for (std::size_t i = 0; i < consts.size(); ++i)
      out << consts[i] << (i + 1 < consts.size() ? ",\n" : "\n");
    out << "  }";
  }
  out << "\n}\n";
  return out.str();
}

FiniteAlgebra load_algebra_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), validate);
}

}  // namespace hemi
