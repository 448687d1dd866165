#include "lorentz/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lorentz::io {

namespace {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("not an integer: '" + std::string(text) + "'");
  return v;
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("gram entry is not an integer: " + j.dump());
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Lattice parse_lattice(std::string_view text, const std::string& fallback_name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("lattice file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("gram")) throw ParseError("lattice file needs a \"gram\" field");
  const auto& g = j["gram"];
  if (!g.is_array() || g.empty()) throw ParseError("\"gram\" must be a nonempty array of rows");
  const std::size_t n = g.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g[i].is_array() || g[i].size() != n) throw ParseError("gram row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = integer_from_json(g[i][k]);
  }
  std::string name = fallback_name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  try {
    return Lattice(m, name);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid gram matrix: ") + e.what());
  }
}

Lattice load_lattice(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read lattice file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lattice(ss.str(), path.stem().string());
}

std::string dump_lattice(const Lattice& lattice) {
  nlohmann::ordered_json j;
  j["name"] = lattice.name();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < lattice.rank(); ++k) {
      const Integer& v = lattice.gram()(i, k);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(row);
  }
  j["gram"] = rows;
  return j.dump();
}

IntVec parse_int_list(std::string_view text) {
  IntVec out;
  for (auto part : split(text, ',')) out.push_back(parse_integer(part));
  return out;
}

std::vector<IntVec> parse_vector_list(std::string_view text) {
  std::vector<IntVec> out;
  for (auto part : split(text, ';')) out.push_back(parse_int_list(part));
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  auto rows = parse_vector_list(text);
  const std::size_t n = rows.size();
  const std::size_t m = rows.front().size();
  IntMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) throw ParseError("matrix rows have different lengths");
    for (std::size_t k = 0; k < m; ++k) out(i, k) = rows[i][k];
  }
  return out;
}

}  // namespace lorentz::io
