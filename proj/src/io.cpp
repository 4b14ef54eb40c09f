#include "hdom/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hdom {

namespace {

using nlohmann::json;

// next content line, skipping comments and blanks
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::uint64_t> parse_ints(const std::string& line, std::size_t expect,
                                      const char* what) {
  std::istringstream ss(line);
  std::vector<std::uint64_t> out;
  std::int64_t v;
  while (ss >> v) {
    if (v < 0) throw InputError(std::string(what) + ": negative value");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  ss.clear();
  std::string rest;
  if (ss >> rest)
    throw InputError(std::string(what) + ": malformed line '" + line + "'");
  if (out.size() != expect)
    throw InputError(std::string(what) + ": expected " + std::to_string(expect) +
                     " values, got " + std::to_string(out.size()));
  return out;
}

struct Header {
  std::uint64_t n, r, m;
};

Header read_header(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw InputError("missing header line 'n r m'");
  auto vals = parse_ints(line, 3, "header");
  return {vals[0], vals[1], vals[2]};
}

std::vector<Edge> read_edge_lines(std::istream& in, const Header& hd) {
  std::vector<Edge> edges;
  edges.reserve(hd.m);
  std::string line;
  for (std::uint64_t i = 0; i < hd.m; ++i) {
    if (!next_line(in, line))
      throw InputError("expected " + std::to_string(hd.m) + " edge lines, got " +
                       std::to_string(i));
    auto vals = parse_ints(line, hd.r, "edge line");
    Edge e;
    e.reserve(hd.r);
    for (std::uint64_t v : vals) e.push_back(static_cast<VertexId>(v));
    edges.push_back(std::move(e));
  }
  return edges;
}

}  // namespace

Hypergraph read_hypergraph_text(std::istream& in) {
  Header hd = read_header(in);
  if (hd.r < 2) throw InputError("header: uniformity r must be >= 2");
  auto edges = read_edge_lines(in, hd);
  try {
    return Hypergraph(hd.n, static_cast<unsigned>(hd.r), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_hypergraph_text(in);
}

void write_hypergraph_text(std::ostream& out, const Hypergraph& h,
                           const std::vector<std::string>& comment_lines) {
  for (const std::string& c : comment_lines) out << "# " << c << "\n";
  out << h.num_vertices() << ' ' << h.uniformity() << ' ' << h.num_edges() << "\n";
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
}

Orientation read_orientation_text(std::istream& in, std::shared_ptr<const Hypergraph> h) {
  Header hd = read_header(in);
  if (hd.n != h->num_vertices() || hd.r != h->uniformity() || hd.m != h->num_edges())
    throw InputError("orientation header does not match the hypergraph");
  auto orders = read_edge_lines(in, hd);
  try {
    return Orientation(std::move(h), std::move(orders));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Orientation read_orientation_file(const std::string& path,
                                  std::shared_ptr<const Hypergraph> h) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_orientation_text(in, std::move(h));
}

void write_orientation_text(std::ostream& out, const Orientation& d,
                            const std::vector<std::string>& comment_lines) {
  const Hypergraph& h = d.hypergraph();
  for (const std::string& c : comment_lines) out << "# " << c << "\n";
  out << h.num_vertices() << ' ' << h.uniformity() << ' ' << h.num_edges() << "\n";
  for (const Edge& e : d.orders()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  json j;
  j["n"] = h.num_vertices();
  j["r"] = h.uniformity();
  j["edges"] = h.edges();
  return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    auto n = j.at("n").get<std::uint64_t>();
    auto r = j.at("r").get<unsigned>();
    auto edges = j.at("edges").get<std::vector<Edge>>();
    return Hypergraph(n, r, std::move(edges));
  } catch (const json::exception& e) {
    throw InputError(std::string("hypergraph json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

nlohmann::json coloring_to_json(const Coloring& c) {
  return json{{"num_colors", c.num_colors}, {"assignment", c.assignment}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
  try {
    Coloring c;
    c.num_colors = j.at("num_colors").get<std::uint32_t>();
    c.assignment = j.at("assignment").get<std::vector<std::uint32_t>>();
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("coloring json: ") + e.what());
  }
}

namespace {

bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

bool validate_node(const json& v, const json& schema, const std::string& path,
                   std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = path + ": " + msg;
    return false;
  };
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = type_matches(v, t.get<std::string>());
    else
      for (const auto& alt : t) ok = ok || type_matches(v, alt.get<std::string>());
    if (!ok) return fail("unexpected type " + std::string(v.type_name()));
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"]) ok = ok || alt == v;
    if (!ok) return fail("value not in enum");
  }
  if (schema.contains("minimum") && v.is_number() &&
      v.get<double>() < schema["minimum"].get<double>())
    return fail("below minimum");
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!v.contains(key.get<std::string>()))
        return fail("missing required key '" + key.get<std::string>() + "'");
  if (schema.contains("properties") && v.is_object())
    for (const auto& [key, sub] : schema["properties"].items())
      if (v.contains(key) && !validate_node(v[key], sub, path + "." + key, error))
        return false;
  if (schema.contains("items") && v.is_array())
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!validate_node(v[i], schema["items"], path + "[" + std::to_string(i) + "]",
                         error))
        return false;
  return true;
}

}  // namespace

bool validate_schema(const nlohmann::json& value, const nlohmann::json& schema,
                     std::string* error) {
  return validate_node(value, schema, "$", error);
}

}  // namespace hdom
