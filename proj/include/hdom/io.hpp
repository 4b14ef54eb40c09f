#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hdom/coloring.hpp"
#include "hdom/hypergraph.hpp"
#include "hdom/orientation.hpp"

namespace hdom {

// Malformed or inconsistent input files (as opposed to bad parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: header line "n r m", then m lines of r vertex ids.
// Lines starting with '#' are comments and are skipped.
// Hypergraph edges may come in any order and are canonicalized on load;
// orientation line i must be a permutation of canonical edge i.
Hypergraph read_hypergraph_text(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_text(std::ostream& out, const Hypergraph& h,
                           const std::vector<std::string>& comment_lines = {});

Orientation read_orientation_text(std::istream& in, std::shared_ptr<const Hypergraph> h);
Orientation read_orientation_file(const std::string& path,
                                  std::shared_ptr<const Hypergraph> h);
void write_orientation_text(std::ostream& out, const Orientation& d,
                            const std::vector<std::string>& comment_lines = {});

nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

// Structural validation against the subset of JSON Schema used by the
// shipped schemas: type, properties, required, items, enum, minimum.
bool validate_schema(const nlohmann::json& value, const nlohmann::json& schema,
                     std::string* error = nullptr);

}  // namespace hdom
