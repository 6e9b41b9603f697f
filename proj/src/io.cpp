#include "branchcones/io.hpp"

#include <fstream>
#include <limits>
#include <ostream>

#include "branchcones/errors.hpp"

namespace branchcones {

void write_ine(const ConeH& cone, std::ostream& os) {
  const std::size_t rows = cone.inequalities().size() + 2 * cone.equalities().size();
  os << rows << ' ' << cone.dimension() + 1 << '\n';
  auto emit = [&](const Row& row, std::int64_t sign) {
    os << 0;
    for (auto v : row) os << ' ' << sign * v;
    os << '\n';
  };
  for (const auto& r : cone.inequalities()) emit(r, 1);
  for (const auto& r : cone.equalities()) {
    emit(r, 1);
    emit(r, -1);
  }
}

nlohmann::json cone_sidecar(const ConeH& cone) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : cone.blocks())
    blocks.push_back({{"name", b.name},
                      {"kind", b.kind == BlockKind::kWeight ? "weight" : "string"},
                      {"offset", b.offset},
                      {"length", b.length}});
  return {{"dimension", cone.dimension()},
          {"blocks", blocks},
          {"inequalities", cone.inequalities().size()},
          {"equalities", cone.equalities().size()},
          {"row_format", "b a_1 ... a_d means b + sum a_i x_i >= 0; each equality is written as two rows after the inequalities"}};
}

std::filesystem::path export_cone(const ConeH& cone, const std::filesystem::path& path) {
  std::ofstream ine(path);
  if (!ine) throw InvalidArgument("cannot write " + path.string());
  write_ine(cone, ine);
  std::filesystem::path sidecar = path;
  sidecar.replace_extension(".json");
  if (sidecar == path) sidecar += ".json";
  std::ofstream js(sidecar);
  if (!js) throw InvalidArgument("cannot write " + sidecar.string());
  js << cone_sidecar(cone).dump(2) << '\n';
  return sidecar;
}

nlohmann::json to_json(const Weight& w) { return w.vec(); }

Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("a weight must be a JSON array of integers");
  std::vector<std::int64_t> coords;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidArgument("a weight must be a JSON array of integers");
    coords.push_back(v.get<std::int64_t>());
  }
  return Weight(std::move(coords));
}

nlohmann::json to_json(const BigInt& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(n);
  if (n < 0 && n >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(n);
  return n.str();
}

nlohmann::json template_descriptor(const BZTemplate& t) {
  return {{"m", t.m}, {"index_scheme", BZTemplate::kIndexScheme}, {"vertices", t.vertices.size()},
          {"hexagons", t.hexagons.size()}};
}

nlohmann::json to_json(const BZTemplate& t, const BZFilling& f) {
  auto b = boundary_weights(t, f);
  return {{"template", template_descriptor(t)},
          {"values", f.values},
          {"boundary", {to_json(b[0]), to_json(b[1]), to_json(b[2])}}};
}

nlohmann::json to_json(const Tree& tree) {
  nlohmann::json edges = nlohmann::json::array();
  for (int c : tree.edge_children()) edges.push_back({tree.parent(c), c});
  nlohmann::json leaves = nlohmann::json::array();
  for (int v = 0; v <= tree.n(); ++v) leaves.push_back(v);
  return {{"edges", edges}, {"leaves", leaves}, {"text", tree.to_string()}};
}

nlohmann::json to_json(const Tree& tree, const BZTemplate& t, const Quilt& q) {
  nlohmann::json edges = nlohmann::json::object();
  for (const auto& [c, w] : q.edge_weights) edges[tree.edge_name(c)] = to_json(w);
  nlohmann::json fillings = nlohmann::json::object();
  for (const auto& [v, f] : q.fillings) fillings[std::to_string(v)] = f.values;
  return {{"template", template_descriptor(t)}, {"tree", to_json(tree)}, {"edge_weights", edges},
          {"fillings", fillings}};
}

}  // namespace branchcones
