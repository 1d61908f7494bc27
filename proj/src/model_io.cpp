#include "nestlogit/model_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "nestlogit/errors.hpp"

namespace nestlogit {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

double number_field(const Json& node, const std::string& path, const char* key) {
  const auto it = node.find(key);
  if (it == node.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  if (!it->is_number()) schema_error(path + "/" + key, "expected a number");
  return it->get<double>();
}

}  // namespace

ModelSpec parse_model(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) schema_error("", "top level must be an object");
  if (!doc.contains("root")) schema_error("", "missing field \"root\"");

  RawTree raw;
  std::map<std::string, double> utilities;
  struct Pending {
    const Json* node;
    std::string path;
  };
  std::vector<Pending> stack{{&doc["root"], "/root"}};
  bool first = true;
  while (!stack.empty()) {
    const auto [node, path] = stack.back();
    stack.pop_back();
    if (!node->is_object()) schema_error(path, "node must be an object");
    const auto id_it = node->find("id");
    if (id_it == node->end()) schema_error(path, "missing field \"id\"");
    if (!id_it->is_string()) schema_error(path + "/id", "expected a string");

    RawNode out;
    out.id = id_it->get<std::string>();
    if (first) raw.root = out.id;
    first = false;

    if (const auto kids = node->find("children"); kids != node->end()) {
      if (!kids->is_array()) schema_error(path + "/children", "expected an array");
      if (node->contains("utility"))
        schema_error(path + "/utility", "utilities are defined on alternatives only");
      out.kind = NodeKind::Nest;
      out.lambda = number_field(*node, path, "lambda");
      for (std::size_t i = 0; i < kids->size(); ++i) {
        const Json& child = (*kids)[i];
        const std::string child_path = path + "/children/" + std::to_string(i);
        if (!child.is_object()) schema_error(child_path, "node must be an object");
        const auto cid = child.find("id");
        if (cid == child.end()) schema_error(child_path, "missing field \"id\"");
        if (!cid->is_string()) schema_error(child_path + "/id", "expected a string");
        out.children.push_back(cid->get<std::string>());
      }
      for (std::size_t i = kids->size(); i-- > 0;)
        stack.push_back({&(*kids)[i], path + "/children/" + std::to_string(i)});
    } else {
      if (node->contains("lambda"))
        schema_error(path + "/lambda", "alternatives have no lambda (missing \"children\"?)");
      out.kind = NodeKind::Alternative;
      const double u = number_field(*node, path, "utility");
      if (!utilities.emplace(out.id, u).second)
        throw Error(ErrorKind::DuplicateId, "id '" + out.id + "' is defined more than once");
    }
    raw.nodes.push_back(std::move(out));
  }
  return ModelSpec::from_map(Arborescence::build(raw), utilities);
}

ModelSpec load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string model_to_json(const ModelSpec& model) {
  const Arborescence& tree = model.tree();
  std::vector<Json> built(tree.size());
  for (NodeIndex z = static_cast<NodeIndex>(tree.size()); z-- > 0;) {
    Json node;
    node["id"] = tree.id(z);
    if (tree.is_nest(z)) {
      node["lambda"] = tree.lambda(z);
      Json kids = Json::array();
      for (NodeIndex c : tree.children(z)) kids.push_back(std::move(built[c]));
      node["children"] = std::move(kids);
    } else {
      node["utility"] = model.utility(z);
    }
    built[z] = std::move(node);
  }
  Json doc;
  doc["root"] = std::move(built[Arborescence::root()]);
  return doc.dump(2) + "\n";
}

std::map<std::string, double> parse_assignments(std::span<const std::string> items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::ParseError, "expected id=value, got '" + item + "'");
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size())
      throw Error(ErrorKind::ParseError, "bad number in '" + item + "'");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

ModelSpec override_utilities(const ModelSpec& model, const std::map<std::string, double>& values) {
  const Arborescence& tree = model.tree();
  std::vector<double> u(model.utilities().begin(), model.utilities().end());
  for (const auto& [id, value] : values) u[tree.leaf_position(tree.index_of(id))] = value;
  return model.with_utilities(std::move(u));
}

}  // namespace nestlogit
