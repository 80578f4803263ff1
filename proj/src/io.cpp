// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/io.h"

#include <bit>
#include <map>
#include <fstream>
#include <numeric>
#include <optional>
#include <regex>

namespace fd::io {

namespace {

Order parse_order(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Order::infinity();
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    const auto v = j.get<std::uint64_t>();
    if (v >= Order::infinity().value()) throw InputError("order value too large");
    return Order(static_cast<std::uint32_t>(v));
  }
  throw InputError("orders are natural numbers or \"inf\"");
}

GroundSet parse_ground(const json& doc) {
  if (!doc.contains("ground") || !doc["ground"].is_array()) {
    throw InputError("connsys-v1 needs a \"ground\" array");
  }
  std::vector<std::string> labels;
  for (const auto& l : doc["ground"]) labels.push_back(label_from_json(l));
  if (labels.empty()) throw InputError("ground set is empty");
  return GroundSet(std::move(labels));
}

ConnectivitySystem parse_table(const GroundSet& ground, const json& doc) {
  const int n = ground.size();
  if (n > 20) throw InputError("table systems are limited to 20 elements");
  const bool strict = doc.value("strict", false);
  const std::size_t size = std::size_t{1} << n;
  const Mask full = ground.full();
  std::vector<Order> t(size, Order(0));
  std::vector<char> given(size, 0);
  auto set = [&](Mask m, Order o) {
    if (given[m] && t[m] != o) throw InputError("table lists one set twice with different orders");
    t[m] = o;
    given[m] = 1;
  };
  if (doc.contains("empty")) {
    set(0, parse_order(doc["empty"]));
    if (!strict) set(full, t[0]);
  }
  if (doc.contains("entries")) {
    for (const auto& e : doc.at("entries")) {
      const Mask m = side_from_json(ground, e.at("set"));
      const Order o = parse_order(e.at("order"));
      if (strict) {
        set(m, o);
        continue;
      }
      // Only sets containing the first element are listed; symmetry fills
      // in the other half.
      if ((m & 1) == 0) {
        throw InputError("table entries must contain the first ground element (or set \"strict\")");
      }
      set(m, o);
      set(full & ~m, o);
    }
  }
  std::optional<Order> fallback;
  if (doc.contains("default")) fallback = parse_order(doc["default"]);
  for (std::size_t m = 0; m < size; ++m) {
    if (given[m]) continue;
    if (!fallback) throw InputError("no order for a set and no \"default\"");
    t[m] = *fallback;
  }
  return ConnectivitySystem::from_table(ground, std::move(t));
}

struct GraphPayload {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> ends;
};

GraphPayload parse_graph(const GroundSet& ground, const json& doc) {
  std::map<std::string, int> vertex;
  for (const auto& v : doc.at("vertices")) {
    const std::string l = label_from_json(v);
    if (!vertex.emplace(l, static_cast<int>(vertex.size())).second) {
      throw InputError("duplicate vertex " + l);
    }
  }
  GraphPayload g{static_cast<int>(vertex.size()),
                 std::vector<std::pair<int, int>>(ground.size(), {-1, -1})};
  auto vid = [&](const json& j) {
    auto it = vertex.find(label_from_json(j));
    if (it == vertex.end()) throw InputError("edge uses an unknown vertex");
    return it->second;
  };
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw InputError("edges are [u, v, label]");
    const int i = ground.index_of(label_from_json(e[2]));
    if (g.ends[i].first >= 0) throw InputError("edge label used twice");
    g.ends[i] = {vid(e[0]), vid(e[1])};
  }
  for (const auto& p : g.ends) {
    if (p.first < 0) throw InputError("ground element without an edge");
  }
  return g;
}

Matroid parse_linear(const GroundSet& ground, const json& doc) {
  const std::string field = doc.at("field").get<std::string>();
  const json& cols = doc.at("columns");
  std::vector<json> ordered;
  for (const auto& l : ground.labels()) {
    if (!cols.contains(l)) throw InputError("no column for " + l);
    ordered.push_back(cols.at(l));
  }
  if (cols.size() != ordered.size()) throw InputError("column for an element outside the ground set");
  if (field == "rational") {
    std::vector<std::vector<std::string>> c;
    for (const auto& col : ordered) {
      auto& out = c.emplace_back();
      for (const auto& x : col) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    }
    return Matroid::linear_rational(ground, std::move(c));
  }
  std::uint32_t p = 0;
  if (field == "gf2") {
    p = 2;
  } else if (field.rfind("gfp:", 0) == 0) {
    try {
      p = static_cast<std::uint32_t>(std::stoul(field.substr(4)));
    } catch (const std::exception&) {
      throw InputError("bad field " + field);
    }
  } else {
    throw InputError("unknown field " + field);
  }
  std::vector<std::vector<std::int64_t>> c;
  for (const auto& col : ordered) c.push_back(col.get<std::vector<std::int64_t>>());
  return Matroid::linear_mod_p(ground, p, std::move(c));
}

}  // namespace

json label_json(const std::string& label) {
  static const std::regex integer("-?(0|[1-9][0-9]{0,17})");
  if (std::regex_match(label, integer)) return std::stoll(label);
  return label;
}

std::string label_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw InputError("labels are strings or integers");
}

json side_json(const GroundSet& ground, Mask side) {
  json out = json::array();
  for (const auto& l : ground.labels_of(side)) out.push_back(label_json(l));
  return out;
}

Mask side_from_json(const GroundSet& ground, const json& labels) {
  if (!labels.is_array()) throw InputError("a set is an array of labels");
  Mask m = 0;
  for (const auto& l : labels) m |= bit(ground.index_of(label_from_json(l)));
  return m;
}

json order_json(Order o) {
  if (o.is_inf()) return "inf";
  return o.value();
}

json profile_json(const GroundSet& ground, const Profile& p) {
  json out = json::array();
  for (Mask s : p.sides) out.push_back(side_json(ground, s));
  return out;
}

ConnectivitySystem parse_connsys(const json& doc) {
  try {
    if (doc.value("format", "") != "connsys-v1") throw InputError("not a connsys-v1 document");
    const GroundSet ground = parse_ground(doc);
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "table") return parse_table(ground, doc);
    if (kind == "graph-edges") {
      auto g = parse_graph(ground, doc);
      return ConnectivitySystem::from_graph(ground, g.num_vertices, std::move(g.ends));
    }
    if (kind == "graphic-matroid") {
      auto g = parse_graph(ground, doc);
      return ConnectivitySystem::from_matroid(
          Matroid::graphic(ground, g.num_vertices, std::move(g.ends)));
    }
    if (kind == "linear-matroid") return ConnectivitySystem::from_matroid(parse_linear(ground, doc));
    if (kind == "uniform") {
      if (doc.at("size").get<int>() != ground.size()) throw InputError("uniform size mismatch");
      return ConnectivitySystem::from_matroid(Matroid::uniform(ground, doc.at("rank").get<int>()));
    }
    throw InputError("unknown kind " + kind);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed connsys-v1: ") + e.what());
  }
}

ConnectivitySystem load_connsys(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_connsys(json::parse(in));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Pseudoflower parse_pseudoflower(const ConnectivitySystem& sys, const json& doc, int k) {
  try {
    const json* petals = &doc;
    std::vector<int> order;
    if (doc.is_object()) {
      petals = &doc.at("petals");
      if (doc.contains("k")) {
        const int dk = doc["k"].get<int>();
        if (k >= 0 && k != dk) throw InputError("--k disagrees with the pseudoflower's k");
        k = dk;
      }
      if (doc.contains("order")) order = doc["order"].get<std::vector<int>>();
    }
    if (k < 0) throw InputError("no k given for the pseudoflower");
    std::vector<Mask> masks;
    for (const auto& p : *petals) masks.push_back(side_from_json(sys.ground(), p));
    if (order.empty()) {
      order.resize(masks.size());
      std::iota(order.begin(), order.end(), 0);
    }
    return make_pseudoflower(sys, std::move(masks), CyclicOrder(std::move(order)), k);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed pseudoflower: ") + e.what());
  }
}

json pseudoflower_json(const Pseudoflower& f) {
  json petals = json::array();
  for (Mask p : f.petals()) petals.push_back(side_json(f.system().ground(), p));
  return {{"k", f.k()}, {"petals", petals}, {"order", f.order().ring()}};
}

CyclicOrder parse_cyclic_order(const json& doc) {
  try {
    const json& ring = doc.is_object() ? doc.at("ring") : doc;
    return CyclicOrder(ring.get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed cyclic order: ") + e.what());
  }
}

json abstract_json(const AbstractSystem& asys, const AbstractTree& tree) {
  auto members = [](ProfileSet x) {
    json out = json::array();
    for (; x != 0; x &= x - 1) out.push_back(std::countr_zero(x));
    return out;
  };
  auto list = [&](const std::vector<ProfileSet>& v) {
    json out = json::array();
    for (ProfileSet x : v) out.push_back(members(x));
    return out;
  };
  json classes = json::array();
  for (std::size_t v = 0; v < asys.classes.size(); ++v) {
    json c = {{"members", list(asys.classes[v])},
              {"boundary", list(asys.boundaries[v])},
              {"kind", to_string(asys.class_kind[v])}};
    if (asys.class_kind[v] == PreflowerKind::kPreDaisy) {
      c["order"] = boundary_cyclic_order(asys, static_cast<int>(v)).ring();
    }
    classes.push_back(c);
  }
  json vertices = json::array();
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    json x = {{"kind", to_string(tree.kind[v])}, {"part", members(tree.part[v])}};
    x["class"] = tree.class_of[v] >= 0 ? json(tree.class_of[v]) : json(nullptr);
    vertices.push_back(x);
  }
  json edges = json::array();
  for (const auto& e : tree.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"side", members(e.side)}});
  return {{"k", asys.k},
          {"family_size", asys.fam.size()},
          {"B", list(asys.b)},
          {"nested", list(asys.nested)},
          {"classes", classes},
          {"e_prime", list(asys.e_prime)},
          {"tree", {{"vertices", vertices}, {"edges", edges}}}};
}

json read_json_arg(const std::string& text) {
  try {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
      return json::parse(text);
    }
    std::ifstream in(text);
    if (!in) throw InputError("cannot open " + text);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("bad JSON argument: ") + e.what());
  }
}

}  // namespace fd::io
