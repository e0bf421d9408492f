#include "semicat/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace semicat {

json monoid_to_json(const FiniteMonoid& m) {
  json j;
  j["size"] = m.size;
  if (m.has_identity())
    j["identity"] = m.identity;
  else
    j["identity"] = nullptr;
  json table = json::array();
  for (ElementId x = 0; x < m.size; ++x) {
    json row = json::array();
    for (ElementId y = 0; y < m.size; ++y) row.push_back(m.mul(x, y));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  if (!m.labels.empty()) j["labels"] = m.labels;
  return j;
}

FiniteMonoid monoid_from_json(const json& j) {
  try {
    require(j.contains("table"), "ParseError", "monoid JSON needs a table");
    std::vector<std::vector<ElementId>> rows =
        j.at("table").get<std::vector<std::vector<ElementId>>>();
    ElementId identity = kNone;
    if (j.contains("identity") && !j.at("identity").is_null())
      identity = j.at("identity").get<ElementId>();
    std::vector<std::string> labels;
    if (j.contains("labels"))
      labels = j.at("labels").get<std::vector<std::string>>();
    FiniteMonoid m =
        table_from_flat(static_cast<int>(rows.size()), [&] {
          std::vector<ElementId> flat;
          for (auto& r : rows) {
            require(r.size() == rows.size(), "ParseError", "table not square");
            flat.insert(flat.end(), r.begin(), r.end());
          }
          return flat;
        }(), identity, std::move(labels));
    if (j.contains("size"))
      require(j.at("size").get<int>() == m.size, "ParseError",
              "size field disagrees with the table");
    return m;
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  }
}

FiniteGroup group_from_json(const json& j) {
  return group_from_monoid(monoid_from_json(j));
}

json category_to_json(const FiniteCategory& c) {
  json j;
  j["objects"] = c.num_objects;
  json arrows = json::array();
  for (ElementId i = 0; i < c.num_arrows(); ++i)
    arrows.push_back(json{{"src", c.src[i]}, {"dst", c.dst[i]}});
  j["arrows"] = std::move(arrows);
  j["identities"] = c.identity_arrow;
  json comp = json::object();
  for (ElementId i = 0; i < c.num_arrows(); ++i)
    for (ElementId k = 0; k < c.num_arrows(); ++k)
      if (c.dst[i] == c.src[k])
        comp[std::to_string(i) + "," + std::to_string(k)] = c.compose(i, k);
  j["compose"] = std::move(comp);
  return j;
}

FiniteCategory category_from_json(const json& j) {
  try {
    int objects = j.at("objects").get<int>();
    std::vector<std::pair<ElementId, ElementId>> arrows;
    for (const json& a : j.at("arrows"))
      arrows.emplace_back(a.at("src").get<ElementId>(),
                          a.at("dst").get<ElementId>());
    std::vector<ElementId> identities =
        j.at("identities").get<std::vector<ElementId>>();
    std::map<std::pair<ElementId, ElementId>, ElementId> comp;
    for (auto it = j.at("compose").begin(); it != j.at("compose").end(); ++it) {
      const std::string& key = it.key();
      size_t comma = key.find(',');
      require(comma != std::string::npos, "ParseError",
              "compose key must look like \"i,j\"");
      int a = std::stoi(key.substr(0, comma));
      int b = std::stoi(key.substr(comma + 1));
      comp[{a, b}] = it.value().get<ElementId>();
    }
    return category_from_parts(objects, arrows, identities, comp);
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  } catch (const std::invalid_argument&) {
    fail("ParseError", "bad compose key");
  }
}

json congruence_to_json(const Congruence& c) {
  return json{{"classes", c.class_of}};
}

Congruence congruence_from_json(const json& j) {
  try {
    std::vector<int> classes = j.at("classes").get<std::vector<int>>();
    return canonical_partition(classes);
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  }
}

json cat_congruence_to_json(const CatCongruence& c) {
  return json{{"classes", c.class_of}};
}

CatCongruence cat_congruence_from_json(const json& j) {
  try {
    std::vector<int> classes = j.at("classes").get<std::vector<int>>();
    return cat_canonical_partition(classes);
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  }
}

json greens_to_json(const GreensData& g) {
  json j;
  j["r"] = g.r_class;
  j["l"] = g.l_class;
  j["j"] = g.j_class;
  j["h"] = g.h_class;
  j["regular"] = json::array();
  for (uint8_t f : g.j_regular) j["regular"].push_back(f != 0);
  j["idempotents"] = g.idempotents;
  json order = json::array();
  for (int a = 0; a < g.num_j; ++a)
    for (int b = 0; b < g.num_j; ++b)
      if (g.leq_j(a, b) && a != b) order.push_back(json::array({a, b}));
  j["j_order"] = std::move(order);  // pairs [a, b] with J_a <_J J_b
  return j;
}

json rees_to_json(const ReesRepresentation& r) {
  json j;
  j["jclass"] = r.jclass;
  j["e"] = r.base_idempotent;
  j["group"] = monoid_to_json(r.group.monoid);
  j["group_elements"] = r.group.embedding;
  j["A"] = r.a_rclasses;
  j["B"] = r.b_lclasses;
  json c = json::array();
  for (int b = 0; b < r.num_b(); ++b) {
    json row = json::array();
    for (int a = 0; a < r.num_a(); ++a) {
      ElementId v = r.c_entry(b, a);
      if (v == kNone)
        row.push_back(nullptr);
      else
        row.push_back(v);
    }
    c.push_back(std::move(row));
  }
  j["C"] = std::move(c);
  json coord = json::object();
  for (ElementId x : r.j_members) {
    ReesElement t = r.coord(x);
    coord[std::to_string(x)] = json::array({t.a, t.g, t.b});
  }
  j["coord"] = std::move(coord);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "ParseError", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("ParseError", std::string("in ") + path + ": " + e.what());
  }
  return j;
}

bool json_is_category(const json& j) { return j.contains("arrows"); }

}  // namespace semicat
