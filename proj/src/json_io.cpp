#include "nfourier/json_io.hpp"

#include <chrono>
#include <ctime>

#include "nfourier/error.hpp"

namespace nfourier {

Json cyclo_to_json(const Cyclotomic& v, bool with_float) {
  Json coeffs = Json::object();
  for (long e = 0; e < static_cast<long>(v.coeffs().size()); ++e)
    if (v.coeffs()[e] != 0) coeffs[std::to_string(e)] = rational_str(v.coeffs()[e]);
  Json out{{"conductor", v.conductor()}, {"coeffs", coeffs}};
  if (with_float) {
    auto f = v.to_float();
    out["approx"] = Json::array({f.real(), f.imag()});
  }
  return out;
}

Cyclotomic cyclo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    fail("MalformedRational", "cyclotomic record needs conductor and coeffs");
  long conductor = j.at("conductor").get<long>();
  std::map<long, Rational> coeffs;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    long e = 0;
    try {
      e = std::stol(key);
    } catch (...) {
      fail("MalformedRational", "bad exponent key: " + key);
    }
    coeffs[e] = parse_rational(value.get<std::string>());
  }
  return Cyclotomic::from_coeff_map(conductor, coeffs);
}

Json matrix_to_json(const CycloMat& m, bool with_float) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(cyclo_to_json(v, with_float));
    rows.push_back(std::move(r));
  }
  return rows;
}

CycloMat matrix_from_json(const Json& j) {
  CycloMat m;
  for (const auto& row : j) {
    CycloVec r;
    for (const auto& v : row) r.push_back(cyclo_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

GroupPtr group_from_spec(const Json& spec) {
  if (!spec.is_object() || !spec.contains("type"))
    fail("MalformedTable", "group spec needs a type field");
  std::string type = spec.at("type").get<std::string>();
  if (type == "mul_table") {
    if (!spec.contains("table")) fail("MalformedTable", "mul_table spec needs a table");
    std::vector<std::vector<int>> table = spec.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (spec.contains("labels")) labels = spec.at("labels").get<std::vector<std::string>>();
    return group_from_table(table, std::move(labels));
  }
  if (type == "permutation") {
    if (!spec.contains("degree") || !spec.contains("generators"))
      fail("NotAPermutation", "permutation spec needs degree and generators");
    return group_from_permutations(spec.at("degree").get<int>(),
                                   spec.at("generators").get<std::vector<std::vector<int>>>());
  }
  if (type == "named") {
    if (!spec.contains("name")) fail("MalformedTable", "named spec needs a name");
    return named_group(spec.at("name").get<std::string>());
  }
  fail("MalformedTable", "unknown group spec type: " + type);
}

ZGradedGroup graded_from_spec(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kernel") || !spec.contains("theta"))
    fail("MalformedTable", "graded spec needs kernel and theta");
  GroupPtr kernel = group_from_spec(spec.at("kernel"));
  std::vector<Element> images = spec.at("theta").get<std::vector<Element>>();
  return ZGradedGroup(kernel, GroupMap(kernel, kernel, std::move(images)));
}

SignFunction signs_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("signs"))
    fail("IncompleteSignFunction", "sign file needs a signs array");
  return j.at("signs").get<SignFunction>();
}

Json mset_legend(const MSet& m) {
  Json legend = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    const MPair& p = m.pair(i);
    const ClassContext& c = m.context_of(p);
    legend.push_back(Json{{"index", i},
                          {"class_rep", p.class_rep},
                          {"class_label", m.group()->label(p.class_rep)},
                          {"centralizer_order", c.cent.order()},
                          {"irrep_index", p.irrep_index},
                          {"irrep_degree", c.table.irreducible(p.irrep_index).degree()}});
  }
  return legend;
}

Json mi_eta_legend(const MiEta& m) {
  Json legend = Json::array();
  for (int t = 0; t < m.size(); ++t) {
    const auto& cls = m.class_of_pair(t);
    Json entry{{"index", t},
               {"k", cls.x.k},
               {"k_label", m.quotient().delta().kernel->label(cls.x.k)},
               {"degree", cls.x.e},
               {"small_centralizer_order", cls.cent.small.order()},
               {"irrep_index", m.pair(t).irrep},
               {"irrep_degree", cls.cent.table.irreducible(m.pair(t).irrep).degree()}};
    if (m.degree() == 0)
      entry["extension_count"] = cls.extensions[m.pair(t).irrep].size();
    legend.push_back(std::move(entry));
  }
  return legend;
}

Json character_table_to_json(const CharacterTable& t) {
  const GroupPtr& g = t.group();
  Json classes = Json::array();
  for (int c = 0; c < g->class_count(); ++c)
    classes.push_back(Json{{"representative", g->class_rep(c)},
                           {"label", g->label(g->class_rep(c))},
                           {"size", g->class_size(c)}});
  Json irreps = Json::array();
  for (const ClassFunction& chi : t.irreducibles()) {
    Json values = Json::array();
    for (const auto& v : chi.values) values.push_back(cyclo_to_json(v));
    irreps.push_back(Json{{"degree", chi.degree()}, {"values", values}});
  }
  return Json{{"classes", classes}, {"irreducibles", irreps}};
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

Json job_result(const std::string& command, Json inputs, Json result, const std::string& status) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"status", status},
              {"timestamp", iso_timestamp()}};
}

}  // namespace nfourier
