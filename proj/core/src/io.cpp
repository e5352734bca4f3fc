// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroid/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "matroid/errors.hpp"
#include "matroid/g_invariant.hpp"
#include "matroid/freedom.hpp"

namespace matroid {

namespace {

using nlohmann::json;

constexpr const char* kConstructors[] = {"bases", "circuits", "graph", "uniform", "freedom", "paving"};

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + " must be an integer");
  return j.get<int>();
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw InputError(where + " needs key \"" + key + "\"");
  return obj.at(key);
}

ElementSet get_set(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array of labels");
  ElementSet s;
  for (const json& item : j) {
    const int label = get_int(item, where + " entry");
    if (label < 1 || label > n)
      throw InputError(where + " has label " + std::to_string(label) + " outside 1.." +
                       std::to_string(n));
    if (s.contains(label))
      throw InputError(where + " repeats label " + std::to_string(label));
    s = s.with(label);
  }
  return s;
}

std::vector<ElementSet> get_family(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array of sets");
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_set(j[i], n, where + "[" + std::to_string(i) + "]"));
  return out;
}

/// Without an explicit rank the listed sets may be only the short circuits
/// (e.g. the 3-element circuits of a rank-3 matroid); the largest rank at
/// which they are circuits of the truncation is used.
Matroid circuits_with_inferred_rank(int n, const std::vector<ElementSet>& circuits,
                                    std::optional<int> rank) {
  if (rank) return from_circuits(n, circuits, rank);
  try {
    return from_circuits(n, circuits);
  } catch (const GuardError&) {
    throw;
  } catch (const InputError&) {
    for (int r = n; r >= 0; --r) {
      try {
        return from_circuits(n, circuits, r);
      } catch (const InputError&) {
      }
    }
    throw;
  }
}

int get_n(const json& doc) {
  const int n = get_int(field(doc, "n", "this document"), "\"n\"");
  if (n < 0 || n > kMaxLabel)
    throw InputError("\"n\" = " + std::to_string(n) + " outside 0.." + std::to_string(kMaxLabel));
  return n;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw InputError("unexpected key \"" + key + "\" in " + where);
}

Graph get_graph(const json& g) {
  check_keys(g, {"vertices", "edges"}, "\"graph\"");
  Graph out;
  out.vertex_count = get_int(field(g, "vertices", "\"graph\""), "\"graph\".vertices");
  const json& edges = field(g, "edges", "\"graph\"");
  if (!edges.is_array()) throw InputError("\"graph\".edges must be an array of pairs");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "\"graph\".edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) throw InputError(where + " must be a pair");
    out.edges.emplace_back(get_int(edges[i][0], where), get_int(edges[i][1], where));
  }
  return out;
}

}  // namespace

MatroidDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed document at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("document must be a JSON object");

  std::string kind;
  for (const char* key : kConstructors) {
    if (!doc.contains(key)) continue;
    if (!kind.empty())
      throw InputError("document has both \"" + kind + "\" and \"" + key +
                       "\"; exactly one constructor key is allowed");
    kind = key;
  }
  if (kind.empty())
    throw InputError("document needs one of \"bases\", \"circuits\", \"graph\", \"uniform\", "
                     "\"freedom\", \"paving\"");

  MatroidDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("\"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  const json& payload = doc[kind];
  if (kind == "bases") {
    check_keys(doc, {"bases", "n", "name"}, "a bases document");
    const int n = get_n(doc);
    out.matroid = from_bases(n, get_family(payload, n, "\"bases\""));
  } else if (kind == "circuits") {
    check_keys(doc, {"circuits", "n", "rank", "name"}, "a circuits document");
    const int n = get_n(doc);
    std::optional<int> rank;
    if (doc.contains("rank")) rank = get_int(doc["rank"], "\"rank\"");
    const std::vector<ElementSet> circuits = get_family(payload, n, "\"circuits\"");
    out.matroid = circuits_with_inferred_rank(n, circuits, rank);
  } else if (kind == "graph") {
    check_keys(doc, {"graph", "name"}, "a graph document");
    out.graph = get_graph(payload);
    out.matroid = from_graph(*out.graph);
  } else if (kind == "uniform") {
    check_keys(doc, {"uniform", "name"}, "a uniform document");
    check_keys(payload, {"r", "n"}, "\"uniform\"");
    out.matroid = uniform_matroid(get_int(field(payload, "r", "\"uniform\""), "\"uniform\".r"),
                                  get_int(field(payload, "n", "\"uniform\""), "\"uniform\".n"));
  } else if (kind == "freedom") {
    check_keys(doc, {"freedom", "name"}, "a freedom document");
    const json& seq = payload.is_object() ? field(payload, "sequence", "\"freedom\"") : payload;
    if (!seq.is_string()) throw InputError("\"freedom\" sequence must be a string such as \"110100\"");
    out.matroid = freedom_matroid(RankSequence::parse(seq.get<std::string>()));
  } else {
    check_keys(doc, {"paving", "name"}, "a paving document");
    check_keys(payload, {"n", "r", "copoints"}, "\"paving\"");
    const int n = get_int(field(payload, "n", "\"paving\""), "\"paving\".n");
    if (n < 0 || n > kMaxLabel) throw InputError("\"paving\".n outside 0..64");
    const int r = get_int(field(payload, "r", "\"paving\""), "\"paving\".r");
    const std::vector<ElementSet> copoints =
        get_family(field(payload, "copoints", "\"paving\""), n, "\"paving\".copoints");
    out.matroid = paving_matroid(n, r, copoints);
  }
  return out;
}

MatroidDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string serialize(const Matroid& m, const std::optional<std::string>& name) {
  std::vector<std::vector<int>> bases;
  for (ElementSet b : m.bases()) bases.push_back(b.labels());
  std::sort(bases.begin(), bases.end());
  json doc;
  doc["bases"] = bases;
  doc["n"] = m.size();
  if (name) doc["name"] = *name;
  return doc.dump();
}

}  // namespace matroid
