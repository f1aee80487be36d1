#pragma once
// Shared construction machinery for the instance generators: incremental
// graph assembly with gadget splicing, path-decomposition schedules with
// recipe-bag inlining, and interior completion for forward colorings.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degbound/decomp.hpp"
#include "degbound/gadgets.hpp"
#include "degbound/graph.hpp"
#include "degbound/util.hpp"

namespace degbound {
namespace detail {

// Accumulates vertices and edges without copying, splicing gadget internals
// on the fly.  Instances are kept so that schedules can inline recipe bags
// and forward colorings can complete each interior.
struct GraphBuilder {
  int n = 0;
  std::vector<Graph::Edge> edge_list;

  struct Instance {
    const Gadget* gadget;           // borrowed: must outlive the builder
    std::vector<Vertex> endpoints;  // attachments then palette, host ids
    Vertex first_internal;          // internal slot i is first_internal + i - 1
  };
  std::vector<Instance> instances;

  Vertex vertex() { return ++n; }

  std::vector<Vertex> vertices(int count) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(vertex());
    return out;
  }

  void edge(Vertex a, Vertex b) {
    if (a == b) throw Error(Errc::invalid_argument, "builder: loop edge");
    edge_list.emplace_back(std::min(a, b), std::max(a, b));
  }

  void loop(Vertex v) { edge_list.emplace_back(v, v); }

  Vertex leaf(Vertex owner) {
    Vertex l = vertex();
    edge(owner, l);
    return l;
  }

  std::vector<Vertex> leaves(Vertex owner, int count) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(leaf(owner));
    return out;
  }

  // Splices a gadget instance: endpoints map to the given host vertices (in
  // attachment-then-palette order), internals are appended.  Returns the
  // instance index for schedule anchoring.
  std::size_t splice(const Gadget& g, std::vector<Vertex> endpoints) {
    if (static_cast<int>(endpoints.size()) != g.total_endpoints())
      throw Error(Errc::invalid_argument, "builder: endpoint count mismatch");
    Instance inst{&g, std::move(endpoints), n + 1};
    n += g.internals;
    auto translate = [&](int slot) -> Vertex {
      if (slot > 0) return inst.first_internal + slot - 1;
      return inst.endpoints[static_cast<std::size_t>(-slot) - 1];
    };
    for (const auto& [a, b] : g.edges) edge(translate(a), translate(b));
    instances.push_back(std::move(inst));
    return instances.size() - 1;
  }

  Graph build() const { return Graph(n, edge_list); }
};

// Extends a coloring of the builder's plain vertices over every gadget
// interior.  Endpoint entries must already be set.
inline void color_interiors(const GraphBuilder& b, Coloring& coloring) {
  for (const auto& inst : b.instances) {
    std::vector<int> ecol;
    ecol.reserve(inst.endpoints.size());
    for (Vertex v : inst.endpoints) {
      int c = coloring[static_cast<std::size_t>(v) - 1];
      if (c == 0) throw Error(Errc::invalid_argument, "interior completion before endpoint colored");
      ecol.push_back(c);
    }
    std::vector<int> interior = complete_gadget_interior(*inst.gadget, ecol);
    for (int i = 0; i < inst.gadget->internals; ++i)
      coloring[static_cast<std::size_t>(inst.first_internal + i) - 1] = interior[static_cast<std::size_t>(i)];
  }
}

// An ordered bag schedule; anchoring a gadget instance at the current bag
// inlines its recipe bags (each recipe bag unioned with the anchor bag)
// immediately after it, which preserves the path property because every
// anchor-bag vertex persists through the inlined run.
struct ScheduleBuilder {
  struct Step {
    VertexSet bag;
    std::vector<std::size_t> anchored;
  };
  std::vector<Step> steps;

  void bag(VertexSet vs) { steps.push_back({std::move(vs), {}}); }

  void anchor(const GraphBuilder& b, std::size_t instance) {
    if (steps.empty()) throw Error(Errc::invalid_argument, "anchor before any bag");
    const auto& inst = b.instances[instance];
    const VertexSet& here = steps.back().bag;
    for (Vertex v : inst.endpoints)
      if (std::find(here.begin(), here.end(), v) == here.end())
        throw Error(Errc::invalid_argument, "anchor bag missing gadget endpoint");
    steps.back().anchored.push_back(instance);
  }

  // Splice + anchor at the current bag in one step.
  std::size_t attach(GraphBuilder& b, const Gadget& g, std::vector<Vertex> endpoints) {
    std::size_t idx = b.splice(g, std::move(endpoints));
    anchor(b, idx);
    return idx;
  }

  TreeDecomposition finish(const GraphBuilder& b) const {
    TreeDecomposition td;
    td.num_graph_vertices = b.n;
    td.is_path = true;
    auto push = [&](VertexSet bag) {
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      td.bags.push_back(std::move(bag));
    };
    for (const auto& step : steps) {
      push(step.bag);
      for (std::size_t idx : step.anchored) {
        const auto& inst = b.instances[idx];
        for (const auto& recipe : inst.gadget->bags) {
          VertexSet bag = step.bag;
          for (int slot : recipe) bag.push_back(inst.first_internal + slot - 1);
          push(std::move(bag));
        }
      }
    }
    for (int i = 1; i < static_cast<int>(td.bags.size()); ++i) td.tree_edges.emplace_back(i, i + 1);
    return td;
  }
};

inline void put_count(std::map<std::string, std::string>& meta, const std::string& key, long long value) {
  meta[key] = std::to_string(value);
}

}  // namespace detail
}  // namespace degbound
