#pragma once

#include <string>
#include <vector>

#include "degbound/graph.hpp"

namespace degbound {

// Contract families for coloring gadgets.
//  - equality: both attachment vertices must receive the same color, and any
//    host coloring with equal endpoint colors extends neutrally.
//  - palette: among the three attachment vertices, two must share a color.
//  - difference(k): with k >= delta+1 the endpoints must differ; with
//    k <= delta the gadget contributes exactly k neighbors of the first
//    endpoint's color to the second endpoint.
//  - exclusion(c1,c2): with the palette endpoints rainbow-colored, if the
//    first attachment has palette color c1 the second avoids palette color c2.
//  - implication(c1,c2): as exclusion but forcing the second attachment TO
//    palette color c2.
enum class ContractTag { equality, palette, difference, exclusion, implication };

// A graph fragment with attachment points.  Slot encoding used by `edges`
// and `bags`: negative values -1..-(attachments+palette_endpoints) denote
// endpoints in order (attachments first, then the palette list), positive
// values 1..internals denote internal vertices.
struct Gadget {
  ContractTag tag = ContractTag::equality;
  int chi = 0;
  int delta = 0;
  int k = 0;            // difference only
  int c1 = 0, c2 = 0;   // exclusion/implication palette indices, 1-based
  int attachments = 0;  // 2, or 3 for palette gadgets
  int palette_endpoints = 0;
  int internals = 0;
  std::vector<std::pair<int, int>> edges;

  // Path-decomposition recipe for the fragment: bags of internal slots, in
  // path order, valid once every endpoint is added to every bag.  Splicing a
  // gadget into a host decomposition inserts these bags (plus the host bag
  // holding the endpoints) next to that bag.
  std::vector<std::vector<int>> bags;

  int total_endpoints() const { return attachments + palette_endpoints; }
  // Largest inserted bag before host-bag contents: endpoints + recipe slots.
  int width_bound() const;
};

// Supplies the primitive equality/palette fragments for one chi; difference,
// exclusion and implication gadgets are always composed from these.
class GadgetProvider {
 public:
  virtual ~GadgetProvider() = default;
  virtual bool supports(int chi, int delta) const = 0;
  virtual Gadget equality(int chi, int delta) const = 0;
  virtual Gadget palette(int chi, int delta) const = 0;
  virtual std::string name() const = 0;
};

// Proven two-color provider: equality = 2*delta+1 independent common
// neighbors, palette = empty fragment (pigeonhole over three vertices).
const GadgetProvider& reference_provider();

Gadget equality_gadget(int chi, int delta, const GadgetProvider& provider = reference_provider());
Gadget palette_gadget(int chi, int delta, const GadgetProvider& provider = reference_provider());
Gadget difference_gadget(int chi, int delta, int k,
                         const GadgetProvider& provider = reference_provider());
Gadget exclusion_gadget(int chi, int delta, int c1, int c2,
                        const GadgetProvider& provider = reference_provider());
Gadget implication_gadget(int chi, int delta, int c1, int c2,
                          const GadgetProvider& provider = reference_provider());

// Splices the gadget into a host graph: endpoints (attachments then palette
// list) are identified with the given distinct host vertices, internals are
// appended after the host's vertices (their final ids are returned through
// `internals`).
Graph splice_into(const Graph& host, const Gadget& g, const std::vector<Vertex>& endpoints,
                  std::vector<Vertex>* internals = nullptr);

// Every loop-free graph on 1..max_n labeled vertices.
std::vector<Graph> all_graphs_up_to(int max_n);

// Exhaustive contract check: for every host, every splice of the gadget's
// endpoints onto distinct host vertices and every host coloring, the
// forcing direction (no valid spliced coloring breaks the contract) and the
// extension direction (every qualifying host coloring extends with the
// declared neighbor additions — zero for all families except the
// low-multiplicity difference gadget) are both verified.
bool verify_gadget_contract(const Gadget& g, int chi, int delta, const std::vector<Graph>& hosts,
                            std::string* why = nullptr);

// Structural self-check of the embedded path-decomposition recipe.
bool gadget_bags_valid(const Gadget& g, std::string* why = nullptr);

// Colors the gadget's internal vertices under fixed endpoint colors so that
// every internal vertex stays within the defect bound and every endpoint
// gains exactly the family's declared number of same-colored internal
// neighbors: zero for all families, except the second attachment of a
// difference gadget with equal endpoint colors, which gains k.  Returns the
// colors indexed by internal slot (entry i is slot i+1).  Throws
// contract_violation when the endpoint colors violate the gadget's contract.
std::vector<int> complete_gadget_interior(const Gadget& g, const std::vector<int>& endpoint_colors);

}  // namespace degbound
