#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sfdt/embedding.hpp"
#include "sfdt/rational.hpp"

namespace sfdt {

enum class Scheme { mlone, mltwo, mlthree };
Scheme scheme_from_string(const std::string& s);
std::string to_string(Scheme s);

struct Transfer {
  int src, dst;
  Rat amount;
  std::string rule;
};

// Element ids: vertices 0..n-1, faces n..n+F-1, banks (mltwo) following.
struct ChargeLedger {
  Scheme scheme = Scheme::mlone;
  int n_vertices = 0, n_faces = 0, n_banks = 0;
  std::vector<Rat> initial, final_charge;
  std::vector<Transfer> transfers;
  std::vector<std::string> classifications;
  std::vector<std::string> warnings;
  bool rules_applied = true;  // false: conservation-only (no transfers)

  int elements() const { return n_vertices + n_faces + n_banks; }
  std::string element_name(int id) const;
  Rat sum_initial() const;
  Rat sum_final() const;
  std::vector<int> negatives() const;
};

std::string ledger_text(const ChargeLedger& led);

// Auxiliary structure for the mltwo scheme. A vertex is bad when it has
// degree 4 and lies on exactly two 3-faces; a 3-face is bad when it carries
// at least one bad vertex. Bad vertices join their two 3-faces as multigraph
// edges; each connected component keeps one bank.
struct AuxGraphH {
  std::vector<int> bad_faces;                      // face indices
  std::vector<int> bad_vertices;                   // host vertex ids
  std::vector<std::pair<int, int>> vertex_faces;   // per bad vertex: its two bad-face indices (into bad_faces)
  std::vector<int> component;                      // per bad_faces entry
  int n_components = 0;
  std::vector<std::string> component_type;         // cycle | tree | other
};
AuxGraphH aux_graph_h(const EmbeddedGraph& e);

ChargeLedger initial_charges(const EmbeddedGraph& e, Scheme s);

// Full rule execution. Non-2-connected embeddings or non-simple faces fall
// back to a conservation-only ledger with a warning.
ChargeLedger run_discharge(const EmbeddedGraph& e, Scheme s);

struct AuditReport {
  Scheme scheme = Scheme::mlone;
  std::vector<std::pair<std::string, bool>> hypothesis_results;  // requested families
  bool rules_applied = false;
  int min_deg = 0;
  int euler = 0;
  bool conservation_ok = false;
  std::vector<std::string> negative_elements;
  std::vector<std::string> aux_component_types;  // mltwo only
  bool aux_components_ok = true;                 // cycles/trees only (when relevant hypotheses hold)
  bool bank_identity_ok = true;                  // tree banks end at exactly 6/5
  // True only if a negative final survives on an input satisfying the proven
  // scheme's hypotheses - that would contradict the theorem, i.e. flag a bug.
  bool contradiction_flag = false;
  ChargeLedger ledger;
};
AuditReport discharge_audit(const EmbeddedGraph& e, Scheme s,
                            const std::vector<std::string>& hypotheses);

}  // namespace sfdt
