#pragma once

#include <string>

#include <json.hpp>

#include "ramagraph/building.hpp"
#include "ramagraph/construction.hpp"
#include "ramagraph/expansion.hpp"
#include "ramagraph/spectral.hpp"

namespace ramagraph {

using json = nlohmann::json;

json element_json(const FieldElement& a);       // padded coefficient array
json poly_json(const Polynomial& p);            // coefficient array (nested for extensions)
json matrix_json(const ProjectiveMatrix& m);    // row-major element arrays

json params_json(const InstanceParams& p);
json graph_summary_json(const Graph& g);
json instance_summary_json(const Instance& inst);
json closure_json(const GroupClosure& g);       // id -> matrix table

json spectrum_json(const SpectrumReport& r);
json ramanujan_json(const RamanujanReport& r);
json neighbor_profile_json(const NeighborProfile& p);
json moore_json(const MooreReport& r);
json chebyshev_json(const ChebyshevReport& r);
json kahale_walk_json(const KahaleWalkReport& r);
json kahale_vertex_json(const KahaleVertexReport& r);
json tree_audit_json(const TreeAuditReport& r);

std::string spectrum_csv(const SpectrumReport& r);
std::string walk_series_csv(const WalkCounts& w);

} // namespace ramagraph
