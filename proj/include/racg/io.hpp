#pragma once

#include <string>

#include "racg/completion.hpp"
#include "racg/complex.hpp"
#include "racg/curvature.hpp"
#include "racg/generalize.hpp"
#include "racg/graph.hpp"
#include "racg/partite.hpp"

namespace racg {

/// Graph file: {"vertices":[names...], "edges":[[a,b]...]}. The file's
/// vertex order is the canonical generator order.
SimplicialGraph load_graph(const std::string& text);
std::string graph_to_json(const SimplicialGraph& g);

/// Complex file: {"graph":..., "base":id, "vertices":[ids],
/// "edges":[{"id","u","v","label"}], "squares":[[4 edge ids in cyclic
/// order]], "cubes":[{"labels","corners","edges"}]}. Ids may be sparse and
/// are preserved exactly.
CubeComplex load_complex(const std::string& text);
std::string complex_to_json(const CubeComplex& c);

/// Report file: {"status":"Finite"|"BudgetExhausted", "profile":[[v,e,c]...],
/// "complex":...}.
CompletionReport load_report(const std::string& text);
std::string report_to_json(const CompletionReport& r);

/// Partite file: the graph file fields plus {"base":..., "decomposition":
/// {name:[names...]}, "connector":"cycle"|"path", "k":n}.
PartiteGraph load_partite(const std::string& text);
std::string partite_to_json(const PartiteGraph& p);

std::string correspondence_to_json(const Correspondence& c);

std::string section_witness_to_json(const SectionWitness& w, const SimplicialGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace racg
