#pragma once

#include <string>

#include "json.hpp"

#include "casimir/decomposition.hpp"
#include "casimir/split_casimir.hpp"
#include "casimir/workbench.hpp"

namespace casimir {

using Json = nlohmann::ordered_json;

// {"algebra":"sl4","dim":15,"f":[[a,b,c,"p/q"],...],"g":[["p/q",...],...]}
// Indices are 0-based.
Json structure_json(const std::string& name, const StructureConstants& f,
                    const KillingMetric& metric);

// [[i1,i2,j1,j2,"p/q"],...]
Json casimir_tensor_json(const SplitCasimir& C);

Json trace_table_json(const TraceTableReport& rep);
Json decomposition_json(const DecompositionReport& rep);
Json verify_all_json(const VerifyAllReport& rep);

// [{"label":"B","n":5,"lambda":"-3/2+a","mult":3,"dim":"table2|poly|none"},...]
// With a Vogel point, lambda is evaluated to "p/q".
Json catalog_json(const Catalog& catalog, int n, Scope scope,
                  const VogelPoint* point);

std::string render(const Json& j, const std::string& format);
void write_output(const Json& j, const std::string& out,
                  const std::string& format);

}  // namespace casimir
