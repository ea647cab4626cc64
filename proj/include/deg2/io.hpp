#ifndef DEG2_IO_HPP_
#define DEG2_IO_HPP_

#include <string>
#include <vector>

#include "deg2/decomposition.hpp"
#include "deg2/gain.hpp"
#include "deg2/graph.hpp"
#include "deg2/pfun.hpp"
#include "deg2/rees.hpp"
#include "deg2/semigroup.hpp"

namespace deg2 {

// All emitters produce canonical JSON: compact, alphabetically ordered keys,
// a top-level "schema": 1, and a trailing newline, so identical inputs give
// byte-identical files.

// Graphs load from JSON {"n":…,"edges":[[u,v],…]} or plain text ("n" header
// line, then one "u v" line per edge), sniffed by the first non-space byte.
SimpleGraph load_graph(std::string const& path);
std::string graph_json(SimpleGraph const& g);
std::string graph_dot(SimpleGraph const& g);
void save_graph(SimpleGraph const& g, std::string const& path);

// Group lookup by name: "1"/"trivial", "Zn", "Sn".
FiniteGroup group_by_name(std::string const& name);

// Rees matrices: {"group":"Z2","A":2,"B":2,"C":[["1","1"],["1","-1"]]} with
// "0" for the zero entry and group element names elsewhere.
ReesMatrixSemigroup load_rees(std::string const& path);
std::string rees_json(ReesMatrixSemigroup const& s);

// Gain graphs: {"group":…,"n":…,"edges":[[tail,head],…],"labels":{"0":"-1"}}.
// Absent edge ids label as the identity; the emitter writes every label.
GainGraph load_gain(std::string const& path);
std::string gain_json(GainGraph const& g);
// Oriented DOT; non-identity labels are colored.
std::string gain_dot(GainGraph const& g);
void save_gain(GainGraph const& g, std::string const& path);

// One partial function: {"dom_size":…,"cod_size":…,"table":[0,null,…]}.
PartialFunction load_pfun(std::string const& path);
std::string pfun_json(PartialFunction const& f);

// Generator files for closures: {"n":…,"maps":[[0,null,…],…]}, each map a
// partial self-map table on n points.
std::vector<PartialFunction> load_gens(std::string const& path);
std::string gens_json(std::vector<PartialFunction> const& maps, int n);

// One-based command-line map syntax "1>3,2>3" (empty string = empty map).
PartialFunction parse_map(std::string const& spec, int dom_size, int cod_size);

// Elements, Green class counts and sizes, depth, aperiodicity.
std::string semigroup_report_json(TransformationSemigroup const& ts);

std::string trivcov_json(TrivcovReport const& report);

// The full decomposition certificate with embedded element tables, so an
// external checker can re-verify the covering conditions and injectivity
// without re-running the enumeration.
std::string certificate_json(Certificate const& cert);

std::string read_file(std::string const& path);
void write_file(std::string const& path, std::string const& content);

}  // namespace deg2

#endif  // DEG2_IO_HPP_
