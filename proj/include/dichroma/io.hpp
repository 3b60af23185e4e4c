#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dichroma/exact.hpp"
#include "dichroma/products.hpp"
#include "dichroma/treewidth.hpp"

namespace dichroma {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Digraph text format: "n m" then m lines "u v", 0-indexed. The undirected
// format is identical with a leading "u" sentinel on the header line.
// Duplicate and loop lines are parse errors.
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);
Digraph read_digraph_file(const std::string& path);
void write_digraph_file(const std::string& path, const Digraph& d);

UndirectedGraph read_undirected(std::istream& in);
void write_undirected(std::ostream& out, const UndirectedGraph& g);
UndirectedGraph read_undirected_file(const std::string& path);
void write_undirected_file(const std::string& path, const UndirectedGraph& g);

/// True if the file starts with the undirected sentinel.
bool file_is_undirected(const std::string& path);

// PACE-style decomposition: "s td <#bags> <width+1> <n>", bag lines
// "b <id> <v...>" (ids 1-based, vertices 0-based as in the graph files), then
// tree edges "<id> <id>".
TreeDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const TreeDecomposition& td, int n);
TreeDecomposition read_decomposition_file(const std::string& path);
void write_decomposition_file(const std::string& path, const TreeDecomposition& td, int n);

// Nice decompositions travel as the PACE file plus a kinds sidecar JSON
// ({"root":r,"kinds":[{"kind":...,"vertex":...},...]} aligned with bag ids).
void write_nice_files(const std::string& td_path, const std::string& kinds_path,
                      const NiceTreeDecomposition& nd, int n);
NiceTreeDecomposition read_nice_files(const std::string& td_path, const std::string& kinds_path);

// Certificate JSON: {"k": int, "colors": [int...], "class_orders": [[int...]...]}.
std::string certificate_to_json(const ColoringCertificate& cert);
ColoringCertificate certificate_from_json(const std::string& text);
ColoringCertificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const ColoringCertificate& cert);

std::string product_index_to_json(const ProductIndex& index);
ProductIndex product_index_from_json(const std::string& text);

}  // namespace dichroma
