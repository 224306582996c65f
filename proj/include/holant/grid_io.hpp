#pragma once

#include <iosfwd>
#include <map>

#include "holant/fkt.hpp"
#include "holant/grid.hpp"

namespace holant {

/// Parsed grid file. Vertices declared with the placeholder signature "_"
/// get an Exact-One signature of their used arity, which makes
/// brute_holant equal the weighted perfect-matching count of the graph.
struct GridFile {
    SignatureGrid grid;
    std::vector<std::string> externals;  // matchgate external node ids, in order
    std::map<std::string, int> vertex_index;
};

GridFile parse_grid(std::istream& in);
GridFile parse_grid_string(const std::string& text);
GridFile parse_grid_file(const std::string& path);

std::string write_grid(const SignatureGrid& grid, const std::vector<std::string>& externals = {});

/// Graph view for matching-based algorithms: vertices, weighted edges and
/// the rotation system; signatures are ignored. Requires rotations.
WeightedPlanarGraph graph_view(const SignatureGrid& grid);

}  // namespace holant
