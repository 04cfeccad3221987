#pragma once

#include <string>
#include <vector>

#include "hamming/euclid.hpp"
#include "hamming/growth.hpp"
#include "hamming/young.hpp"

namespace hamming {

// Zero-set specs accepted anywhere a diagram is expected:
//   "3,2,1"            row lengths, bottom first
//   "rect:AxB"         rectangle
//   "tri:T"            triangle with threshold T
//   "lshape:a,b,c,d"   R_{a+b,c} union R_{a,c+d}
//   "empty"            the empty diagram
//   '{"rows":[3,2,1]}' JSON form
//   "@path"            file containing any of the above on one line
YoungDiagram parse_zero_spec(const std::string& spec);

// Point-set text format: optional "# box N M" header, then "u v" lines.
// JSON alternative {"box":[N,M],"points":[[u,v],...]}. Without a header the
// box is the bounding rectangle of the points.
PointSet parse_pointset_text(const std::string& text);
std::string pointset_to_text(const PointSet& a);

std::string diagram_to_json(const YoungDiagram& z);
std::string pointset_to_json(const PointSet& a);

// Euclidean shape specs:
//   "rect:AxB" (rational sides), "lshape:A", "rost", "vershik:R",
//   "staircase:x1,y1;x2,y2;..."
EuclideanZeroSet parse_euclid_spec(const std::string& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hamming
