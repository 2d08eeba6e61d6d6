// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCUBE_IO_H_
#define MCUBE_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "mcube/cryptomorph.h"
#include "mcube/matricube.h"
#include "mcube/matroid.h"
#include "mcube/permarray.h"
#include "mcube/polynomial.h"
#include "mcube/represent.h"

namespace mcube {

using Json = nlohmann::ordered_json;

// Readers are strict: missing keys, unknown keys and wrong types all throw
// InvalidInput.

// Throws InvalidInput on malformed text.
Json parse_json(const std::string& text);
// Compact, one line, no trailing newline.
std::string dump(const Json& j);

// "1,2,3". Throws InvalidInput.
std::vector<int> parse_int_list(const std::string& text);

Json serialize(const Width& w);
Json serialize(const Point& p);

// {"width":[...],"rank":[...]} in canonical order.
Json serialize(const RankTable& t);
Json serialize(const Matricube& m);
RankTable rank_table_from_json(const Json& j);
// Throws AxiomError when the table is not a rank function.
Matricube matricube_from_json(const Json& j);

// {"width":[...],"points":[[...],...]} in canonical order.
Json serialize(const PointSet& s);
PointSet point_set_from_json(const Json& j);

// {"terms":[[dx,dy,c],...]}; c is a string when it does not fit in 64 bits.
Json serialize(const TwoVarPolynomial& p);
TwoVarPolynomial polynomial_from_json(const Json& j);

// Rational entries are strings "p/q" or "n"; integers are accepted on input.
Json serialize(const CubicalMatrix& c);
CubicalMatrix cubical_matrix_from_json(const Json& j);

// {"ground":[...],"rank":[...]}.
Json serialize(const SetFunction& f);
Matroid matroid_from_json(const Json& j);
Polymatroid polymatroid_from_json(const Json& j);

// {"width":[...],"matroids":{"<canonical index>":Matroid,...}}.
Json serialize(const CoherentComplex& cc);
CoherentComplex coherent_from_json(const Json& j);

// {"ground":[...],"constituents":[[rank table of M_0],...]}.
Json serialize(const FlagMatroid& f);
FlagMatroid flag_matroid_from_json(const Json& j);

// {"r":r,"d":d,"dots":[[...],...]} in canonical order.
Json serialize(const DotArray& p);
DotArray dot_array_from_json(const Json& j);

// Rows from the last value of the second axis down to 0, first axis left to
// right; three-dimensional tables print one block per third coordinate.
// Throws InvalidInput above three dimensions.
std::string render_grid(const RankTable& t);
// Members as '*', others as '.'.
std::string render_grid(const PointSet& s);

}  // namespace mcube

#endif  // MCUBE_IO_H_
