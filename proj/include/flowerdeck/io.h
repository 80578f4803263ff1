// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_IO_H_
#define FLOWERDECK_IO_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "flowerdeck/abstract.h"
#include "flowerdeck/connsys.h"
#include "flowerdeck/profiles.h"
#include "flowerdeck/pseudoflower.h"

namespace fd::io {

using nlohmann::json;

// A connsys-v1 document. Table entries list sets containing the first element
// and symmetry fills in their complements; with "strict": true the entries are
// taken as the raw table, left for verify to cross-check. Unlisted sets take
// "default".
ConnectivitySystem parse_connsys(const json& doc);
ConnectivitySystem load_connsys(const std::string& path);

// Labels that read as plain integers are written back as numbers.
json label_json(const std::string& label);
std::string label_from_json(const json& j);
json side_json(const GroundSet& ground, Mask side);
Mask side_from_json(const GroundSet& ground, const json& labels);
json order_json(Order o);

json profile_json(const GroundSet& ground, const Profile& p);

// {"k":K,"petals":[[labels]],"order":[indices]}; a bare array of petals is
// accepted too, with `k` supplied and the identity order.
Pseudoflower parse_pseudoflower(const ConnectivitySystem& sys, const json& doc, int k);
json pseudoflower_json(const Pseudoflower& f);

// {"ring":[items]} with integer items.
CyclicOrder parse_cyclic_order(const json& doc);

json abstract_json(const AbstractSystem& asys, const AbstractTree& tree);

// Inline JSON when the text starts with '[' or '{', otherwise a file path.
json read_json_arg(const std::string& text);

}  // namespace fd::io

#endif  // FLOWERDECK_IO_H_
