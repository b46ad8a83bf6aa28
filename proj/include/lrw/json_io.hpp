#pragma once

#include <map>

#include <json.hpp>

#include "lrw/classical.hpp"
#include "lrw/fermionic.hpp"
#include "lrw/looproot.hpp"
#include "lrw/schur.hpp"
#include "lrw/tableaux.hpp"

namespace lrw {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const DominantWeight& w);
json to_json(const RootLatticeElement& r);

/// {"basis": ..., "terms": [{"partition": [...], "coeff": c}, ...]} with terms
/// in descending lexicographic order of partitions.
json to_json(const Expansion& e);

/// Terms ordered by size, then descending lexicographically.
json to_json(const WDecomposition& w);

json to_json(const SkewTableau& t);

json fermionic_to_json(const LieSpec& spec, const FactorList& factors,
                       const std::map<DominantWeight, coeff_t>& decomposition);

/// Root in simple-root coordinates together with its fundamental-weight
/// coordinates.
json root_to_json(const LieSpec& spec, const RootLatticeElement& root);
json to_json(const BetaSet& betas);
json to_json(const CommuteReport& report);

/// Ordering used for decomposition output: size, then descending lexicographic.
bool output_order(const Partition& a, const Partition& b);

}  // namespace lrw
