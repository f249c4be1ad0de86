#pragma once

#include "oag/verdict.hpp"

#include <json.hpp>

namespace oag {

using Json = nlohmann::ordered_json;

Json rational_json(const Q& q);
Json qvec_json(const QVec& v);
Json zvec_json(const ZVec& v);
Json element_json(const Ambient& amb, const GroupElement& x);
Json profile_json(const Ambient& amb, const CutProfile& p);
Json verdict_json(const Scene& scene, const Verdict& v);
Json blocks_json(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& D,
                 const BlockDecomposition& d);
Json normalize_json(const Ambient& amb, const NormalizeResult& r, const std::vector<PropertyCheck>& checks);
Json extensions_json(const Ambient& amb, const SpaceDescriptor& sd);
Json scene_summary_json(const Scene& scene);

std::string verdict_text(const Scene& scene, const Verdict& v);

}
