#pragma once

#include <json.hpp>

#include "tlab/bounds.hpp"
#include "tlab/extremal.hpp"
#include "tlab/highdim.hpp"
#include "tlab/sampler.hpp"

namespace tlab {

using Json = nlohmann::ordered_json;

Json to_json(const BoundReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const ExtremalCertificate& c);
Json to_json(const OracleResult& r, double bound);
Json to_json(const BallMargins& m);
Json to_json(const PolydiscMargins& m);
Json to_json(const HighdimSweep& s);
Json to_json(const Check& c);

}  // namespace tlab
