#pragma once

#include "json.hpp"
#include "wildgoppa/codes.hpp"
#include "wildgoppa/cyclotomic.hpp"
#include "wildgoppa/evidence.hpp"
#include "wildgoppa/identities.hpp"

namespace wildgoppa {

using Json = nlohmann::ordered_json;

/// {field:{p,a,m}, n, k, generator:[[int]]}
Json code_to_json(const LinearCode& c);
/// Inverse of code_to_json; InputError on malformed records.
LinearCode code_from_json(const Json& j);

/// {q,m,t,exponents,dims,equal,gap,r}
Json report_to_json(const IdentityReport& r);
IdentityReport report_from_json(const Json& j);

Json to_json(const RsEquivalence& r);
Json to_json(const CofactorReport& r);
Json to_json(const DimensionValue& v);
Json to_json(const ClassDecomposition& d);
Json to_json(const KReport& r);
Json to_json(const StartKey& k);
Json to_json(const Decomposition& d);
Json to_json(const DualReformulation& d);

}  // namespace wildgoppa
