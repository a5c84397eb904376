#pragma once

// JSON views of the engine's inputs and reports. Key order is fixed so that
// identical inputs give byte-identical documents.

#include <json.hpp>

#include "flagflux/correspond.hpp"
#include "flagflux/gcs.hpp"
#include "flagflux/nilradical.hpp"
#include "flagflux/rootsys.hpp"
#include "flagflux/tduality.hpp"

namespace flagflux {

using Json = nlohmann::ordered_json;

/// {"series":"A","rank":5,"theta":[1,3,5]}; throws ParseError on a
/// malformed object.
FlagSpec flag_spec_from_json(const Json& j);
Json to_json(const FlagSpec& spec);

/// {"algebra":"(0,0,-e^{12})","ideal":[3],"flux":"e^{123}"} with an
/// optional "dim" for tuples listing only trailing entries.
AdmissibleTriple triple_from_json(const Json& j);
Json to_json(const AdmissibleTriple& triple);

/// {"kind":"complex","sign":1} or {"kind":"noncomplex","a":"1","x":"2","y":"1"}.
GcsBlock block_from_json(const Json& j);
Json to_json(const GcsBlock& block);

Json to_json(const BasisChange& change);
Json to_json(const RootSystem& roots);
Json to_json(const Nilradical& nil);
Json to_json(const AdmissibilityReport& report);
Json to_json(const CertificateReport& report);
Json to_json(const DualizationResult& result);
Json to_json(const TargetCandidate& target);
Json to_json(const CorrespondenceResult& result);
Json to_json(const SelfDualReport& report);

}  // namespace flagflux
