#pragma once

// CSV and JSON encodings of the report types. JSON big integers are strings.

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "amod/adele.hpp"
#include "amod/classnum.hpp"
#include "amod/ecred.hpp"
#include "amod/experiments.hpp"
#include "amod/report.hpp"

namespace amod {

using Json = nlohmann::ordered_json;

// {window:{lo,hi}, entries:[{prime, residue|null, flag}], provenance}
Json to_json(const TruncatedAdele& a);
TruncatedAdele adele_from_json(const Json& j);

// prime,residue,flag with flag in {ok, bad}; residue empty when bad.
void write_csv(std::ostream& out, const TruncatedAdele& a);
TruncatedAdele adele_from_csv(std::istream& in, std::string provenance = "csv");

// Reads either encoding (JSON if the first non-space byte is '{').
TruncatedAdele load_adele(const std::string& path);

// q,p,ord,index,lhs,rhs,verdict,skip_reason
void write_csv(std::ostream& out, const CongruenceSweep& s);
Json to_json(const CongruenceSweep& s);

// p,ap,theta,flag over every window prime; bad-reduction primes have empty ap/theta.
void write_trace_csv(std::ostream& out, const ShortWeierstrassCurve& E, PrimeWindow window,
                     const std::vector<TraceRecord>& traces);
Json to_json(const SatoTateHistogram& h);
void write_csv(std::ostream& out, const SatoTateHistogram& h);

Json to_json(const RelationScanReport& r);
Json to_json(const BivariateScanReport& r);
Json to_json(const CriterionAuditReport& r);
Json to_json(const EquidistReport& r);
Json to_json(const PhiEllReport& r);

}  // namespace amod
