#pragma once

// JSON views of the result types.  Non-finite doubles are written as the
// strings "inf", "-inf" or "nan"; big naturals as decimal strings.

#include <json.hpp>

#include "uncomp/diophantine.hpp"
#include "uncomp/enumeration.hpp"
#include "uncomp/integrals.hpp"
#include "uncomp/limits.hpp"
#include "uncomp/predictor.hpp"

namespace uncomp {

using Json = nlohmann::ordered_json;

Json number(double x);
Json to_json(const Interval& iv);
Json to_json(const RunResult& r);
Json to_json(const MonteCarloResult& m);
Json to_json(const Dyadic& d);
Json to_json(const EnumerationReport& r, bool include_programs = false);
Json to_json(const OmegaBounds& b);
Json to_json(const SigmaTable& t, std::optional<unsigned> c);
Json to_json(const PredictorResult& p);
Json to_json(const SlowdownReport& r);
Json to_json(const DivergenceCertificate& c);
Json to_json(const RootVerdict& v);
Json to_json(const ConvergenceVerdict& v);
Json to_json(const EvalOutcome& o);
Json to_json(const SearchOutcome& s);
Json to_json(const DiophantineFamily& f, const CountProfile& p);
Json to_json(const LimitsReport& r);

}  // namespace uncomp
