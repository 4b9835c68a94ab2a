#ifndef HARDYHILBERT_IO_HPP
#define HARDYHILBERT_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hardyhilbert/bmoa.hpp"
#include "hardyhilbert/hardyspace.hpp"
#include "hardyhilbert/inequalities.hpp"
#include "hardyhilbert/seqspace.hpp"

namespace hh::io {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

/// Sequence CSV: header `index,value`, one row per coefficient from index 0.
XSequence read_sequence_csv(std::istream& in);
void write_sequence_csv(std::ostream& out, const XSequence& c);

/// Trace CSV: the exported XSequence (c_0 := c_1) with an extra `choice`
/// column, `power` or `harmonic`. Row 0 repeats the choice of c_1.
void write_trace_csv(std::ostream& out, const SlowDecayTrace& t);

/// Polynomial CSV: header `index,re,im`. Missing indices are zero.
AnalyticPoly read_polynomial_csv(std::istream& in);
void write_polynomial_csv(std::ostream& out, const AnalyticPoly& f);

nlohmann::json to_json(const DecayCertificate& c);
nlohmann::json to_json(const InfinitudeReport& r);
nlohmann::json to_json(const RieszFactors& f);
nlohmann::json to_json(const CarlesonReport& r);
nlohmann::json to_json(const BoundednessVerdict& v);
nlohmann::json to_json(const KConstantEstimate& k);
nlohmann::json to_json(const EquivalenceReport& r);
nlohmann::json to_json(const BestConstantScan& s);
nlohmann::json to_json(const DegreeBoundCheck& d);
nlohmann::json coeffs_json(const AnalyticPoly& f);

}  // namespace hh::io

#endif  // HARDYHILBERT_IO_HPP
