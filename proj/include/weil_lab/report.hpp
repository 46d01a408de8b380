#ifndef WEIL_LAB_REPORT_HPP
#define WEIL_LAB_REPORT_HPP

#include "weil_lab/brauer.hpp"
#include "weil_lab/category.hpp"
#include "weil_lab/lsearch.hpp"

#include <nlohmann/json.hpp>

// JSON serialization for reports. All rationals are "num/den" strings,
// all big integers decimal strings, keys in insertion order so that a
// run's output is byte-identical across repetitions and parallelism.

namespace weil_lab::report {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

std::string rat_str(const Rational& q);
std::string int_str(const Integer& z);

json field_json(const cyclotomic::CyclotomicField& K);
json splitting_json(const cyclotomic::PrimeSplitting& sp);
json element_json(const cyclotomic::RingElement& x);
json slope_json(const weil::SlopeVector& s);
json weil_json(const weil::WeilElement& w);
json profile_json(const brauer::InvariantProfile& p);
json candidate_json(const lsearch::Candidate& c);
json probe_json(const lsearch::ProbeReport& r);
json motive_json(const category::MotiveObject& X);

// Envelope: schema_version, command, config echo, results.
json make_report(const std::string& command, json config, json results);

// Serialize with a fixed layout (2-space indent, trailing newline).
std::string to_text(const json& j);

} // namespace weil_lab::report

#endif
