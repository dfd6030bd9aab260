#pragma once

#include <string>
#include <vector>

#include "scsort/fertility.hpp"
#include "scsort/machine.hpp"
#include "scsort/verify.hpp"

namespace scsort {

// {"sigma","input","output","cro","events":[{"kind","value","step"}]}
std::string trace_to_json(const MachineTrace& trace);

// Count line, then one preimage per line when the list is present.
std::string report_to_text(const FertilityReport& report);
// {"sigma","target","count","preimages"}; preimages is null without a list.
std::string report_to_json(const FertilityReport& report);

// `permutation,fertility` rows in lexicographic order.
std::string spectrum_counts_csv(const SpectrumTable& table);
// `fertility,count` rows in increasing fertility.
std::string spectrum_histogram_csv(const SpectrumTable& table);
// {"sigma","n","counts":[{"permutation","fertility"}],"histogram":[{"fertility","count"}]}
std::string spectrum_to_json(const SpectrumTable& table);
// Human-readable summary: header line and the histogram.
std::string spectrum_to_text(const SpectrumTable& table);

std::string claims_to_text(const std::vector<ClaimResult>& results);
// Array of {"claim_id","scope","status","counterexample"}.
std::string claims_to_json(const std::vector<ClaimResult>& results);

}  // namespace scsort
