#include "scsort/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace scsort {

namespace {

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::Push: return "push";
    case EventKind::SigmaPop: return "sigma_pop";
    case EventKind::DrainPop: return "drain_pop";
  }
  return "?";
}

// Calls fn(perm, fertility) for every permutation of S_n in lexicographic
// order, which is also rank order.
template <class Fn>
void for_each_count(const SpectrumTable& table, Fn&& fn) {
  std::vector<int> v(table.n());
  std::iota(v.begin(), v.end(), 1);
  std::uint64_t r = 0;
  const auto& counts = table.counts_by_rank();
  do {
    fn(Permutation(v), counts[r++]);
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

std::string trace_to_json(const MachineTrace& trace) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : trace.events) {
    events.push_back({{"kind", kind_name(e.kind)}, {"value", e.value}, {"step", e.step}});
  }
  nlohmann::json j = {{"sigma", trace.sigma.to_string()},
                      {"input", trace.input.to_string()},
                      {"output", trace.output.to_string()},
                      {"cro", trace.cro()},
                      {"events", std::move(events)}};
  return j.dump(2) + "\n";
}

std::string report_to_text(const FertilityReport& report) {
  std::string out = std::to_string(report.count) + "\n";
  if (report.preimages) {
    for (const auto& p : *report.preimages) out += p.to_string() + "\n";
  }
  return out;
}

std::string report_to_json(const FertilityReport& report) {
  nlohmann::json j = {{"sigma", report.sigma.to_string()},
                      {"target", report.target.to_string()},
                      {"count", report.count},
                      {"preimages", nullptr}};
  if (report.preimages) {
    auto list = nlohmann::json::array();
    for (const auto& p : *report.preimages) list.push_back(p.to_string());
    j["preimages"] = std::move(list);
  }
  return j.dump(2) + "\n";
}

std::string spectrum_counts_csv(const SpectrumTable& table) {
  std::string out = "permutation,fertility\n";
  for_each_count(table, [&](const Permutation& p, std::uint32_t f) {
    out += p.to_string();
    out += ',';
    out += std::to_string(f);
    out += '\n';
  });
  return out;
}

std::string spectrum_histogram_csv(const SpectrumTable& table) {
  std::string out = "fertility,count\n";
  for (const auto& [f, c] : table.histogram()) {
    out += std::to_string(f) + "," + std::to_string(c) + "\n";
  }
  return out;
}

std::string spectrum_to_json(const SpectrumTable& table) {
  auto counts = nlohmann::json::array();
  for_each_count(table, [&](const Permutation& p, std::uint32_t f) {
    counts.push_back({{"permutation", p.to_string()}, {"fertility", f}});
  });
  auto histogram = nlohmann::json::array();
  for (const auto& [f, c] : table.histogram()) {
    histogram.push_back({{"fertility", f}, {"count", c}});
  }
  nlohmann::json j = {{"sigma", table.sigma().to_string()},
                      {"n", table.n()},
                      {"counts", std::move(counts)},
                      {"histogram", std::move(histogram)}};
  return j.dump(2) + "\n";
}

std::string spectrum_to_text(const SpectrumTable& table) {
  std::ostringstream os;
  os << "SC_" << table.sigma() << " on S_" << table.n() << " (" << table.total()
     << " permutations)\n";
  os << std::setw(10) << "fertility" << std::setw(12) << "count" << "\n";
  for (const auto& [f, c] : table.histogram()) {
    os << std::setw(10) << f << std::setw(12) << c << "\n";
  }
  return os.str();
}

std::string claims_to_text(const std::vector<ClaimResult>& results) {
  std::size_t id_width = 8;
  for (const auto& r : results) id_width = std::max(id_width, r.claim_id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(id_width) + 2) << "claim" << std::setw(8)
     << "status" << "scope\n";
  for (const auto& r : results) {
    os << std::left << std::setw(static_cast<int>(id_width) + 2) << r.claim_id << std::setw(8)
       << (r.passed ? "pass" : "FAIL") << r.scope << "\n";
    if (r.counterexample) os << "    counterexample: " << *r.counterexample << "\n";
  }
  const auto passed = std::count_if(results.begin(), results.end(),
                                    [](const ClaimResult& r) { return r.passed; });
  os << passed << "/" << results.size() << " claims passed\n";
  return os.str();
}

std::string claims_to_json(const std::vector<ClaimResult>& results) {
  auto arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j = {{"claim_id", r.claim_id},
                        {"scope", r.scope},
                        {"status", r.passed ? "pass" : "fail"},
                        {"counterexample", nullptr}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace scsort
