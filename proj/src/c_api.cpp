#include "scsort/scsort.h"

#include <new>
#include <optional>
#include <string>
#include <vector>

#include "scsort/constructions.hpp"
#include "scsort/error.hpp"
#include "scsort/fertility.hpp"
#include "scsort/machine.hpp"
#include "scsort/report_io.hpp"
#include "scsort/verify.hpp"

struct scs_perm_list {
  std::vector<std::string> items;
};

struct scs_trace {
  scsort::MachineTrace trace;
  std::string output;
  std::string text;
  std::string json;
};

struct scs_report {
  scsort::FertilityReport report;
  std::optional<scs_perm_list> list;
  std::string text;
  std::string json;
};

struct scs_spectrum {
  scsort::SpectrumTable table;
  std::optional<std::string> counts_csv, histogram_csv, json, text;
};

struct scs_claims {
  std::vector<scsort::ClaimResult> results;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

scs_status fail(scs_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body() and maps exceptions onto status codes.
template <class Body>
scs_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return SCS_OK;
  } catch (const scsort::InvalidInput& e) {
    return fail(SCS_ERR_INVALID_INPUT, e.what());
  } catch (const scsort::ResourceLimit& e) {
    return fail(SCS_ERR_RESOURCE_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SCS_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(SCS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SCS_ERR_INTERNAL, "unknown error");
  }
}

scsort::Pattern3 sigma_arg(const char* sigma) {
  if (!sigma) throw scsort::InvalidInput("sigma is null");
  return scsort::Pattern3::parse(sigma);
}

scsort::Permutation perm_arg(const char* perm) {
  if (!perm) throw scsort::InvalidInput("permutation is null");
  return scsort::Permutation::parse(perm);
}

scsort::EnumerationOptions options_from(unsigned flags) {
  scsort::EnumerationOptions o;
  o.use_pruning = (flags & SCS_NO_PRUNE) == 0;
  o.force = (flags & SCS_FORCE) != 0;
  return o;
}

scs_perm_list* to_list(const std::vector<scsort::Permutation>& ps) {
  auto* list = new scs_perm_list;
  list->items.reserve(ps.size());
  for (const auto& p : ps) list->items.push_back(p.to_string());
  return list;
}

std::vector<std::string> split_ids(const char* claims) {
  std::vector<std::string> ids;
  if (!claims) return ids;
  const std::string s(claims);
  if (s == "all") return ids;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string id = s.substr(start, end - start);
    if (id.empty()) throw scsort::InvalidInput("empty claim identifier in '" + s + "'");
    ids.push_back(std::move(id));
    start = end + 1;
  }
  return ids;
}

}  // namespace

extern "C" {

const char* scs_version(void) { return "1.0.0"; }

const char* scs_last_error(void) { return last_error.c_str(); }

const char* scs_status_name(scs_status status) {
  switch (status) {
    case SCS_OK: return "ok";
    case SCS_ERR_INVALID_INPUT: return "invalid input";
    case SCS_ERR_RESOURCE_LIMIT: return "resource limit";
    case SCS_ERR_NULL_ARGUMENT: return "null argument";
    case SCS_ERR_OUT_OF_RANGE: return "out of range";
    case SCS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

scs_status scs_perm_normalize(const char* perm, scs_perm_list** out) {
  if (!out) return fail(SCS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { *out = to_list({perm_arg(perm)}); });
}

scs_status scs_map(const char* sigma, const char* perm, scs_trace** out) {
  if (!out) return fail(SCS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] {
    auto trace = scsort::sc_trace(sigma_arg(sigma), perm_arg(perm));
    auto* h = new scs_trace{std::move(trace), {}, {}, {}};
    h->output = h->trace.output.to_string();
    h->text = scsort::serialize_trace(h->trace);
    h->json = scsort::trace_to_json(h->trace);
    *out = h;
  });
}

void scs_trace_free(scs_trace* trace) { delete trace; }

const char* scs_trace_output(const scs_trace* trace) { return trace ? trace->output.c_str() : ""; }

int scs_trace_cro(const scs_trace* trace) { return trace ? trace->trace.cro() : -1; }

size_t scs_trace_event_count(const scs_trace* trace) {
  return trace ? trace->trace.events.size() : 0;
}

scs_status scs_trace_event(const scs_trace* trace, size_t index, scs_event_kind* kind, int* value,
                           int* step) {
  if (!trace) return fail(SCS_ERR_NULL_ARGUMENT, "trace is null");
  if (index >= trace->trace.events.size()) {
    return fail(SCS_ERR_OUT_OF_RANGE, "event index " + std::to_string(index) + " out of range");
  }
  const auto& e = trace->trace.events[index];
  if (kind) {
    *kind = e.kind == scsort::EventKind::Push       ? SCS_EVENT_PUSH
            : e.kind == scsort::EventKind::SigmaPop ? SCS_EVENT_SIGMA_POP
                                                    : SCS_EVENT_DRAIN_POP;
  }
  if (value) *value = e.value;
  if (step) *step = e.step;
  return SCS_OK;
}

const char* scs_trace_text(const scs_trace* trace) { return trace ? trace->text.c_str() : ""; }

const char* scs_trace_json(const scs_trace* trace) { return trace ? trace->json.c_str() : ""; }

scs_status scs_trace_combination(const scs_trace* trace, int after_pops, int* entries, size_t cap,
                                 size_t* len) {
  if (!trace || !len) return fail(SCS_ERR_NULL_ARGUMENT, "trace or len is null");
  return guarded([&] {
    const auto view = scsort::combination_view(trace->trace, after_pops);
    *len = view.entries.size();
    if (view.entries.size() > cap || (!entries && !view.entries.empty())) {
      throw scsort::InvalidInput("buffer too small: need " + std::to_string(view.entries.size()));
    }
    std::copy(view.entries.begin(), view.entries.end(), entries);
  });
}

scs_status scs_fertility(const char* sigma, const char* perm, unsigned flags, scs_report** out) {
  if (!out) return fail(SCS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] {
    const auto s = sigma_arg(sigma);
    const auto p = perm_arg(perm);
    const auto options = options_from(flags);
    scsort::FertilityReport report{s, p, 0, std::nullopt};
    if (flags & SCS_WITH_LIST) {
      report = scsort::preimages(s, p, options);
    } else {
      report.count = scsort::fertility(s, p, options);
    }
    auto* h = new scs_report{std::move(report), std::nullopt, {}, {}};
    if (h->report.preimages) {
      h->list.emplace();
      for (const auto& t : *h->report.preimages) h->list->items.push_back(t.to_string());
    }
    h->text = scsort::report_to_text(h->report);
    h->json = scsort::report_to_json(h->report);
    *out = h;
  });
}

void scs_report_free(scs_report* report) { delete report; }

uint64_t scs_report_count(const scs_report* report) { return report ? report->report.count : 0; }

const scs_perm_list* scs_report_preimages(const scs_report* report) {
  return report && report->list ? &*report->list : nullptr;
}

const char* scs_report_text(const scs_report* report) { return report ? report->text.c_str() : ""; }

const char* scs_report_json(const scs_report* report) { return report ? report->json.c_str() : ""; }

void scs_perm_list_free(scs_perm_list* list) { delete list; }

size_t scs_perm_list_size(const scs_perm_list* list) { return list ? list->items.size() : 0; }

const char* scs_perm_list_at(const scs_perm_list* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return list->items[index].c_str();
}

scs_status scs_construct(const char* sigma, int n, scs_perm_list** out) {
  if (!out) return fail(SCS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { *out = to_list({scsort::construct(sigma_arg(sigma), n)}); });
}

scs_status scs_construct_preimages(const char* sigma, int n, scs_perm_list** out) {
  if (!out) return fail(SCS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { *out = to_list(scsort::construct_preimages(sigma_arg(sigma), n)); });
}

scs_status scs_small_witness(const char* sigma, int fertility, scs_perm_list** out) {
  if (!out) return fail(SCS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { *out = to_list({scsort::small_witness(sigma_arg(sigma), fertility)}); });
}

scs_status scs_family_min_n(const char* sigma, int* min_n) {
  if (!min_n) return fail(SCS_ERR_NULL_ARGUMENT, "min_n is null");
  return guarded([&] { *min_n = scsort::family(sigma_arg(sigma)).min_n; });
}

scs_status scs_spectrum_compute(const char* sigma, int n, unsigned flags, scs_spectrum** out) {
  if (!out) return fail(SCS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] {
    auto table = scsort::spectrum(sigma_arg(sigma), n, options_from(flags));
    *out = new scs_spectrum{std::move(table), {}, {}, {}, {}};
  });
}

void scs_spectrum_free(scs_spectrum* spectrum) { delete spectrum; }

uint64_t scs_spectrum_total(const scs_spectrum* spectrum) {
  return spectrum ? spectrum->table.total() : 0;
}

scs_status scs_spectrum_fertility_of(const scs_spectrum* spectrum, const char* perm,
                                     uint64_t* fertility) {
  if (!spectrum || !fertility) return fail(SCS_ERR_NULL_ARGUMENT, "spectrum or result is null");
  return guarded([&] { *fertility = spectrum->table.fertility_of(perm_arg(perm)); });
}

const char* scs_spectrum_counts_csv(scs_spectrum* spectrum) {
  if (!spectrum) return "";
  if (!spectrum->counts_csv) spectrum->counts_csv = scsort::spectrum_counts_csv(spectrum->table);
  return spectrum->counts_csv->c_str();
}

const char* scs_spectrum_histogram_csv(scs_spectrum* spectrum) {
  if (!spectrum) return "";
  if (!spectrum->histogram_csv) {
    spectrum->histogram_csv = scsort::spectrum_histogram_csv(spectrum->table);
  }
  return spectrum->histogram_csv->c_str();
}

const char* scs_spectrum_json(scs_spectrum* spectrum) {
  if (!spectrum) return "";
  if (!spectrum->json) spectrum->json = scsort::spectrum_to_json(spectrum->table);
  return spectrum->json->c_str();
}

const char* scs_spectrum_text(scs_spectrum* spectrum) {
  if (!spectrum) return "";
  if (!spectrum->text) spectrum->text = scsort::spectrum_to_text(spectrum->table);
  return spectrum->text->c_str();
}

scs_status scs_verify(int max_n, const char* claims, scs_claims** out) {
  if (!out) return fail(SCS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] {
    auto results = scsort::run_claims(max_n, split_ids(claims));
    auto* h = new scs_claims{std::move(results), {}, {}};
    h->text = scsort::claims_to_text(h->results);
    h->json = scsort::claims_to_json(h->results);
    *out = h;
  });
}

void scs_claims_free(scs_claims* claims) { delete claims; }

size_t scs_claims_size(const scs_claims* claims) { return claims ? claims->results.size() : 0; }

const char* scs_claims_id(const scs_claims* claims, size_t index) {
  if (!claims || index >= claims->results.size()) return nullptr;
  return claims->results[index].claim_id.c_str();
}

int scs_claims_passed(const scs_claims* claims, size_t index) {
  if (!claims || index >= claims->results.size()) return 0;
  return claims->results[index].passed ? 1 : 0;
}

int scs_claims_all_passed(const scs_claims* claims) {
  return claims && scsort::all_passed(claims->results) ? 1 : 0;
}

const char* scs_claims_text(const scs_claims* claims) { return claims ? claims->text.c_str() : ""; }

const char* scs_claims_json(const scs_claims* claims) { return claims ? claims->json.c_str() : ""; }

const char* scs_claim_ids(void) {
  static const std::string joined = [] {
    std::string s;
    for (const auto& id : scsort::claim_ids()) {
      if (!s.empty()) s += ',';
      s += id;
    }
    return s;
  }();
  return joined.c_str();
}

}  // extern "C"
