// scsort: command-line front end over the C interface.
//
//   scsort map --sigma 213 --perm 52413 [--trace] [--cro]
//   scsort fertility --sigma 213 --perm 1243 [--list] [--no-prune] [--force]
//   scsort preimages --sigma 123 --perm 3214
//   scsort construct --sigma 123 --n 3 [--preimages]
//   scsort construct --sigma 213 --witness 3
//   scsort spectrum --sigma 213 --n 5 [--out table.csv]
//   scsort verify [--max-n 7] [--claims all]
//
// Exit status: 0 success, 1 a verification claim failed, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "scsort/scsort.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using TracePtr = std::unique_ptr<scs_trace, Deleter<scs_trace, scs_trace_free>>;
using ReportPtr = std::unique_ptr<scs_report, Deleter<scs_report, scs_report_free>>;
using ListPtr = std::unique_ptr<scs_perm_list, Deleter<scs_perm_list, scs_perm_list_free>>;
using SpectrumPtr = std::unique_ptr<scs_spectrum, Deleter<scs_spectrum, scs_spectrum_free>>;
using ClaimsPtr = std::unique_ptr<scs_claims, Deleter<scs_claims, scs_claims_free>>;

void check(scs_status status, const std::string& context) {
  if (status != SCS_OK) throw UsageError(context + ": " + scs_last_error());
}

struct Options {
  std::string sigma;
  std::string perm;
  int n = 0;
  int witness = 0;
  int max_n = 7;
  std::string claims = "all";
  std::string format;
  std::string out;
  bool list = false;
  bool preimages = false;
  bool trace = false;
  bool cro = false;
  bool no_prune = false;
  bool force = false;
};

// Writes to --out when given, stdout otherwise.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw UsageError("--out: cannot open '" + opt.out + "' for writing");
  f << text;
}

unsigned flags_of(const Options& opt) {
  unsigned flags = 0;
  if (opt.no_prune) flags |= SCS_NO_PRUNE;
  if (opt.force) flags |= SCS_FORCE;
  return flags;
}

std::vector<std::string> items(const scs_perm_list* list) {
  std::vector<std::string> v;
  for (size_t i = 0; i < scs_perm_list_size(list); ++i) v.emplace_back(scs_perm_list_at(list, i));
  return v;
}

int run_map(const Options& opt) {
  scs_trace* raw = nullptr;
  check(scs_map(opt.sigma.c_str(), opt.perm.c_str(), &raw), "--sigma/--perm");
  TracePtr trace(raw);
  if (opt.format == "json") {
    emit(opt, scs_trace_json(trace.get()));
  } else if (opt.trace) {
    emit(opt, scs_trace_text(trace.get()));
  } else {
    std::string text = std::string(scs_trace_output(trace.get())) + "\n";
    if (opt.cro) text += "CRO " + std::to_string(scs_trace_cro(trace.get())) + "\n";
    emit(opt, text);
  }
  return kExitOk;
}

int run_fertility(const Options& opt, bool with_list) {
  unsigned flags = flags_of(opt);
  if (with_list) flags |= SCS_WITH_LIST;
  scs_report* raw = nullptr;
  check(scs_fertility(opt.sigma.c_str(), opt.perm.c_str(), flags, &raw), "--sigma/--perm");
  ReportPtr report(raw);
  emit(opt, opt.format == "json" ? scs_report_json(report.get()) : scs_report_text(report.get()));
  return kExitOk;
}

int run_construct(const Options& opt) {
  scs_perm_list* raw = nullptr;
  if (opt.witness > 0) {
    check(scs_small_witness(opt.sigma.c_str(), opt.witness, &raw), "--witness");
  } else {
    check(scs_construct(opt.sigma.c_str(), opt.n, &raw), "--n");
  }
  ListPtr target(raw);
  std::vector<std::string> pre;
  if (opt.preimages) {
    if (opt.witness > 0) {
      scs_report* rep = nullptr;
      check(scs_fertility(opt.sigma.c_str(), scs_perm_list_at(target.get(), 0), SCS_WITH_LIST, &rep),
            "--witness");
      ReportPtr report(rep);
      pre = items(scs_report_preimages(report.get()));
    } else {
      scs_perm_list* lraw = nullptr;
      check(scs_construct_preimages(opt.sigma.c_str(), opt.n, &lraw), "--n");
      ListPtr list(lraw);
      pre = items(list.get());
    }
  }
  const std::string t = scs_perm_list_at(target.get(), 0);
  if (opt.format == "json") {
    nlohmann::json j = {{"sigma", opt.sigma}, {"target", t}};
    if (opt.witness > 0) {
      j["fertility"] = opt.witness;
    } else {
      j["n"] = opt.n;
    }
    if (opt.preimages) j["preimages"] = pre;
    emit(opt, j.dump(2) + "\n");
    return kExitOk;
  }
  std::string text = t + "\n";
  for (const auto& p : pre) text += p + "\n";
  emit(opt, text);
  return kExitOk;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_spectrum(const Options& opt) {
  scs_spectrum* raw = nullptr;
  check(scs_spectrum_compute(opt.sigma.c_str(), opt.n, flags_of(opt), &raw), "--n");
  SpectrumPtr table(raw);

  std::string format = opt.format;
  if (format.empty()) {
    format = ends_with(opt.out, ".csv") ? "csv" : ends_with(opt.out, ".json") ? "json" : "text";
  }
  if (format == "json") {
    emit(opt, scs_spectrum_json(table.get()));
  } else if (format == "text") {
    emit(opt, scs_spectrum_text(table.get()));
  } else if (opt.out.empty()) {
    std::cout << scs_spectrum_counts_csv(table.get()) << "\n"
              << scs_spectrum_histogram_csv(table.get());
  } else {
    // Histogram goes to a companion file next to the counts file.
    emit(opt, scs_spectrum_counts_csv(table.get()));
    std::filesystem::path companion(opt.out);
    companion.replace_extension(".histogram.csv");
    Options hist = opt;
    hist.out = companion.string();
    emit(hist, scs_spectrum_histogram_csv(table.get()));
  }
  return kExitOk;
}

int run_verify(const Options& opt) {
  scs_claims* raw = nullptr;
  check(scs_verify(opt.max_n, opt.claims.c_str(), &raw), "--max-n/--claims");
  ClaimsPtr claims(raw);
  emit(opt, opt.format == "json" ? scs_claims_json(claims.get()) : scs_claims_text(claims.get()));
  return scs_claims_all_passed(claims.get()) ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consecutive-pattern-avoiding stack-sorting maps SC_sigma"};
  app.require_subcommand(1);
  Options opt;

  const auto sigma_check = CLI::IsMember({"123", "132", "213", "231", "312", "321"});
  auto add_sigma = [&](CLI::App* sub) {
    sub->add_option("--sigma", opt.sigma, "Pattern: 123, 132, 213, 231, 312 or 321")
        ->required()
        ->check(sigma_check);
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write the result to this file instead of stdout");
  };
  auto add_enum = [&](CLI::App* sub) {
    sub->add_flag("--no-prune", opt.no_prune, "Enumerate all of S_n instead of tau_1 = pi_n");
    sub->add_flag("--force", opt.force, "Allow n above the enumeration guard");
  };

  auto* map = app.add_subcommand("map", "Apply SC_sigma to a permutation");
  add_sigma(map);
  map->add_option("--perm", opt.perm, "Input permutation")->required();
  map->add_flag("--trace", opt.trace, "Print the push/pop event log");
  map->add_flag("--cro", opt.cro, "Append the CRO count");
  map->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  add_out(map);

  auto* fert = app.add_subcommand("fertility", "Count preimages of a permutation");
  add_sigma(fert);
  fert->add_option("--perm", opt.perm, "Target permutation")->required();
  fert->add_flag("--list", opt.list, "Also list the preimages");
  add_enum(fert);
  fert->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  add_out(fert);

  auto* pre = app.add_subcommand("preimages", "List preimages of a permutation");
  add_sigma(pre);
  pre->add_option("--perm", opt.perm, "Target permutation")->required();
  add_enum(pre);
  pre->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  add_out(pre);

  auto* cons = app.add_subcommand("construct", "Witness permutation of a construction family");
  add_sigma(cons);
  auto* n_opt = cons->add_option("--n", opt.n, "Family parameter (target has length n + 1)");
  auto* w_opt = cons->add_option("--witness", opt.witness,
                                 "Return a permutation with exactly this fertility")
                    ->check(CLI::PositiveNumber);
  n_opt->excludes(w_opt);
  cons->add_flag("--preimages", opt.preimages, "Also list the preimages");
  cons->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  add_out(cons);

  auto* spec = app.add_subcommand("spectrum", "Fertility of every permutation of S_n");
  add_sigma(spec);
  spec->add_option("--n", opt.n, "Permutation length")->required();
  add_enum(spec);
  spec->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "csv"}));
  add_out(spec);

  auto* ver = app.add_subcommand("verify", "Check every claim computationally");
  ver->add_option("--max-n", opt.max_n, "Longest permutation in exhaustive sweeps (3..9)");
  ver->add_option("--claims", opt.claims, std::string("Comma-separated ids or 'all': ") +
                                              scs_claim_ids());
  ver->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  add_out(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*map) return run_map(opt);
    if (*fert) return run_fertility(opt, opt.list);
    if (*pre) return run_fertility(opt, true);
    if (*cons) {
      if (n_opt->count() == 0 && w_opt->count() == 0) {
        throw UsageError("construct needs --n or --witness");
      }
      return run_construct(opt);
    }
    if (*spec) return run_spectrum(opt);
    if (*ver) return run_verify(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
