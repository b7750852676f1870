// vknot: command-line front end for the Gauss diagram toolkit.
//
//   vknot canon <code>
//   vknot invariants <code> [--json]
//   vknot generate ki <i> | generate kpq <p> <q> <n>
//   vknot search homotopy|isotopy <code1> <code2> [--max-chords N] [--max-flips F] [--max-states S]
//   vknot verify <certificate.json>
//   vknot selftest
//
// Exit codes: 0 success, 1 domain or usage error, 2 search found nothing.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "acceptance/criteria.hpp"
#include "vknot/json_io.hpp"
#include "vknot/vknot.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNotFound = 2;

std::int64_t env_or(const char* name, std::int64_t fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return std::stoll(v);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric " << name << "=" << v << "\n";
    }
  }
  return fallback;
}

void print_invariants(const vknot::GaussDiagram& d, bool as_json) {
  using namespace vknot;
  if (as_json) {
    std::cout << invariants_json(d).dump(2) << "\n";
    return;
  }
  const auto P = henrich_P(d);
  const auto bound = vu_lower_bound(P);
  std::cout << "gauss_code=" << to_gauss_code(d) << "\n"
            << "chords=" << d.chord_count() << "\n"
            << "bridge=" << bridge_count(d) << "\n"
            << "P=" << to_string(P) << "\n"
            << "u=" << to_string(turaev_u(d)) << "\n";
  if (bound.is_integer()) {
    std::cout << "vu_lower=" << bound.ceil() << "\n";
  } else {
    std::cout << "vu_lower=" << bound.numerator() << "/" << bound.denominator()
              << " ceil=" << bound.ceil() << "\n";
  }
  for (const auto& e : chord_report(d)) {
    std::cout << "chord " << e.chord << ": sign=" << sign_char(e.sign) << " i=" << e.i_value
              << " n=" << e.n_value << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace vknot;

  CLI::App app{"Invariants, moves and flip-count certificates for Gauss diagrams"};
  app.require_subcommand(1);

  std::string code, code2, cert_path;
  bool as_json = false;

  auto* canon = app.add_subcommand("canon", "Print the canonical Gauss code");
  canon->add_option("code", code, "Gauss code, e.g. U1+,U2+,O1+,O2+")->required();

  auto* inv = app.add_subcommand("invariants", "Bridge count, chord indices, P, u, vu bound");
  inv->add_option("code", code, "Gauss code")->required();
  inv->add_flag("--json", as_json, "Machine-readable output");

  auto* gen = app.add_subcommand("generate", "Emit a family member as Gauss code");
  gen->require_subcommand(1);
  int i = 0, p = 0, q = 0, n = 0;
  auto* gen_ki = gen->add_subcommand("ki", "K_i: 2i chords, vu = i");
  gen_ki->add_option("i", i)->required();
  auto* gen_kpq = gen->add_subcommand("kpq", "K_n^{p,q}");
  gen_kpq->add_option("p", p)->required();
  gen_kpq->add_option("q", q)->required();
  gen_kpq->add_option("n", n)->required();

  auto* search = app.add_subcommand("search", "Find a certificate between two diagrams");
  search->require_subcommand(1);
  std::optional<int> max_chords, max_flips;
  std::optional<std::int64_t> max_states;
  const auto add_search = [&](const char* name, const char* help) {
    auto* s = search->add_subcommand(name, help);
    s->add_option("from", code, "Start diagram")->required();
    s->add_option("to", code2, "Target diagram")->required();
    s->add_option("--max-chords", max_chords, "Largest intermediate diagram (default: larger endpoint)");
    s->add_option("--max-flips", max_flips, "Flip cap (default: $VKNOT_MAX_FLIPS or 16)");
    s->add_option("--max-states", max_states, "Stored-state cap (default: $VKNOT_MAX_STATES or 2000000)");
    return s;
  };
  auto* homotopy = add_search("homotopy", "Minimum-flip homotopy");
  add_search("isotopy", "Reidemeister moves only");

  auto* verify = app.add_subcommand("verify", "Replay a certificate");
  verify->add_option("certificate", cert_path, "Certificate JSON file")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*canon) {
      std::cout << to_gauss_code(parse_gauss_code(code)) << "\n";
      return kOk;
    }
    if (*inv) {
      print_invariants(parse_gauss_code(code), as_json);
      return kOk;
    }
    if (*gen) {
      const auto d = *gen_ki ? k_family(i) : kpq_family(p, q, n);
      std::cout << format_positional(d) << "\n";
      return kOk;
    }
    if (*search) {
      const auto from = parse_gauss_code(code);
      const auto to = parse_gauss_code(code2);
      SearchBudget budget;
      budget.max_chords =
          max_chords.value_or(static_cast<int>(std::max(from.chord_count(), to.chord_count())));
      budget.max_flips = max_flips.value_or(static_cast<int>(env_or("VKNOT_MAX_FLIPS", 16)));
      budget.max_states = max_states.value_or(env_or("VKNOT_MAX_STATES", 2'000'000));
      const auto result = *homotopy ? find_homotopy(from, to, budget) : find_isotopy(from, to, budget);
      if (const auto* nf = std::get_if<NotFound>(&result)) {
        std::cout << "NOT_FOUND\n";
        std::cerr << nf->reason << " (expanded=" << nf->stats.expanded
                  << ", stored=" << nf->stats.stored << ", frontier=" << nf->stats.frontier << ")\n";
        return kNotFound;
      }
      const auto& cert = std::get<Certificate>(result);
      std::cout << to_json(cert).dump(2) << "\n";
      const auto lower = rvu_lower_bound(henrich_P(from), henrich_P(to)).ceil();
      std::cerr << "flip_count=" << cert.flip_count << " lower_bound=" << lower
                << (cert.flip_count == lower ? " EXACT" : "") << "\n";
      return kOk;
    }
    if (*verify) {
      std::ifstream in(cert_path);
      if (!in) {
        std::cerr << "error: cannot read " << cert_path << "\n";
        return kError;
      }
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        std::cerr << "error: " << cert_path << " is not JSON: " << e.what() << "\n";
        return kError;
      }
      const auto report = verify_certificate(certificate_from_json(j));
      if (report.ok) {
        std::cout << "OK\n";
        return kOk;
      }
      std::cout << "FAIL at step " << *report.failed_step << ": " << report.message << "\n";
      return kError;
    }
    if (*selftest) {
      const auto results = acceptance::run_all(std::cout);
      const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
      std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      return all ? kOk : kError;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
