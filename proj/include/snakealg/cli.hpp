#pragma once

// Command-line front end. Every invocation prints one JSON document and
// returns 0 on success, 2 on malformed input, 3 on a precondition
// violation and 4 when a structural check fails.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snakealg/errors.hpp"
#include "snakealg/explorer.hpp"
#include "snakealg/factorizer.hpp"
#include "snakealg/grothendieck.hpp"
#include "snakealg/heightmap.hpp"
#include "snakealg/isomorph.hpp"
#include "snakealg/json_io.hpp"
#include "snakealg/primesets.hpp"
#include "snakealg/selftest.hpp"
#include "snakealg/snakes.hpp"
#include "snakealg/text.hpp"

namespace snakealg::cli {

enum ExitCode { kOk = 0, kParse = 2, kPrecondition = 3, kViolation = 4 };

/// A completed command whose output reports a failed check.
class CheckFailed : public std::runtime_error {
 public:
  CheckFailed(json doc, const std::string& what) : std::runtime_error(what), doc_(std::move(doc)) {}
  const json& doc() const { return doc_; }

 private:
  json doc_;
};

namespace detail {

inline json validate(const Snake& s) { return to_json(classify(s)); }

inline json sets(const Snake& s) {
  json out{{"snake", to_json(s)}, {"classification", to_json(classify(s))}};
  require_prime(s);
  if (s.size() >= 3) {
    out["tilde_interval_set"] = to_json(tilde_interval_set(s));
    out["interval_set"] = to_json(interval_set(s));
    out["closure"] = closure_check(s);
  }
  out["generators"] = to_json(generator_set(s));
  out["boundary"] = is_boundary(s);
  out["pr"] = to_json(pr_set(s));
  out["fr"] = to_json(fr_set(s));
  return out;
}

inline json factor(const Snake& s, const std::string& omega) {
  auto w = parse_monoid(omega, s.rank());
  Factorizer fz;
  auto f = fz.factor(w, s);
  json out{{"snake", to_json(s)}, {"omega", to_json(w)}};
  if (s.size() >= 3 && !w.is_identity()) out["profile"] = to_json(fz.extract_profile(w, s));
  out["factors"] = to_json(f.factors);
  out["weight_recovered"] = f.weight(s.rank()) == w;
  if (!out["weight_recovered"].get<bool>()) throw CheckFailed(out, "factor weights do not multiply back");
  return out;
}

inline json exchange(const Snake& s) {
  auto out = to_json(exchange_triple(s));
  if (!out["weight_conserved"].get<bool>() || !out["groups_match"].get<bool>()) {
    throw CheckFailed(out, "exchange relation check failed");
  }
  return out;
}

inline json iso(const Snake& s, const Snake& t, const std::string& omega) {
  json out{{"source", to_json(s)}, {"target", to_json(t)}};
  auto failure = iso_condition_failure(s, t);
  out["conditions"] = !failure;
  if (failure) {
    out["failure"] = *failure;
    return out;
  }
  SnakeIso iso(s, t);
  json map = json::array();
  for (const auto& [a, b] : iso.generator_map()) map.push_back({to_json(a), to_json(b)});
  out["generator_map"] = map;
  out["descriptors_preserved"] = descriptor_map_check(iso);
  bool ok = out["descriptors_preserved"].get<bool>();
  if (!omega.empty()) {
    auto w = parse_monoid(omega, s.rank());
    out["omega"] = to_json(w);
    out["eta"] = to_json(eta(iso, w));
    out["transport"] = transport_check(iso, w);
    ok = ok && out["transport"].get<bool>();
  }
  if (!ok) throw CheckFailed(out, "isomorphism does not transport factorizations");
  return out;
}

inline json height(const Snake& s) {
  auto h = height_profile(s);
  auto out = to_json(h);
  Snake x = snake_of_xi(h);
  auto e = extremes(x);
  auto bij = pr_bijection(h);
  json checks{{"p_last_is_N", h.p.back() == h.N},
              {"extremes", e.j_min == e.i_max && e.j_max - e.i_min == h.N + 1},
              {"interval_sets_agree", interval_set_xi(h) == interval_set(x)},
              {"idempotent", snake_of_xi(x) == x},
              {"pr_bijection", bij.ok()},
              {"isomorphic_to_snake", bij.composed}};
  out["checks"] = checks;
  if (bij.failure) out["pr_bijection_failure"] = *bij.failure;
  for (const auto& [k, v] : checks.items()) {
    if (k != "isomorphic_to_snake" && !v.get<bool>()) throw CheckFailed(out, "check failed: " + k);
  }
  return out;
}

inline json cluster(const Snake& s) { return to_json(cluster_export(s)); }

inline json enumerate(const CorpusSpec& spec, const std::vector<std::string>& filters, long limit) {
  CorpusSpec sp = spec;
  sp.filters = {};
  for (const auto& f : filters) {
    if (f == "stable") sp.filters.stable = true;
    else if (f == "connected") sp.filters.connected = true;
    else if (f == "prime") sp.filters.prime = true;
    else if (f == "boundary") sp.filters.boundary = true;
    else throw ParseError("unknown filter '" + f + "'");
  }
  json list = json::array();
  long count = 0;
  for_each_snake(sp, [&](const Snake& s) {
    ++count;
    if (limit < 0 || static_cast<long>(list.size()) < limit) list.push_back(to_json(s));
    return true;
  });
  return {{"count", count}, {"snakes", list}};
}

inline json selftest(const std::string& level, int suite) {
  SelftestScale scale;
  if (level == "desk") scale = SelftestScale::desk();
  else if (level == "quick") scale = SelftestScale::quick();
  else throw ParseError("unknown level '" + level + "'");
  Selftest st(scale);
  json suites = json::array();
  int passed = 0, total = 0;
  for (int id = 1; id <= 8; ++id) {
    if (suite != 0 && id != suite) continue;
    auto r = st.run(id);
    ++total;
    passed += r.passed ? 1 : 0;
    suites.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"checked", r.checked},
                      {"failures", r.failures},
                      {"witnesses", r.witnesses},
                      {"note", r.note},
                      {"seconds", r.seconds}});
  }
  json out{{"level", level}, {"passed", passed}, {"total", total}, {"suites", suites}};
  if (passed != total) throw CheckFailed(out, "acceptance suites failed");
  return out;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout) {
  CLI::App app{"Alternating snakes: validation, prime sets, factorization and height functions",
               "snakealg"};
  app.require_subcommand(1);
  std::string snake_text, target_text, omega;

  auto* validate = app.add_subcommand("validate", "Classify an interval tuple");
  validate->add_option("snake", snake_text, "snake, e.g. \"[(0,2),(-1,1)] @ n=3\"")->required();

  auto* sets = app.add_subcommand("sets", "Interval sets and prime index sets of a prime snake");
  sets->add_option("snake", snake_text)->required();

  auto* factor = app.add_subcommand("factor", "Canonical prime factorization");
  factor->add_option("--snake", snake_text)->required();
  factor->add_option("--omega", omega, "monoid element, e.g. \"w{0,2}*w{-1,1}\"")->required();

  auto* exchange = app.add_subcommand("exchange", "Exchange relation of a prime snake");
  exchange->add_option("snake", snake_text)->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism between two prime snakes");
  iso->add_option("--source", snake_text)->required();
  iso->add_option("--target", target_text)->required();
  iso->add_option("--omega", omega);

  auto* height = app.add_subcommand("height", "Height function of a prime snake");
  height->add_option("snake", snake_text)->required();

  auto* cluster = app.add_subcommand("cluster", "Cluster data of a boundary prime snake");
  cluster->add_option("snake", snake_text)->required();

  CorpusSpec spec;
  std::vector<std::string> filters;
  long limit = -1;
  bool json_flag = false;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate translation-normalized snakes");
  enumerate->add_option("--r-min", spec.r_min);
  enumerate->add_option("--r-max", spec.r_max);
  enumerate->add_option("--span", spec.span);
  enumerate->add_option("--n-min", spec.n_min);
  enumerate->add_option("--n-max", spec.n_max);
  enumerate->add_option("--filter", filters, "stable, connected, prime, boundary")->delimiter(',');
  enumerate->add_option("--limit", limit, "maximum number of snakes listed");
  enumerate->add_flag("--json", json_flag, "JSON output (the only format)");

  std::string level = "desk";
  int suite = 0;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suites");
  selftest->add_option("--level", level, "quick or desk");
  selftest->add_option("--suite", suite, "run a single suite 1..8");

  auto emit_error = [&](const char* kind, const std::string& msg, int code) {
    out << json{{"error", kind}, {"message", msg}}.dump(2) << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n";
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All) << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), kParse);
  }

  try {
    json doc;
    if (*validate) doc = detail::validate(parse_snake(snake_text));
    else if (*sets) doc = detail::sets(parse_snake(snake_text));
    else if (*factor) doc = detail::factor(parse_snake(snake_text), omega);
    else if (*exchange) doc = detail::exchange(parse_snake(snake_text));
    else if (*iso) doc = detail::iso(parse_snake(snake_text), parse_snake(target_text), omega);
    else if (*height) doc = detail::height(parse_snake(snake_text));
    else if (*cluster) doc = detail::cluster(parse_snake(snake_text));
    else if (*enumerate) doc = detail::enumerate(spec, filters, limit);
    else if (*selftest) doc = detail::selftest(level, suite);
    out << doc.dump(2) << "\n";
    return kOk;
  } catch (const CheckFailed& e) {
    json doc = e.doc();
    doc["error"] = "violation";
    doc["message"] = e.what();
    out << doc.dump(2) << "\n";
    return kViolation;
  } catch (const ParseError& e) {
    return emit_error("parse", e.what(), kParse);
  } catch (const PreconditionError& e) {
    return emit_error("precondition", e.what(), kPrecondition);
  } catch (const InvariantViolation& e) {
    return emit_error("violation", e.what(), kViolation);
  }
}

}  // namespace snakealg::cli
