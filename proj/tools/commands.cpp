#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "closures/closures.hpp"

namespace closures::cli {

namespace {

const std::vector<std::string> kMonomialCommands = {
    "integral", "special-integral", "low-points", "decomposition", "independence",
    "reductions", "spread", "bs-check", "evolution", "oracle-check"};
const std::vector<std::string> kCharPCommands = {"frobenius", "special-frobenius", "decompose-f",
                                                 "f-spread", "independence"};

bool command_in(const std::string& command, const std::vector<std::string>& list) {
  return std::find(list.begin(), list.end(), command) != list.end();
}

MonomialIdeal request_ideal(const Request& request) {
  return parse_ideal(request.ideal, request.vars);
}

void require_proper_nonzero_input(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw usage_error("the zero ideal is not accepted here");
  if (ideal.is_unit()) throw usage_error("the unit ideal is not accepted here");
}

std::string format_points(const std::vector<ExponentVector>& points,
                          const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(points[i], names);
  }
  return out.empty() ? "none" : out;
}

long derived_box(const MonomialIdeal& ideal, long requested) {
  if (requested >= 0) return requested;
  long box = 0;
  for (const auto& m : ideal.coordinate_maxima()) box = std::max(box, to_long(m));
  return box + 1;
}

Response run_integral(const Request& request, bool special) {
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  auto closure = special ? special_integral_closure(ideal, request.threads)
                         : integral_closure(ideal, request.threads);
  Response response;
  response.text = format_ideal(closure, request.vars);
  response.payload = to_json(closure, request.vars);
  return response;
}

Response run_low_points(const Request& request) {
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  auto low = low_points(ideal, request.threads);
  std::sort(low.begin(), low.end(), [](const ExponentVector& a, const ExponentVector& b) { return b < a; });
  Response response;
  response.text = format_points(low, request.vars);
  response.payload["points"] = nlohmann::json::array();
  for (const auto& alpha : low)
    response.payload["points"].push_back(format_monomial(alpha, request.vars));
  return response;
}

Response run_decomposition(const Request& request) {
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  auto report = decomposition_holds(ideal, request.threads);
  Response response;
  response.payload["holds"] = report.holds;
  if (report.holds) {
    response.text = "holds";
  } else {
    response.exit_code = kConditionFails;
    response.text = "fails (witness: " + format_monomial(*report.witness, request.vars) + ")";
    response.payload["witness"] = format_monomial(*report.witness, request.vars);
  }
  return response;
}

std::vector<PolyFp> request_poly_ideal(const Request& request, const QuotientRing& ring) {
  std::vector<PolyFp> gens;
  std::size_t start = 0;
  const std::string& text = request.ideal;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t") != std::string::npos)
        gens.push_back(parse_polynomial(piece, ring.characteristic(), ring.variables()));
      start = i + 1;
    }
  }
  if (gens.empty()) throw usage_error("--ideal must list at least one polynomial");
  return gens;
}

Response run_frobenius(const Request& request, bool special) {
  QuotientRing ring = request.ring->ring();
  auto gens = request_poly_ideal(request, ring);
  PolyFp z = parse_polynomial(request.element, ring.characteristic(), ring.variables());
  BoundedVerdict verdict = special ? special_frobenius_member(z, gens, ring, request.e_max)
                                   : frobenius_member(z, gens, ring, request.e_max);
  Response response;
  response.payload = to_json(verdict);
  if (verdict.in()) {
    response.text = "In at e=" + std::to_string(verdict.witness->e);
  } else {
    response.exit_code = kConditionFails;
    response.text = "NotIn up to e=" + std::to_string(verdict.e_max);
  }
  return response;
}

Response run_decompose_f(const Request& request) {
  QuotientRing ring = request.ring->ring();
  auto gens = request_poly_ideal(request, ring);
  PolyFp z = parse_polynomial(request.element, ring.characteristic(), ring.variables());
  Response response;
  try {
    auto split = special_decompose(z, gens, ring, request.e_max);
    response.text = "ideal part: " + format_polynomial(split.ideal_part, ring.variables()) +
                    "\nspecial part: " + format_polynomial(split.special_part, ring.variables()) +
                    "\ne: " + std::to_string(split.e);
    response.payload["ideal_part"] = format_polynomial(split.ideal_part, ring.variables());
    response.payload["special_part"] = format_polynomial(split.special_part, ring.variables());
    response.payload["e"] = split.e;
  } catch (const std::runtime_error& e) {
    response.exit_code = kConditionFails;
    response.text = e.what();
    response.payload["error"] = e.what();
  }
  return response;
}

Response run_f_spread(const Request& request) {
  QuotientRing ring = request.ring->ring();
  auto gens = request_poly_ideal(request, ring);
  auto table = f_spread(gens, ring, request.e_max);
  Response response;
  response.payload = to_json(table);
  std::string mus;
  for (std::size_t e = 0; e < table.mu.size(); ++e) {
    if (e) mus += ", ";
    mus += std::to_string(table.mu[e]);
  }
  response.text = "mu = " + mus + (table.stable ? " (stable)" : " (not stabilized)");
  return response;
}

Response run_independence(const Request& request) {
  Response response;
  if (request.ring) {
    QuotientRing ring = request.ring->ring();
    auto gens = request_poly_ideal(request, ring);
    bool independent;
    std::string qualifier;
    if (request.at_q > 0) {
      independent = analytically_f_independent_at_q(gens, ring, Integer(request.at_q));
      qualifier = " (analytic, q=" + std::to_string(request.at_q) + ")";
    } else {
      independent = f_independent(gens, ring, request.e_max);
      qualifier = independent ? " up to e=" + std::to_string(request.e_max) : "";
    }
    response.text = (independent ? "independent" : "dependent") + qualifier;
    response.payload["independent"] = independent;
    if (!independent) response.exit_code = kConditionFails;
    return response;
  }
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  bool independent = is_c_independent(ideal, integral_closure_operation(request.threads));
  response.text = independent ? "independent" : "dependent";
  response.payload["independent"] = independent;
  if (!independent) response.exit_code = kConditionFails;
  return response;
}

Response run_reductions(const Request& request) {
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  auto reductions = minimal_subset_reductions(ideal, integral_closure_operation(request.threads));
  Response response;
  response.payload["reductions"] = nlohmann::json::array();
  for (std::size_t i = 0; i < reductions.size(); ++i) {
    if (i) response.text += "\n";
    response.text += format_ideal(reductions[i], request.vars);
    response.payload["reductions"].push_back(to_json(reductions[i], request.vars));
  }
  return response;
}

Response run_spread(const Request& request) {
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  auto spread = spread_over_subsets(ideal, integral_closure_operation(request.threads));
  Response response;
  if (spread) {
    response.text = std::to_string(*spread);
    response.payload["spread"] = *spread;
  } else {
    response.exit_code = kConditionFails;
    response.text = "undefined (minimal subset reductions of different sizes)";
    response.payload["spread"] = nullptr;
  }
  return response;
}

Response run_bs_check(const Request& request) {
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  auto report = briancon_skoda_check(ideal, request.w, request.threads);
  Response response;
  response.payload = to_json(report, request.vars);
  if (report.ok()) {
    response.text = "ok (n=" + std::to_string(report.generator_count) +
                    ", w=" + std::to_string(report.w) + ")";
  } else {
    response.exit_code = kConditionFails;
    response.text = "violations: special " + format_points(report.special_violations, request.vars) +
                    "; integral " + format_points(report.integral_violations, request.vars);
  }
  return response;
}

Response run_evolution(const Request& request) {
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  auto report = evolution_conditions(ideal, request.n_max, request.threads);
  Response response;
  response.payload = to_json(report, request.vars);
  std::ostringstream text;
  text << "SP: " << to_text(report.sp);
  if (report.sp_witness) text << " (witness: " << format_monomial(*report.sp_witness, request.vars) << ")";
  text << "\nAR: " << to_text(report.ar);
  if (report.ar_witness)
    text << " (witness: " << format_monomial(report.ar_witness->first, request.vars)
         << " at n=" << report.ar_witness->second << ")";
  text << "\nNN: " << to_text(report.nn);
  if (report.nn_witness)
    text << " (witness: " << format_monomial(report.nn_witness->first, request.vars)
         << " at n=" << report.nn_witness->second << ")";
  text << "\nbar-independent: " << (report.bar_independent ? "yes" : "no");
  response.text = text.str();
  if (report.sp == ConditionStatus::Fails || report.ar == ConditionStatus::Fails ||
      report.nn == ConditionStatus::Fails)
    response.exit_code = kConditionFails;
  return response;
}

Response run_axioms(const Request& request) {
  auto instances = random_instances(request.seed, request.count, 3, 5, 4);
  auto op = integral_closure_operation(request.threads);
  auto closure_report = check_closure_axioms(op, instances);
  auto special_report = check_special_axioms(op, instances, request.samples, request.seed);
  auto nakayama_report = check_nakayama_closure(op, instances, request.samples, request.seed);

  AxiomReport merged;
  merged.instances = instances.size();
  for (const auto* report : {&closure_report, &special_report, &nakayama_report})
    merged.checks.insert(merged.checks.end(), report->checks.begin(), report->checks.end());

  Response response;
  response.payload = to_json(merged);
  std::ostringstream text;
  for (const auto& check : merged.checks) {
    text << check.axiom << ": " << (check.passed ? "pass" : "FAIL");
    if (check.witness) text << " (witness: " << *check.witness << ")";
    text << "\n";
  }
  text << (merged.all_passed() ? "all axioms pass" : "axiom failures found");
  response.text = text.str();
  if (!merged.all_passed()) response.exit_code = kConditionFails;
  return response;
}

Response run_oracle_check(const Request& request) {
  auto ideal = request_ideal(request);
  require_proper_nonzero_input(ideal);
  const long box = derived_box(ideal, request.box);
  Response response;
  std::ostringstream text;
  bool all_ok = true;

  std::size_t points = 0, disagreements = 0;
  std::vector<Integer> bounds(ideal.nvars(), Integer(box));
  detail::scan_box(
      bounds,
      [&](const ExponentVector& alpha) {
        ++points;
        bool lp_plain = contains_integral(ideal, alpha).in();
        bool lp_strict = contains_special_integral(ideal, alpha).in();
        bool oracle_plain = enumerate_integral(ideal, alpha, request.q_max).has_value();
        bool oracle_strict = enumerate_special(ideal, alpha, request.q_max).has_value();
        if (lp_plain != oracle_plain || lp_strict != oracle_strict) ++disagreements;
        return false;
      },
      1);
  text << "enumeration (q <= " << request.q_max << "): " << points << " points, " << disagreements
       << " disagreements";
  response.payload["enumeration"] = {{"points", points}, {"disagreements", disagreements}};
  all_ok = all_ok && disagreements == 0;

  if (ideal.nvars() == 2 && is_m_primary(ideal)) {
    auto facets = staircase_valuations_2d(ideal);
    std::size_t facet_points = 0, facet_disagreements = 0;
    detail::scan_box(
        bounds,
        [&](const ExponentVector& alpha) {
          ++facet_points;
          bool lp = contains_special_integral(ideal, alpha).in();
          bool by_facets = true;
          for (const auto& f : facets)
            if (f.normal_x * alpha[0] + f.normal_y * alpha[1] <= f.value) by_facets = false;
          if (lp != by_facets) ++facet_disagreements;
          return false;
        },
        1);
    text << "\nstaircase facets: " << facets.size() << " facet(s), " << facet_disagreements
         << " disagreements";
    response.payload["facets"] = to_json(facets);
    response.payload["facet_disagreements"] = facet_disagreements;
    all_ok = all_ok && facet_disagreements == 0;
  }

  if (is_m_primary(ideal)) {
    auto report = reesvalsp_equivalence_check(ideal, box, request.n_max);
    text << "\npower search (n <= " << request.n_max << "): " << report.agreements << "/"
         << report.points << " agree, " << report.bound_insufficient.size()
         << " bound-insufficient, " << report.contradictions.size() << " contradictions";
    response.payload["power_search"] = to_json(report, request.vars);
    all_ok = all_ok && report.ok();
  }

  response.text = text.str();
  if (!all_ok) response.exit_code = kConditionFails;
  return response;
}

}  // namespace

Request parse(const std::vector<std::string>& args) {
  CLI::App app{"closure operations on monomial and characteristic-p ideals"};
  app.require_subcommand(1);

  Request request;
  std::string vars_csv, ring_text;

  auto add_common = [&](CLI::App* sub, bool monomial, bool charp, bool needs_ideal) {
    if (monomial) sub->add_option("--vars", vars_csv, "comma-separated variable names");
    if (charp) sub->add_option("--ring", ring_text, "ring, e.g. F2[x,y,z]/(x^3+y^3+z^3)");
    if (needs_ideal) sub->add_option("--ideal", request.ideal, "generators, e.g. \"x^2, y^2\"")->required();
    sub->add_option("--threads", request.threads, "worker threads for box scans");
    sub->add_flag("--json", request.json, "emit JSON (schema_version 1)");
  };

  std::vector<CLI::App*> subs;
  auto* integral = app.add_subcommand("integral", "integral closure of a monomial ideal");
  add_common(integral, true, false, true);
  auto* special = app.add_subcommand("special-integral", "special part of the integral closure");
  add_common(special, true, false, true);
  auto* low = app.add_subcommand("low-points", "lattice low points of the generator hull");
  add_common(low, true, false, true);
  auto* decomposition = app.add_subcommand("decomposition", "closure = ideal + special part?");
  add_common(decomposition, true, false, true);

  auto* frobenius = app.add_subcommand("frobenius", "Frobenius closure membership");
  add_common(frobenius, false, true, true);
  frobenius->add_option("--element", request.element, "element to test")->required();
  frobenius->add_option("--max-e", request.e_max, "search bound for e");
  auto* special_frobenius =
      app.add_subcommand("special-frobenius", "special Frobenius closure membership");
  add_common(special_frobenius, false, true, true);
  special_frobenius->add_option("--element", request.element, "element to test")->required();
  special_frobenius->add_option("--max-e", request.e_max, "search bound for e");
  auto* decompose_f = app.add_subcommand("decompose-f", "closure member = ideal + special split");
  add_common(decompose_f, false, true, true);
  decompose_f->add_option("--element", request.element, "element to decompose")->required();
  decompose_f->add_option("--max-e", request.e_max, "search bound for e");
  auto* fspread = app.add_subcommand("f-spread", "minimal generator counts of bracket powers");
  add_common(fspread, false, true, true);
  fspread->add_option("--max-e", request.e_max, "largest e");

  auto* independence = app.add_subcommand("independence", "generator independence");
  add_common(independence, true, true, true);
  independence->add_option("--max-e", request.e_max, "search bound for e (char p)");
  independence->add_option("--at-q", request.at_q, "analytic independence at this q (char p)");

  auto* reductions = app.add_subcommand("reductions", "minimal generator-subset reductions");
  add_common(reductions, true, false, true);
  auto* spread = app.add_subcommand("spread", "subset spread under integral closure");
  add_common(spread, true, false, true);

  auto* bs = app.add_subcommand("bs-check", "Briancon-Skoda containment replay");
  add_common(bs, true, false, true);
  bs->add_option("--w", request.w, "containment offset");

  auto* evolution = app.add_subcommand("evolution", "conditions (SP), (AR), (NN)");
  add_common(evolution, true, false, true);
  evolution->add_option("--max-n", request.n_max, "bounded search limit");

  auto* axioms = app.add_subcommand("axioms", "axiom suite on random instances");
  add_common(axioms, false, false, false);
  axioms->add_option("--count", request.count, "number of random instances");
  axioms->add_option("--samples", request.samples, "sampled subset pairs");
  axioms->add_option("--seed", request.seed, "random seed");

  auto* oracle = app.add_subcommand("oracle-check", "independent cross-checks of the LP route");
  add_common(oracle, true, false, true);
  oracle->add_option("--qmax", request.q_max, "enumeration denominator bound");
  oracle->add_option("--box", request.box, "box upper bound (default: staircase maxima + 1)");
  oracle->add_option("--max-n", request.n_max, "power search bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    throw help_requested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  for (auto* sub : app.get_subcommands()) request.command = sub->get_name();

  const bool monomial_command = command_in(request.command, kMonomialCommands);
  const bool charp_command = command_in(request.command, kCharPCommands);

  if (!ring_text.empty()) {
    if (!charp_command) throw usage_error("--ring is not accepted by " + request.command);
    request.ring = parse_ring(ring_text);
  }
  if (!vars_csv.empty()) {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= vars_csv.size(); ++i)
      if (i == vars_csv.size() || vars_csv[i] == ',') {
        std::string name = vars_csv.substr(start, i - start);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty()) throw usage_error("empty variable name in --vars");
        request.vars.push_back(name);
        start = i + 1;
      }
  }

  if (request.command == "axioms") {
    if (!request.vars.empty() || request.ring) throw usage_error("axioms takes no ring or vars");
    return request;
  }
  if (request.ring) {
    if (!request.vars.empty()) throw usage_error("--vars and --ring are mutually exclusive");
    // canonicalize ideal/element text in the ring's variables
    QuotientRing ring = request.ring->ring();
    std::vector<std::string> pieces;
    auto gens = request_poly_ideal(request, ring);
    std::string canonical;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) canonical += ", ";
      canonical += format_polynomial(gens[i], ring.variables());
    }
    request.ideal = canonical;
    if (!request.element.empty())
      request.element = format_polynomial(
          parse_polynomial(request.element, ring.characteristic(), ring.variables()),
          ring.variables());
    return request;
  }
  if (charp_command && !monomial_command) throw usage_error(request.command + " requires --ring");
  if (request.vars.empty()) throw usage_error(request.command + " requires --vars");
  request.ideal = format_ideal(parse_ideal(request.ideal, request.vars), request.vars);
  return request;
}

std::vector<std::string> print(const Request& request) {
  Request defaults;
  std::vector<std::string> args = {request.command};
  if (!request.vars.empty()) {
    std::string csv;
    for (std::size_t i = 0; i < request.vars.size(); ++i) {
      if (i) csv += ",";
      csv += request.vars[i];
    }
    args.push_back("--vars");
    args.push_back(csv);
  }
  if (request.ring) {
    args.push_back("--ring");
    args.push_back(request.ring->text());
  }
  if (!request.ideal.empty()) {
    args.push_back("--ideal");
    args.push_back(request.ideal);
  }
  if (!request.element.empty()) {
    args.push_back("--element");
    args.push_back(request.element);
  }
  auto push_if = [&](bool differs, const std::string& flag, const std::string& value) {
    if (differs) {
      args.push_back(flag);
      args.push_back(value);
    }
  };
  push_if(request.e_max != defaults.e_max, "--max-e", std::to_string(request.e_max));
  push_if(request.n_max != defaults.n_max, "--max-n", std::to_string(request.n_max));
  push_if(request.q_max != defaults.q_max, "--qmax", std::to_string(request.q_max));
  push_if(request.box != defaults.box, "--box", std::to_string(request.box));
  push_if(request.w != defaults.w, "--w", std::to_string(request.w));
  push_if(request.at_q != defaults.at_q, "--at-q", std::to_string(request.at_q));
  push_if(request.seed != defaults.seed, "--seed", std::to_string(request.seed));
  push_if(request.count != defaults.count, "--count", std::to_string(request.count));
  push_if(request.samples != defaults.samples, "--samples", std::to_string(request.samples));
  push_if(request.threads != defaults.threads, "--threads", std::to_string(request.threads));
  if (request.json) args.push_back("--json");
  return args;
}

Response execute(const Request& request) {
  if (request.command == "integral") return run_integral(request, false);
  if (request.command == "special-integral") return run_integral(request, true);
  if (request.command == "low-points") return run_low_points(request);
  if (request.command == "decomposition") return run_decomposition(request);
  if (request.command == "frobenius") return run_frobenius(request, false);
  if (request.command == "special-frobenius") return run_frobenius(request, true);
  if (request.command == "decompose-f") return run_decompose_f(request);
  if (request.command == "f-spread") return run_f_spread(request);
  if (request.command == "independence") return run_independence(request);
  if (request.command == "reductions") return run_reductions(request);
  if (request.command == "spread") return run_spread(request);
  if (request.command == "bs-check") return run_bs_check(request);
  if (request.command == "evolution") return run_evolution(request);
  if (request.command == "axioms") return run_axioms(request);
  if (request.command == "oracle-check") return run_oracle_check(request);
  throw usage_error("unknown command: " + request.command);
}

std::string render(const Response& response, const Request& request) {
  if (!request.json) return response.text;
  nlohmann::json j = response.payload;
  j["schema_version"] = 1;
  j["command"] = request.command;
  j["exit_code"] = response.exit_code;
  return j.dump(2);
}

int run(const std::vector<std::string>& args) {
  try {
    Request request = parse(args);
    Response response = execute(request);
    std::cout << render(response, request) << "\n";
    return response.exit_code;
  } catch (const help_requested& e) {
    std::cout << e.what();
    return kOk;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace closures::cli
