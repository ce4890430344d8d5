#include "semilab/cli/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "semilab/algebra/catalog.hpp"
#include "semilab/algebra/embedding.hpp"
#include "semilab/cli/suite.hpp"
#include "semilab/inequalities/battery.hpp"
#include "semilab/inequalities/moments.hpp"
#include "semilab/inequalities/registry.hpp"

namespace semilab {

namespace {

bool annotated(const Annotations& a, InvarianceKind kind) {
  switch (kind) {
    case InvarianceKind::left: return a.left;
    case InvarianceKind::right: return a.right;
    case InvarianceKind::bi: return a.bi();
    case InvarianceKind::strong_left: return a.strong_left;
    case InvarianceKind::strong_right: return a.strong_right;
  }
  return false;
}

std::string describe_witness(const Witness& w, const MetricSemigroup& instance) {
  std::ostringstream s;
  s << w.relation << " fails at";
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    s << (i ? ", " : " ") << w.names.at(i) << " = " << instance.encode(w.elements[i]);
  }
  s << ": " << format_real(w.first) << " vs " << format_real(w.second);
  return s.str();
}

int severity(Verdict v) {
  switch (v) {
    case Verdict::holds: return 0;
    case Verdict::indeterminate: return 1;
    case Verdict::violated: return 2;
  }
  return 2;
}

}  // namespace

int verdict_exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return kExitOk;
    case Verdict::violated: return kExitViolated;
    case Verdict::indeterminate: return kExitIndeterminate;
  }
  return kExitViolated;
}

Json to_json(const PropertyReport& report, const MetricSemigroup& instance) {
  Json out;
  out["instance"] = instance.name();
  out["property"] = report.property;
  if (report.kind) out["kind"] = std::string(to_string(*report.kind));
  out["mode"] = describe(report.mode);
  out["tolerance"] = json_real(report.tolerance);
  out["checked"] = report.checked;
  out["holds"] = report.holds;
  out["max_discrepancy"] = json_real(report.max_discrepancy);
  if (report.witness) {
    const auto& w = *report.witness;
    Json elements = Json::object();
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
      elements[w.names.at(i)] = instance.encode(w.elements[i]);
    }
    out["witness"] = {{"relation", w.relation},
                      {"elements", elements},
                      {"first", json_real(w.first)},
                      {"second", json_real(w.second)}};
  }
  return out;
}

int cmd_instances_list(std::ostream& out) {
  for (const auto& entry : Catalog::builtin().entries()) {
    out << entry.instance->name() << " " << describe_annotations(entry.instance->annotations())
        << "  " << entry.summary << "\n";
  }
  return kExitOk;
}

int cmd_instances_show(const std::string& name, std::ostream& out, std::ostream& err) {
  try {
    const auto inst = find_instance(name);
    out << "name: " << inst->name() << "\n";
    if (const auto* entry = Catalog::builtin().entry(name)) out << "summary: " << entry->summary << "\n";
    out << "annotations: " << describe_annotations(inst->annotations()) << "\n";
    out << "discrete: " << (inst->is_discrete() ? "yes" : "no") << "\n";
    const auto e = inst->identity();
    out << "identity: " << (e ? inst->encode(*e) : std::string("none")) << "\n";
    out << "distinguished:";
    for (const auto& g : inst->distinguished()) out << " " << inst->encode(g);
    out << "\n";
    return kExitOk;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitConfig;
  }
}

int cmd_invariance(const InvarianceArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto inst = find_instance(args.instance);
    const auto kind = parse_invariance_kind(args.kind);
    const auto report = check_invariance(*inst, kind, args.mode, args.tolerance);
    const bool expected = annotated(inst->annotations(), kind);
    if (args.format == "json") {
      auto j = to_json(report, *inst);
      j["annotation"] = expected;
      out << j.dump(2) << "\n";
    } else {
      out << inst->name() << " " << to_string(kind) << " (" << describe(report.mode)
          << "): " << (report.holds ? "holds" : "fails") << " after " << report.checked
          << " checks, max discrepancy " << format_real(report.max_discrepancy)
          << "; annotation: " << (expected ? "yes" : "no") << "\n";
      if (report.witness) out << "witness: " << describe_witness(*report.witness, *inst) << "\n";
    }
    return report.holds == expected ? kExitOk : kExitFailed;
  } catch (const BudgetExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitConfig;
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "csv") {
      throw InvalidArgument("format must be json or csv");
    }
    if (config.out) probe_writable(*config.out);
    const auto model = build_model(config);
    std::string text;
    int code = kExitOk;
    if (config.inequality == "rearrangement-ratio") {
      const auto& p = config.params;
      if (!p.contains("t") || !p.contains("s")) throw InvalidArgument("rearrangement-ratio needs t and s");
      const auto ratio = rearrangement_ratio(model, real_from_json(p.at("t")),
                                             real_from_json(p.at("s")), config.engine, config.workers);
      text = to_json(ratio).dump(2) + "\n";
    } else {
      const auto reports =
          run_inequality(config.inequality, model, run_params(config), config.engine, config.workers);
      Verdict worst = Verdict::holds;
      for (const auto& r : reports) {
        if (severity(r.verdict) > severity(worst)) worst = r.verdict;
      }
      code = verdict_exit_code(worst);
      if (config.format == "csv") {
        text = csv_header() + "\n";
        for (const auto& r : reports) text += to_csv_row(r) + "\n";
      } else if (reports.size() == 1) {
        text = to_json(reports.front()).dump(2) + "\n";
      } else {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(to_json(r));
        text = all.dump(2) + "\n";
      }
    }
    out << text;
    if (config.out) write_text_file(*config.out, text);
    return code;
  } catch (const BudgetExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitIo;
  } catch (const LambdaNotLessThanOne& ex) {
    err << "error: LambdaNotLessThanOne: " << ex.what() << "\n";
    return kExitConfig;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitConfig;
  } catch (const Json::exception& ex) {
    err << "error: malformed parameter: " << ex.what() << "\n";
    return kExitConfig;
  }
}

int cmd_suite(const SuiteArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.out) probe_writable(*args.out);
    SuiteOptions options;
    options.seed = args.seed;
    options.workers = args.workers;
    auto results = run_acceptance(options, args.criteria);
    Json doc;
    doc["seed"] = args.seed;
    Json criteria = Json::array();
    std::size_t passed = 0;
    for (auto& r : results) {
      out << format_criterion(r) << "\n";
      passed += r.passed ? 1 : 0;
      if (r.id == 1) {
        doc["reports"] = r.data.at("reports");
        doc["summary"] = r.data.at("summary");
        r.data.erase("reports");
        r.data.erase("summary");
      }
      criteria.push_back(to_json(r));
    }
    doc["criteria"] = criteria;
    doc["passed"] = passed;
    doc["failed"] = results.size() - passed;
    out << passed << "/" << results.size() << " criteria pass\n";
    if (args.out) write_text_file(*args.out, doc.dump(2) + "\n");
    return passed == results.size() ? kExitOk : kExitFailed;
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitIo;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitConfig;
  }
}

int cmd_embed(const EmbedArgs& args, std::ostream& out, std::ostream& err) {
  InstancePtr inst;
  try {
    inst = find_instance(args.instance);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitConfig;
  }
  try {
    const auto monoid = adjoin_identity(inst, Sampled{args.samples, args.seed});
    const auto e = *monoid->identity();
    out << "adjoined " << monoid->name() << " with identity " << monoid->encode(e) << "\n";
    Rng rng(args.seed);
    for (std::size_t i = 0; i < args.show; ++i) {
      const auto g = inst->sample(rng);
      out << "d(e, " << inst->encode(g) << ") = " << format_real(monoid->distance(e, g))
          << " = d(g, g^2) = " << format_real(inst->distance(g, inst->compose(g, g))) << "\n";
    }
    return kExitOk;
  } catch (const IdempotentPresent& ex) {
    out << (ex.is_identity() ? "identity already present: " : "idempotent present: ")
        << ex.encoded() << "\n";
    return kExitViolated;
  } catch (const NotStronglyLeftInvariant& ex) {
    out << "not strongly left-invariant: " << describe_witness(ex.witness(), *inst) << "\n";
    return kExitViolated;
  } catch (const Error& ex) {
    out << "refused: " << ex.what() << "\n";
    return kExitViolated;
  }
}

int cmd_stress(const StressArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto inst = find_instance(args.instance);
    const auto& names = battery_checkers();
    if (std::find(names.begin(), names.end(), args.checker) == names.end()) {
      throw UnknownName("unknown battery checker '" + args.checker + "'");
    }
    const auto found = stress_search(inst, args.checker, args.seed, args.trials, args.workers);
    Json all = Json::array();
    for (const auto& r : found) all.push_back(to_json(r));
    out << all.dump(2) << "\n";
    return found.empty() ? kExitOk : kExitViolated;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace semilab
