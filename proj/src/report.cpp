#include "superweyl/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sw {

namespace {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Incomplete };

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Incomplete: return "incomplete";
  }
  return "fail";
}

Status status(const VerificationReport& r) {
  if (!r.complete) return Status::Incomplete;
  return r.passed() ? Status::Pass : Status::Fail;
}
Status status(const DerivedReport& r) {
  if (!r.complete) return Status::Incomplete;
  return r.passed() ? Status::Pass : Status::Fail;
}
template <class R>
Status status(const R& r) {
  return r.passed() ? Status::Pass : Status::Fail;
}

std::vector<const RunRecord*> sorted_runs(const ReportBundle& b) {
  std::vector<const RunRecord*> v;
  for (const auto& r : b.runs) v.push_back(&r);
  std::stable_sort(v.begin(), v.end(), [](const RunRecord* x, const RunRecord* y) {
    if (x->spec.kind != y->spec.kind) return x->spec.kind < y->spec.kind;
    return x->spec.n < y->spec.n;
  });
  return v;
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["status"] = status_name(status(r));
  j["order"] = r.order;
  j["complete"] = r.complete;
  j["dims"] = Json{{"g", r.dim_g},
                   {"g0", r.dim_g0},
                   {"g1", r.dim_g1},
                   {"derived", r.dim_derived},
                   {"rhs", r.dim_rhs},
                   {"predicted_derived", r.predicted_derived},
                   {"predicted_by_blocks", r.predicted_by_blocks}};
  j["equal"] = r.equal;
  j["derived_consistent"] = r.derived_consistent;
  j["g_in_rhs"] = r.g_in_rhs;
  j["rhs_in_g"] = r.rhs_in_g;
  j["class_sums_in_g"] = r.class_sums_in_g;
  j["fixpoint"] = Json{{"checked", r.fixpoint_checked}, {"ok", r.fixpoint_ok}};
  j["table_from_cache"] = r.table_from_cache;
  Json t = Json::object();
  for (const auto& p : r.timings) t[p.phase] = p.seconds;
  j["timings"] = t;
  return j;
}

Json to_json(const DerivedReport& r) {
  Json j;
  j["status"] = status_name(status(r));
  j["complete"] = r.complete;
  j["dims"] = Json{{"derived", r.dim_derived},
                   {"predicted_by_count", r.predicted_by_count},
                   {"predicted_by_blocks", r.predicted_by_blocks}};
  j["timings"] = Json{{"derived", r.seconds}};
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["status"] = status_name(status(r));
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["s_conjugation_closed"] = r.s_conjugation_closed;
  j["s_prime_half_brackets"] = r.s_prime_half_brackets;
  j["s_prime_generates"] = r.s_prime_generates;
  j["no_dim_two"] = r.no_dim_two;
  j["dims"] = Json{{"s", r.s_size},
                   {"s_prime", r.s_prime_size},
                   {"s_prime_generated", r.s_prime_generated},
                   {"even_order", r.even_order}};
  j["simple_dims"] = r.simple_dims;
  j["even_simple_dims"] = r.even_simple_dims;
  return j;
}

Json to_json(const BranchingReport& r) {
  Json j;
  j["status"] = status_name(status(r));
  j["orthonormality_error"] = r.orthonormality_error;
  Json fams = Json::array();
  size_t matched = 0;
  for (const auto& b : r.results) {
    Json f;
    f["family"] = b.parent.name();
    f["kind"] = family_kind_name(b.parent.family);
    f["match"] = b.match;
    f["consistent"] = b.consistent;
    f["max_multiplicity"] = b.max_multiplicity;
    f["rounding_error"] = b.rounding_error;
    Json obs = Json::array(), pre = Json::array();
    for (const auto& t : b.observed) obs.push_back(to_string(t));
    for (const auto& t : b.predicted) pre.push_back(to_string(t));
    f["observed"] = obs;
    f["predicted"] = pre;
    f["notes"] = b.notes;
    fams.push_back(f);
    matched += b.match;
  }
  j["dims"] = Json{{"families", r.results.size()}, {"matched", matched}};
  j["families"] = fams;
  return j;
}

Json to_json(const AssociatorReport& r) {
  Json j;
  j["status"] = status_name(status(r));
  j["n"] = r.n;
  j["tolerance"] = r.tol;
  Json shapes = Json::array();
  size_t ok = 0;
  for (const auto& c : r.shapes) {
    shapes.push_back(Json{{"shape", to_string(c.shape)},
                          {"dim", c.dim},
                          {"relation_error", c.relation_error},
                          {"trace_error", c.trace_error},
                          {"yjm_error", c.yjm_error},
                          {"intertwining_error", c.intertwining_error},
                          {"inverse_error", c.inverse_error},
                          {"composition_error", c.composition_error},
                          {"commutation_error", c.commutation_error},
                          {"sigma_nat_ok", c.sigma_nat_ok},
                          {"passed", c.passed(r.tol)}});
    ok += c.passed(r.tol);
  }
  j["dims"] = Json{{"shapes", r.shapes.size()}, {"passed", ok}};
  j["shapes"] = shapes;
  return j;
}

Json to_json(const OddGeneration& g) {
  return Json{{"algebra", std::string(g.family == SuperFamily::SL ? "sl(" + std::to_string(g.m) + "|" +
                                                                          std::to_string(g.m) + ")"
                                                                    : "sq(" + std::to_string(g.m) + ")")},
              {"closure_dim", g.closure_dim},
              {"expected_dim", g.expected_dim},
              {"equal", g.equal()}};
}

Json to_json(const SupermatReport& r) {
  Json j;
  j["status"] = status_name(status(r));
  j["bracket_closed"] = r.bracket_closed;
  Json a = Json::array(), rep = Json::array();
  for (const auto& g : r.asserted) a.push_back(to_json(g));
  for (const auto& g : r.reported) rep.push_back(to_json(g));
  j["asserted"] = a;
  j["reported"] = rep;
  return j;
}

struct Row {
  std::string group, check;
  Status st;
  std::string details;
};

std::vector<Row> rows(const ReportBundle& b) {
  std::vector<Row> out;
  for (const RunRecord* r : sorted_runs(b)) {
    const std::string g = spec_name(r->spec);
    if (r->theorem) {
      const auto& t = *r->theorem;
      out.push_back({g, "closure", status(t),
                     "dim g = " + std::to_string(t.dim_g) + " (" + std::to_string(t.dim_g0) + "+" +
                         std::to_string(t.dim_g1) + "), dim rhs = " + std::to_string(t.dim_rhs) +
                         ", dim derived = " + std::to_string(t.dim_derived) + ", predicted = " +
                         std::to_string(t.predicted_derived) + (t.fixpoint_checked ? ", fixpoint checked" : "")});
    }
    if (r->derived) {
      const auto& d = *r->derived;
      out.push_back({g, "derived", status(d),
                     "dim = " + std::to_string(d.dim_derived) + ", by count = " + std::to_string(d.predicted_by_count) +
                         ", by blocks = " + std::to_string(d.predicted_by_blocks)});
    }
    if (r->axioms) {
      const auto& a = *r->axioms;
      out.push_back({g, "axioms", status(a),
                     "|S| = " + std::to_string(a.s_size) + ", |S'| = " + std::to_string(a.s_prime_size) +
                         ", <S'> = " + std::to_string(a.s_prime_generated) + " / " + std::to_string(a.even_order) +
                         (a.no_dim_two ? ", no dimension 2" : ", has dimension 2")});
    }
    if (r->branching) {
      const auto& br = *r->branching;
      size_t m = 0;
      int mult = 0;
      for (const auto& x : br.results) {
        m += x.match;
        mult = std::max(mult, x.max_multiplicity);
      }
      std::string d = std::to_string(m) + "/" + std::to_string(br.results.size()) +
                      " families match, max multiplicity " + std::to_string(mult);
      for (const auto& x : br.results)
        if (!x.match) d += "; mismatch " + x.parent.name();
      out.push_back({g, "branching", status(br), d});
    }
    if (r->associators) {
      const auto& a = *r->associators;
      size_t ok = 0;
      double worst = 0;
      for (const auto& c : a.shapes) {
        ok += c.passed(a.tol);
        worst = std::max({worst, c.relation_error, c.trace_error, c.yjm_error, c.intertwining_error,
                          c.inverse_error, c.composition_error, c.commutation_error});
      }
      out.push_back({g, "associators", status(a),
                     std::to_string(ok) + "/" + std::to_string(a.shapes.size()) + " shapes, max error " +
                         fmt_double(worst)});
    }
    for (const auto& e : r->errors) out.push_back({g, "error", Status::Fail, e});
  }
  if (b.supermat) {
    std::string d;
    for (const auto& g : b.supermat->asserted)
      d += (d.empty() ? "" : ", ") + to_json(g)["algebra"].get<std::string>() + " " + std::to_string(g.closure_dim) +
           "/" + std::to_string(g.expected_dim);
    for (const auto& g : b.supermat->reported)
      d += ", " + to_json(g)["algebra"].get<std::string>() + " " + std::to_string(g.closure_dim) + "/" +
           std::to_string(g.expected_dim) + " (reported)";
    out.push_back({"-", "supermat", status(*b.supermat), d});
  }
  return out;
}

}  // namespace

Outcome outcome(const ReportBundle& b) {
  bool incomplete = false;
  for (const auto& r : rows(b)) {
    if (r.st == Status::Fail) return Outcome::Fail;
    if (r.st == Status::Incomplete) incomplete = true;
  }
  return incomplete ? Outcome::Incomplete : Outcome::Pass;
}

int exit_code(Outcome o) { return static_cast<int>(o); }

std::string emit_json(const ReportBundle& b) {
  Json j;
  j["schema"] = "superweyl-report/1";
  j["fingerprint"] = b.fingerprint;
  j["threads"] = b.threads;
  Json runs = Json::array();
  for (const RunRecord* r : sorted_runs(b)) {
    Json x;
    x["group"] = spec_name(r->spec);
    x["kind"] = std::string(1, kind_char(r->spec.kind));
    x["n"] = r->spec.n;
    Json checks = Json::object();
    if (r->theorem) checks["closure"] = to_json(*r->theorem);
    if (r->derived) checks["derived"] = to_json(*r->derived);
    if (r->axioms) checks["axioms"] = to_json(*r->axioms);
    if (r->branching) checks["branching"] = to_json(*r->branching);
    if (r->associators) checks["associators"] = to_json(*r->associators);
    x["checks"] = checks;
    x["errors"] = r->errors;
    runs.push_back(x);
  }
  j["runs"] = runs;
  j["supermat"] = b.supermat ? to_json(*b.supermat) : Json(nullptr);
  const Outcome o = outcome(b);
  j["outcome"] = o == Outcome::Pass ? "pass" : o == Outcome::Fail ? "fail" : "incomplete";
  return j.dump(2) + "\n";
}

static std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string emit_markdown(const ReportBundle& b) {
  std::ostringstream os;
  os << "| group | check | status | details |\n";
  os << "|---|---|---|---|\n";
  for (const auto& r : rows(b)) os << "| " << r.group << " | " << r.check << " | " << status_name(r.st) << " | " << cell(r.details) << " |\n";
  return os.str();
}

}  // namespace sw
