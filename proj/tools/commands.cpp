#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "scottmax/diagonal.hpp"
#include "scottmax/domain.hpp"
#include "scottmax/json_io.hpp"
#include "scottmax/poset.hpp"

namespace scottmax::cli {

using ojson = nlohmann::ordered_json;

int exit_code(Status s) {
  switch (s) {
    case Status::pass:
      return kExitPass;
    case Status::fail:
      return kExitFail;
    case Status::indeterminate:
      return kExitIndeterminate;
  }
  return kExitFail;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::indeterminate:
      return "indeterminate";
  }
  return "fail";
}

ojson Report::to_json() const {
  ojson j;
  j["command"] = command;
  j["status"] = status_name(status);
  j["summary"] = summary;
  j["detail"] = detail;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << '\n';
  os << status_name(status) << ": " << summary << '\n';
  return os.str();
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SCOTTMAX_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10000;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IndexedFamily load_family(const std::string& spec) {
  if (spec == "canonical") return IndexedFamily::canonical();
  return family_from_json(read_file(spec), spec);
}

std::string kind_name(LElem::Kind k) {
  switch (k) {
    case LElem::Kind::xpoint:
      return "xpoint";
    case LElem::Kind::sigma:
      return "sigma";
    case LElem::Kind::sigmastar:
      return "sigmastar";
  }
  return {};
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return "{" + s + "}";
}

}  // namespace

Report run_order(const std::string& us, const std::string& vs) {
  const LElem u = parse_elem(us);
  const LElem v = parse_elem(vs);
  Report r;
  r.command = "order";
  const bool uv = leq(u, v), vu = leq(v, u), ub = has_upper_bound_L(u, v);
  r.detail["u"] = u.to_string();
  r.detail["v"] = v.to_string();
  r.detail["leq"] = uv;
  r.detail["geq"] = vu;
  r.detail["upper_bound"] = ub;
  r.lines.push_back(u.to_string() + " <= " + v.to_string() + ": " + (uv ? "true" : "false"));
  r.lines.push_back(v.to_string() + " <= " + u.to_string() + ": " + (vu ? "true" : "false"));
  r.lines.push_back("common upper bound: " + std::string(yes_no(ub)));
  r.summary = uv && vu ? "equal" : uv ? "u below v" : vu ? "v below u" : "incomparable";
  return r;
}

Report run_l_check(const std::vector<std::string>& elems) {
  Report r;
  r.command = "l-check";
  ojson items = ojson::array();
  for (const auto& text : elems) {
    const LElem u = parse_elem(text);
    ojson item;
    item["elem"] = u.to_string();
    item["kind"] = kind_name(u.kind());
    item["maximal"] = is_maximal(u);
    item["compact"] = is_compact(u);
    std::string line = u.to_string() + ": kind " + kind_name(u.kind()) + ", maximal " + yes_no(is_maximal(u)) +
                       ", compact " + yes_no(is_compact(u));
    if (u.is_sequence()) {
      item["length"] = u.seq().length().to_string();
      line += ", length " + u.seq().length().to_string();
    }
    if (u.is_sigma()) {
      const bool below = less(u, star(u));
      item["strictly_below_star"] = below;
      line += ", strictly below its star " + std::string(yes_no(below));
    }
    if (u.is_x() && u.xindex().n.is_omega()) {
      const LElem sup = chain_sup_X(u.xindex().m, IndexSet::naturals());
      item["column_chain_sup"] = sup.to_string();
      line += ", sup of its column chain " + sup.to_string();
    }
    items.push_back(std::move(item));
    r.lines.push_back(std::move(line));
  }
  r.detail["elements"] = std::move(items);
  r.summary = std::to_string(elems.size()) + " element(s) classified";
  return r;
}

Report run_poset_verify(const std::string& path, bool strict) {
  Relation rel = relation_from_json(read_file(path));
  if (!strict) {
    rel.add_reflexive();
    rel.close_transitively();
  }
  const OrderReport rep = verify_partial_order(rel);
  Report r;
  r.command = "poset-verify";
  r.detail["elements"] = rel.size();
  r.detail["closure_applied"] = !strict;
  ojson viol = ojson::array();
  for (const auto& v : rep.violations) {
    viol.push_back(v.describe(rel));
    r.lines.push_back("violation: " + v.describe(rel));
  }
  r.detail["violations"] = std::move(viol);
  r.status = rep.ok() ? Status::pass : Status::fail;
  r.summary = rep.ok() ? "partial order on " + std::to_string(rel.size()) + " elements"
                       : std::to_string(rep.violations.size()) + " order violation(s)";
  return r;
}

Report run_poset_gdelta(const std::string& path, const std::optional<std::vector<std::string>>& set) {
  const FinitePoset p = poset_from_json(read_file(path));
  Report r;
  r.command = "poset-gdelta";
  const ElementSet mx = maximals(p);
  const bool max_gd = is_gdelta_finite(p, mx);
  r.detail["maximals"] = p.labels_of(mx);
  r.detail["maximals_gdelta"] = max_gd;
  r.lines.push_back("maximal points " + join(p.labels_of(mx)) + " G-delta: " + yes_no(max_gd));

  bool ok = max_gd;
  if (set) {
    const ElementSet s = p.indices_of(*set);
    const bool open = is_scott_open_finite(p, s), gd = is_gdelta_finite(p, s);
    r.detail["set"] = p.labels_of(s);
    r.detail["upset"] = p.labels_of(upset(p, s));
    r.detail["scott_open"] = open;
    r.detail["gdelta"] = gd;
    r.lines.push_back("set " + join(p.labels_of(s)) + ": up-closure " + join(p.labels_of(upset(p, s))) +
                      ", Scott open " + yes_no(open) + ", G-delta " + yes_no(gd));
    ok = gd;
    r.summary = gd ? "set is G-delta" : "set is not G-delta";
  } else {
    r.summary = "Max is G-delta in this finite poset";
  }
  r.status = ok ? Status::pass : Status::fail;
  return r;
}

Report run_sup(int order, const std::optional<std::string>& chain, const std::vector<std::string>& elems) {
  using TC = TwoChainPoset;
  if (order != 1 && order != 2) throw InputError("--order must be 1 or 2");
  TC poset(order == 1 ? TC::Variant::plain : TC::Variant::joined);
  TC::Subset s;
  for (const auto& e : elems) s.members.push_back(TC::parse(e));
  if (chain) {
    if (*chain == "x")
      s.whole_chain = TC::Side::x;
    else if (*chain == "y")
      s.whole_chain = TC::Side::y;
    else
      throw InputError("--chain must be x or y");
  }

  Report r;
  r.command = "sup";
  r.detail["order"] = order;
  std::string desc;
  if (chain) desc = "{" + *chain + "_n : n finite}";
  for (const auto& m : s.members) desc += (desc.empty() ? "" : " + ") + m.to_string();
  r.detail["subset"] = desc;

  auto res = poset.sup(s);
  if (const auto* sup = std::get_if<Sup<TC::Elem>>(&res)) {
    r.detail["sup"] = sup->value.to_string();
    r.summary = "sup " + desc + " = " + sup->value.to_string();
  } else {
    const auto& none = std::get<NoSup<TC::Elem>>(res);
    std::vector<std::string> w;
    for (const auto& e : none.witness) w.push_back(e.to_string());
    r.detail["sup"] = nullptr;
    r.detail["reason"] = none.reason;
    r.detail["witness"] = w;
    r.summary = "no supremum for " + desc + ": " + none.reason + " " + join(w);
  }
  return r;
}

Report run_diag(const DiagOptions& opt) {
  if (opt.depth == 0) throw InputError("--depth must be at least 1");
  const IndexedFamily family = load_family(opt.family);
  Report r;
  r.command = "diag";
  r.detail["family"] = family.name();
  r.detail["depth"] = opt.depth;
  r.detail["budget"] = opt.budget;

  if (opt.check_cover) {
    for (Nat k = 1; k <= opt.depth; ++k) {
      if (auto miss = uncovered_maximal(family.at(k))) {
        r.status = Status::indeterminate;
        r.detail["level"] = k;
        r.detail["uncovered"] = miss->to_string();
        r.summary = "U_" + std::to_string(k) + " misses the maximal element " + miss->to_string() +
                    "; the family does not contain Max(L), nothing to refute";
        return r;
      }
    }
    r.lines.push_back("every U_k, k <= " + std::to_string(opt.depth) + ", contains all maximal elements");
  }

  auto res = diagonalize(family, opt.depth, opt.budget);
  if (const auto* failure = std::get_if<DiagFailure>(&res)) {
    const bool budget = failure->reason == DiagFailure::Reason::budget;
    r.status = budget ? Status::indeterminate : Status::fail;
    r.detail["level"] = failure->level;
    r.detail["reason"] = budget ? "budget" : "closure";
    r.summary = std::string(budget ? "budget exhausted" : "closure violated") + " at level " +
                std::to_string(failure->level) + ": " + failure->detail;
    return r;
  }

  const auto& cert = std::get<DiagCertificate>(res);
  const std::string cert_json = certificate_to_json(cert);
  const CertificateCheck check = check_certificate(cert, family);
  if (opt.out) {
    std::ofstream out(*opt.out, std::ios::binary);
    if (!out) throw InputError("cannot write '" + *opt.out + "'");
    out << cert_json << '\n';
  }
  for (const auto& lv : cert.levels)
    r.lines.push_back("level " + std::to_string(lv.k) + ": n = " + std::to_string(lv.n) + " via generator " +
                      lv.generator.to_string());
  const LElem w = witness_element(cert);
  r.lines.push_back("witness " + w.to_string() + " maximal: " + yes_no(is_maximal(w)));
  r.detail["certificate"] = ojson::parse(cert_json);
  r.detail["witness"] = w.to_string();
  r.detail["verified"] = check.ok;
  if (!check.ok) {
    r.status = Status::fail;
    r.detail["problems"] = check.problems;
    r.summary = "certificate failed verification";
    return r;
  }
  r.summary = "family refuted at depth " + std::to_string(opt.depth) + ": witness in the intersection of U_1..U_" +
              std::to_string(opt.depth) + " but not maximal";
  return r;
}

Report run_cert_verify(const std::string& cert_path, const std::string& family_spec) {
  const DiagCertificate cert = certificate_from_json(read_file(cert_path));
  const IndexedFamily family = load_family(family_spec);
  const CertificateCheck check = check_certificate(cert, family);
  Report r;
  r.command = "cert-verify";
  r.detail["family"] = family.name();
  r.detail["certificate_family"] = cert.family;
  r.detail["depth"] = cert.depth;
  if (cert.family != family.name()) r.lines.push_back("note: certificate names family '" + cert.family + "'");
  for (const auto& p : check.problems) r.lines.push_back("problem: " + p);
  r.detail["problems"] = check.problems;
  r.status = check.ok ? Status::pass : Status::fail;
  r.summary = check.ok ? "certificate verified at depth " + std::to_string(cert.depth)
                       : std::to_string(check.problems.size()) + " problem(s) found";
  return r;
}

Report run_suites(const std::string& scope, const SuiteOptions& opt) {
  std::vector<SuiteReport> reports;
  if (scope == "seq" || scope == "all") reports.push_back(run_sequence_suite(opt));
  if (scope == "L" || scope == "all") reports.push_back(run_domain_suite(opt));
  if (scope == "finite" || scope == "all") reports.push_back(run_finite_suite(opt));
  if (reports.empty()) throw InputError("scope must be seq, L, finite or all");

  Report r;
  r.command = "suites";
  ojson suites = ojson::array();
  bool ok = true;
  for (const auto& rep : reports) {
    ojson s;
    s["scope"] = rep.scope;
    s["notes"] = rep.notes;
    ojson checks = ojson::array();
    r.lines.push_back("[" + rep.scope + "]");
    for (const auto& n : rep.notes) r.lines.push_back("  note: " + n);
    for (const auto& c : rep.checks) {
      ojson cj;
      cj["label"] = c.label;
      cj["cases"] = c.cases;
      cj["violations"] = c.violations;
      if (!c.ok()) cj["counterexample"] = c.first_counterexample;
      checks.push_back(std::move(cj));
      std::ostringstream line;
      line << "  " << (c.ok() ? "ok  " : "FAIL") << "  " << c.label << "  (" << c.cases << " cases, "
           << c.violations << " violations, " << std::fixed << std::setprecision(2) << c.seconds << " s)";
      if (!c.ok()) line << "  first: " << c.first_counterexample;
      r.lines.push_back(line.str());
    }
    s["checks"] = std::move(checks);
    s["ok"] = rep.ok();
    ok = ok && rep.ok();
    suites.push_back(std::move(s));
  }
  r.detail["suites"] = std::move(suites);
  r.status = ok ? Status::pass : Status::fail;
  r.summary = ok ? "all invariants hold" : "invariant violations found";
  if (ok && (scope == "finite" || scope == "all")) r.summary += "; Max is G-delta in every finite poset checked";
  return r;
}

}  // namespace scottmax::cli
