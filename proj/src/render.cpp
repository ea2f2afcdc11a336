#include "dioph/render.hpp"

namespace dioph {

Json to_json(const Poly& p) { return render(p); }

Json to_json(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(render(p));
  return out;
}

Json to_json(const VerifyResult& v, long n) {
  Json out;
  out["n"] = n;
  out["ok"] = v.report.ok;
  out["elements"] = to_json(v.sorted);
  out["field"] = v.sorted.empty() ? "Q" : v.sorted.front().spec().name();
  Json fails = Json::array();
  for (const auto& f : v.report.failures)
    fails.push_back({{"i", f.i}, {"j", f.j}, {"value", render(f.value)}});
  out["failures"] = fails;
  out["warnings"] = v.report.warnings;
  if (v.tuple) {
    Json wit = Json::array();
    const DTuple& t = *v.tuple;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j)
        wit.push_back({{"i", i}, {"j", j}, {"root", render(t.witness(i, j))}});
    out["witnesses"] = wit;
  }
  return out;
}

namespace {

Json root_json(const RootExtension& e) {
  Json out;
  out["d"] = render(e.d);
  out["u"] = render(e.u);
  out["v"] = render(e.v);
  out["w"] = render(e.w);
  out["proper"] = e.proper;
  out["quadruple"] = e.quadruple.has_value();
  if (e.quadruple) out["regular"] = is_regular_quadruple(*e.quadruple);
  return out;
}

}  // namespace

Json to_json(const TripleData& t) {
  Json out;
  out["n"] = t.n();
  out["field"] = t.a.spec().name();
  out["triple"] = to_json(std::vector<Poly>{t.a, t.b, t.c});
  out["r"] = render(t.r);
  out["s"] = render(t.s);
  out["t"] = render(t.t);
  out["degrees"] = {t.alpha, t.beta, t.gamma};
  out["d_plus"] = root_json(t.plus);
  out["d_minus"] = root_json(t.minus);
  out["integral_roots"] = t.integral_roots;
  return out;
}

Json to_json(const Classification& c) {
  Json out;
  out["class"] = to_string(c.primary);
  Json labels = Json::array();
  for (auto l : c.labels) labels.push_back(to_string(l));
  out["labels"] = labels;
  Json checks = Json::array();
  for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"ok", ch.ok}});
  out["checks"] = checks;
  if (c.d_minus_degree >= 0) {
    out["d_minus_degree"] = c.d_minus_degree;
  } else {
    out["d_minus_degree"] = nullptr;
  }
  return out;
}

Json to_json(const InitialData& d) {
  return {{"z0", render(d.z0)}, {"x0", render(d.x0)}, {"d0", render(d.d0)}, {"z1", render(d.z1)},
          {"y1", render(d.y1)}, {"d1", render(d.d1)}, {"label0", d.label0}, {"label1", d.label1}};
}

Json to_json(const IntersectionRecord& r) {
  return {{"initials", to_json(r.initials)},
          {"m", r.m},
          {"n", r.n},
          {"z", render(r.z)},
          {"d", render(r.d)},
          {"kind", to_string(r.kind)},
          {"squares", r.squares},
          {"proper", r.proper},
          {"regular", r.regular}};
}

Json to_json(const CongruenceReport& r) {
  Json recs = Json::array();
  for (const auto& c : r.records)
    recs.push_back({{"law", c.law}, {"sequence", std::string(1, c.sequence)}, {"index", c.index}, {"pass", c.pass}});
  return {{"all_pass", r.all_pass()}, {"records", recs}};
}

Json to_json(const PellSolution& s) { return {{"z", render(s.z)}, {"x", render(s.x)}}; }

Json to_json(const SearchReport& r) {
  Json out;
  out["kind"] = r.kind;
  out["bounds"] = {{"n", r.n}, {"max_degree", r.max_degree}, {"coef_bound", r.coef_bound}, {"max_index", r.max_index}};
  out["candidates"] = r.candidates;
  out["pair_tests"] = r.pair_tests;
  out["edges"] = r.edges;
  out["intersections"] = r.intersections;
  out["improper"] = r.improper;
  out["quadruples"] = r.quadruples;
  out["quintuples"] = r.quintuples;
  out["irregular"] = r.irregular;
  out["unexpected"] = r.unexpected;
  Json found = Json::array();
  for (const auto& f : r.found) found.push_back(to_json(f));
  out["found"] = found;
  Json ces = Json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"elements", to_json(c.elems)}, {"n", c.n}, {"delta_bound", c.delta_bound}, {"note", c.note}});
  out["counterexamples"] = ces;
  out["confirmed"] = r.confirmed();
  return out;
}

Json to_json(const std::vector<FixtureResult>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return out;
}

std::string document(const std::string& command, Json body) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  doc["result"] = std::move(body);
  return doc.dump(2) + "\n";
}

}  // namespace dioph
