#include "dioph/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dioph/error.hpp"
#include "dioph/parse.hpp"
#include "dioph/render.hpp"

namespace dioph {

std::vector<std::pair<Poly, Poly>> parse_seed_pairs(const std::string& text) {
  std::vector<std::pair<Poly, Poly>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto semi = line.find(';');
    if (semi == std::string::npos) throw SyntaxError(line.size(), "expected 'expr ; expr'");
    auto polys = parse_polys({line.substr(0, semi), line.substr(semi + 1)});
    out.emplace_back(std::move(polys[0]), std::move(polys[1]));
  }
  return out;
}

namespace {

struct Options {
  long n = 1;
  bool json = false;
  int max_index = 6;
  int max_degree = 5;
  int zx_degree = 1;
  int coef_bound = 5;
  std::string seed_pairs;
  std::string field;
  std::vector<std::string> elems;
};

std::optional<FieldSpec> field_of(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_field(o.field);
}

std::vector<Poly> elements(const Options& o, std::size_t arity = 0) {
  if (arity != 0 && o.elems.size() != arity)
    throw Error(Errc::WrongArity, "expected " + std::to_string(arity) + " elements, got " +
                                      std::to_string(o.elems.size()));
  if (o.elems.empty()) throw Error(Errc::WrongArity, "expected at least one element");
  return parse_polys(o.elems, field_of(o));
}

TripleData triple_of(const Options& o) { return extend_triple(elements(o, 3), o.n); }

std::string list(const std::vector<Poly>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + render(ps[i]);
  return s + "}";
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto res = verify_tuple(elements(o), o.n);
  if (o.json) {
    out << document("verify", to_json(res, o.n));
    return res.report.ok ? 0 : 1;
  }
  out << (res.report.ok ? "ok" : "not a D(" + std::to_string(o.n) + ")-tuple") << ": " << list(res.sorted) << " over "
      << res.sorted.front().spec().name() << "\n";
  for (const auto& w : res.report.warnings) out << "warning: " << w << "\n";
  for (const auto& f : res.report.failures)
    out << "  e" << f.i << "*e" << f.j << " + n = " << render(f.value) << " is not a square\n";
  if (res.tuple) {
    const DTuple& t = *res.tuple;
    std::vector<Poly> roots;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) roots.push_back(t.witness(i, j));
    out << "witnesses: " << list(roots) << "\n";
    if (t.size() == 3) out << "regular: " << (is_regular_triple(t) ? "yes" : "no") << "\n";
    if (t.size() == 4) out << "regular: " << (is_regular_quadruple(t) ? "yes" : "no") << "\n";
  }
  return res.report.ok ? 0 : 1;
}

int cmd_witnesses(const Options& o, std::ostream& out) {
  auto res = verify_tuple(elements(o, 3), o.n);
  if (!res.report.ok) throw Error(Errc::NotADTriple, list(res.sorted));
  const Witnesses w = triple_witnesses(*res.tuple);
  if (o.json) {
    out << document("witnesses", {{"triple", to_json(res.sorted)}, {"r", render(w.r)}, {"s", render(w.s)},
                                  {"t", render(w.t)}});
  } else {
    out << "r = " << render(w.r) << "\ns = " << render(w.s) << "\nt = " << render(w.t) << "\n";
  }
  return 0;
}

int cmd_extend_pair(const Options& o, std::ostream& out) {
  const auto e = elements(o, 2);
  const PairExtension ext = extend_pair(e[0], e[1], o.n);
  if (o.json) {
    out << document("extend-pair",
                    {{"pair", to_json(e)}, {"r", render(ext.r)}, {"c_plus", render(ext.c_plus)},
                     {"c_minus", render(ext.c_minus)}});
  } else {
    out << "r = " << render(ext.r) << "\nc+ = " << render(ext.c_plus) << "\nc- = " << render(ext.c_minus) << "\n";
  }
  return 0;
}

int cmd_extend_triple(const Options& o, std::ostream& out) {
  const TripleData t = triple_of(o);
  if (o.json) {
    out << document("extend-triple", to_json(t));
    return 0;
  }
  out << "triple " << list({t.a, t.b, t.c}) << "\n";
  out << "r = " << render(t.r) << ", s = " << render(t.s) << ", t = " << render(t.t) << "\n";
  auto show = [&](const char* name, const RootExtension& e) {
    out << name << " = " << render(e.d) << "  (u = " << render(e.u) << ", v = " << render(e.v)
        << ", w = " << render(e.w) << ")";
    if (!e.proper) out << " improper";
    if (e.quadruple) out << " regular quadruple";
    out << "\n";
  };
  show("d-", t.minus);
  show("d+", t.plus);
  if (!t.integral_roots) out << "note: d has non-integral coefficients\n";
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const TripleData t = triple_of(o);
  const Classification c = classify_triple(t);
  const bool ok = c.primary != TripleClass::Unclassified && c.checks_pass();
  if (o.json) {
    Json body = to_json(c);
    body["d_minus"] = render(t.d_minus());
    out << document("classify", body);
    return ok ? 0 : 1;
  }
  out << "class " << to_string(c.primary);
  if (c.labels.size() > 1) {
    out << " (labels:";
    for (auto l : c.labels) out << " " << to_string(l);
    out << ")";
  }
  out << "\nd- = " << render(t.d_minus()) << "\n";
  for (const auto& ch : c.checks) out << "  " << (ch.ok ? "ok   " : "FAIL ") << ch.name << "\n";
  return ok ? 0 : 1;
}

int cmd_recur(const Options& o, std::ostream& out) {
  auto t = std::make_shared<const TripleData>(triple_of(o));
  const InitialCatalog cat = enumerate_initials(*t);
  Json runs = Json::array();
  for (const auto& init : cat.initials) {
    RecurrencePair seq = advance(RecurrencePair(t, init), std::max(0, o.max_index - 1), false);
    if (o.json) {
      Json run;
      run["initials"] = to_json(init);
      run["v"] = to_json(seq.v());
      run["w"] = to_json(seq.w());
      run["flags"] = seq.flags();
      runs.push_back(run);
      continue;
    }
    out << "initials z0 = " << render(init.z0) << ", x0 = " << render(init.x0) << "; z1 = " << render(init.z1)
        << ", y1 = " << render(init.y1) << "\n";
    for (int m = 0; m <= seq.max_index(); ++m)
      out << "  v_" << m << " = " << render(seq.v()[m]) << "\n  w_" << m << " = " << render(seq.w()[m]) << "\n";
    for (const auto& f : seq.flags()) out << "  flag: " << f << "\n";
  }
  if (o.json) {
    Json trace = Json::array();
    for (const auto& c : cat.trace)
      trace.push_back({{"equation", c.tag == PellEquation::A ? "A" : "B"}, {"label", c.label}, {"z", render(c.z)},
                       {"accepted", c.accepted}, {"reason", c.reason}});
    out << document("recur", {{"runs", runs}, {"candidates", trace}});
  }
  return 0;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const TripleData t = triple_of(o);
  const auto recs = intersect(t, o.max_index);
  bool bad = false;
  for (const auto& r : recs) bad = bad || (r.squares && r.proper && !r.regular);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : recs) arr.push_back(to_json(r));
    out << document("intersect", {{"triple", to_json(std::vector<Poly>{t.a, t.b, t.c})}, {"intersections", arr}});
    return bad ? 1 : 0;
  }
  for (const auto& r : recs) {
    out << "v_" << r.m << " = w_" << r.n << " = " << render(r.z) << "  (z0 = " << render(r.initials.z0)
        << ", z1 = " << render(r.initials.z1) << ")  d = " << render(r.d) << " [" << to_string(r.kind) << "]"
        << (r.regular ? " regular" : " irregular") << "\n";
  }
  out << recs.size() << " intersections\n";
  return bad ? 1 : 0;
}

int cmd_congruences(const Options& o, std::ostream& out) {
  auto t = std::make_shared<const TripleData>(triple_of(o));
  const InitialCatalog cat = enumerate_initials(*t);
  bool ok = true;
  Json runs = Json::array();
  for (const auto& init : cat.initials) {
    RecurrencePair seq = advance(RecurrencePair(t, init), std::max(0, o.max_index - 1), false);
    const CongruenceReport rep = check_congruences(seq, o.max_index);
    ok = ok && rep.all_pass();
    if (o.json) {
      runs.push_back({{"initials", to_json(init)}, {"report", to_json(rep)}});
    } else {
      const auto failed = std::count_if(rep.records.begin(), rep.records.end(), [](auto& r) { return !r.pass; });
      out << "z0 = " << render(init.z0) << ", z1 = " << render(init.z1) << ": " << rep.records.size() << " checks, "
          << failed << " failed\n";
      for (const auto& r : rep.records)
        if (!r.pass) out << "  FAIL " << r.law << " " << r.sequence << "_" << r.index << "\n";
    }
  }
  if (o.json) out << document("check-congruences", {{"runs", runs}, {"all_pass", ok}});
  return ok ? 0 : 1;
}

void print_report(const SearchReport& r, std::ostream& out) {
  out << r.kind << ": n = " << r.n << ", max degree " << r.max_degree;
  if (r.kind == "theorem") {
    out << ", max index " << r.max_index << "\n";
    out << "  triples " << r.candidates << ", intersections " << r.intersections << ", improper " << r.improper
        << ", quadruples " << r.quadruples << " (" << r.found.size() << " distinct)\n";
  } else {
    out << ", coefficient bound " << r.coef_bound << "\n";
    out << "  polynomials " << r.candidates << ", pair tests " << r.pair_tests << ", edges " << r.edges
        << ", quadruples " << r.quadruples << ", quintuples " << r.quintuples << "\n";
  }
  out << "  irregular " << r.irregular << ", unexpected " << r.unexpected << ", counterexamples "
      << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) out << "  candidate " << list(c.elems) << ": " << c.note << "\n";
  out << "  wall time " << std::fixed << std::setprecision(1) << r.wall_ms << " ms\n";
  out << (r.confirmed() ? "confirmed" : "COUNTEREXAMPLE CANDIDATE") << "\n";
}

int cmd_search_theorem(const Options& o, std::ostream& out) {
  std::vector<std::pair<Poly, Poly>> seeds;
  if (o.seed_pairs.empty()) {
    seeds = parse_seed_pairs("X - 1 ; X + 1\nX ; X + 2\n1 ; 3\n");
  } else {
    std::ifstream in(o.seed_pairs);
    if (!in) throw Error(Errc::PreconditionFailed, "cannot read " + o.seed_pairs);
    std::stringstream buf;
    buf << in.rdbuf();
    seeds = parse_seed_pairs(buf.str());
  }
  const Corpus corpus = build_corpus(o.max_degree, seeds);
  const SearchReport r = theorem_check(corpus, o.max_index);
  if (o.json) {
    out << document("search-theorem", to_json(r));
  } else {
    print_report(r, out);
  }
  return r.confirmed() ? 0 : 1;
}

int cmd_search_zx(const Options& o, std::ostream& out) {
  const long root = std::lround(std::sqrt(static_cast<double>(std::max(0L, o.n))));
  const bool square = o.n > 0 && root * root == o.n;
  const SearchReport r = square ? zx_square_quintuple_search(o.n, o.zx_degree, o.coef_bound)
                                : zx_nonsquare_search(o.n, o.zx_degree, o.coef_bound);
  if (o.json) {
    out << document("search-zx", to_json(r));
  } else {
    print_report(r, out);
  }
  return r.confirmed() ? 0 : 1;
}

int cmd_examples(const Options& o, std::ostream& out) {
  const auto results = run_fixtures();
  const bool ok = std::all_of(results.begin(), results.end(), [](const FixtureResult& r) { return r.pass; });
  if (o.json) {
    out << document("examples", {{"fixtures", to_json(results)}, {"all_pass", ok}});
    return ok ? 0 : 1;
  }
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results)
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
        << r.detail << "\n";
  return ok ? 0 : 1;
}

bool usage_error(Errc c) {
  switch (c) {
    case Errc::SyntaxError:
    case Errc::MixedRadicands:
    case Errc::InvalidField:
    case Errc::WrongArity:
    case Errc::BoundsTooLarge:
    case Errc::PreconditionFailed: return true;
    default: return false;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial Diophantine m-tuples", "dioph"};
  app.require_subcommand(1);
  Options o;
  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* help, Handler h, bool takes_elems) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", o.n, "the n in D(n)");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--field", o.field, "coefficient field, e.g. sqrt5");
    if (takes_elems) sub->add_option("elems", o.elems, "polynomials in X");
    commands.emplace_back(sub, h);
    return sub;
  };
  add("verify", "check a D(n)-tuple", cmd_verify, true);
  add("witnesses", "square roots r, s, t of a triple", cmd_witnesses, true);
  add("extend-pair", "regular third elements of a pair", cmd_extend_pair, true);
  add("extend-triple", "d+ and d- of a triple", cmd_extend_triple, true);
  add("classify", "degree-case classification of a D(1)-triple", cmd_classify, true);
  add("recur", "Pellian recurrences of a D(1)-triple", cmd_recur, true)->add_option("--max-index", o.max_index);
  add("intersect", "solutions of v_m = w_n", cmd_intersect, true)->add_option("--max-index", o.max_index);
  add("check-congruences", "congruences of the recurrences", cmd_congruences, true)
      ->add_option("--max-index", o.max_index);
  CLI::App* theorem = add("search-theorem", "regularity check over a generated corpus", cmd_search_theorem, false);
  theorem->add_option("--max-index", o.max_index);
  theorem->add_option("--max-degree", o.max_degree);
  theorem->add_option("--seed-pairs", o.seed_pairs, "file with one 'expr ; expr' pair per line");
  CLI::App* zx = add("search-zx", "brute-force clique search in Z[X]", cmd_search_zx, false);
  zx->add_option("--max-degree", o.zx_degree);
  zx->add_option("--coef-bound", o.coef_bound);
  add("examples", "run the worked examples", cmd_examples, false);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(o, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return usage_error(e.code()) ? 2 : 1;
    }
  }
  return 2;
}

}  // namespace dioph
