#include "dioph/fixtures.hpp"

#include "dioph/error.hpp"
#include "dioph/parse.hpp"
#include "dioph/pellian.hpp"

namespace dioph {

namespace {

const char* const kB10 =
    "12500000000*X^10 + 26000000000*X^9 + 23070000000*X^8 + 11392000000*X^7 + 3424950000*X^6"
    " + 644520000*X^5 + 75187000*X^4 + 5200000*X^3 + 194525*X^2 + 3300*X + 15";
const char* const kC12 =
    "1250000000000*X^12 + 3100000000000*X^11 + 3372000000000*X^10 + 2114000000000*X^9 + 844190000000*X^8"
    " + 224024000000*X^7 + 40005200000*X^6 + 4764480000*X^5 + 367264500*X^4 + 17315400*X^3 + 452640*X^2"
    " + 5500*X + 96/5";
const char* const kD8 =
    "125000000*X^8 + 210000000*X^7 + 144200000*X^6 + 52040000*X^5 + 10562000*X^4 + 1195600*X^3"
    " + 70160*X^2 + 1800*X + 56/5";

}  // namespace

const std::vector<NamedTriple>& named_triples() {
  static const std::vector<NamedTriple> table = {
      {"fermat-triple", {"1", "3", "8"}, 1, "0", TripleClass::Unclassified},
      {"regular-1", {"1", "X^2 + 2*X", "X^2 + 4*X + 3"}, 1, "0", TripleClass::L4_1},
      {"regular-2", {"X - 1", "X + 1", "4*X"}, 1, "0", TripleClass::L4_1},
      {"case-2a", {"4/3", "(4*X^2 + 2*X - 2)/3", "12*X^2 + 6*X"}, 1, "4/3", TripleClass::L4_2a},
      {"case-2b", {"125*X^2 + 50*X", kB10, kC12}, 1, "1/5", TripleClass::L4_2b},
      {"case-3a", {"16*X^3 - 4*X", "64*X^5 - 48*X^3 + 8*X",
                   "4096*X^9 + 4096*X^8 - 4096*X^7 - 4096*X^6 + 1408*X^5 + 1280*X^4 - 192*X^3 - 128*X^2 + 9*X + 3"},
       1, "X + 1", TripleClass::L4_3a},
      {"case-3b", {"1/5", kB10, kC12}, 1, "125*X^2 + 50*X", TripleClass::L4_3b},
      {"case-3c", {"X - 1", "X + 1", "16*X^3 - 4*X"}, 1, "4*X", TripleClass::L4_3c},
      {"case-3d", {"1/5", "(625*X^2 + 250*X)/5", kB10}, 1, kD8, TripleClass::L4_3d},
      {"d5-triple", {"X", "4*X + 4*sqrt(5)", "9*X + 6*sqrt(5)"}, 5, "0", TripleClass::Unclassified},
  };
  return table;
}

std::vector<Poly> d5_quadruple() {
  return parse_polys({"X", "4*X + 4*sqrt(5)", "9*X + 6*sqrt(5)", "144/5*X^3 + 48*sqrt(5)*X^2 + 124*X + 20*sqrt(5)"});
}

std::vector<FixtureResult> run_fixtures() {
  std::vector<FixtureResult> out;
  auto record = [&](std::string name, auto&& body) {
    FixtureResult r{std::move(name), false, ""};
    try {
      r.detail = body(r.pass);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };

  record("fermat-quadruple", [](bool& pass) {
    auto res = verify_tuple(parse_polys({"1", "3", "8", "120"}), 1);
    pass = res.report.ok && is_regular_quadruple(*res.tuple);
    return std::string("{1, 3, 8, 120} regular D(1)-quadruple");
  });
  record("d5-quadruple", [](bool& pass) {
    auto res = verify_tuple(d5_quadruple(), 5);
    pass = res.report.ok && is_regular_quadruple(*res.tuple);
    return std::string("regular D(5)-quadruple over Q(sqrt(5))");
  });
  for (const auto& nt : named_triples()) {
    record(nt.name, [&](bool& pass) {
      const auto elems = parse_polys(nt.elems);
      TripleData data = extend_triple(elems, nt.n);
      const Poly expected = parse_poly(nt.d_minus, elems.front().spec());
      pass = data.d_minus() == expected;
      std::string detail = "d- = " + render(data.d_minus());
      if (nt.expected != TripleClass::Unclassified) {
        const Classification cls = classify_triple(data);
        bool labelled = false;
        for (TripleClass c : cls.labels) labelled = labelled || c == nt.expected;
        pass = pass && labelled && cls.checks_pass();
        detail += ", class " + to_string(cls.primary);
        if (cls.primary != nt.expected) detail += " (also " + to_string(nt.expected) + ")";
      }
      return detail;
    });
  }
  record("intersection-v2-w2", [](bool& pass) {
    TripleData data = extend_triple(parse_polys({"X - 1", "X + 1", "4*X"}), 1);
    const Poly z = parse_poly("8*X^2 - 1");
    const Poly d = parse_poly("16*X^3 - 4*X");
    pass = false;
    for (const auto& rec : intersect(data, 3, Exec::Serial)) {
      if (rec.m == 2 && rec.n == 2 && rec.initials.z0 == parse_poly("-1") && rec.initials.z1 == parse_poly("-1") &&
          rec.z == z && rec.d == d && rec.regular)
        pass = true;
    }
    return std::string("v_2 = w_2 = 8X^2 - 1 gives d = 16X^3 - 4X");
  });
  return out;
}

std::vector<TripleData> fixture_triples() {
  std::vector<TripleData> out;
  for (const auto& nt : named_triples()) {
    if (nt.n != 1) continue;
    out.push_back(extend_triple(parse_polys(nt.elems), 1));
  }
  // D(5) -> D(1): divide every element by sqrt(5).
  const auto quad = d5_quadruple();
  const FieldSpec spec = quad.front().spec();
  const Poly scale(FieldElem(mpq_class(0), mpq_class(1, 5), spec));
  for (std::size_t skip = 0; skip < quad.size(); ++skip) {
    std::vector<Poly> elems;
    for (std::size_t i = 0; i < quad.size(); ++i)
      if (i != skip) elems.push_back(quad[i] * scale);
    out.push_back(extend_triple(std::move(elems), 1));
  }
  return out;
}

}  // namespace dioph
