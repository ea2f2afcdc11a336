#ifndef DIOPH_RENDER_HPP
#define DIOPH_RENDER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "dioph/fixtures.hpp"
#include "dioph/search.hpp"

namespace dioph {

using Json = nlohmann::json;

Json to_json(const Poly& p);
Json to_json(const std::vector<Poly>& ps);
Json to_json(const VerifyResult& v, long n);
Json to_json(const TripleData& t);
Json to_json(const Classification& c);
Json to_json(const InitialData& d);
Json to_json(const IntersectionRecord& r);
Json to_json(const CongruenceReport& r);
Json to_json(const PellSolution& s);
/// Wall time is left out so identical runs give identical documents.
Json to_json(const SearchReport& r);
Json to_json(const std::vector<FixtureResult>& rs);

/// Wraps `body` with "schema": 1 and the command name, pretty-printed.
std::string document(const std::string& command, Json body);

}  // namespace dioph

#endif  // DIOPH_RENDER_HPP
