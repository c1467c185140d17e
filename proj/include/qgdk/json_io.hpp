#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "qgdk/corpus.hpp"

namespace qgdk {

// Insertion-ordered documents keep serialization byte-stable.
using Json = nlohmann::ordered_json;

// Malformed documents and schema violations; the CLI maps this to exit 2.
struct JsonError : std::runtime_error {
  explicit JsonError(const std::string& m) : std::runtime_error(m) {}
};

std::string fieldTag(unsigned long p);
unsigned long parseFieldTag(const Json& doc);
std::string schemaOf(const Json& doc);

Json toJson(const FinAlgebra& a);
Json toJson(const WeakBialgebra& h);
Json toJson(const WeakHopf& h);
Json toJson(const Coring& c);
Json toJson(const Bialgebroid& b);
Json toJson(const ModuleCoalgebraB& m);
Json toJson(const ComoduleAlgebraB& a);
Json toJson(const DKDatumB& d);
Json toJson(const DKModule& m);
Json toJson(const ModuleCoalgebraW& m);
Json toJson(const ComoduleAlgebraW& a);
Json toJson(const DKDatumW& d);
Json toJson(const Report& r);

FinAlgebra algebraFromJson(const Json& doc);
WeakBialgebra weakBialgebraFromJson(const Json& doc);
WeakHopf weakHopfFromJson(const Json& doc);
Coring coringFromJson(const Json& doc);
Bialgebroid bialgebroidFromJson(const Json& doc);
ModuleCoalgebraB moduleCoalgebraBFromJson(const Json& doc);
ComoduleAlgebraB comoduleAlgebraBFromJson(const Json& doc);
DKDatumB dkDatumBFromJson(const Json& doc);
DKModule dkModuleFromJson(const Json& doc);
ModuleCoalgebraW moduleCoalgebraWFromJson(const Json& doc);
ComoduleAlgebraW comoduleAlgebraWFromJson(const Json& doc);
DKDatumW dkDatumWFromJson(const Json& doc);

Json loadJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const Json& doc);

}  // namespace qgdk
