#ifndef KCONPATH_SERIALIZE_HH
#define KCONPATH_SERIALIZE_HH

#include <kconpath/generators.hh>
#include <kconpath/oracle.hh>
#include <kconpath/removable_path.hh>

#include <json.hpp>

namespace kconpath
{
    using Json = nlohmann::ordered_json;

    inline constexpr const char * schema_tag = "kconpath/1";

    /// Certificate document; `graph` carries the host graph in graph6.
    auto certificate_to_json(const PathCertificate & cert, const Graph & g) -> Json;

    /// Reads the path, k, m and residual_kappa back; the trace is ignored.
    /// Throws ParseError on a malformed document or a foreign schema.
    auto certificate_from_json(const Json & doc) -> PathCertificate;

    auto report_to_json(const OracleReport & report, int k, int m) -> Json;

    auto genspec_to_json(const GenSpec & spec) -> Json;
    auto genspec_from_json(const Json & doc) -> GenSpec;
}

#endif
