#include <kconpath/serialize.hh>

#include <kconpath/graph_io.hh>

namespace kconpath
{
    namespace
    {
        auto optional_vertex(const std::optional<Vertex> & v) -> Json
        {
            return v ? Json(*v) : Json(nullptr);
        }
    }

    auto certificate_to_json(const PathCertificate & cert, const Graph & g) -> Json
    {
        Json trace = Json::array();
        for (auto & e : cert.trace)
            trace.push_back({
                {"kind", e.kind},
                {"depth", e.depth},
                {"path_order", e.path_order},
                {"cut", e.cut},
                {"fragment", e.fragment},
                {"pivot", optional_vertex(e.pivot)},
                {"entry", optional_vertex(e.entry)},
                {"minimality_certified", e.minimality_certified},
                {"transfer", {{"mode", e.transfer_mode}, {"holds", e.transfer_holds}}},
            });
        return Json{
            {"schema", schema_tag},
            {"kind", "certificate"},
            {"graph", write_graph6(g)},
            {"k", cert.k},
            {"m", cert.m},
            {"path", cert.path.vertices},
            {"residual_kappa", cert.residual_kappa},
            {"trace", trace},
        };
    }

    auto certificate_from_json(const Json & doc) -> PathCertificate
    {
        try {
            if (doc.value("schema", "") != schema_tag)
                throw ParseError("certificate: expected schema " + std::string(schema_tag));
            PathCertificate cert;
            cert.k = doc.at("k").get<int>();
            cert.m = doc.at("m").get<int>();
            cert.path.vertices = doc.at("path").get<std::vector<Vertex>>();
            cert.residual_kappa = doc.value("residual_kappa", 0);
            return cert;
        }
        catch (const Json::exception & e) {
            throw ParseError(std::string("certificate: ") + e.what());
        }
    }

    auto report_to_json(const OracleReport & report, int k, int m) -> Json
    {
        Json witnesses = Json::array();
        for (auto & p : report.witness_paths)
            witnesses.push_back(p.vertices);
        return Json{
            {"schema", schema_tag},
            {"kind", "oracle_report"},
            {"instance_id", report.instance_id},
            {"k", k},
            {"m", m},
            {"hypothesis_ok", report.hypothesis_ok},
            {"witness_count", report.witness_count},
            {"witness_paths", witnesses},
            {"truncated", report.witness_paths.size() < report.witness_count},
            {"violated_claims", report.violated_claims},
        };
    }

    auto genspec_to_json(const GenSpec & spec) -> Json
    {
        Json params = Json::object();
        for (auto & [key, value] : spec.parameters)
            params[key] = value;
        return Json{{"kind", spec.kind}, {"parameters", params}, {"seed", spec.seed}};
    }

    auto genspec_from_json(const Json & doc) -> GenSpec
    {
        try {
            GenSpec spec;
            spec.kind = doc.at("kind").get<std::string>();
            if (doc.contains("parameters"))
                for (auto & [key, value] : doc.at("parameters").items())
                    spec.parameters[key] = value.get<long long>();
            spec.seed = doc.value("seed", std::uint64_t{0});
            return spec;
        }
        catch (const Json::exception & e) {
            throw ParseError(std::string("generator spec: ") + e.what());
        }
    }
}
