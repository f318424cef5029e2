#include "devmatch/service.hpp"

#include "devmatch/matcher.hpp"
#include "devmatch/process.hpp"
#include "documents.hpp"

#include "httplib.h"

namespace devmatch {

namespace {

using detail::Json;

constexpr const char* kJson = "application/json";

Response json_response(int status, const Json& body) { return {status, detail::dump(body)}; }

Response error_response(const Error& e) {
    // Syntax and type errors are the client's framing problem; well-formed
    // documents with bad values get field-level 422s.
    int status = 400;
    if (e.kind() == ErrorKind::OutOfRange || e.kind() == ErrorKind::UnknownKey) status = 422;
    Json errors = Json::array();
    for (const auto& v : e.violations()) errors.push_back(Json{{"path", v.path}, {"message", v.message}});
    return json_response(status, Json{{"error", to_string(e.kind())}, {"errors", std::move(errors)}});
}

Response bad_request(const std::string& path, const std::string& message) {
    return error_response(Error(ErrorKind::Malformed, path, message));
}

} // namespace

Service::Service(Catalog catalog) : catalog_(std::move(catalog)) {
    catalog_body_ = detail::dump(Json{{"catalog_version", catalog_.version()},
                                      {"catalog", detail::catalog_to_json(catalog_)},
                                      {"categories", detail::scales_to_json(catalog_.scales())}});
}

Response Service::get_catalog() const { return {200, catalog_body_}; }

Response Service::post_match(std::string_view body) const {
    try {
        Json json = detail::parse_json(body, "request");
        if (!json.is_object()) return bad_request("", "request body must be an object");

        std::optional<Json> plan_json;
        if (auto it = json.find("plan"); it != json.end()) {
            plan_json = *it;
            json.erase("plan");
        }
        const DisabilityProfile profile = detail::profile_from_json(json);
        const MatchReport report = match_profile(profile, catalog_);

        std::vector<FeasibilityFinding> findings;
        if (plan_json) {
            findings = validate_workstation(detail::plan_from_json(*plan_json), catalog_, profile);
        }
        Json out = detail::report_to_json(report);
        out["findings"] = detail::findings_to_json(findings);
        return json_response(200, out);
    } catch (const Error& e) {
        return error_response(e);
    }
}

Response Service::post_validate(std::string_view body) const {
    try {
        const Json json = detail::parse_json(body, "request");
        if (!json.is_object()) return bad_request("", "request body must be an object");
        for (const auto& [key, value] : json.items()) {
            if (key != "plan" && key != "profile") return bad_request(key, "unknown field '" + key + "'");
        }
        if (!json.contains("plan")) return bad_request("plan", "missing field");
        const WorkstationPlan plan = detail::plan_from_json(json.at("plan"));
        const DisabilityProfile profile =
            json.contains("profile") ? detail::profile_from_json(json.at("profile")) : zero_profile();
        const auto findings = validate_workstation(plan, catalog_, profile);
        return json_response(200, Json{{"catalog_version", catalog_.version()},
                                       {"feasible", !has_errors(findings)},
                                       {"findings", detail::findings_to_json(findings)}});
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnknownDevice) {
            Response r = error_response(e);
            r.status = 400;
            return r;
        }
        return error_response(e);
    }
}

void install_routes(httplib::Server& server, const Service& service, ServerOptions options) {
    if (options.permissive_cors) {
        server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                    {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                    {"Access-Control-Allow-Headers", "Content-Type"}});
        server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    }
    auto reply = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body, kJson);
    };
    server.Get("/api/catalog", [&service, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, service.get_catalog());
    });
    server.Post("/api/match", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.post_match(req.body));
    });
    server.Post("/api/validate", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.post_validate(req.body));
    });
}

} // namespace devmatch
