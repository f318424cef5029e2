#ifndef DEVMATCH_SERVICE_HPP
#define DEVMATCH_SERVICE_HPP

#include "devmatch/catalog.hpp"

#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace devmatch {

struct Response {
    int status = 200;
    std::string body;
};

/// Request handlers behind the HTTP endpoints. Holds only the read-only
/// catalog; every call is independent of every other.
class Service {
public:
    explicit Service(Catalog catalog);

    /// GET /api/catalog: catalog document plus labeled degree scales.
    Response get_catalog() const;
    /// POST /api/match: body is a profile document, optionally carrying a
    /// `plan` key next to `limbs` and `perception`.
    Response post_match(std::string_view body) const;
    /// POST /api/validate: body is `{"plan": ..., "profile": ...}`.
    Response post_validate(std::string_view body) const;

    const Catalog& catalog() const noexcept { return catalog_; }

private:
    Catalog catalog_;
    std::string catalog_body_;
};

struct ServerOptions {
    bool permissive_cors = false;
};

void install_routes(httplib::Server& server, const Service& service, ServerOptions options = {});

} // namespace devmatch

#endif // DEVMATCH_SERVICE_HPP
