#include "devmatch/catalog.hpp"
#include "devmatch/service.hpp"

#include "CLI11.hpp"
#include "httplib.h"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"HTTP facade for the devmatch configurator", "devmatch-service"};
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string catalog_path;
    bool cors = false;
    app.add_option("--port", port, "Listen port")->check(CLI::Range(1, 65535));
    app.add_option("--host", host, "Listen address");
    app.add_option("--catalog", catalog_path, "Catalog document (default: built-in)")->envname("DEVMATCH_CATALOG");
    app.add_flag("--cors", cors, "Allow cross-origin requests (local UI development)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    devmatch::Catalog catalog = devmatch::default_catalog();
    if (!catalog_path.empty()) {
        std::ifstream file(catalog_path, std::ios::binary);
        if (!file) {
            std::cerr << "devmatch-service: cannot read '" << catalog_path << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << file.rdbuf();
        try {
            catalog = devmatch::load_catalog(buf.str());
        } catch (const devmatch::Error& e) {
            std::cerr << "devmatch-service: " << e.what() << '\n';
            return 2;
        }
    }

    const devmatch::Service service(std::move(catalog));
    httplib::Server server;
    devmatch::install_routes(server, service, {.permissive_cors = cors});
    std::cerr << "devmatch-service: listening on " << host << ':' << port << " (catalog "
              << service.catalog().version() << ")\n";
    if (!server.listen(host, port)) {
        std::cerr << "devmatch-service: cannot listen on " << host << ':' << port << '\n';
        return 1;
    }
    return 0;
}
