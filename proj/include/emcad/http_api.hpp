#pragma once

// /api/v1 routes. `route` is transport independent so it can be tested
// without sockets; ApiServer binds it to cpp-httplib.

#include <map>
#include <memory>
#include <string>

#include "emcad/workbench.hpp"

namespace httplib {
class Server;
}

namespace emcad::http {

struct Request {
    std::string method;  // GET, POST, DELETE
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct Response {
    int status = 200;
    std::string body;  // canonical JSON text
    std::string content_type = "application/json";
};

Response route(workbench::ProjectStore& store, const Request& req);

class ApiServer {
public:
    explicit ApiServer(workbench::ProjectStore& store);
    ~ApiServer();
    ApiServer(const ApiServer&) = delete;
    ApiServer& operator=(const ApiServer&) = delete;

    // Returns the bound port (port 0 picks a free one); IoError on failure.
    int bind(const std::string& host, int port);
    void listen();  // blocks until stop()
    void stop();

private:
    workbench::ProjectStore& store_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace emcad::http
