#include "emcad/http_api.hpp"

#include <httplib.h>

#include <sstream>
#include <vector>

#include "emcad/serialize.hpp"

namespace emcad::http {

namespace {

using workbench::error_json;

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : path) {
        if (c == '/') {
            if (!cur.empty()) parts.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(std::move(cur));
    return parts;
}

Response json_response(int status, const Json& j) { return {status, dump_document(j)}; }

Response error(int status, std::string_view code, std::string_view message, std::string_view path = "") {
    return json_response(status, error_json(code, message, path));
}

Json parse_body(const std::string& body) {
    if (body.empty()) return Json::object();
    return parse_json_text(body);
}

Response materials(workbench::ProjectStore& store, const std::vector<std::string>& p,
                   const Request& req) {
    if (req.method != "GET") return error(405, "method_not_allowed", req.method + " not allowed");
    if (p.size() == 3) {
        Json lib = material_library_to_json(store.library());
        lib["library_ref"] = store.library_ref();
        return json_response(200, lib);
    }
    if (p.size() == 5 && p[4] == "bh") {
        for (const auto& m : store.library()) {
            if (m.name() == p[3]) return json_response(200, curve_to_json(m.bh_curve()));
        }
        return error(404, "not_found", "material '" + p[3] + "' not found");
    }
    return error(404, "not_found", "no route for " + req.path);
}

Response projects(workbench::ProjectStore& store, const std::vector<std::string>& p,
                  const Request& req) {
    const auto& m = req.method;
    if (p.size() == 3) {
        if (m == "POST") return json_response(201, store.create_project(parse_body(req.body)));
        if (m == "GET") {
            Json list = Json::array();
            for (auto& j : store.list_projects()) list.push_back(std::move(j));
            return json_response(200, Json{{"projects", list}});
        }
        return error(405, "method_not_allowed", m + " not allowed");
    }
    const std::string& id = p[3];
    if (p.size() == 4) {
        if (m == "GET") return json_response(200, store.load_project(id));
        if (m == "DELETE") {
            store.delete_project(id);
            return json_response(200, Json{{"deleted", id}});
        }
        return error(405, "method_not_allowed", m + " not allowed");
    }
    if (p[4] != "designs") return error(404, "not_found", "no route for " + req.path);
    if (p.size() == 5) {
        if (m == "POST") return json_response(201, store.run_design(id, parse_body(req.body)));
        if (m == "GET") return json_response(200, store.load_project(id).at("records"));
        return error(405, "method_not_allowed", m + " not allowed");
    }
    const std::string& rid = p[5];
    if (p.size() == 6 && m == "GET") return json_response(200, store.record(id, rid));
    if (p.size() == 7 && p[6] == "what-if" && m == "POST") {
        return json_response(201, store.what_if(id, rid, parse_body(req.body)));
    }
    if (p.size() == 8 && p[6] == "curves" && m == "GET") {
        return json_response(200, store.curve(id, rid, p[7]));
    }
    if (p.size() == 7 && p[6] == "export" && m == "GET") {
        auto it = req.query.find("format");
        const std::string format = it == req.query.end() ? "doc" : it->second;
        return json_response(200, store.export_record(id, rid, format));
    }
    return error(404, "not_found", "no route for " + m + " " + req.path);
}

Response families(const Request& req) {
    if (req.method != "GET") return error(405, "method_not_allowed", req.method + " not allowed");
    Json out = Json::object();
    for (Family f : kAllFamilies) out[std::string(family_name(f))] = default_constants(f);
    return json_response(200, Json{{"default_constants", out}});
}

}  // namespace

Response route(workbench::ProjectStore& store, const Request& req) {
    try {
        const auto p = split_path(req.path);
        if (p.size() < 3 || p[0] != "api" || p[1] != "v1") {
            return error(404, "not_found", "no route for " + req.path);
        }
        if (p[2] == "materials") return materials(store, p, req);
        if (p[2] == "projects") return projects(store, p, req);
        if (p[2] == "families" && p.size() == 3) return families(req);
        return error(404, "not_found", "no route for " + req.path);
    } catch (const ValidationError& e) {
        return error(400, "validation_error", e.what(), e.field_path());
    } catch (const workbench::NotFound& e) {
        return error(404, "not_found", e.what());
    } catch (const workbench::Conflict& e) {
        return error(409, "conflict", e.what());
    } catch (const IoError& e) {
        return error(500, "io_error", e.what());
    } catch (const std::exception& e) {
        return error(500, "internal_error", e.what());
    }
}

ApiServer::ApiServer(workbench::ProjectStore& store)
    : store_(store), server_(std::make_unique<httplib::Server>()) {
    auto handler = [this](const httplib::Request& hreq, httplib::Response& hres) {
        Request req{hreq.method, hreq.path, {}, hreq.body};
        for (const auto& [k, v] : hreq.params) req.query.emplace(k, v);
        const Response r = route(store_, req);
        hres.status = r.status;
        hres.set_content(r.body, r.content_type);
    };
    const std::string pattern = "/api/v1/.*";
    server_->Get(pattern, handler);
    server_->Post(pattern, handler);
    server_->Delete(pattern, handler);
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
    int bound = port;
    if (port == 0) {
        bound = server_->bind_to_any_port(host);
    } else if (!server_->bind_to_port(host, port)) {
        bound = -1;
    }
    if (bound <= 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
    return bound;
}

void ApiServer::listen() { server_->listen_after_bind(); }

void ApiServer::stop() {
    if (server_) server_->stop();
}

}  // namespace emcad::http
